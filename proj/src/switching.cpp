#include "bicd/switching.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace bicd {

std::string to_string(const SwitchRecord& r) {
  std::string s = "alpha=" + to_string(r.alpha) + " beta=" + to_string(r.beta) + " origin=" + to_string(r.origin) +
                  " terminus=" + to_string(r.terminus) + " toggles=";
  for (size_t k = 0; k < r.toggled.size(); ++k) {
    const Toggle& t = r.toggled[k];
    if (k) s += ",";
    s += to_string(t.a) + to_string(t.b) + (t.delta > 0 ? ":+" : ":") + std::to_string(t.delta);
  }
  return s;
}

void AuditLog::record(std::string_view tag, const SwitchRecord& r) {
  lines_.push_back("switch[" + std::string(tag) + "] " + to_string(r));
}

void AuditLog::note(std::string_view tag, const std::string& text) {
  lines_.push_back("note[" + std::string(tag) + "] " + text);
}

void AuditLog::write(std::ostream& os) const {
  for (const auto& line : lines_) os << line << '\n';
}

namespace {

void require_twins(Vertex alpha, Vertex beta) {
  if (alpha == beta) throw Error(ErrorKind::InvalidTwin, "alpha and beta coincide at " + to_string(alpha));
  if (alpha.part != beta.part) {
    throw Error(ErrorKind::InvalidTwin, to_string(alpha) + " and " + to_string(beta) + " lie in different parts");
  }
}

// A piece of a cycle whose alpha/beta labels can be exchanged. Flipping it
// changes the number of cycle edges between alpha and each vertex in `delta`.
struct Segment {
  int cycle = 0;
  int which = 0;  // 0: whole cycle or the forward alpha..beta path; 1: the other path
  std::vector<std::pair<Vertex, int>> delta;
};

// Per-cycle description used to rebuild flipped cycles.
struct CycleShape {
  bool has_alpha = false;
  bool has_beta = false;
  std::vector<Vertex> inner1;  // between alpha and beta going forward
  std::vector<Vertex> inner2;  // between beta and alpha going forward
};

CycleShape shape_of(const Cycle& c, Vertex alpha, Vertex beta) {
  CycleShape s;
  const auto& vs = c.vertices();
  const int n = c.length();
  int ia = -1;
  int ib = -1;
  for (int k = 0; k < n; ++k) {
    if (vs[k] == alpha) ia = k;
    if (vs[k] == beta) ib = k;
  }
  s.has_alpha = ia >= 0;
  s.has_beta = ib >= 0;
  if (s.has_alpha && s.has_beta) {
    for (int k = (ia + 1) % n; k != ib; k = (k + 1) % n) s.inner1.push_back(vs[k]);
    for (int k = (ib + 1) % n; k != ia; k = (k + 1) % n) s.inner2.push_back(vs[k]);
  }
  return s;
}

std::vector<Segment> segments_of(const std::vector<Cycle>& cycles, const std::vector<CycleShape>& shapes,
                                 Vertex alpha, Vertex beta) {
  std::vector<Segment> out;
  for (int ci = 0; ci < static_cast<int>(cycles.size()); ++ci) {
    const CycleShape& s = shapes[ci];
    const Cycle& c = cycles[ci];
    if (s.has_alpha && s.has_beta) {
      if (s.inner1.front() != s.inner1.back()) {
        out.push_back({ci, 0, {{s.inner1.front(), -1}, {s.inner1.back(), +1}}});
      }
      if (s.inner2.front() != s.inner2.back()) {
        out.push_back({ci, 1, {{s.inner2.front(), +1}, {s.inner2.back(), -1}}});
      }
    } else if (s.has_alpha || s.has_beta) {
      const Vertex x = s.has_alpha ? alpha : beta;
      const int sign = s.has_alpha ? -1 : +1;
      const auto& vs = c.vertices();
      const int n = c.length();
      const int k = static_cast<int>(std::find(vs.begin(), vs.end(), x) - vs.begin());
      const Vertex prev = vs[(k + n - 1) % n];
      const Vertex next = vs[(k + 1) % n];
      Segment seg{ci, 0, {}};
      if (prev == next) {
        seg.delta.push_back({prev, 2 * sign});
      } else {
        seg.delta.push_back({prev, sign});
        seg.delta.push_back({next, sign});
      }
      out.push_back(std::move(seg));
    }
  }
  return out;
}

Cycle rebuild(const Cycle& c, const CycleShape& s, Vertex alpha, Vertex beta, bool flip0, bool flip1) {
  if (!(s.has_alpha && s.has_beta)) {
    std::vector<Vertex> vs = c.vertices();
    for (Vertex& x : vs) {
      if (x == alpha) {
        x = beta;
      } else if (x == beta) {
        x = alpha;
      }
    }
    return Cycle::from(vs);
  }
  const Vertex start0 = flip0 ? beta : alpha;
  const Vertex end0 = flip0 ? alpha : beta;
  const Vertex s1 = flip1 ? alpha : beta;
  std::vector<Vertex> seq{start0};
  seq.insert(seq.end(), s.inner1.begin(), s.inner1.end());
  seq.push_back(end0);
  if (end0 == s1) {
    seq.insert(seq.end(), s.inner2.begin(), s.inner2.end());
  } else {
    seq.insert(seq.end(), s.inner2.rbegin(), s.inner2.rend());
  }
  return Cycle::from(seq);
}

// Depth-first search for a set of segments whose combined delta equals the
// requirement. Branches on the least vertex with a nonzero residual.
class SegmentSearch {
 public:
  SegmentSearch(const std::vector<Segment>& segs, std::map<Vertex, int> need, long budget)
      : segs_(segs), need_(std::move(need)), used_(segs.size(), false), budget_(budget) {}

  bool run() { return dfs(static_cast<int>(segs_.size())); }
  const std::vector<bool>& chosen() const { return used_; }

 private:
  bool dfs(int unused) {
    if (--budget_ < 0) return false;
    long total = 0;
    Vertex w{};
    bool found = false;
    for (const auto& [x, r] : need_) {
      total += std::abs(r);
      if (r != 0 && !found) {
        w = x;
        found = true;
      }
    }
    if (!found) return true;
    if (total > 2L * unused) return false;
    const int sign = need_[w] > 0 ? 1 : -1;
    for (size_t k = 0; k < segs_.size(); ++k) {
      if (used_[k]) continue;
      int here = 0;
      for (const auto& [x, d] : segs_[k].delta) {
        if (x == w) here += d;
      }
      if (here * sign <= 0) continue;
      used_[k] = true;
      for (const auto& [x, d] : segs_[k].delta) need_[x] -= d;
      if (dfs(unused - 1)) return true;
      for (const auto& [x, d] : segs_[k].delta) need_[x] += d;
      used_[k] = false;
    }
    return false;
  }

  const std::vector<Segment>& segs_;
  std::map<Vertex, int> need_;
  std::vector<bool> used_;
  long budget_;
};

constexpr long kSearchBudget = 2'000'000;

std::vector<std::pair<Packing, SwitchRecord>> run_switch(const Packing& p, Vertex alpha, Vertex beta, Vertex origin,
                                                         bool first_only) {
  require_twins(alpha, beta);
  const EdgeMultiset& leave = p.leave();
  const int ma = leave.at(origin, alpha);
  const int mb = leave.at(origin, beta);
  if (origin.part == alpha.part || ma == mb) {
    throw Error(ErrorKind::NoExcess, "origin " + to_string(origin) + " has no excess between " + to_string(alpha) +
                                         " and " + to_string(beta));
  }
  // Orient so that the origin's excess lies on `hi`; the transposition is
  // symmetric so this does not change which switches exist.
  const Vertex hi = ma > mb ? alpha : beta;
  const Vertex lo = ma > mb ? beta : alpha;

  std::vector<CycleShape> shapes;
  shapes.reserve(p.cycles().size());
  for (const Cycle& c : p.cycles()) shapes.push_back(shape_of(c, hi, lo));
  const auto segs = segments_of(p.cycles(), shapes, hi, lo);

  std::vector<Slot> termini;
  {
    auto a = switch_edge_set(leave, hi, lo);
    auto it = std::find(a.begin(), a.end(), Slot{origin, hi});
    a.erase(it);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    termini = std::move(a);
  }

  std::vector<std::pair<Packing, SwitchRecord>> out;
  for (const Slot& f : termini) {
    std::map<Vertex, int> need;
    need[origin] += 1;
    need[f.end] += f.at == hi ? 1 : -1;
    SegmentSearch search(segs, need, kSearchBudget);
    if (!search.run()) continue;

    std::vector<std::pair<bool, bool>> flips(p.cycles().size(), {false, false});
    std::vector<bool> touched(p.cycles().size(), false);
    for (size_t k = 0; k < segs.size(); ++k) {
      if (!search.chosen()[k]) continue;
      touched[segs[k].cycle] = true;
      (segs[k].which == 0 ? flips[segs[k].cycle].first : flips[segs[k].cycle].second) = true;
    }
    std::vector<Cycle> cycles = p.cycles();
    for (size_t ci = 0; ci < cycles.size(); ++ci) {
      if (touched[ci]) cycles[ci] = rebuild(cycles[ci], shapes[ci], hi, lo, flips[ci].first, flips[ci].second);
    }

    EdgeMultiset next = leave;
    const Vertex f_image = f.at == hi ? lo : hi;
    SwitchRecord rec{alpha, beta, origin, f.end,
                     {Toggle{origin, hi, -1}, Toggle{origin, lo, +1}, Toggle{f.end, f.at, -1},
                      Toggle{f.end, f_image, +1}}};
    for (const Toggle& t : rec.toggled) next.add(t.a, t.b, t.delta);
    if (compute_leave(p.spec(), cycles) != next) {
      throw Error(ErrorKind::InfeasibleSwitch, "rebuilt cycles do not match the switched leave");
    }
    out.emplace_back(Packing(p.spec(), std::move(cycles), std::move(next)), rec);
    if (first_only) break;
  }
  if (out.empty()) {
    throw Error(ErrorKind::InfeasibleSwitch, "no terminus admits a repair for the (" + to_string(alpha) + "," +
                                                 to_string(beta) + ")-switch with origin " + to_string(origin));
  }
  return out;
}

}  // namespace

std::vector<Slot> switch_edge_set(const EdgeMultiset& leave, Vertex alpha, Vertex beta) {
  require_twins(alpha, beta);
  std::vector<Slot> out;
  const Part side = other(alpha.part);
  const int bound = side == Part::Left ? leave.v() : leave.u();
  for (int k = 0; k < bound; ++k) {
    const Vertex w{side, k};
    const int da = leave.at(w, alpha);
    const int db = leave.at(w, beta);
    for (int c = 0; c < da - db; ++c) out.push_back({w, alpha});
    for (int c = 0; c < db - da; ++c) out.push_back({w, beta});
  }
  return out;
}

std::pair<Packing, SwitchRecord> perform_switch(const Packing& p, Vertex alpha, Vertex beta, Vertex origin) {
  return std::move(run_switch(p, alpha, beta, origin, true).front());
}

std::vector<std::pair<Packing, SwitchRecord>> switch_outcomes(const Packing& p, Vertex alpha, Vertex beta,
                                                              Vertex origin) {
  return run_switch(p, alpha, beta, origin, false);
}

}  // namespace bicd
