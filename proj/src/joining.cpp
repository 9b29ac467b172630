#include "bicd/joining.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace bicd {

namespace {

Error precondition(const std::string& what) { return Error(ErrorKind::LemmaPrecondition, what); }

std::vector<int> leave_key(const EdgeMultiset& leave) {
  std::vector<int> key;
  key.reserve(static_cast<size_t>(leave.v()) * leave.u());
  for (int i = 0; i < leave.v(); ++i) {
    for (int j = 0; j < leave.u(); ++j) key.push_back(leave(i, j));
  }
  return key;
}

std::vector<Vertex> neighbors(const EdgeMultiset& leave, Vertex x) {
  std::vector<Vertex> out;
  const int bound = x.part == Part::Left ? leave.u() : leave.v();
  for (int k = 0; k < bound; ++k) {
    const Vertex y{other(x.part), k};
    if (leave.at(x, y) > 0) out.push_back(y);
  }
  return out;
}

std::vector<Vertex> isolated_in(const EdgeMultiset& leave, Part part) {
  std::vector<Vertex> out;
  const int bound = part == Part::Left ? leave.v() : leave.u();
  for (int k = 0; k < bound; ++k) {
    const Vertex x{part, k};
    if (leave.degree(x) == 0) out.push_back(x);
  }
  return out;
}

// Side of the terminus slot: the vertex among alpha/beta it was attached to.
Vertex terminus_side(const SwitchRecord& r) { return r.toggled[2].b; }

int component_count(const EdgeMultiset& leave) { return static_cast<int>(leave_components(leave).size()); }

void require_even_targets(int m1, int m2) {
  if (m1 < 2 || m2 < 2 || m1 % 2 != 0 || m2 % 2 != 0) {
    throw precondition("targets " + std::to_string(m1) + "," + std::to_string(m2) + " must be even and >= 2");
  }
}

void require_size(const Packing& p) {
  const long ell = p.leave().size();
  if (ell > leave_bound(p.spec())) {
    throw precondition("leave size " + std::to_string(ell) + " exceeds " + std::to_string(leave_bound(p.spec())));
  }
}

std::optional<std::vector<std::pair<Packing, SwitchRecord>>> try_outcomes(const Packing& p, Vertex a, Vertex b,
                                                                          Vertex origin) {
  if (a == b || a.part != b.part) return std::nullopt;
  if (p.leave().at(origin, a) == p.leave().at(origin, b)) return std::nullopt;
  try {
    return switch_outcomes(p, a, b, origin);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InfeasibleSwitch || e.kind() == ErrorKind::NoExcess) return std::nullopt;
    throw;
  }
}

Packing add_pair(const Packing& p, const std::pair<Cycle, Cycle>& cs) {
  return p.with_cycle(cs.first).with_cycle(cs.second);
}

// A switch the closing search may try, with the label used in the audit log.
struct Move {
  Vertex alpha;
  Vertex beta;
  Vertex origin;
  const char* tag;
};

void chain_split_moves(const LeaveComponent& comp, int m1, int m2, std::vector<Move>& out) {
  if (comp.kind != ComponentKind::Chain || comp.cycles.size() != 2) return;
  const int lo = std::min(m1, m2);
  const int hi = std::max(m1, m2);
  if (lo <= 2) return;
  const Cycle* two = nullptr;
  const Cycle* big = nullptr;
  for (const Cycle& c : comp.cycles) (c.length() == 2 && !two ? two : big) = &c;
  if (!two || !big || big->length() == 2) return;
  const Vertex c = comp.links.front();
  const Vertex x0 = two->vertices()[0] == c ? two->vertices()[1] : two->vertices()[0];
  const auto& vs = big->vertices();
  const int n = big->length();
  const int k = static_cast<int>(std::find(vs.begin(), vs.end(), c) - vs.begin());
  for (int dir : {1, -1}) {
    const Vertex y = vs[((k + dir * (hi - 1)) % n + n) % n];
    out.push_back({x0, y, c, "chain-split"});
  }
}

void path_moves(const LeaveComponent& comp, const EdgeMultiset& leave, int t, std::vector<Move>& out) {
  if (t < 4) return;
  for (const PathSplit& ps : path_splits(comp, t)) {
    const Vertex x0 = ps.first.front();
    const Vertex x1 = ps.first[1];
    const Vertex xt = ps.first.back();
    if (leave.at(x1, xt) != 0) continue;
    out.push_back({x0, xt, x1, "close-path"});
  }
}

void link_moves(const LeaveComponent& comp, const EdgeMultiset& leave, std::vector<Move>& out) {
  std::vector<Vertex> hubs;
  for (Vertex x : comp.vertices) {
    if (leave.degree(x) >= 4) hubs.push_back(x);
  }
  for (Vertex c : hubs) {
    const auto iso = isolated_in(leave, c.part);
    if (iso.empty()) continue;
    for (Vertex w : neighbors(leave, c)) out.push_back({c, iso.front(), w, "close-link"});
  }
}

// Depth-first search over the switches used by the chain/ring induction.
// Every state is a packing whose leave is a single component; the goal is a
// leave that is exactly an m1-cycle plus an m2-cycle.
class CloseSearch {
 public:
  CloseSearch(int m1, int m2) : m1_(m1), m2_(m2) {}

  std::optional<Packing> run(const Packing& start) {
    seen_.insert(leave_key(start.leave()));
    return dfs(start);
  }

  const std::vector<std::pair<std::string, SwitchRecord>>& trail() const { return trail_; }

 private:
  std::optional<Packing> dfs(const Packing& p) {
    if (auto cs = find_two_cycle_split(p.leave(), m1_, m2_)) return add_pair(p, *cs);
    if (++expansions_ > kCap) return std::nullopt;
    const LeaveStructure ls = classify_leave(p.leave());
    if (ls.components.size() != 1) return std::nullopt;
    const LeaveComponent& comp = ls.components.front();

    std::vector<Move> moves;
    chain_split_moves(comp, m1_, m2_, moves);
    if (comp.kind == ComponentKind::Chain || comp.kind == ComponentKind::Cycle) {
      path_moves(comp, p.leave(), m1_, moves);
      if (m2_ != m1_) path_moves(comp, p.leave(), m2_, moves);
    }
    if (comp.kind != ComponentKind::Cycle) link_moves(comp, p.leave(), moves);

    for (const Move& mv : moves) {
      auto outs = try_outcomes(p, mv.alpha, mv.beta, mv.origin);
      if (!outs) continue;
      for (auto& [q, rec] : *outs) {
        if (auto cs = find_two_cycle_split(q.leave(), m1_, m2_)) {
          trail_.emplace_back(mv.tag, rec);
          return add_pair(q, *cs);
        }
      }
      for (auto& [q, rec] : *outs) {
        if (!seen_.insert(leave_key(q.leave())).second) continue;
        if (component_count(q.leave()) != 1) continue;
        trail_.emplace_back(mv.tag, rec);
        if (auto done = dfs(q)) return done;
        trail_.pop_back();
      }
    }
    return std::nullopt;
  }

  static constexpr int kCap = 400;
  int m1_;
  int m2_;
  int expansions_ = 0;
  std::set<std::vector<int>> seen_;
  std::vector<std::pair<std::string, SwitchRecord>> trail_;
};

const LeaveComponent& single_component(const LeaveStructure& ls) {
  if (ls.components.size() != 1) {
    throw precondition("leave has " + std::to_string(ls.components.size()) + " non-trivial components, expected 1");
  }
  return ls.components.front();
}

bool has_path_split(const LeaveComponent& comp, int m1) { return !path_splits(comp, m1).empty(); }

}  // namespace

int leave_bound(const GraphSpec& spec) {
  const int v = std::min(spec.v, spec.u);
  const int u = std::max(spec.v, spec.u);
  return v < u ? 2 * v + 2 : 2 * v;
}

SplitOutcome split_component(const Packing& p, const std::vector<Vertex>& path, AuditLog* log) {
  const int t = static_cast<int>(path.size()) - 1;
  if (t < 4 || t % 2 != 0) throw precondition("path length " + std::to_string(t) + " is not even and >= 4");
  const EdgeMultiset& leave = p.leave();
  single_component(classify_leave(leave));
  std::set<Vertex> distinct(path.begin(), path.end());
  if (static_cast<int>(distinct.size()) != t + 1) throw precondition("path repeats a vertex");
  EdgeMultiset rest = leave;
  for (int k = 0; k < t; ++k) {
    if (path[k].part == path[k + 1].part || leave.at(path[k], path[k + 1]) == 0) {
      throw precondition("path step " + to_string(path[k]) + "-" + to_string(path[k + 1]) + " is not a leave edge");
    }
    rest.add(path[k], path[k + 1], -1);
  }
  const Vertex x0 = path.front();
  const Vertex x1 = path[1];
  const Vertex xt = path.back();
  // The remaining edges must form one path from x_t back to x_0.
  const auto deg = rest.degrees();
  bool is_path = rest.max_multiplicity() <= 1 && component_count(rest) == 1;
  for (size_t id = 0; id < deg.size() && is_path; ++id) {
    const Vertex x = vertex_from_id(rest.v(), static_cast<int>(id));
    const int want = (x == x0 || x == xt) ? 1 : (deg[id] == 0 ? 0 : 2);
    if (deg[id] != want) is_path = false;
  }
  if (!is_path) throw precondition("leave edges off the path do not form a path");
  if (leave.at(x1, xt) != 0) throw precondition("x_1 x_t is a leave edge");

  const Vertex penult = path[t - 1];
  auto outs = switch_outcomes(p, x0, xt, x1);
  auto pick = std::find_if(outs.begin(), outs.end(), [&](const auto& o) { return o.second.terminus != penult; });
  const bool penultimate = pick == outs.end();
  if (penultimate) pick = outs.begin();
  if (log) log->record("split", pick->second);
  if (!penultimate) {
    const long ell = leave.size();
    if (!find_two_cycle_split(pick->first.leave(), t, static_cast<int>(ell - t))) {
      throw Error(ErrorKind::InfeasibleSwitch, "switched leave does not split into a " + std::to_string(t) +
                                                   "-cycle and an " + std::to_string(ell - t) + "-cycle");
    }
  }
  return {std::move(pick->first), pick->second, penultimate};
}

Packing chain_split(const Packing& p, int m1, int m2, AuditLog* log) {
  require_even_targets(m1, m2);
  const LeaveStructure ls = classify_leave(p.leave());
  const LeaveComponent& comp = single_component(ls);
  if (comp.kind != ComponentKind::Chain || comp.cycles.size() != 2) throw precondition("leave is not a 2-chain");
  if (m1 + m2 != comp.size()) {
    throw precondition("m1+m2 = " + std::to_string(m1 + m2) + " but the chain has " + std::to_string(comp.size()) +
                       " edges");
  }
  const int a = comp.cycles[0].length();
  const int b = comp.cycles[1].length();
  if ((a == m1 && b == m2) || (a == m2 && b == m1)) {
    return p.with_cycle(comp.cycles[0]).with_cycle(comp.cycles[1]);
  }
  if (a == 2 || b == 2) {
    std::vector<Move> moves;
    chain_split_moves(comp, m1, m2, moves);
    for (const Move& mv : moves) {
      auto outs = try_outcomes(p, mv.alpha, mv.beta, mv.origin);
      if (!outs) continue;
      for (auto& [q, rec] : *outs) {
        if (auto cs = find_two_cycle_split(q.leave(), m1, m2)) {
          if (log) log->record(mv.tag, rec);
          return add_pair(q, *cs);
        }
      }
    }
    throw Error(ErrorKind::InfeasibleSwitch, "chain switch did not yield the two cycles");
  }
  return close_component(p, m1, m2, log);
}

Packing close_component(const Packing& p, int m1, int m2, AuditLog* log) {
  require_even_targets(m1, m2);
  require_size(p);
  const LeaveStructure ls = classify_leave(p.leave());
  const LeaveComponent& comp = single_component(ls);
  if (comp.kind == ComponentKind::Other) throw precondition("leave component is not a chain, ring or cycle");
  if (m1 + m2 != comp.size()) {
    throw precondition("m1+m2 = " + std::to_string(m1 + m2) + " but the leave has " + std::to_string(comp.size()) +
                       " edges");
  }
  if ((comp.kind == ComponentKind::Chain || comp.kind == ComponentKind::Cycle) && !has_path_split(comp, m1)) {
    throw precondition("component has no " + std::to_string(m1) + "-path / " + std::to_string(m2) + "-path split");
  }
  // Switches keep a simple leave simple, so no 2-cycle can ever appear.
  if (std::min(m1, m2) == 2 && p.leave().max_multiplicity() <= 1) {
    throw precondition("a 2-cycle target needs a repeated leave edge");
  }
  CloseSearch search(m1, m2);
  auto done = search.run(p);
  if (!done) {
    throw Error(ErrorKind::InfeasibleSwitch, "no switch sequence closed the " + std::string(to_string(comp.kind)) +
                                                 " into " + std::to_string(m1) + "+" + std::to_string(m2));
  }
  if (log) {
    for (const auto& [tag, rec] : search.trail()) log->record(tag, rec);
  }
  return *done;
}

namespace {

// All path lengths a for which the chain splits into an a-path and an
// (size-a)-path.
std::vector<int> split_lengths(const LeaveComponent& chain) {
  std::vector<int> out;
  for (int a = 1; a < chain.size(); ++a) {
    if (!path_splits(chain, a).empty()) out.push_back(a);
  }
  return out;
}

class GatherSearch {
 public:
  GatherSearch(int m1) : m1_(m1) {}

  std::optional<GatherResult> dfs(const Packing& p) {
    if (++expansions_ > kCap) return std::nullopt;
    const LeaveStructure ls = classify_leave(p.leave());
    const LeaveComponent* chain = nullptr;
    std::vector<const LeaveComponent*> loose;
    for (const auto& c : ls.components) {
      if (c.kind == ComponentKind::Cycle) {
        loose.push_back(&c);
      } else if (c.kind == ComponentKind::Chain && !chain) {
        chain = &c;
      } else {
        return std::nullopt;
      }
    }
    if (!chain) return std::nullopt;
    if (loose.empty()) {
      auto splits = path_splits(*chain, m1_);
      if (splits.empty()) return std::nullopt;
      return GatherResult{p, std::move(splits.front())};
    }
    // Each absorbed c-cycle lengthens the m1-path by between 1 and c-1.
    int lo = 0;
    int hi = 0;
    for (const auto* c : loose) {
      lo += 1;
      hi += static_cast<int>(c->size()) - 1;
    }
    const auto lens = split_lengths(*chain);
    if (std::none_of(lens.begin(), lens.end(), [&](int a) { return m1_ - a >= lo && m1_ - a <= hi; })) {
      return std::nullopt;
    }
    std::stable_sort(loose.begin(), loose.end(), [](const auto* a, const auto* b) { return a->size() > b->size(); });
    const LeaveComponent& target = *loose.front();
    const int before = static_cast<int>(ls.components.size());

    std::vector<Vertex> ends;
    for (const Cycle* end : {&chain->cycles.front(), &chain->cycles.back()}) {
      for (Vertex x : end->vertices()) {
        if (std::find(chain->links.begin(), chain->links.end(), x) == chain->links.end() &&
            std::find(ends.begin(), ends.end(), x) == ends.end()) {
          ends.push_back(x);
        }
      }
    }
    for (Vertex x0 : ends) {
      Vertex z0{};
      bool found = false;
      for (Vertex z : target.vertices) {
        if (z.part == x0.part) {
          z0 = z;
          found = true;
          break;
        }
      }
      if (!found) continue;
      for (Vertex x1 : neighbors(p.leave(), x0)) {
        auto outs = try_outcomes(p, z0, x0, x1);
        if (!outs) continue;
        for (auto& [q, rec] : *outs) {
          if (component_count(q.leave()) != before - 1) continue;
          if (!seen_.insert(leave_key(q.leave())).second) continue;
          trail_.push_back(rec);
          if (auto done = dfs(q)) return done;
          trail_.pop_back();
        }
      }
    }
    return std::nullopt;
  }

  const std::vector<SwitchRecord>& trail() const { return trail_; }

 private:
  static constexpr int kCap = 400;
  int m1_;
  int expansions_ = 0;
  std::set<std::vector<int>> seen_;
  std::vector<SwitchRecord> trail_;
};

void require_one_hub(const EdgeMultiset& leave) {
  int fours = 0;
  for (int d : leave.degrees()) {
    if (d == 4) {
      ++fours;
    } else if (d != 0 && d != 2) {
      throw precondition("leave has a vertex of degree " + std::to_string(d));
    }
  }
  if (fours != 1) throw precondition("leave has " + std::to_string(fours) + " vertices of degree 4, expected 1");
}

}  // namespace

GatherResult gather_to_chain(const Packing& p, int m1, int m2, AuditLog* log) {
  require_even_targets(m1, m2);
  require_one_hub(p.leave());
  const long ell = p.leave().size();
  if (m1 + m2 != ell) {
    throw precondition("m1+m2 = " + std::to_string(m1 + m2) + " but the leave has " + std::to_string(ell) + " edges");
  }
  const int k = component_count(p.leave());
  if (m1 < k + 1 || m2 < k + 1) {
    throw precondition("targets must be at least k+1 = " + std::to_string(k + 1));
  }
  GatherSearch search(m1);
  auto done = search.dfs(p);
  if (!done) throw Error(ErrorKind::InfeasibleSwitch, "could not gather the leave into one splittable chain");
  if (log) {
    int twos = 0;
    for (const auto& c : classify_leave(p.leave()).components) {
      for (const Cycle& cyc : c.cycles) twos += cyc.length() == 2 && c.kind != ComponentKind::Cycle;
    }
    log->note("gather", "two-cycles in hub component: " + std::to_string(twos) + ", absorbed " +
                            std::to_string(search.trail().size()) + " cycles");
    for (const auto& rec : search.trail()) log->record("gather", rec);
  }
  return std::move(*done);
}

Packing extract_two_cycles(const Packing& p, int m1, int m2, AuditLog* log) {
  require_size(p);
  GatherResult g = gather_to_chain(p, m1, m2, log);
  return close_component(g.packing, m1, m2, log);
}

namespace {

std::vector<std::pair<Packing, SwitchRecord>> shift_options(const Packing& p, Vertex a, Vertex b) {
  std::vector<std::pair<Packing, SwitchRecord>> out;
  for (Vertex w : neighbors(p.leave(), a)) {
    if (p.leave().at(w, a) <= p.leave().at(w, b)) continue;
    auto outs = try_outcomes(p, a, b, w);
    if (!outs) continue;
    for (auto& o : *outs) {
      if (terminus_side(o.second) == a) out.push_back(std::move(o));
    }
  }
  return out;
}

}  // namespace

Packing shift_degree(const Packing& p, Vertex a, Vertex b, AuditLog* log) {
  if (a == b || a.part != b.part) {
    throw Error(ErrorKind::InvalidTwin, to_string(a) + " and " + to_string(b) + " are not distinct same-part vertices");
  }
  const int da = p.leave().degree(a);
  const int db = p.leave().degree(b);
  if (da <= db) throw precondition("deg(a) = " + std::to_string(da) + " is not above deg(b) = " + std::to_string(db));
  auto opts = shift_options(p, a, b);
  if (opts.empty()) throw Error(ErrorKind::InfeasibleSwitch, "no switch moves degree from " + to_string(a));
  if (log) log->record("shift", opts.front().second);
  return std::move(opts.front().first);
}

int degree_surplus(const EdgeMultiset& leave) {
  int s = 0;
  for (int d : leave.degrees()) {
    if (d >= 4) s += d - 2;
  }
  return s / 2;
}

Packing concentrate_degree(const Packing& p, AuditLog* log) {
  require_size(p);
  const EdgeMultiset& leave0 = p.leave();
  const int d0 = degree_surplus(leave0);
  if (d0 == 0) throw precondition("no leave vertex has degree 4 or more");
  const int k0 = component_count(leave0);
  const long ell = leave0.size();

  Packing cur = p;
  for (;;) {
    const EdgeMultiset& leave = cur.leave();
    const int v = leave.v();
    std::vector<std::pair<int, Vertex>> high;
    const auto deg = leave.degrees();
    for (size_t id = 0; id < deg.size(); ++id) {
      if (deg[id] >= 4) high.push_back({deg[id], vertex_from_id(v, static_cast<int>(id))});
    }
    if (high.size() == 1 && high.front().first == 4) break;
    std::stable_sort(high.begin(), high.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    bool moved = false;
    for (const auto& [d, a] : high) {
      const auto iso = isolated_in(leave, a.part);
      if (iso.empty()) continue;
      auto opts = shift_options(cur, a, iso.front());
      if (opts.empty()) continue;
      // Keep the component count low: any option satisfies the degree
      // contract, the fewest components helps the later gathering.
      auto best = std::min_element(opts.begin(), opts.end(), [](const auto& x, const auto& y) {
        return component_count(x.first.leave()) < component_count(y.first.leave());
      });
      if (log) log->record("concentrate", best->second);
      cur = std::move(best->first);
      moved = true;
      break;
    }
    if (!moved) throw precondition("no high-degree vertex has an isolated twin");
  }
  const int k = component_count(cur.leave());
  const long bound = std::min<long>(k0 + d0 - 1, ell / 2 - 1);
  if (k > bound) {
    throw Error(ErrorKind::ConstructiveGap,
                "component count " + std::to_string(k) + " exceeds bound " + std::to_string(bound));
  }
  return cur;
}

Packing join_two_cycles(const Packing& d, int h_idx, int m_idx, int m2_idx, AuditLog* log) {
  if (!d.leave().empty()) throw precondition("join needs a decomposition (empty leave)");
  const int n = static_cast<int>(d.cycles().size());
  for (int idx : {h_idx, m_idx, m2_idx}) {
    if (idx < 0 || idx >= n) throw precondition("cycle index " + std::to_string(idx) + " out of range");
  }
  if (h_idx == m_idx || h_idx == m2_idx || m_idx == m2_idx) throw precondition("cycle indices must differ");
  const int h = d.cycles()[h_idx].length();
  const int m = d.cycles()[m_idx].length();
  const int m2 = d.cycles()[m2_idx].length();
  if (m + m2 > h) throw precondition("m+m' = " + std::to_string(m + m2) + " > h = " + std::to_string(h));
  if (h + m + m2 > leave_bound(d.spec())) {
    throw precondition("h+m+m' = " + std::to_string(h + m + m2) + " > " + std::to_string(leave_bound(d.spec())));
  }
  const std::vector<int> idx{h_idx, m_idx, m2_idx};
  Packing cur = d.without_cycles(idx);

  // Vertex-disjoint leave cycles are first pulled together: a switch between
  // twins in two components either hangs one cycle on the other (a degree-4
  // vertex appears) or splices them into one cycle.
  for (;;) {
    const auto deg = cur.leave().degrees();
    if (std::any_of(deg.begin(), deg.end(), [](int x) { return x >= 4; })) break;
    const auto comps = leave_components(cur.leave());
    if (comps.size() <= 1) break;
    bool merged = false;
    for (size_t i = 0; i < comps.size() && !merged; ++i) {
      for (size_t j = i + 1; j < comps.size() && !merged; ++j) {
        for (Vertex alpha : comps[i]) {
          auto beta = std::find_if(comps[j].begin(), comps[j].end(), [&](Vertex y) { return y.part == alpha.part; });
          if (beta == comps[j].end()) continue;
          auto outs = try_outcomes(cur, alpha, *beta, neighbors(cur.leave(), alpha).front());
          if (!outs) continue;
          auto pick = std::find_if(outs->begin(), outs->end(), [&](const auto& o) {
            return component_count(o.first.leave()) < static_cast<int>(comps.size());
          });
          if (pick == outs->end()) continue;
          if (log) log->record("join-merge", pick->second);
          cur = std::move(pick->first);
          merged = true;
          break;
        }
      }
    }
    if (!merged) throw Error(ErrorKind::InfeasibleSwitch, "could not merge disjoint leave cycles");
  }

  const auto deg = cur.leave().degrees();
  Packing out;
  if (std::any_of(deg.begin(), deg.end(), [](int x) { return x >= 4; })) {
    cur = concentrate_degree(cur, log);
    out = extract_two_cycles(cur, h, m + m2, log);
  } else {
    out = close_component(cur, h, m + m2, log);
  }
  if (!out.leave().empty()) throw Error(ErrorKind::ConstructiveGap, "join left edges uncovered");
  return out;
}

}  // namespace bicd
