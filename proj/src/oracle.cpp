#include "bicd/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <unordered_set>

namespace bicd {

std::string_view to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::Exists: return "exists";
    case OracleStatus::NotExists: return "not-exists";
    case OracleStatus::Timeout: return "timeout";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

class Solver {
 public:
  Solver(const GraphSpec& spec, const LengthSeq& m, Clock::time_point deadline)
      : v_(spec.v), u_(spec.u), lambda_(spec.lambda), deadline_(deadline),
        res_(static_cast<size_t>(spec.v) * spec.u, spec.lambda), deg_(spec.v + spec.u, 0) {
    for (int i = 0; i < v_; ++i) deg_[i] = lambda_ * u_;
    for (int j = 0; j < u_; ++j) deg_[v_ + j] = lambda_ * v_;
    std::map<int, int, std::greater<>> counts;
    for (int x : m.lengths()) ++counts[x];
    for (auto [len, c] : counts) {
      lens_.push_back(len);
      cnt_.push_back(c);
    }
    used_left_.assign(v_, false);
    used_right_.assign(u_, false);
  }

  // True: solution in chosen(). False: none, or timed out (see timed_out()).
  bool solve() {
    if (static_cast<long>(lambda_) * v_ * u_ != total_remaining()) return false;
    return search(-1, 0, {});
  }

  bool timed_out() const { return timed_out_; }
  long nodes() const { return nodes_; }
  const std::vector<std::vector<Vertex>>& chosen() const { return chosen_; }

 private:
  int& res(int i, int j) { return res_[static_cast<size_t>(i) * u_ + j]; }

  long total_remaining() const {
    long s = 0;
    for (size_t k = 0; k < lens_.size(); ++k) s += static_cast<long>(lens_[k]) * cnt_[k];
    return s;
  }

  std::string key(int prev_len, const std::vector<Vertex>& prev) const {
    std::string k(res_.begin(), res_.end());
    for (int c : cnt_) k.push_back(static_cast<char>(c & 0xff)), k.push_back(static_cast<char>(c >> 8));
    if (prev_len > 0) {
      k.push_back(static_cast<char>(prev_len));
      for (Vertex x : prev) k.push_back(static_cast<char>(x.index));
    }
    return k;
  }

  void apply(const std::vector<Vertex>& cyc, int sign) {
    const size_t n = cyc.size();
    auto touch = [&](Vertex a, Vertex b, int d) {
      if (a.part == Part::Right) std::swap(a, b);
      res(a.index, b.index) += d;
      deg_[a.index] += d;
      deg_[v_ + b.index] += d;
    };
    if (n == 2) {
      touch(cyc[0], cyc[1], -2 * sign);
      return;
    }
    for (size_t k = 0; k < n; ++k) touch(cyc[k], cyc[(k + 1) % n], -sign);
  }

  // prev_s/prev_len/prev: the cycle chosen at the parent when it branched on
  // the same vertex; cycles through one vertex are taken in (length desc,
  // sequence asc) order so each set of cycles is built once.
  bool search(int prev_s, int prev_len, const std::vector<Vertex>& prev) {
    if (((++nodes_ & 1023) == 0 || nodes_ == 1) && Clock::now() > deadline_) timed_out_ = true;
    if (timed_out_) return false;

    int s = -1;
    for (int i = 0; i < v_; ++i) {
      if (deg_[i] > 0) {
        s = i;
        break;
      }
    }
    if (s < 0) return total_remaining() == 0;

    int li0 = 0;
    while (li0 < static_cast<int>(lens_.size()) && cnt_[li0] == 0) ++li0;
    if (li0 == static_cast<int>(lens_.size())) return false;

    // Only 2-cycles left: every residual multiplicity must be even.
    if (lens_[li0] == 2) {
      for (int x : res_) {
        if (x % 2 != 0) return false;
      }
      for (int i = 0; i < v_; ++i) {
        for (int j = 0; j < u_; ++j) {
          for (int c = 0; c < res(i, j) / 2; ++c) chosen_.push_back({Vertex::L(i), Vertex::R(j)});
        }
      }
      return true;
    }
    {
      int left = 0;
      int right = 0;
      for (int i = 0; i < v_; ++i) left += deg_[i] > 0;
      for (int j = 0; j < u_; ++j) right += deg_[v_ + j] > 0;
      if (lens_[li0] / 2 > std::min(left, right)) return false;
    }

    const bool constrained = prev_s == s;
    const std::string k = key(constrained ? prev_len : 0, constrained ? prev : std::vector<Vertex>{});
    if (failed_.count(k)) return false;

    const bool root = chosen_.empty();
    for (size_t li = 0; li < lens_.size(); ++li) {
      if (cnt_[li] == 0) continue;
      const int len = lens_[li];
      if (constrained && len > prev_len) continue;
      --cnt_[li];
      const std::vector<Vertex>* floor = constrained && len == prev_len ? &prev : nullptr;
      bool ok = false;
      if (root) {
        // Every cycle through L0 is equivalent under part-preserving
        // relabelling, so the first one can be fixed.
        if (len / 2 <= std::min(v_, u_) && (len > 2 || lambda_ >= 2)) {
          std::vector<Vertex> cyc;
          for (int q = 0; q < len / 2; ++q) {
            cyc.push_back(Vertex::L(q));
            cyc.push_back(Vertex::R(q));
          }
          ok = place(cyc, s, len);
        }
      } else {
        std::vector<Vertex> path{Vertex::L(s)};
        used_left_[s] = true;
        ok = extend(path, s, len, floor);
        used_left_[s] = false;
      }
      ++cnt_[li];
      if (ok) return true;
      if (timed_out_) return false;
    }
    if (failed_.size() < kMemoLimit) failed_.insert(k);
    return false;
  }

  bool place(const std::vector<Vertex>& cyc, int s, int len) {
    apply(cyc, +1);
    chosen_.push_back(cyc);
    // The path marks belong to the cycle just closed, not to the subtree.
    std::vector<bool> left(v_, false);
    std::vector<bool> right(u_, false);
    std::swap(left, used_left_);
    std::swap(right, used_right_);
    const bool ok = search(s, len, cyc);
    std::swap(left, used_left_);
    std::swap(right, used_right_);
    if (ok) return true;
    chosen_.pop_back();
    apply(cyc, -1);
    return false;
  }

  bool extend(std::vector<Vertex>& path, int s, int len, const std::vector<Vertex>* floor) {
    if (timed_out_) return false;
    const Vertex cur = path.back();
    const int n = static_cast<int>(path.size());
    if (len == 2) {
      for (int j = 0; j < u_; ++j) {
        if (res(s, j) < 2) continue;
        std::vector<Vertex> cyc{Vertex::L(s), Vertex::R(j)};
        if (floor && cyc < *floor) continue;
        if (place(cyc, s, len)) return true;
        if (timed_out_) return false;
      }
      return false;
    }
    // A prefix already below the floor can never complete above it.
    if (floor && std::lexicographical_compare(path.begin(), path.end(), floor->begin(), floor->begin() + n)) {
      return false;
    }
    if (cur.part == Part::Left) {
      for (int j = 0; j < u_; ++j) {
        if (used_right_[j] || res(cur.index, j) < 1) continue;
        if (n == len - 1) {
          // Closing vertex: must link back to s and exceed the first Right
          // vertex to fix the orientation.
          if (res(s, j) < 1 || Vertex::R(j) < path[1]) continue;
          path.push_back(Vertex::R(j));
          const bool ok = (!floor || !(path < *floor)) && place(path, s, len);
          path.pop_back();
          if (ok) return true;
          if (timed_out_) return false;
          continue;
        }
        used_right_[j] = true;
        path.push_back(Vertex::R(j));
        const bool ok = extend(path, s, len, floor);
        path.pop_back();
        used_right_[j] = false;
        if (ok) return true;
        if (timed_out_) return false;
      }
    } else {
      for (int i = s + 1; i < v_; ++i) {
        if (used_left_[i] || res(i, cur.index) < 1) continue;
        used_left_[i] = true;
        path.push_back(Vertex::L(i));
        const bool ok = extend(path, s, len, floor);
        path.pop_back();
        used_left_[i] = false;
        if (ok) return true;
        if (timed_out_) return false;
      }
    }
    return false;
  }

  static constexpr size_t kMemoLimit = 4'000'000;

  int v_;
  int u_;
  int lambda_;
  Clock::time_point deadline_;
  std::vector<int> res_;
  std::vector<int> deg_;
  std::vector<int> lens_;
  std::vector<int> cnt_;
  std::vector<bool> used_left_;
  std::vector<bool> used_right_;
  std::vector<std::vector<Vertex>> chosen_;
  std::unordered_set<std::string> failed_;
  long nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

OracleResult oracle_decide(const GraphSpec& spec, const LengthSeq& m, double budget_seconds) {
  spec.validate();
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget_seconds));
  Solver solver(spec, m, deadline);
  OracleResult r;
  const bool found = solver.solve();
  r.nodes = solver.nodes();
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (found) {
    std::vector<Cycle> cycles;
    for (const auto& c : solver.chosen()) cycles.push_back(Cycle::from(c));
    r.witness = Packing(spec, std::move(cycles));
    r.status = OracleStatus::Exists;
  } else {
    r.status = solver.timed_out() ? OracleStatus::Timeout : OracleStatus::NotExists;
  }
  return r;
}

std::vector<LengthSeq> even_partitions(int total) {
  std::vector<LengthSeq> out;
  if (total <= 0 || total % 2 != 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int min_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = min_part; p <= left; p += 2) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(total, 2);
  return out;
}

std::vector<CensusEntry> oracle_enumerate(const GraphSpec& spec, double budget_seconds) {
  std::vector<CensusEntry> out;
  const long total = spec.total_edges();
  if (total % 2 != 0) return out;
  for (LengthSeq& m : even_partitions(static_cast<int>(total))) {
    const OracleStatus s = oracle_decide(spec, m, budget_seconds).status;
    out.push_back({std::move(m), s});
  }
  return out;
}

}  // namespace bicd
