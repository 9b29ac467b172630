#include "bicd/constructor.hpp"

#include <algorithm>
#include <functional>

#include "bicd/certify.hpp"
#include "bicd/conditions.hpp"
#include "bicd/joining.hpp"
#include "bicd/leave.hpp"
#include "bicd/oracle.hpp"

namespace bicd {

namespace {

Error input(const std::string& what) { return Error(ErrorKind::Input, what); }

void add_two_cycles(std::vector<Cycle>& cycles, int i, int j, int count) {
  for (int c = 0; c < count; ++c) cycles.push_back(Cycle::from({Vertex::L(i), Vertex::R(j)}));
}

}  // namespace

Packing base_even(const GraphSpec& spec, int m_t) {
  spec.validate();
  if (spec.lambda % 2 != 0) throw input("base_even needs an even lambda");
  if (m_t < 2 || m_t % 2 != 0) throw input("m_t = " + std::to_string(m_t) + " is not even and >= 2");
  if (m_t > 2 * spec.min_part()) throw input("m_t = " + std::to_string(m_t) + " exceeds 2*min(v,u)");

  // x_{2j} = L_j, x_{2j+1} = R_j.
  auto x = [](int k) { return k % 2 == 0 ? Vertex::L(k / 2) : Vertex::R(k / 2); };
  std::vector<Cycle> cycles;
  std::vector<Vertex> big;
  for (int k = 0; k < m_t; ++k) big.push_back(x(k));
  cycles.push_back(Cycle::from(big));
  for (int k = 1; k <= (m_t - 2) / 2; ++k) cycles.push_back(Cycle::from({x(0), x(2 * k - 1), x(2 * k), x(2 * k + 1)}));

  // The cycles above cover every pair 0 or 2 times; 2-cycles fill the rest.
  const EdgeMultiset rest = compute_leave(spec, cycles);
  for (int i = 0; i < spec.v; ++i) {
    for (int j = 0; j < spec.u; ++j) {
      if (rest(i, j) % 2 != 0) throw Error(ErrorKind::ConstructiveGap, "base layout left an odd multiplicity");
      add_two_cycles(cycles, i, j, rest(i, j) / 2);
    }
  }
  return Packing(spec, std::move(cycles));
}

LengthSeq base_even_lengths(const GraphSpec& spec, int m_t) {
  std::vector<int> l;
  const int fours = (m_t - 2) / 2;
  const long twos = (spec.total_edges() - m_t - 4L * fours) / 2;
  for (long k = 0; k < twos; ++k) l.push_back(2);
  for (int k = 0; k < fours; ++k) l.push_back(4);
  l.push_back(m_t);
  return LengthSeq(l);
}

bool is_base_shape(const GraphSpec& spec, const LengthSeq& m) {
  if (spec.lambda % 2 != 0 || m.empty() || m.sum() != spec.total_edges()) return false;
  const int m_t = m.largest();
  if (m_t > 2 * spec.min_part()) return false;
  return m == base_even_lengths(spec, m_t);
}

Packing simple_base(int v, int u, const LengthSeq& m, bool six_cycle_leave, double budget_seconds) {
  if (v < 1 || u < 1) throw input("part sizes must be positive");
  for (int x : m.lengths()) {
    if (x < 4) throw input("simple layer lengths must be >= 4");
  }
  const long want = static_cast<long>(v) * u - (six_cycle_leave ? 6 : 0);
  if (m.sum() != want) {
    throw input("lengths sum to " + std::to_string(m.sum()) + ", expected " + std::to_string(want));
  }
  const GraphSpec spec{1, v, u};
  const bool all_fours = std::all_of(m.lengths().begin(), m.lengths().end(), [](int x) { return x == 4; });
  if (!six_cycle_leave && all_fours && v % 2 == 0 && u % 2 == 0) {
    std::vector<Cycle> cycles;
    for (int i = 0; i < v; i += 2) {
      for (int j = 0; j < u; j += 2) {
        cycles.push_back(Cycle::from({Vertex::L(i), Vertex::R(j), Vertex::L(i + 1), Vertex::R(j + 1)}));
      }
    }
    return Packing(spec, std::move(cycles));
  }
  std::vector<int> lengths = m.lengths();
  if (six_cycle_leave) lengths.push_back(6);
  const OracleResult r = oracle_decide(spec, LengthSeq(lengths), budget_seconds);
  if (r.status != OracleStatus::Exists) {
    throw Error(ErrorKind::BaseUnavailable, "simple layer search for " + to_string(LengthSeq(lengths)) + ": " +
                                                std::string(to_string(r.status)));
  }
  std::vector<Cycle> cycles = r.witness->cycles();
  if (six_cycle_leave) {
    auto it = std::find_if(cycles.rbegin(), cycles.rend(), [](const Cycle& c) { return c.length() == 6; });
    cycles.erase(std::next(it).base());
  }
  return Packing(spec, std::move(cycles));
}

Packing base_odd(const GraphSpec& spec, int m_t, int m_t1, double budget_seconds) {
  spec.validate();
  if (spec.lambda % 2 == 0) throw input("base_odd needs an odd lambda");
  if (spec.v % 2 != 0 || spec.u % 2 != 0) throw input("base_odd needs even part sizes");
  if (m_t1 > m_t) std::swap(m_t, m_t1);
  if (m_t1 < 4 || m_t1 % 2 != 0 || m_t % 2 != 0) throw input("the two largest lengths must be even and >= 4");
  if (m_t > std::min({spec.v, spec.u, 3 * m_t1})) throw input("m_t exceeds min(v, u, 3*m_{t-1})");
  const long vu = static_cast<long>(spec.v) * spec.u;
  const long rest = vu - m_t - m_t1;
  if (rest < 0) throw input("the two largest cycles exceed one layer");

  std::vector<Cycle> cycles;
  if (rest % 4 == 0) {
    std::vector<int> layer(static_cast<size_t>(rest / 4), 4);
    layer.push_back(m_t1);
    layer.push_back(m_t);
    cycles = simple_base(spec.v, spec.u, LengthSeq(layer), false, budget_seconds).cycles();
  } else {
    if (spec.lambda == 1) throw Error(ErrorKind::BaseUnavailable, "no second layer to complete a 6-cycle leave");
    if (rest < 6) throw Error(ErrorKind::BaseUnavailable, "too few edges left for the 6-cycle completion");
    std::vector<int> layer(static_cast<size_t>((rest - 6) / 4), 4);
    layer.push_back(m_t1);
    layer.push_back(m_t);
    const Packing simple = simple_base(spec.v, spec.u, LengthSeq(layer), true, budget_seconds);
    cycles = simple.cycles();
    const auto six = as_single_cycle(simple.leave());
    if (!six || six->length() != 6) throw Error(ErrorKind::BaseUnavailable, "simple layer leave is not a 6-cycle");
    const auto& hole = six->vertices();
    cycles.push_back(Cycle::from({hole[0], hole[1], hole[2], hole[3]}));
    cycles.push_back(Cycle::from({hole[0], hole[3], hole[4], hole[5]}));
  }
  const EdgeMultiset left = compute_leave(spec, cycles);
  for (int i = 0; i < spec.v; ++i) {
    for (int j = 0; j < spec.u; ++j) {
      if (left(i, j) % 2 != 0) throw Error(ErrorKind::ConstructiveGap, "odd multiplicity after the simple layer");
      add_two_cycles(cycles, i, j, left(i, j) / 2);
    }
  }
  return Packing(spec, std::move(cycles));
}

MergePlan plan_merges(const LengthSeq& base, const LengthSeq& m, int h, int protect, int bound) {
  if (base.sum() != m.sum()) throw Error(ErrorKind::PlanInfeasible, "base and target sums differ");
  std::vector<int> pieces = base.lengths();
  std::vector<int> targets = m.lengths();
  MergePlan plan;
  for (int k = 0; k < protect; ++k) {
    if (targets.empty()) throw Error(ErrorKind::PlanInfeasible, "too few targets to protect");
    const int keep = targets.back();
    targets.pop_back();
    auto it = std::find(pieces.begin(), pieces.end(), keep);
    if (it == pieces.end()) {
      throw Error(ErrorKind::PlanInfeasible, "protected length " + std::to_string(keep) + " is not in the base");
    }
    pieces.erase(it);
    plan.kept.push_back(keep);
  }
  int fours = 0;
  int twos = 0;
  for (int p : pieces) {
    if (p == 4) {
      ++fours;
    } else if (p == 2) {
      ++twos;
    } else {
      throw Error(ErrorKind::PlanInfeasible, "unprotected base length " + std::to_string(p));
    }
  }
  // Targets in decreasing order take 4-cycles first. Any allocation that
  // places every 4-cycle leaves the right number of 2-cycles, so this greedy
  // choice fails only when no allocation exists.
  std::sort(targets.rbegin(), targets.rend());
  for (int t : targets) {
    MergeGroup g;
    g.target = t;
    const int a = std::min(t / 4, fours);
    fours -= a;
    const int b = (t - 4 * a) / 2;
    twos -= b;
    g.pieces.assign(a, 4);
    g.pieces.insert(g.pieces.end(), b, 2);
    if (g.pieces.size() >= 2 && (t > h || h + t > bound)) {
      throw Error(ErrorKind::PlanInfeasible, "target " + std::to_string(t) + " cannot be joined under h = " +
                                                 std::to_string(h) + " within " + std::to_string(bound));
    }
    plan.groups.push_back(std::move(g));
  }
  if (fours != 0 || twos != 0) {
    throw Error(ErrorKind::PlanInfeasible, std::to_string(fours) + " 4-cycles and " + std::to_string(twos) +
                                               " 2-cycles are left unallocated");
  }
  return plan;
}

namespace {

int find_length(const Packing& p, int len, std::initializer_list<int> skip, bool from_back) {
  const int n = static_cast<int>(p.cycles().size());
  for (int s = 0; s < n; ++s) {
    const int k = from_back ? n - 1 - s : s;
    if (p.cycles()[k].length() != len) continue;
    if (std::find(skip.begin(), skip.end(), k) != skip.end()) continue;
    return k;
  }
  return -1;
}

Packing checked(const Packing& p, const LengthSeq& m) {
  const Verdict v = verify_decomposition(p.spec(), p.cycles(), m);
  if (!v.valid) throw Error(ErrorKind::ConstructiveGap, "construction failed verification: " + v.reason);
  return p;
}

}  // namespace

Packing decompose(const GraphSpec& spec, const LengthSeq& m, const DecomposeOptions& opts) {
  spec.validate();
  if (spec.v > spec.u) return decompose(spec.transposed(), m, opts).transposed();
  if (is_base_shape(spec, m)) return checked(base_even(spec, m.largest()), m);
  const CoverageVerdict cov = check_constructive_hypotheses(spec, m);
  if (!cov.covered) throw Error(ErrorKind::LemmaPrecondition, cov.to_string());

  if (spec.lambda == 1) {
    try {
      return checked(simple_base(spec.v, spec.u, m, false, opts.simple_budget_seconds), m);
    } catch (const Error& e) {
      throw Error(ErrorKind::ConstructiveGap, e.what());
    }
  }

  const int h = m.largest();
  const int bound = leave_bound(spec);
  Packing cur;
  MergePlan plan;
  try {
    const bool even = spec.lambda % 2 == 0;
    cur = even ? base_even(spec, h) : base_odd(spec, h, m.second_largest(), opts.simple_budget_seconds);
    plan = plan_merges(cur.lengths(), m, h, even ? 1 : 2, bound);
  } catch (const Error& e) {
    throw Error(ErrorKind::ConstructiveGap, e.what());
  }
  if (opts.log) opts.log->note("decompose", "base " + to_string(cur.lengths()) + " for target " + to_string(m));

  for (const MergeGroup& g : plan.groups) {
    int s = g.pieces.front();
    for (size_t k = 1; k < g.pieces.size(); ++k) {
      const int piece = g.pieces[k];
      const int hi = find_length(cur, h, {}, false);
      const int mi = find_length(cur, s, {hi}, true);
      const int pi = find_length(cur, piece, {hi, mi}, false);
      if (hi < 0 || mi < 0 || pi < 0) throw Error(ErrorKind::ConstructiveGap, "join operands missing");
      try {
        cur = join_two_cycles(cur, hi, mi, pi, opts.log);
      } catch (const Error& e) {
        throw Error(ErrorKind::ConstructiveGap, "join " + std::to_string(s) + "+" + std::to_string(piece) +
                                                    " under h=" + std::to_string(h) + ": " + e.what());
      }
      s += piece;
    }
  }
  return checked(cur, m);
}

}  // namespace bicd
