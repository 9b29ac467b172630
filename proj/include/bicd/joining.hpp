#pragma once

#include <vector>

#include "bicd/leave.hpp"
#include "bicd/model.hpp"
#include "bicd/switching.hpp"

namespace bicd {

// Largest leave the joining routines accept: 2v+2 when v < u, 2v when
// v == u, with v the smaller part.
int leave_bound(const GraphSpec& spec);

struct SplitOutcome {
  Packing packing;
  SwitchRecord record;
  // True when the switch ended at x_{t-1}; the leave then need not split
  // and the caller continues with the ring/chain induction.
  bool terminus_was_penultimate = false;
};

// (x_0, x_t)-switch with origin x_1 along `path`. Throws LemmaPrecondition
// unless the leave has one non-trivial component containing `path` as an
// even path of length >= 4 whose complement is a path and x_1 x_t is not a
// leave edge.
SplitOutcome split_component(const Packing& p, const std::vector<Vertex>& path, AuditLog* log = nullptr);

// The leave is a single 2-chain; adds an m1-cycle and an m2-cycle.
Packing chain_split(const Packing& p, int m1, int m2, AuditLog* log = nullptr);

// The leave is a single chain, ring or cycle of size m1+m2 within
// leave_bound; adds an m1-cycle and an m2-cycle.
Packing close_component(const Packing& p, int m1, int m2, AuditLog* log = nullptr);

struct GatherResult {
  Packing packing;
  PathSplit split;  // split.first has m1 edges
};

// Leave with exactly one degree-4 vertex and all others of degree 0 or 2;
// rearranges it into one chain with an m1-path / m2-path split.
GatherResult gather_to_chain(const Packing& p, int m1, int m2, AuditLog* log = nullptr);

Packing extract_two_cycles(const Packing& p, int m1, int m2, AuditLog* log = nullptr);

// Moves two units of leave degree from a to b (same part, deg a > deg b).
Packing shift_degree(const Packing& p, Vertex a, Vertex b, AuditLog* log = nullptr);

// Half the degree surplus over 2 of the leave vertices with degree >= 4.
int degree_surplus(const EdgeMultiset& leave);

// Repeated shifts until exactly one leave vertex has degree 4 and every
// other has degree 0 or 2.
Packing concentrate_degree(const Packing& p, AuditLog* log = nullptr);

// Joins the m- and m'-cycles at the given indices into one (m+m')-cycle,
// keeping a cycle of length h. All other lengths are preserved.
Packing join_two_cycles(const Packing& d, int h_idx, int m_idx, int m2_idx, AuditLog* log = nullptr);

}  // namespace bicd
