#pragma once

#include <vector>

#include "bicd/model.hpp"
#include "bicd/switching.hpp"

namespace bicd {

// Decomposition of lambda*K_{v,u} (lambda even) into one m_t-cycle, the
// fewest 4-cycles the counting bound allows and 2-cycles elsewhere.
Packing base_even(const GraphSpec& spec, int m_t);

// lambda odd: a simple layer with 4-cycles and the two largest cycles,
// 2-cycles on the remaining multiplicity.
Packing base_odd(const GraphSpec& spec, int m_t, int m_t1, double budget_seconds = 60);

// Cycles of 1*K_{v,u} with lengths m (all >= 4); with six_cycle_leave the
// packing leaves exactly one 6-cycle uncovered. Throws BaseUnavailable when
// the search runs out of time.
Packing simple_base(int v, int u, const LengthSeq& m, bool six_cycle_leave = false, double budget_seconds = 60);

// Length shape base_even produces for (spec, m_t).
LengthSeq base_even_lengths(const GraphSpec& spec, int m_t);

// True when lambda is even and m is exactly what base_even builds for its
// largest entry; such sequences need no joins and no coverage check.
bool is_base_shape(const GraphSpec& spec, const LengthSeq& m);

struct MergeGroup {
  int target = 0;
  std::vector<int> pieces;  // base lengths joined in this order
};

struct MergePlan {
  std::vector<int> kept;  // base cycles taken over untouched (the protected ones)
  std::vector<MergeGroup> groups;
};

// Allocates the base 4- and 2-cycles to the targets of m other than the
// `protect` largest, which must appear in the base unchanged. Every partial
// sum s and the piece p joined to it satisfy s+p <= h and h+s+p <= bound.
// Throws PlanInfeasible.
MergePlan plan_merges(const LengthSeq& base, const LengthSeq& m, int h, int protect, int bound);

struct DecomposeOptions {
  double simple_budget_seconds = 60;
  AuditLog* log = nullptr;
};

// The full construction for inputs meeting the constructive hypotheses (or
// of base shape, which is built directly). The result is verified before it is returned. Throws LemmaPrecondition
// when not covered and ConstructiveGap when a step fails.
Packing decompose(const GraphSpec& spec, const LengthSeq& m, const DecomposeOptions& opts = {});

}  // namespace bicd
