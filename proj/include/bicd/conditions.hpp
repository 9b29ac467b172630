#pragma once

#include <string>

#include "bicd/model.hpp"

namespace bicd {

// Result of the necessary-condition check. On failure `condition` is the
// label of the first violated condition ("sum", "a", "b", "c", "d") and
// `detail` both sides of the inequality, e.g. "12 > 8".
struct NecessaryVerdict {
  bool pass = true;
  std::string condition;
  std::string detail;

  std::string to_string() const;  // "pass" or "fail(d): 12 > 8"
};

NecessaryVerdict check_necessary(const GraphSpec& spec, const LengthSeq& m);

struct CoverageVerdict {
  bool covered = true;
  std::string reason;

  std::string to_string() const;  // "covered" or "not-covered: <reason>"
};

// Hypotheses under which the constructor promises a decomposition. The
// 2-cycle bound is applied for every lambda, not only odd ones.
CoverageVerdict check_constructive_hypotheses(const GraphSpec& spec, const LengthSeq& m);

inline int nu_count(const LengthSeq& m, int k) { return m.nu(k); }

}  // namespace bicd
