#include "bicd/conditions.hpp"

#include <algorithm>

namespace bicd {

namespace {

NecessaryVerdict fail(std::string label, long lhs, const char* op, long rhs) {
  return {false, std::move(label), std::to_string(lhs) + " " + op + " " + std::to_string(rhs)};
}

CoverageVerdict not_covered(std::string reason) { return {false, std::move(reason)}; }

}  // namespace

std::string NecessaryVerdict::to_string() const {
  return pass ? "pass" : "fail(" + condition + "): " + detail;
}

std::string CoverageVerdict::to_string() const {
  return covered ? "covered" : "not-covered: " + reason;
}

NecessaryVerdict check_necessary(const GraphSpec& spec, const LengthSeq& m) {
  const long lambda = spec.lambda;
  const long vu = static_cast<long>(spec.v) * spec.u;
  if (m.empty()) return fail("sum", 0, "!=", spec.total_edges());
  if (m.sum() != spec.total_edges()) return fail("sum", m.sum(), "!=", spec.total_edges());
  if (m.largest() > 2L * spec.min_part()) return fail("a", m.largest(), ">", 2L * spec.min_part());
  if ((lambda * spec.v) % 2 != 0) return {false, "b", "lambda*v = " + std::to_string(lambda * spec.v) + " is odd"};
  if ((lambda * spec.u) % 2 != 0) return {false, "b", "lambda*u = " + std::to_string(lambda * spec.u) + " is odd"};
  if (lambda % 2 == 0) {
    const long bound = lambda / 2 * vu - m.largest() + 2;
    if (m.size() > bound) return fail("c", m.size(), ">", bound);
  } else {
    const long lhs = 2L * m.nu(2);
    if (lhs > (lambda - 1) * vu) return fail("d", lhs, ">", (lambda - 1) * vu);
  }
  return {};
}

CoverageVerdict check_constructive_hypotheses(const GraphSpec& spec, const LengthSeq& m) {
  const int v = std::min(spec.v, spec.u);
  const int u = std::max(spec.v, spec.u);
  const long lambda = spec.lambda;
  const long vu = static_cast<long>(v) * u;
  if (m.empty() || m.sum() != spec.total_edges()) {
    return not_covered("sum(M) = " + std::to_string(m.sum()) + " != " + std::to_string(spec.total_edges()));
  }
  if (v < 5) return not_covered("part size " + std::to_string(v) + " < 5");
  if ((lambda * v) % 2 != 0 || (lambda * u) % 2 != 0) return not_covered("lambda*v or lambda*u is odd");
  if (m.size() < 2) return not_covered("fewer than two cycles");
  const int mt = m.largest();
  const int mt1 = m.second_largest();
  if (mt > 3 * mt1) {
    return not_covered("m_t = " + std::to_string(mt) + " > 3*m_{t-1} = " + std::to_string(3 * mt1));
  }
  if (lambda % 2 == 0) {
    const long bound = lambda / 2 * vu - mt + 2;
    if (m.size() > bound) {
      return not_covered("t = " + std::to_string(m.size()) + " > " + std::to_string(bound));
    }
  }
  if (2L * m.nu(2) > (lambda - 1) * vu) {
    return not_covered("2*nu_2 = " + std::to_string(2L * m.nu(2)) + " > " + std::to_string((lambda - 1) * vu));
  }
  const int cap = v < u ? 2 * v + 2 : 2 * v;
  if (mt1 + mt > cap) {
    return not_covered("m_{t-1}+m_t = " + std::to_string(mt1 + mt) + " > " + std::to_string(cap));
  }
  return {};
}

}  // namespace bicd
