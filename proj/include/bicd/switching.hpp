#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bicd/model.hpp"

namespace bicd {

// One copy of the edge between `end` and `at`, where `at` is alpha or beta.
struct Slot {
  Vertex end;
  Vertex at;

  auto operator<=>(const Slot&) const = default;
  bool operator==(const Slot&) const = default;
};

struct Toggle {
  Vertex a;
  Vertex b;
  int delta = 0;  // change applied to the leave multiplicity of {a,b}
};

struct SwitchRecord {
  Vertex alpha;
  Vertex beta;
  Vertex origin;
  Vertex terminus;
  std::array<Toggle, 4> toggled{};
};

std::string to_string(const SwitchRecord& r);

// Collects one line per switch (and free-form notes) for --trace.
class AuditLog {
 public:
  void record(std::string_view tag, const SwitchRecord& r);
  void note(std::string_view tag, const std::string& text);

  const std::vector<std::string>& lines() const { return lines_; }
  void write(std::ostream& os) const;

 private:
  std::vector<std::string> lines_;
};

// The slots of the leave at alpha and beta that are not matched by the
// other: for each w, max(0, mu(w alpha) - mu(w beta)) copies of w-alpha and
// symmetrically for beta. Throws InvalidTwin.
std::vector<Slot> switch_edge_set(const EdgeMultiset& leave, Vertex alpha, Vertex beta);

// The (alpha,beta)-switch with the given origin. The origin may carry the
// excess on either side; equal multiplicities throw NoExcess. The first
// feasible terminus in vertex order is used. The result is checked against
// the packing invariant before it is returned.
std::pair<Packing, SwitchRecord> perform_switch(const Packing& p, Vertex alpha, Vertex beta, Vertex origin);

// Every feasible outcome of the switch, one per distinct terminus slot, in
// the order perform_switch tries them.
std::vector<std::pair<Packing, SwitchRecord>> switch_outcomes(const Packing& p, Vertex alpha, Vertex beta,
                                                              Vertex origin);

}  // namespace bicd
