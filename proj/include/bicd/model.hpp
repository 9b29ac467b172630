#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bicd/error.hpp"

namespace bicd {

// The complete bipartite multigraph lambda*K_{v,u}: parts of sizes v (Left)
// and u (Right), lambda parallel edges between every cross pair.
struct GraphSpec {
  int lambda = 1;
  int v = 1;
  int u = 1;

  long total_edges() const { return static_cast<long>(lambda) * v * u; }
  int min_part() const { return v < u ? v : u; }
  GraphSpec transposed() const { return {lambda, u, v}; }

  // Throws Input unless lambda, v, u are all positive.
  void validate() const;

  bool operator==(const GraphSpec&) const = default;
};

enum class Part : std::uint8_t { Left = 0, Right = 1 };

inline Part other(Part p) { return p == Part::Left ? Part::Right : Part::Left; }

struct Vertex {
  Part part = Part::Left;
  int index = 0;

  static Vertex L(int i) { return {Part::Left, i}; }
  static Vertex R(int j) { return {Part::Right, j}; }

  auto operator<=>(const Vertex&) const = default;
  bool operator==(const Vertex&) const = default;
};

std::string to_string(Vertex x);
std::ostream& operator<<(std::ostream& os, Vertex x);

// Dense id: Left vertices first (0..v-1), then Right (v..v+u-1). Matches the
// canonical vertex order.
inline int vertex_id(int v, Vertex x) {
  return x.part == Part::Left ? x.index : v + x.index;
}
inline Vertex vertex_from_id(int v, int id) {
  return id < v ? Vertex::L(id) : Vertex::R(id - v);
}

// Multiplicities of the cross pairs (L_i, R_j). Edge copies are
// interchangeable; only counts are tracked.
class EdgeMultiset {
 public:
  EdgeMultiset() = default;
  EdgeMultiset(int v, int u) : v_(v), u_(u), counts_(static_cast<size_t>(v) * u, 0) {}

  static EdgeMultiset complete(const GraphSpec& spec);

  int v() const { return v_; }
  int u() const { return u_; }

  int operator()(int i, int j) const { return counts_[static_cast<size_t>(i) * u_ + j]; }
  // Multiplicity between two vertices in either order; 0 for same-part pairs.
  int at(Vertex a, Vertex b) const;

  // Throws Overfull if the count would go negative.
  void add(int i, int j, int delta);
  void add(Vertex a, Vertex b, int delta);

  long size() const;
  bool empty() const { return size() == 0; }
  int degree(Vertex x) const;
  std::vector<int> degrees() const;  // indexed by vertex_id
  int max_multiplicity() const;

  EdgeMultiset transposed() const;

  bool operator==(const EdgeMultiset&) const = default;

 private:
  int v_ = 0;
  int u_ = 0;
  std::vector<int> counts_;
};

std::ostream& operator<<(std::ostream& os, const EdgeMultiset& m);

// A cycle of even length m >= 2 alternating between the parts. A 2-cycle is a
// pair of parallel edges and consumes multiplicity 2 on its pair.
class Cycle {
 public:
  Cycle() = default;

  // Validates and canonicalizes: the least rotation/reflection, which starts
  // at the least Left vertex. Throws MalformedCycle.
  static Cycle from(std::span<const Vertex> raw);
  static Cycle from(std::initializer_list<Vertex> raw) {
    return from(std::span<const Vertex>(raw.begin(), raw.size()));
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  int length() const { return static_cast<int>(vertices_.size()); }
  bool contains(Vertex x) const;

  // Adds (sign=+1) or removes (sign=-1) this cycle's edges.
  void apply(EdgeMultiset& m, int sign) const;

  Cycle transposed() const;

  auto operator<=>(const Cycle&) const = default;
  bool operator==(const Cycle&) const = default;

 private:
  friend Cycle canonicalize_cycle(std::span<const Vertex> raw);
  std::vector<Vertex> vertices_;
};

Cycle canonicalize_cycle(std::span<const Vertex> raw);

std::ostream& operator<<(std::ostream& os, const Cycle& c);

// A non-decreasing sequence of even cycle lengths m_1 <= ... <= m_t.
class LengthSeq {
 public:
  LengthSeq() = default;
  // Sorts the input; throws Input on odd or < 2 entries.
  explicit LengthSeq(std::vector<int> lengths);

  static LengthSeq parse(const std::string& comma_separated);

  const std::vector<int>& lengths() const { return lengths_; }
  int size() const { return static_cast<int>(lengths_.size()); }
  bool empty() const { return lengths_.empty(); }
  long sum() const;
  int nu(int k) const;
  int largest() const { return lengths_.back(); }
  int second_largest() const { return lengths_.size() >= 2 ? lengths_[lengths_.size() - 2] : 0; }

  bool operator==(const LengthSeq&) const = default;

 private:
  std::vector<int> lengths_;
};

std::string to_string(const LengthSeq& m);
std::ostream& operator<<(std::ostream& os, const LengthSeq& m);

// Leave = lambda copies of every cross pair minus the cycle edges. Throws
// Overfull when a pair is consumed beyond lambda.
EdgeMultiset compute_leave(const GraphSpec& spec, std::span<const Cycle> cycles);

// Edge-disjoint cycles of lambda*K_{v,u} together with the unused edges.
// Value type; every transformation in the library returns a new Packing.
class Packing {
 public:
  Packing() = default;
  Packing(GraphSpec spec, std::vector<Cycle> cycles);
  // Trusts the caller's leave; checked by verify_packing in tests.
  Packing(GraphSpec spec, std::vector<Cycle> cycles, EdgeMultiset leave)
      : spec_(spec), cycles_(std::move(cycles)), leave_(std::move(leave)) {}

  static Packing empty(const GraphSpec& spec) { return Packing(spec, {}); }

  const GraphSpec& spec() const { return spec_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  const EdgeMultiset& leave() const { return leave_; }

  LengthSeq lengths() const;
  bool is_decomposition() const { return leave_.empty(); }
  bool leave_is_even() const;

  // Adds a cycle whose edges are taken from the leave.
  Packing with_cycle(const Cycle& c) const;
  // Returns the cycles at the given indices to the leave.
  Packing without_cycles(std::span<const int> indices) const;

  Packing transposed() const;

 private:
  GraphSpec spec_;
  std::vector<Cycle> cycles_;
  EdgeMultiset leave_;
};

}  // namespace bicd
