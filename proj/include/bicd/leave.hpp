#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bicd/model.hpp"

namespace bicd {

enum class ComponentKind { Cycle, Chain, Ring, Other };

std::string_view to_string(ComponentKind kind);

// One non-trivial connected component of a leave.
//
//  - Cycle: a single cycle (cycles has one entry).
//  - Chain: cycles A_1..A_r, r >= 2, consecutive ones sharing exactly one
//    vertex (links[i] joins A_{i+1} and A_{i+2}, 0-based: links.size() == r-1)
//    and non-consecutive ones disjoint.
//  - Ring: r >= 3 cycles sharing one vertex with each cyclic neighbour
//    (links[i] is shared by A_i and A_{i+1 mod r}), or r == 2 cycles sharing
//    exactly two vertices (links holds both).
//  - Other: anything else; cycles is empty.
struct LeaveComponent {
  ComponentKind kind = ComponentKind::Other;
  std::vector<Cycle> cycles;
  std::vector<Vertex> links;
  std::vector<Vertex> vertices;  // sorted
  EdgeMultiset edges;

  long size() const { return edges.size(); }
  int two_cycle_count() const;
};

struct LeaveStructure {
  std::vector<LeaveComponent> components;  // ordered by least vertex
  std::vector<int> degree;                 // indexed by vertex_id

  int count(ComponentKind kind) const;
};

// Throws NotEven when some vertex has odd leave degree.
LeaveStructure classify_leave(const EdgeMultiset& leave);

// Vertex sets of the non-trivial components, each sorted, ordered by least
// vertex. Works on any leave (no parity requirement).
std::vector<std::vector<Vertex>> leave_components(const EdgeMultiset& leave);

// Whether removing x disconnects x's component (x must have positive degree).
bool is_cut_vertex(const EdgeMultiset& leave, Vertex x);

// The two paths of a chain (or cycle) between common end vertices. first has
// the requested length; their union is the component.
struct PathSplit {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

// All decompositions of a Cycle or Chain component into a path with `length`
// edges and a path with the remaining edges sharing both end vertices, in a
// deterministic order. Empty for other kinds.
std::vector<PathSplit> path_splits(const LeaveComponent& component, int length);

// Every cycle of the given length in the leave, canonical, in lexicographic
// order. `limit` caps the output.
std::vector<Cycle> cycles_in(const EdgeMultiset& leave, int length, size_t limit = SIZE_MAX);

// If the leave is exactly the edge-disjoint union of an m1-cycle and an
// m2-cycle, returns one such pair.
std::optional<std::pair<Cycle, Cycle>> find_two_cycle_split(const EdgeMultiset& leave, int m1, int m2);

// If the leave is exactly one cycle, returns it.
std::optional<Cycle> as_single_cycle(const EdgeMultiset& leave);

}  // namespace bicd
