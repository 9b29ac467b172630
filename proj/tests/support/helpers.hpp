#pragma once

#include <gtest/gtest.h>

#include <map>

#include "bicd/error.hpp"
#include "bicd/model.hpp"

namespace bicd::testing {

inline Vertex L(int i) { return Vertex::L(i); }
inline Vertex R(int j) { return Vertex::R(j); }

template <class F>
void expect_error(F&& f, ErrorKind kind) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

inline EdgeMultiset edges_of(int v, int u, std::initializer_list<Cycle> cycles) {
  EdgeMultiset m(v, u);
  for (const Cycle& c : cycles) c.apply(m, +1);
  return m;
}

// A packing of spec whose leave is exactly `leave`: 2-cycles on doubled
// pairs, then closed walks through the simple remainder.
inline Packing packing_with_leave(const GraphSpec& spec, const EdgeMultiset& leave) {
  EdgeMultiset rest = EdgeMultiset::complete(spec);
  for (int i = 0; i < spec.v; ++i) {
    for (int j = 0; j < spec.u; ++j) rest.add(i, j, -leave(i, j));
  }
  std::vector<Cycle> cycles;
  for (int i = 0; i < spec.v; ++i) {
    for (int j = 0; j < spec.u; ++j) {
      while (rest(i, j) >= 2) {
        rest.add(i, j, -2);
        cycles.push_back(Cycle::from({L(i), R(j)}));
      }
    }
  }
  const int n = spec.v + spec.u;
  auto neighbour = [&](Vertex x) -> std::optional<Vertex> {
    const Part side = other(x.part);
    const int bound = side == Part::Left ? spec.v : spec.u;
    for (int k = 0; k < bound; ++k) {
      if (rest.at(x, {side, k}) > 0) return Vertex{side, k};
    }
    return std::nullopt;
  };
  for (int id = 0; id < n; ++id) {
    const Vertex start = vertex_from_id(spec.v, id);
    while (rest.degree(start) > 0) {
      std::vector<Vertex> walk{start};
      std::map<Vertex, size_t> pos{{start, 0}};
      while (true) {
        const auto next = neighbour(walk.back());
        if (!next) throw std::logic_error("remainder is not even");
        rest.add(walk.back(), *next, -1);
        const auto it = pos.find(*next);
        if (it != pos.end()) {
          std::vector<Vertex> cyc(walk.begin() + static_cast<long>(it->second), walk.end());
          cycles.push_back(Cycle::from(cyc));
          for (size_t k = it->second + 1; k < walk.size(); ++k) pos.erase(walk[k]);
          walk.resize(it->second + 1);
          if (walk.size() == 1) break;
          continue;
        }
        pos[*next] = walk.size();
        walk.push_back(*next);
      }
    }
  }
  return Packing(spec, std::move(cycles));
}

}  // namespace bicd::testing
