#include "bicd/leave.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace bicd {

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Cycle: return "cycle";
    case ComponentKind::Chain: return "chain";
    case ComponentKind::Ring: return "ring";
    case ComponentKind::Other: return "other";
  }
  return "?";
}

int LeaveComponent::two_cycle_count() const {
  return static_cast<int>(std::count_if(cycles.begin(), cycles.end(),
                                        [](const Cycle& c) { return c.length() == 2; }));
}

int LeaveStructure::count(ComponentKind kind) const {
  return static_cast<int>(std::count_if(components.begin(), components.end(),
                                        [&](const LeaveComponent& c) { return c.kind == kind; }));
}

namespace {

// Consumes one copy of the least edge at x in `rem` and returns its other end.
Vertex consume_slot(EdgeMultiset& rem, Vertex x) {
  const int bound = x.part == Part::Left ? rem.u() : rem.v();
  for (int k = 0; k < bound; ++k) {
    const Vertex y{other(x.part), k};
    if (rem.at(x, y) > 0) {
      rem.add(x, y, -1);
      return y;
    }
  }
  throw Error(ErrorKind::NotEven, "walk stuck at " + to_string(x));
}

EdgeMultiset restrict_to(const EdgeMultiset& leave, const std::vector<Vertex>& vs) {
  EdgeMultiset out(leave.v(), leave.u());
  std::vector<bool> left(leave.v(), false);
  std::vector<bool> right(leave.u(), false);
  for (Vertex x : vs) (x.part == Part::Left ? left : right)[x.index] = true;
  for (int i = 0; i < leave.v(); ++i) {
    if (!left[i]) continue;
    for (int j = 0; j < leave.u(); ++j) {
      if (right[j] && leave(i, j) > 0) out.add(i, j, leave(i, j));
    }
  }
  return out;
}

Cycle cycle_from_branches(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  // a and b both run from the same start to the same end.
  std::vector<Vertex> seq = a;
  for (size_t k = b.size() - 2; k >= 1; --k) seq.push_back(b[k]);
  return Cycle::from(seq);
}

Cycle cycle_from_loop(const std::vector<Vertex>& loop) {
  return Cycle::from(std::span<const Vertex>(loop.data(), loop.size() - 1));
}

LeaveComponent analyse(const EdgeMultiset& leave, std::vector<Vertex> vs) {
  LeaveComponent comp;
  comp.vertices = std::move(vs);
  comp.edges = restrict_to(leave, comp.vertices);

  std::vector<Vertex> high;
  for (Vertex x : comp.vertices) {
    const int d = comp.edges.degree(x);
    if (d > 4) return comp;  // Other
    if (d == 4) high.push_back(x);
  }

  EdgeMultiset rem = comp.edges;
  if (high.empty()) {
    std::vector<Vertex> seq{comp.vertices.front()};
    Vertex cur = consume_slot(rem, seq.front());
    while (cur != seq.front()) {
      seq.push_back(cur);
      cur = consume_slot(rem, cur);
    }
    comp.kind = ComponentKind::Cycle;
    comp.cycles.push_back(Cycle::from(seq));
    return comp;
  }

  auto is_high = [&](Vertex x) { return std::find(high.begin(), high.end(), x) != high.end(); };
  std::vector<std::vector<Vertex>> branches;
  for (Vertex d : high) {
    while (rem.degree(d) > 0) {
      std::vector<Vertex> path{d};
      Vertex cur = consume_slot(rem, d);
      path.push_back(cur);
      while (!is_high(cur)) {
        cur = consume_slot(rem, cur);
        path.push_back(cur);
      }
      branches.push_back(std::move(path));
    }
  }

  std::map<Vertex, std::vector<int>> loops;
  std::map<std::pair<Vertex, Vertex>, std::vector<int>> between;
  for (int b = 0; b < static_cast<int>(branches.size()); ++b) {
    auto& br = branches[b];
    if (br.front() == br.back()) {
      loops[br.front()].push_back(b);
    } else {
      if (br.back() < br.front()) std::reverse(br.begin(), br.end());
      between[{br.front(), br.back()}].push_back(b);
    }
  }

  const size_t h = high.size();
  // Ring of two cycles sharing two vertices.
  if (h == 2 && loops.empty() && between.size() == 1 && between.begin()->second.size() == 4) {
    auto ids = between.begin()->second;
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      if (branches[a].size() != branches[b].size()) return branches[a].size() < branches[b].size();
      return branches[a] < branches[b];
    });
    comp.kind = ComponentKind::Ring;
    comp.cycles = {cycle_from_branches(branches[ids[0]], branches[ids[1]]),
                   cycle_from_branches(branches[ids[2]], branches[ids[3]])};
    comp.links = {high[0], high[1]};
    return comp;
  }

  // Every remaining shape needs exactly two branches per adjacent pair.
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& [key, ids] : between) {
    if (ids.size() != 2) return comp;
    adj[key.first].push_back(key.second);
    adj[key.second].push_back(key.first);
  }
  for (auto& [x, ns] : adj) std::sort(ns.begin(), ns.end());

  auto pair_cycle = [&](Vertex a, Vertex b) {
    if (b < a) std::swap(a, b);
    const auto& ids = between.at({a, b});
    auto p = branches[ids[0]];
    auto q = branches[ids[1]];
    return cycle_from_branches(p, q);
  };

  if (loops.empty()) {
    // Ring with r >= 3: the adjacency among high vertices is one cycle.
    if (h < 3) return comp;
    for (Vertex x : high) {
      if (adj[x].size() != 2) return comp;
    }
    std::vector<Vertex> order{high.front()};
    Vertex prev = high.front();
    Vertex cur = adj[prev].front();
    while (cur != high.front()) {
      order.push_back(cur);
      const auto& ns = adj[cur];
      const Vertex nxt = ns[0] == prev ? ns[1] : ns[0];
      prev = cur;
      cur = nxt;
      if (order.size() > h) return comp;
    }
    if (order.size() != h) return comp;
    comp.kind = ComponentKind::Ring;
    for (size_t k = 0; k < h; ++k) {
      comp.cycles.push_back(pair_cycle(order[k], order[(k + 1) % h]));
      comp.links.push_back(order[(k + 1) % h]);
    }
    return comp;
  }

  // Chain: a path of high vertices with one loop at each end (two loops when
  // there is a single high vertex).
  std::vector<Vertex> ends;
  for (Vertex x : high) {
    const size_t nl = loops.count(x) ? loops[x].size() : 0;
    const size_t na = adj.count(x) ? adj[x].size() : 0;
    if (h == 1) {
      if (nl != 2) return comp;
    } else if (na == 1 && nl == 1) {
      ends.push_back(x);
    } else if (!(na == 2 && nl == 0)) {
      return comp;
    }
  }
  comp.kind = ComponentKind::Chain;
  if (h == 1) {
    Cycle a = cycle_from_loop(branches[loops[high[0]][0]]);
    Cycle b = cycle_from_loop(branches[loops[high[0]][1]]);
    if (b < a) std::swap(a, b);
    comp.cycles = {a, b};
    comp.links = {high[0]};
    return comp;
  }
  if (ends.size() != 2) {
    comp.kind = ComponentKind::Other;
    return comp;
  }
  std::vector<Vertex> order{ends[0]};
  Vertex prev = ends[0];
  Vertex cur = adj[prev].front();
  while (true) {
    order.push_back(cur);
    if (cur == ends[1]) break;
    const auto& ns = adj[cur];
    const Vertex nxt = ns[0] == prev ? ns[1] : ns[0];
    prev = cur;
    cur = nxt;
    if (order.size() > h) {
      comp.kind = ComponentKind::Other;
      return comp;
    }
  }
  if (order.size() != h) {
    comp.kind = ComponentKind::Other;
    return comp;
  }
  comp.cycles.push_back(cycle_from_loop(branches[loops[order.front()][0]]));
  for (size_t k = 0; k + 1 < h; ++k) comp.cycles.push_back(pair_cycle(order[k], order[k + 1]));
  comp.cycles.push_back(cycle_from_loop(branches[loops[order.back()][0]]));
  comp.links = order;
  return comp;
}

// Walk along cycle `c` from s to t in direction dir (+1 follows the stored
// vertex order).
std::vector<Vertex> arc(const Cycle& c, Vertex s, Vertex t, int dir) {
  const auto& vs = c.vertices();
  const int n = static_cast<int>(vs.size());
  int k = static_cast<int>(std::find(vs.begin(), vs.end(), s) - vs.begin());
  std::vector<Vertex> out{s};
  while (out.back() != t) {
    k = ((k + dir) % n + n) % n;
    out.push_back(vs[k]);
  }
  return out;
}

void append_tail(std::vector<Vertex>& path, const std::vector<Vertex>& more) {
  path.insert(path.end(), more.begin() + 1, more.end());
}

}  // namespace

std::vector<std::vector<Vertex>> leave_components(const EdgeMultiset& leave) {
  const int v = leave.v();
  const int n = v + leave.u();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  const auto deg = leave.degrees();
  for (int i = 0; i < v; ++i) {
    for (int j = 0; j < leave.u(); ++j) {
      if (leave(i, j) > 0) parent[find(i)] = find(v + j);
    }
  }
  std::map<int, std::vector<Vertex>> groups;
  for (int id = 0; id < n; ++id) {
    if (deg[id] > 0) groups[find(id)].push_back(vertex_from_id(v, id));
  }
  std::vector<std::vector<Vertex>> out;
  for (auto& [root, vs] : groups) out.push_back(std::move(vs));
  std::sort(out.begin(), out.end());
  return out;
}

LeaveStructure classify_leave(const EdgeMultiset& leave) {
  LeaveStructure s;
  s.degree = leave.degrees();
  for (size_t id = 0; id < s.degree.size(); ++id) {
    if (s.degree[id] % 2 != 0) {
      throw Error(ErrorKind::NotEven, "vertex " + to_string(vertex_from_id(leave.v(), static_cast<int>(id))) +
                                          " has odd leave degree " + std::to_string(s.degree[id]));
    }
  }
  for (auto& vs : leave_components(leave)) s.components.push_back(analyse(leave, std::move(vs)));
  return s;
}

bool is_cut_vertex(const EdgeMultiset& leave, Vertex x) {
  std::vector<Vertex> comp;
  for (auto& vs : leave_components(leave)) {
    if (std::find(vs.begin(), vs.end(), x) != vs.end()) comp = vs;
  }
  if (comp.size() <= 2) return false;
  std::vector<Vertex> rest;
  for (Vertex y : comp) {
    if (y != x) rest.push_back(y);
  }
  std::vector<Vertex> seen{rest.front()};
  std::vector<Vertex> stack{rest.front()};
  while (!stack.empty()) {
    const Vertex y = stack.back();
    stack.pop_back();
    for (Vertex z : rest) {
      if (leave.at(y, z) > 0 && std::find(seen.begin(), seen.end(), z) == seen.end()) {
        seen.push_back(z);
        stack.push_back(z);
      }
    }
  }
  return seen.size() != rest.size();
}

std::vector<PathSplit> path_splits(const LeaveComponent& comp, int length) {
  std::vector<PathSplit> out;
  if (comp.kind == ComponentKind::Cycle) {
    const Cycle& c = comp.cycles.front();
    const auto& vs = c.vertices();
    const int n = c.length();
    if (length < 1 || length >= n) return out;
    for (int s = 0; s < n; ++s) {
      for (int dir : {1, -1}) {
        if (n == 2 && dir == -1) continue;
        PathSplit ps;
        for (int k = 0; k <= length; ++k) ps.first.push_back(vs[((s + dir * k) % n + n) % n]);
        for (int k = 0; k <= n - length; ++k) ps.second.push_back(vs[((s - dir * k) % n + n) % n]);
        out.push_back(std::move(ps));
      }
    }
    return out;
  }
  if (comp.kind != ComponentKind::Chain) return out;

  const auto& cs = comp.cycles;
  const size_t r = cs.size();
  auto dirs = [](const Cycle& c) { return c.length() == 2 ? std::vector<int>{1} : std::vector<int>{1, -1}; };

  for (Vertex x0 : cs.front().vertices()) {
    if (x0 == comp.links.front()) continue;
    for (int d0 : dirs(cs.front())) {
      PathSplit head;
      head.first = arc(cs.front(), x0, comp.links.front(), d0);
      head.second = arc(cs.front(), x0, comp.links.front(), -d0);
      // Internal cycles: choose which arc goes to `first`.
      std::vector<PathSplit> partial{head};
      for (size_t i = 1; i + 1 < r; ++i) {
        std::vector<PathSplit> next;
        for (const auto& ps : partial) {
          for (int d : dirs(cs[i])) {
            PathSplit q = ps;
            append_tail(q.first, arc(cs[i], comp.links[i - 1], comp.links[i], d));
            append_tail(q.second, arc(cs[i], comp.links[i - 1], comp.links[i], -d));
            next.push_back(std::move(q));
          }
        }
        partial = std::move(next);
      }
      const Cycle& last = cs.back();
      const Vertex c = comp.links.back();
      for (const auto& ps : partial) {
        for (Vertex xe : last.vertices()) {
          if (xe == c) continue;
          for (int d : dirs(last)) {
            PathSplit q = ps;
            append_tail(q.first, arc(last, c, xe, d));
            append_tail(q.second, arc(last, c, xe, -d));
            if (static_cast<int>(q.first.size()) - 1 == length) out.push_back(std::move(q));
          }
        }
      }
    }
  }
  return out;
}

std::vector<Cycle> cycles_in(const EdgeMultiset& leave, int length, size_t limit) {
  std::vector<Cycle> out;
  if (length == 2) {
    for (int i = 0; i < leave.v() && out.size() < limit; ++i) {
      for (int j = 0; j < leave.u() && out.size() < limit; ++j) {
        if (leave(i, j) >= 2) out.push_back(Cycle::from({Vertex::L(i), Vertex::R(j)}));
      }
    }
    return out;
  }
  if (length < 4 || length % 2 != 0) return out;

  std::vector<bool> used_left(leave.v(), false);
  std::vector<bool> used_right(leave.u(), false);
  std::vector<Vertex> path;
  std::function<void()> extend = [&]() {
    if (out.size() >= limit) return;
    const Vertex cur = path.back();
    if (static_cast<int>(path.size()) == length) {
      // cur is Right; close back to the start, one orientation only.
      if (leave.at(cur, path.front()) > 0 && path[1] < path.back()) out.push_back(Cycle::from(path));
      return;
    }
    if (cur.part == Part::Left) {
      for (int j = 0; j < leave.u(); ++j) {
        if (used_right[j] || leave(cur.index, j) == 0) continue;
        used_right[j] = true;
        path.push_back(Vertex::R(j));
        extend();
        path.pop_back();
        used_right[j] = false;
      }
    } else {
      for (int i = path.front().index + 1; i < leave.v(); ++i) {
        if (used_left[i] || leave(i, cur.index) == 0) continue;
        used_left[i] = true;
        path.push_back(Vertex::L(i));
        extend();
        path.pop_back();
        used_left[i] = false;
      }
    }
  };
  for (int s = 0; s < leave.v(); ++s) {
    used_left[s] = true;
    path = {Vertex::L(s)};
    extend();
    used_left[s] = false;
  }
  std::sort(out.begin(), out.end());
  if (out.size() > limit) out.resize(limit);
  return out;
}

std::optional<Cycle> as_single_cycle(const EdgeMultiset& leave) {
  const long n = leave.size();
  if (n == 2) {
    for (int i = 0; i < leave.v(); ++i) {
      for (int j = 0; j < leave.u(); ++j) {
        if (leave(i, j) == 2) return Cycle::from({Vertex::L(i), Vertex::R(j)});
      }
    }
    return std::nullopt;
  }
  if (n < 4 || leave.max_multiplicity() > 1) return std::nullopt;
  const auto deg = leave.degrees();
  if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 0 && d != 2; })) return std::nullopt;
  const auto comps = leave_components(leave);
  if (comps.size() != 1) return std::nullopt;
  EdgeMultiset rem = leave;
  std::vector<Vertex> seq{comps.front().front()};
  Vertex cur = consume_slot(rem, seq.front());
  while (cur != seq.front()) {
    seq.push_back(cur);
    cur = consume_slot(rem, cur);
  }
  return Cycle::from(seq);
}

std::optional<std::pair<Cycle, Cycle>> find_two_cycle_split(const EdgeMultiset& leave, int m1, int m2) {
  if (leave.size() != m1 + m2) return std::nullopt;
  for (const Cycle& c : cycles_in(leave, m1)) {
    EdgeMultiset rest = leave;
    c.apply(rest, -1);
    if (auto d = as_single_cycle(rest); d && d->length() == m2) return std::make_pair(c, *d);
  }
  return std::nullopt;
}

}  // namespace bicd
