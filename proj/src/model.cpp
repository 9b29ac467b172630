#include "bicd/model.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace bicd {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedCycle: return "malformed-cycle";
    case ErrorKind::Overfull: return "overfull";
    case ErrorKind::NotEven: return "not-even";
    case ErrorKind::InvalidTwin: return "invalid-twin";
    case ErrorKind::NoExcess: return "no-excess";
    case ErrorKind::InfeasibleSwitch: return "infeasible-switch";
    case ErrorKind::LemmaPrecondition: return "lemma-precondition";
    case ErrorKind::Input: return "input";
    case ErrorKind::BaseUnavailable: return "base-unavailable";
    case ErrorKind::PlanInfeasible: return "plan-infeasible";
    case ErrorKind::ConstructiveGap: return "constructive-gap";
  }
  return "unknown";
}

void GraphSpec::validate() const {
  if (lambda < 1 || v < 1 || u < 1) {
    throw Error(ErrorKind::Input, "lambda, v, u must be positive");
  }
}

std::string to_string(Vertex x) {
  return (x.part == Part::Left ? "L" : "R") + std::to_string(x.index);
}

std::ostream& operator<<(std::ostream& os, Vertex x) { return os << to_string(x); }

// ---------------------------------------------------------------------------

EdgeMultiset EdgeMultiset::complete(const GraphSpec& spec) {
  EdgeMultiset m(spec.v, spec.u);
  std::fill(m.counts_.begin(), m.counts_.end(), spec.lambda);
  return m;
}

int EdgeMultiset::at(Vertex a, Vertex b) const {
  if (a.part == b.part) return 0;
  if (a.part == Part::Right) std::swap(a, b);
  if (a.index < 0 || a.index >= v_ || b.index < 0 || b.index >= u_) return 0;
  return (*this)(a.index, b.index);
}

void EdgeMultiset::add(int i, int j, int delta) {
  int& c = counts_[static_cast<size_t>(i) * u_ + j];
  if (c + delta < 0) {
    throw Error(ErrorKind::Overfull, "pair (" + to_string(Vertex::L(i)) + "," +
                                         to_string(Vertex::R(j)) + ") over-consumed");
  }
  c += delta;
}

void EdgeMultiset::add(Vertex a, Vertex b, int delta) {
  if (a.part == b.part) throw Error(ErrorKind::MalformedCycle, "same-part edge");
  if (a.part == Part::Right) std::swap(a, b);
  if (a.index < 0 || a.index >= v_ || b.index < 0 || b.index >= u_) {
    throw Error(ErrorKind::MalformedCycle, "vertex out of range");
  }
  add(a.index, b.index, delta);
}

long EdgeMultiset::size() const { return std::accumulate(counts_.begin(), counts_.end(), 0L); }

int EdgeMultiset::degree(Vertex x) const {
  int d = 0;
  if (x.part == Part::Left) {
    for (int j = 0; j < u_; ++j) d += (*this)(x.index, j);
  } else {
    for (int i = 0; i < v_; ++i) d += (*this)(i, x.index);
  }
  return d;
}

std::vector<int> EdgeMultiset::degrees() const {
  std::vector<int> d(static_cast<size_t>(v_ + u_), 0);
  for (int i = 0; i < v_; ++i) {
    for (int j = 0; j < u_; ++j) {
      d[i] += (*this)(i, j);
      d[v_ + j] += (*this)(i, j);
    }
  }
  return d;
}

int EdgeMultiset::max_multiplicity() const {
  return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

EdgeMultiset EdgeMultiset::transposed() const {
  EdgeMultiset t(u_, v_);
  for (int i = 0; i < v_; ++i) {
    for (int j = 0; j < u_; ++j) t.counts_[static_cast<size_t>(j) * v_ + i] = (*this)(i, j);
  }
  return t;
}

std::ostream& operator<<(std::ostream& os, const EdgeMultiset& m) {
  os << "{";
  bool first = true;
  for (int i = 0; i < m.v(); ++i) {
    for (int j = 0; j < m.u(); ++j) {
      if (m(i, j) == 0) continue;
      if (!first) os << ", ";
      first = false;
      os << "L" << i << "R" << j;
      if (m(i, j) > 1) os << "x" << m(i, j);
    }
  }
  return os << "}";
}

// ---------------------------------------------------------------------------

Cycle canonicalize_cycle(std::span<const Vertex> raw) {
  const size_t n = raw.size();
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorKind::MalformedCycle, "cycle length " + std::to_string(n) + " is not even and >= 2");
  }
  std::set<Vertex> seen;
  for (size_t k = 0; k < n; ++k) {
    if (raw[k].index < 0) throw Error(ErrorKind::MalformedCycle, "negative vertex index");
    if (!seen.insert(raw[k]).second) throw Error(ErrorKind::MalformedCycle, "repeated vertex");
    if (raw[k].part == raw[(k + 1) % n].part) {
      throw Error(ErrorKind::MalformedCycle, "parts do not alternate");
    }
  }

  std::vector<Vertex> best;
  std::vector<Vertex> cand(n);
  for (size_t s = 0; s < n; ++s) {
    if (raw[s].part != Part::Left) continue;
    for (int dir : {1, -1}) {
      for (size_t k = 0; k < n; ++k) {
        const long idx = (static_cast<long>(s) + dir * static_cast<long>(k) + static_cast<long>(n)) %
                         static_cast<long>(n);
        cand[k] = raw[static_cast<size_t>(idx)];
      }
      if (best.empty() || cand < best) best = cand;
    }
  }
  Cycle c;
  c.vertices_ = std::move(best);
  return c;
}

Cycle Cycle::from(std::span<const Vertex> raw) { return canonicalize_cycle(raw); }

bool Cycle::contains(Vertex x) const {
  return std::find(vertices_.begin(), vertices_.end(), x) != vertices_.end();
}

void Cycle::apply(EdgeMultiset& m, int sign) const {
  const size_t n = vertices_.size();
  if (n == 2) {
    m.add(vertices_[0], vertices_[1], 2 * sign);
    return;
  }
  for (size_t k = 0; k < n; ++k) m.add(vertices_[k], vertices_[(k + 1) % n], sign);
}

Cycle Cycle::transposed() const {
  std::vector<Vertex> t;
  t.reserve(vertices_.size());
  for (Vertex x : vertices_) t.push_back({other(x.part), x.index});
  return Cycle::from(t);
}

std::ostream& operator<<(std::ostream& os, const Cycle& c) {
  os << "(";
  for (size_t k = 0; k < c.vertices().size(); ++k) {
    if (k) os << ",";
    os << c.vertices()[k];
  }
  return os << ")";
}

// ---------------------------------------------------------------------------

LengthSeq::LengthSeq(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  for (int m : lengths_) {
    if (m < 2 || m % 2 != 0) {
      throw Error(ErrorKind::Input, "cycle length " + std::to_string(m) + " is not even and >= 2");
    }
  }
  std::sort(lengths_.begin(), lengths_.end());
}

LengthSeq LengthSeq::parse(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    const std::string tok = item.substr(b, e - b + 1);
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Input, "not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw Error(ErrorKind::Input, "not an integer: '" + tok + "'");
    out.push_back(value);
  }
  if (out.empty()) throw Error(ErrorKind::Input, "empty length sequence");
  return LengthSeq(std::move(out));
}

long LengthSeq::sum() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0L); }

int LengthSeq::nu(int k) const {
  return static_cast<int>(std::count(lengths_.begin(), lengths_.end(), k));
}

std::string to_string(const LengthSeq& m) {
  // Runs of equal values are written k^n to keep census lines short.
  std::string s = "(";
  const auto& l = m.lengths();
  for (size_t k = 0; k < l.size();) {
    size_t e = k;
    while (e < l.size() && l[e] == l[k]) ++e;
    if (k) s += ",";
    s += std::to_string(l[k]);
    if (e - k > 1) s += "^" + std::to_string(e - k);
    k = e;
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const LengthSeq& m) { return os << to_string(m); }

// ---------------------------------------------------------------------------

EdgeMultiset compute_leave(const GraphSpec& spec, std::span<const Cycle> cycles) {
  EdgeMultiset leave = EdgeMultiset::complete(spec);
  for (const Cycle& c : cycles) {
    for (Vertex x : c.vertices()) {
      const int bound = x.part == Part::Left ? spec.v : spec.u;
      if (x.index >= bound) {
        throw Error(ErrorKind::MalformedCycle, "vertex " + to_string(x) + " outside the graph");
      }
    }
    c.apply(leave, -1);
  }
  return leave;
}

Packing::Packing(GraphSpec spec, std::vector<Cycle> cycles)
    : spec_(spec), cycles_(std::move(cycles)), leave_(compute_leave(spec_, cycles_)) {}

LengthSeq Packing::lengths() const {
  std::vector<int> l;
  l.reserve(cycles_.size());
  for (const Cycle& c : cycles_) l.push_back(c.length());
  return LengthSeq(std::move(l));
}

bool Packing::leave_is_even() const {
  const auto d = leave_.degrees();
  return std::all_of(d.begin(), d.end(), [](int x) { return x % 2 == 0; });
}

Packing Packing::with_cycle(const Cycle& c) const {
  Packing p = *this;
  c.apply(p.leave_, -1);
  p.cycles_.push_back(c);
  return p;
}

Packing Packing::without_cycles(std::span<const int> indices) const {
  std::vector<bool> drop(cycles_.size(), false);
  for (int idx : indices) {
    if (idx < 0 || idx >= static_cast<int>(cycles_.size())) {
      throw Error(ErrorKind::Input, "cycle index " + std::to_string(idx) + " out of range");
    }
    if (drop[idx]) throw Error(ErrorKind::Input, "cycle index repeated");
    drop[idx] = true;
  }
  Packing p;
  p.spec_ = spec_;
  p.leave_ = leave_;
  for (size_t k = 0; k < cycles_.size(); ++k) {
    if (drop[k]) {
      cycles_[k].apply(p.leave_, +1);
    } else {
      p.cycles_.push_back(cycles_[k]);
    }
  }
  return p;
}

Packing Packing::transposed() const {
  std::vector<Cycle> t;
  t.reserve(cycles_.size());
  for (const Cycle& c : cycles_) t.push_back(c.transposed());
  return Packing(spec_.transposed(), std::move(t), leave_.transposed());
}

}  // namespace bicd
