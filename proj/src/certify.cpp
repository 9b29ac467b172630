#include "bicd/certify.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>

namespace bicd {

std::string Verdict::to_string() const { return valid ? "valid" : "invalid: " + reason; }

namespace {

Verdict invalid(std::string reason) { return {false, std::move(reason)}; }

std::string pair_name(int i, int j) { return "(L" + std::to_string(i) + ",R" + std::to_string(j) + ")"; }

// Adds the edges of one raw cycle to `cover`, or explains why it is not a
// cycle of lambda*K_{v,u}.
std::string accumulate(const GraphSpec& spec, const std::vector<Vertex>& cyc, std::map<std::pair<int, int>, long>& cover) {
  const size_t n = cyc.size();
  if (n < 2 || n % 2 != 0) return "odd or short length " + std::to_string(n);
  std::set<std::pair<int, int>> seen;
  for (const Vertex& x : cyc) {
    const int bound = x.part == Part::Left ? spec.v : spec.u;
    if (x.index < 0 || x.index >= bound) return "vertex " + to_string(x) + " out of range";
    if (!seen.insert({static_cast<int>(x.part), x.index}).second) return "repeated vertex";
  }
  for (size_t k = 0; k < n; ++k) {
    Vertex a = cyc[k];
    Vertex b = cyc[(k + 1) % n];
    if (a.part == b.part) return "parts do not alternate";
    if (a.part == Part::Right) std::swap(a, b);
    // A 2-cycle walks its pair twice, once per step.
    cover[{a.index, b.index}] += 1;
  }
  return {};
}

Verdict check_cover(const GraphSpec& spec, const std::map<std::pair<int, int>, long>& cover) {
  for (int i = 0; i < spec.v; ++i) {
    for (int j = 0; j < spec.u; ++j) {
      const auto it = cover.find({i, j});
      const long got = it == cover.end() ? 0 : it->second;
      if (got != spec.lambda) {
        return invalid("pair " + pair_name(i, j) + " covered " + std::to_string(got) + " of " +
                       std::to_string(spec.lambda));
      }
    }
  }
  return {};
}

}  // namespace

Verdict verify_decomposition(const GraphSpec& spec, const std::vector<std::vector<Vertex>>& cycles,
                             const LengthSeq& m) {
  if (spec.lambda < 1 || spec.v < 1 || spec.u < 1) return invalid("non-positive lambda, v or u");
  std::map<std::pair<int, int>, long> cover;
  for (size_t k = 0; k < cycles.size(); ++k) {
    const std::string why = accumulate(spec, cycles[k], cover);
    if (!why.empty()) return invalid(why + " in cycle " + std::to_string(k));
  }
  if (Verdict v = check_cover(spec, cover); !v.valid) return v;
  std::vector<int> lengths;
  for (const auto& c : cycles) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end());
  if (lengths != m.lengths()) {
    return invalid("cycle lengths " + to_string(LengthSeq(lengths)) + " differ from M " + to_string(m));
  }
  if (m.sum() != spec.total_edges()) return invalid("sum(M) differs from lambda*v*u");
  return {};
}

Verdict verify_decomposition(const GraphSpec& spec, const std::vector<Cycle>& cycles, const LengthSeq& m) {
  std::vector<std::vector<Vertex>> raw;
  raw.reserve(cycles.size());
  for (const Cycle& c : cycles) raw.push_back(c.vertices());
  return verify_decomposition(spec, raw, m);
}

Verdict verify_packing(const Packing& p) {
  const GraphSpec& spec = p.spec();
  std::map<std::pair<int, int>, long> cover;
  for (size_t k = 0; k < p.cycles().size(); ++k) {
    const std::string why = accumulate(spec, p.cycles()[k].vertices(), cover);
    if (!why.empty()) return invalid(why + " in cycle " + std::to_string(k));
  }
  const EdgeMultiset& leave = p.leave();
  if (leave.v() != spec.v || leave.u() != spec.u) return invalid("leave has the wrong shape");
  for (int i = 0; i < spec.v; ++i) {
    for (int j = 0; j < spec.u; ++j) {
      if (leave(i, j) < 0) return invalid("negative leave multiplicity on " + pair_name(i, j));
      cover[{i, j}] += leave(i, j);
    }
  }
  return check_cover(spec, cover);
}

Certificate Certificate::from(const Packing& p) {
  Certificate c;
  c.spec = p.spec();
  c.m = p.lengths();
  for (const Cycle& cyc : p.cycles()) c.cycles.push_back(cyc.vertices());
  std::sort(c.cycles.begin(), c.cycles.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return c;
}

std::string write_certificate(const Certificate& c) {
  nlohmann::ordered_json j;
  j["lambda"] = c.spec.lambda;
  j["v"] = c.spec.v;
  j["u"] = c.spec.u;
  j["M"] = c.m.lengths();
  auto cycles = nlohmann::ordered_json::array();
  for (const auto& cyc : c.cycles) {
    auto row = nlohmann::ordered_json::array();
    for (const Vertex& x : cyc) row.push_back({x.part == Part::Left ? "L" : "R", x.index});
    cycles.push_back(std::move(row));
  }
  j["cycles"] = std::move(cycles);
  return j.dump() + "\n";
}

Certificate read_certificate(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Input, std::string("certificate is not JSON: ") + e.what());
  }
  try {
    Certificate c;
    c.spec = {j.at("lambda").get<int>(), j.at("v").get<int>(), j.at("u").get<int>()};
    c.m = LengthSeq(j.at("M").get<std::vector<int>>());
    for (const auto& row : j.at("cycles")) {
      std::vector<Vertex> cyc;
      for (const auto& x : row) {
        if (!x.is_array() || x.size() != 2) throw Error(ErrorKind::Input, "vertex must be [part, index]");
        const std::string part = x[0].get<std::string>();
        if (part != "L" && part != "R") throw Error(ErrorKind::Input, "vertex part must be \"L\" or \"R\"");
        cyc.push_back({part == "L" ? Part::Left : Part::Right, x[1].get<int>()});
      }
      c.cycles.push_back(std::move(cyc));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Input, std::string("certificate schema: ") + e.what());
  }
}

Verdict verify_certificate(const Certificate& c) { return verify_decomposition(c.spec, c.cycles, c.m); }

}  // namespace bicd
