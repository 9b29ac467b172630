#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bicd/model.hpp"

namespace bicd {

struct Verdict {
  bool valid = true;
  std::string reason;

  std::string to_string() const;  // "valid" or "invalid: <reason>"
};

// Checks raw vertex lists, so malformed cycles are reported instead of
// rejected at construction. Shares no bookkeeping with the constructor.
Verdict verify_decomposition(const GraphSpec& spec, const std::vector<std::vector<Vertex>>& cycles,
                             const LengthSeq& m);
Verdict verify_decomposition(const GraphSpec& spec, const std::vector<Cycle>& cycles, const LengthSeq& m);

// Cycles plus stored leave must be exactly lambda copies of every pair.
Verdict verify_packing(const Packing& p);

struct Certificate {
  GraphSpec spec;
  LengthSeq m;
  std::vector<std::vector<Vertex>> cycles;

  static Certificate from(const Packing& p);
};

// One JSON object: {"lambda","v","u","M","cycles"} in that order, vertices
// as ["L", i] / ["R", j]. Output is deterministic.
std::string write_certificate(const Certificate& c);
// Throws Input on malformed JSON or schema violations.
Certificate read_certificate(const std::string& text);

Verdict verify_certificate(const Certificate& c);

}  // namespace bicd
