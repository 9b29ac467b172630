#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "bicd/model.hpp"

namespace bicd {

enum class OracleStatus { Exists, NotExists, Timeout };

std::string_view to_string(OracleStatus s);

struct OracleResult {
  OracleStatus status = OracleStatus::Timeout;
  std::optional<Packing> witness;  // set iff Exists; a decomposition
  long nodes = 0;                  // search nodes visited
  double seconds = 0;
};

// Exhaustive backtracking: does lambda*K_{v,u} decompose into cycles of
// exactly the lengths in m? Never wrong; may time out.
OracleResult oracle_decide(const GraphSpec& spec, const LengthSeq& m, double budget_seconds);

struct CensusEntry {
  LengthSeq m;
  OracleStatus status = OracleStatus::Timeout;
};

// Decides every non-decreasing even sequence summing to lambda*v*u. The
// budget applies to each sequence separately.
std::vector<CensusEntry> oracle_enumerate(const GraphSpec& spec, double budget_seconds);

// Every non-decreasing sequence of even parts >= 2 summing to total.
std::vector<LengthSeq> even_partitions(int total);

}  // namespace bicd
