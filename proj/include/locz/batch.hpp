#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "locz/pattern_table.hpp"
#include "locz/pauli.hpp"

namespace locz {

/// Outcome of one streaming pass over a batch of strings.
struct BatchReport {
  std::size_t m = 0;
  std::uint64_t total_anti_pairs = 0;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // i < j
  OpCounters counters;
  std::chrono::nanoseconds elapsed{0};
};

/// Exact number of unordered anticommuting pairs, via the query-then-insert
/// streaming loop. Each unordered pair is counted once, at the later string's
/// iteration. No witness is populated.
BatchReport count_all_anticommuting_pairs(
    std::span<const SparsePauliString> strings,
    std::size_t weight_cap = PatternCountTable::kDefaultWeightCap);

/// Same loop, stopping at the first string whose query count is positive.
/// The witness is the pair (j, i) with the smallest such i and, among its
/// predecessors, the smallest j that anticommutes (checked by the conflict
/// parity test). Witness absent means every pair commutes.
BatchReport certify(std::span<const SparsePauliString> strings,
                    std::size_t weight_cap = PatternCountTable::kDefaultWeightCap);

/// Per-string query counts c_i from the counting loop; sum(c_i) equals
/// count_all_anticommuting_pairs(...).total_anti_pairs.
std::vector<std::uint64_t> anti_degree_profile(
    std::span<const SparsePauliString> strings,
    std::size_t weight_cap = PatternCountTable::kDefaultWeightCap);

}  // namespace locz
