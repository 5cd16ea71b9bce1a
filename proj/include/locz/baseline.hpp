#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "locz/pauli.hpp"

namespace locz {

/// Result of a full pairwise pass. pair_tests is the number of unordered
/// pairs examined, always m(m-1)/2 for the counting pass.
struct PairwiseReport {
  std::uint64_t anti_pairs = 0;
  std::uint64_t pair_tests = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Quadratic reference: encode every string in binary symplectic form once,
/// then test all unordered pairs with the GF(2) symplectic form over the
/// sorted supports. Deliberately shares nothing with the pattern table beyond
/// the letter encoding.
PairwiseReport pairwise_count_report(std::span<const SparsePauliString> strings);

std::uint64_t pairwise_count(std::span<const SparsePauliString> strings);

/// First anticommuting pair in lexicographic (i, j) order, or absent.
std::optional<std::pair<std::size_t, std::size_t>> pairwise_witness(
    std::span<const SparsePauliString> strings);

/// All anticommuting pairs in lexicographic order. Debugging aid for small
/// instances only; throws TooLargeError when m exceeds max_m.
std::vector<std::pair<std::size_t, std::size_t>> list_edges(
    std::span<const SparsePauliString> strings, std::size_t max_m = 2000);

}  // namespace locz
