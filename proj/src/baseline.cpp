#include "locz/baseline.hpp"

#include <string>

#include "locz/errors.hpp"

namespace locz {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<SymplecticPair> encode_all(
    std::span<const SparsePauliString> strings) {
  std::vector<SymplecticPair> encoded;
  encoded.reserve(strings.size());
  for (const auto& s : strings) {
    encoded.push_back(to_symplectic(s));
  }
  return encoded;
}

}  // namespace

PairwiseReport pairwise_count_report(
    std::span<const SparsePauliString> strings) {
  const auto start = Clock::now();
  const auto encoded = encode_all(strings);
  PairwiseReport report;
  for (std::size_t i = 0; i < encoded.size(); ++i) {
    for (std::size_t j = i + 1; j < encoded.size(); ++j) {
      ++report.pair_tests;
      if (symplectic_anticommutes(encoded[i], encoded[j])) {
        ++report.anti_pairs;
      }
    }
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      Clock::now() - start);
  return report;
}

std::uint64_t pairwise_count(std::span<const SparsePauliString> strings) {
  return pairwise_count_report(strings).anti_pairs;
}

std::optional<std::pair<std::size_t, std::size_t>> pairwise_witness(
    std::span<const SparsePauliString> strings) {
  const auto encoded = encode_all(strings);
  for (std::size_t i = 0; i < encoded.size(); ++i) {
    for (std::size_t j = i + 1; j < encoded.size(); ++j) {
      if (symplectic_anticommutes(encoded[i], encoded[j])) {
        return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> list_edges(
    std::span<const SparsePauliString> strings, std::size_t max_m) {
  if (strings.size() > max_m) {
    throw TooLargeError("edge listing limited to " + std::to_string(max_m) +
                        " strings, got " + std::to_string(strings.size()));
  }
  const auto encoded = encode_all(strings);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < encoded.size(); ++i) {
    for (std::size_t j = i + 1; j < encoded.size(); ++j) {
      if (symplectic_anticommutes(encoded[i], encoded[j])) {
        edges.emplace_back(i, j);
      }
    }
  }
  return edges;
}

}  // namespace locz
