#include <doctest.h>

#include <random>

#include "locz/baseline.hpp"
#include "locz/errors.hpp"
#include "reference.hpp"

using namespace locz;
using ref::ps;

TEST_CASE("worked instance: one pair, one edge, first witness") {
  const std::vector<SparsePauliString> strings{ps("X0 Y1"), ps("Y0 Z1"),
                                               ps("Y0")};
  CHECK(pairwise_count(strings) == 1);
  const auto witness = pairwise_witness(strings);
  REQUIRE(witness.has_value());
  CHECK(*witness == std::pair<std::size_t, std::size_t>{0, 2});
  const auto edges = list_edges(strings);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0] == std::pair<std::size_t, std::size_t>{0, 2});
}

TEST_CASE("identical strings never anticommute") {
  const std::vector<SparsePauliString> strings(5, ps("X0 Z2"));
  CHECK(pairwise_count(strings) == 0);
  CHECK_FALSE(pairwise_witness(strings).has_value());
  CHECK(list_edges(strings).empty());
}

TEST_CASE("single-qubit X, Y, Z pairwise anticommute") {
  const std::vector<SparsePauliString> strings{ps("X0"), ps("Y0"), ps("Z0")};
  CHECK(pairwise_count(strings) == 3);
  const auto edges = list_edges(strings);
  const std::vector<std::pair<std::size_t, std::size_t>> expected{
      {0, 1}, {0, 2}, {1, 2}};
  CHECK(edges == expected);
}

TEST_CASE("an even number of conflicts commutes") {
  const std::vector<SparsePauliString> strings{ps("X0 X1"), ps("Z0 Z1")};
  CHECK_FALSE(pairwise_witness(strings).has_value());
}

TEST_CASE("edge listing rejects oversized instances") {
  const std::vector<SparsePauliString> strings{ps("X0"), ps("Y0"), ps("Z0")};
  CHECK_THROWS_AS(list_edges(strings, 2), TooLargeError);
  CHECK_NOTHROW(list_edges(strings, 3));
}

TEST_CASE("count, edges, and the conflict-parity route all agree") {
  std::mt19937_64 rng(60601);
  for (int round = 0; round < 25; ++round) {
    const auto m = static_cast<std::size_t>(rng() % 120);
    const auto strings = ref::random_instance(rng, m, 12, 8);
    const auto report = pairwise_count_report(strings);
    CHECK(report.pair_tests == m * (m > 0 ? m - 1 : 0) / 2);
    CHECK(report.anti_pairs == list_edges(strings).size());

    // independent route: conflict-set parity instead of the symplectic form
    std::uint64_t via_conflicts = 0;
    for (std::size_t i = 0; i < strings.size(); ++i) {
      for (std::size_t j = i + 1; j < strings.size(); ++j) {
        via_conflicts += anticommutes(strings[i], strings[j]) ? 1 : 0;
      }
    }
    CHECK(report.anti_pairs == via_conflicts);
    CHECK(report.anti_pairs == ref::pair_count(strings));
  }
}
