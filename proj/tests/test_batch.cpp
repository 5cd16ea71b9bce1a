#include <doctest.h>

#include <random>

#include "locz/baseline.hpp"
#include "locz/batch.hpp"
#include "locz/errors.hpp"
#include "reference.hpp"

using namespace locz;
using ref::ps;

namespace {

std::vector<SparsePauliString> worked_instance() {
  return {ps("X0 Y1"), ps("Y0 Z1"), ps("Y0")};
}

}  // namespace

TEST_CASE("worked instance has exactly one anticommuting pair") {
  const auto strings = worked_instance();
  const auto report = count_all_anticommuting_pairs(strings);
  CHECK(report.m == 3);
  CHECK(report.total_anti_pairs == 1);
  CHECK_FALSE(report.witness.has_value());
  CHECK(anti_degree_profile(strings) ==
        std::vector<std::uint64_t>{0, 0, 1});
}

TEST_CASE("empty and single-string batches have no pairs") {
  const std::vector<SparsePauliString> empty;
  CHECK(count_all_anticommuting_pairs(empty).total_anti_pairs == 0);
  CHECK_FALSE(certify(empty).witness.has_value());

  const std::vector<SparsePauliString> single{ps("X0 Y1")};
  CHECK(count_all_anticommuting_pairs(single).total_anti_pairs == 0);
  CHECK_FALSE(certify(single).witness.has_value());
}

TEST_CASE("certify finds the first witness of the worked instance") {
  const auto report = certify(worked_instance());
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->first == 0);
  CHECK(report.witness->second == 2);
  CHECK(report.total_anti_pairs > 0);
}

TEST_CASE("identical strings certify as all-commuting") {
  const std::vector<SparsePauliString> strings{ps("X0 X1"), ps("X0 X1"),
                                               ps("X0 X1")};
  const auto report = certify(strings);
  CHECK_FALSE(report.witness.has_value());
  CHECK(report.total_anti_pairs == 0);
}

TEST_CASE("single-qubit X and Z witness") {
  const std::vector<SparsePauliString> strings{ps("X0"), ps("Z0")};
  const auto report = certify(strings);
  REQUIRE(report.witness.has_value());
  CHECK(*report.witness == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("duplicates count with multiset semantics") {
  const std::vector<SparsePauliString> strings{ps("X0 Y1"), ps("X0 Y1"),
                                               ps("Y0")};
  const auto report = count_all_anticommuting_pairs(strings);
  CHECK(report.total_anti_pairs == 2);
  CHECK(report.total_anti_pairs == ref::pair_count(strings));
}

TEST_CASE("weight-0 strings participate without pairing") {
  const std::vector<SparsePauliString> strings{
      SparsePauliString{}, ps("X0"), SparsePauliString{}, ps("Z0")};
  const auto report = count_all_anticommuting_pairs(strings);
  CHECK(report.total_anti_pairs == 1);  // only X0 vs Z0
  CHECK(anti_degree_profile(strings) ==
        std::vector<std::uint64_t>{0, 0, 0, 1});
}

TEST_CASE("streaming counts agree with both oracles on random instances") {
  std::mt19937_64 rng(1234);
  for (int round = 0; round < 40; ++round) {
    const auto m = static_cast<std::size_t>(rng() % 400);
    const auto strings = ref::random_instance(rng, m, 14, 8);
    const auto report = count_all_anticommuting_pairs(strings);
    const auto expected = ref::pair_count(strings);
    CHECK(report.total_anti_pairs == expected);
    CHECK(report.total_anti_pairs == pairwise_count(strings));

    const auto profile = anti_degree_profile(strings);
    std::uint64_t total = 0;
    for (const auto c : profile) {
      total += c;
    }
    CHECK(total == report.total_anti_pairs);
    CHECK(profile == ref::profile(strings));

    const auto cert = certify(strings);
    CHECK(cert.witness.has_value() == (expected != 0));
    if (cert.witness) {
      CHECK(cert.witness->first < cert.witness->second);
      CHECK(anticommutes(strings[cert.witness->first],
                         strings[cert.witness->second]));
    }
  }
}

TEST_CASE("a generated three-string instance matches the hand enumeration") {
  const auto strings = locz::generate({3, 6, 2, WeightDist::FixedK, 2024});
  REQUIRE(strings.size() == 3);
  // enumerate the three unordered pairs explicitly
  const std::uint64_t by_hand = (ref::anticommutes(strings[0], strings[1]) ? 1 : 0) +
                                (ref::anticommutes(strings[0], strings[2]) ? 1 : 0) +
                                (ref::anticommutes(strings[1], strings[2]) ? 1 : 0);
  CHECK(count_all_anticommuting_pairs(strings).total_anti_pairs == by_hand);
  CHECK(pairwise_count(strings) == by_hand);

  const auto lone = locz::generate({1, 6, 2, WeightDist::FixedK, 2024});
  CHECK(count_all_anticommuting_pairs(lone).total_anti_pairs == 0);
  CHECK(pairwise_count(lone) == 0);
}

TEST_CASE("identical inputs produce identical reports") {
  std::mt19937_64 rng(777);
  const auto strings = ref::random_instance(rng, 120, 10, 6);
  const auto a = count_all_anticommuting_pairs(strings);
  const auto b = count_all_anticommuting_pairs(strings);
  CHECK(a.m == b.m);
  CHECK(a.total_anti_pairs == b.total_anti_pairs);
  CHECK(a.counters.dict_updates == b.counters.dict_updates);
  CHECK(a.counters.dict_lookups == b.counters.dict_lookups);
  const auto ca = certify(strings);
  const auto cb = certify(strings);
  CHECK(ca.witness == cb.witness);
}

TEST_CASE("weight-cap violations propagate out of the loop") {
  const std::vector<SparsePauliString> strings{ps("X0"), ps("X0 Y1 Z2")};
  CHECK_THROWS_AS(count_all_anticommuting_pairs(strings, 2),
                  WeightCapExceededError);
  CHECK_THROWS_AS(certify(strings, 2), WeightCapExceededError);
}
