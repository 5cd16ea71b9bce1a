#include "locz/batch.hpp"

#include <algorithm>

#include "locz/errors.hpp"

namespace locz {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t estimate_keys(std::span<const SparsePauliString> strings,
                          std::size_t weight_cap) {
  // Upper bound sum(2^w_i), clamped to a sane reservation.
  constexpr std::size_t kMaxReserve = std::size_t{1} << 22;
  std::size_t total = 0;
  for (const auto& s : strings) {
    const std::size_t w = std::min(s.weight(), weight_cap);
    total += std::size_t{1} << std::min<std::size_t>(w, 22);
    if (total >= kMaxReserve) {
      return kMaxReserve;
    }
  }
  return total;
}

BatchReport run_counting_loop(std::span<const SparsePauliString> strings,
                              std::size_t weight_cap,
                              std::vector<std::uint64_t>* profile) {
  const auto start = Clock::now();
  PatternCountTable table(weight_cap);
  table.reserve(estimate_keys(strings, weight_cap));
  BatchReport report;
  report.m = strings.size();
  if (profile) {
    profile->clear();
    profile->reserve(strings.size());
  }
  for (const auto& s : strings) {
    const auto query = table.anti_count_against_previous(s);
    report.total_anti_pairs += query.count;
    if (profile) {
      profile->push_back(query.count);
    }
    table.insert(s);
  }
  report.counters = table.stats();
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      Clock::now() - start);
  return report;
}

}  // namespace

BatchReport count_all_anticommuting_pairs(
    std::span<const SparsePauliString> strings, std::size_t weight_cap) {
  return run_counting_loop(strings, weight_cap, nullptr);
}

BatchReport certify(std::span<const SparsePauliString> strings,
                    std::size_t weight_cap) {
  const auto start = Clock::now();
  PatternCountTable table(weight_cap);
  table.reserve(estimate_keys(strings, weight_cap));
  BatchReport report;
  report.m = strings.size();
  for (std::size_t i = 0; i < strings.size(); ++i) {
    const auto query = table.anti_count_against_previous(strings[i]);
    if (query.count > 0) {
      report.total_anti_pairs += query.count;
      for (std::size_t j = 0; j < i; ++j) {
        if (anticommutes(strings[j], strings[i])) {
          report.witness = {j, i};
          break;
        }
      }
      if (!report.witness) {
        throw InternalInconsistencyError(
            "query reported an anticommuting predecessor of string " +
            std::to_string(i) + " but the pairwise scan found none");
      }
      break;  // certificate refuted; no further inserts
    }
    table.insert(strings[i]);
  }
  report.counters = table.stats();
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      Clock::now() - start);
  return report;
}

std::vector<std::uint64_t> anti_degree_profile(
    std::span<const SparsePauliString> strings, std::size_t weight_cap) {
  std::vector<std::uint64_t> profile;
  run_counting_loop(strings, weight_cap, &profile);
  return profile;
}

}  // namespace locz
