#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "locz/pauli.hpp"

namespace locz {

/// Dictionary-operation counters. dict_updates counts the subset increments
/// performed by insert(); dict_lookups counts the key probes performed by
/// anti_count_against_previous(). Debug accessors such as count_of() are not
/// instrumented. Both values only ever grow.
struct OpCounters {
  std::uint64_t dict_updates = 0;
  std::uint64_t dict_lookups = 0;
};

/// A labeled pattern: a set of qubit positions with a non-identity letter per
/// position, kept as a strictly ascending pair list. The empty pattern is the
/// empty list. Equality is structural.
class LabeledPattern {
 public:
  LabeledPattern() = default;

  /// Sorts and validates the pairs. Throws DuplicateIndexError on repeated
  /// indices and std::invalid_argument on an identity letter.
  explicit LabeledPattern(std::vector<PauliTerm> pairs);

  const std::vector<PauliTerm>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  /// Canonical fixed-width byte key: per pair, 4 bytes of little-endian qubit
  /// index followed by 1 byte of letter code, in ascending index order.
  std::string packed() const;
  static LabeledPattern from_packed(std::string_view key);

  friend bool operator==(const LabeledPattern&, const LabeledPattern&) = default;

 private:
  std::vector<PauliTerm> pairs_;
};

/// The two non-identity letters different from `letter`, in alphabetical
/// order. Throws std::invalid_argument for the identity.
std::array<Pauli, 2> conflicting_letters(Pauli letter);

/// All 2^|A| assignments on A that conflict with p at every position of A,
/// where bit i of entry_mask selects p.entries()[i]. Assignments are listed
/// with the later positions cycling fastest and each position's two candidate
/// letters in alphabetical order.
std::vector<LabeledPattern> conflicting_assignments(const SparsePauliString& p,
                                                    std::uint64_t entry_mask);

/// Overload taking the subset as qubit indices; they must lie in supp(p).
std::vector<LabeledPattern> conflicting_assignments(
    const SparsePauliString& p, std::span<const std::uint32_t> subset);

/// Direct summation of sum_{t=0..r} C(r,t) * (-2)^t. Test helper pinning the
/// alternating binomial identity; r must be in [0, 20].
std::int64_t zeta_identity_check(int set_size);

/// Occurrence counts of every labeled subpattern of the inserted strings,
/// plus the inserted-string total N. Inserting a weight-w string touches its
/// 2^w subset patterns; a weight-w query probes 3^w keys and recovers the
/// number of inserted strings anticommuting with it from the subset sums.
///
/// Single-writer: insert() must be externally serialized. Queries leave the
/// table untouched apart from the (atomic) lookup counter, so a table that is
/// no longer being inserted into can serve queries from several threads.
class PatternCountTable {
 public:
  static constexpr std::size_t kDefaultWeightCap = 20;

  /// Largest supported N. Keeps every count and the signed zeta arithmetic
  /// exact in 64 bits.
  static constexpr std::uint64_t kMaxInserted = std::uint64_t{1} << 62;

  explicit PatternCountTable(std::size_t weight_cap = kDefaultWeightCap);

  PatternCountTable(const PatternCountTable&) = delete;
  PatternCountTable& operator=(const PatternCountTable&) = delete;

  /// Increment the count of every labeled subpattern of q (2^wt(q) updates).
  /// Throws WeightCapExceededError above the cap and CountOverflowError once
  /// kMaxInserted strings are held.
  void insert(const SparsePauliString& q);

  struct QueryResult {
    std::uint64_t count = 0;  // inserted strings anticommuting with the query
    std::int64_t zeta = 0;    // the signed subset sum Z
  };

  /// Exact anticommutation count of p against the inserted multiset
  /// (3^wt(p) lookups). Throws WeightCapExceededError above the cap and
  /// ParityViolationError if (inserted - Z) comes out odd, which no valid
  /// table contents can produce.
  QueryResult anti_count_against_previous(const SparsePauliString& p) const;

  std::uint64_t inserted() const noexcept { return inserted_; }
  std::size_t weight_cap() const noexcept { return weight_cap_; }
  std::size_t distinct_patterns() const noexcept { return counts_.size(); }

  /// Stored count of one pattern (0 when absent). Debug accessor; does not
  /// touch the lookup counter.
  std::uint64_t count_of(const LabeledPattern& pattern) const;

  /// All (pattern, count) entries, sorted by packed key. Debug accessor.
  std::vector<std::pair<LabeledPattern, std::uint64_t>> snapshot() const;

  OpCounters stats() const noexcept;

  /// Pre-size the backing table for an expected number of distinct keys.
  void reserve(std::size_t expected_keys);

  /// Content equality: same counts and same N. Instrumentation is ignored.
  friend bool operator==(const PatternCountTable& a, const PatternCountTable& b) {
    return a.inserted_ == b.inserted_ && a.counts_ == b.counts_;
  }

 private:
  struct KeyHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::size_t weight_cap_;
  std::unordered_map<std::string, std::uint64_t, KeyHash, std::equal_to<>>
      counts_;
  std::uint64_t inserted_ = 0;
  mutable std::atomic<std::uint64_t> dict_updates_{0};
  mutable std::atomic<std::uint64_t> dict_lookups_{0};
};

}  // namespace locz
