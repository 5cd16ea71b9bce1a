#include "locz/pattern_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "locz/errors.hpp"

namespace locz {

namespace {

constexpr std::size_t kEntryBytes = 5;

void append_packed(std::string& key, const PauliTerm& t) {
  key.push_back(static_cast<char>(t.qubit & 0xff));
  key.push_back(static_cast<char>((t.qubit >> 8) & 0xff));
  key.push_back(static_cast<char>((t.qubit >> 16) & 0xff));
  key.push_back(static_cast<char>((t.qubit >> 24) & 0xff));
  key.push_back(static_cast<char>(static_cast<std::uint8_t>(t.letter)));
}

}  // namespace

LabeledPattern::LabeledPattern(std::vector<PauliTerm> pairs)
    : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(),
            [](const PauliTerm& a, const PauliTerm& b) {
              return a.qubit < b.qubit;
            });
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].letter == Pauli::I) {
      throw std::invalid_argument("identity letter in labeled pattern");
    }
    if (i > 0 && pairs_[i - 1].qubit == pairs_[i].qubit) {
      throw DuplicateIndexError("repeated qubit " +
                                std::to_string(pairs_[i].qubit) +
                                " in labeled pattern");
    }
  }
}

std::string LabeledPattern::packed() const {
  std::string key;
  key.reserve(kEntryBytes * pairs_.size());
  for (const auto& t : pairs_) {
    append_packed(key, t);
  }
  return key;
}

LabeledPattern LabeledPattern::from_packed(std::string_view key) {
  if (key.size() % kEntryBytes != 0) {
    throw std::invalid_argument("packed pattern length is not a multiple of " +
                                std::to_string(kEntryBytes));
  }
  std::vector<PauliTerm> pairs;
  pairs.reserve(key.size() / kEntryBytes);
  for (std::size_t off = 0; off < key.size(); off += kEntryBytes) {
    std::uint32_t qubit = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      qubit |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(key[off + b]))
               << (8 * b);
    }
    const auto code = static_cast<std::uint8_t>(key[off + 4]);
    if (code == 0 || code > 3) {
      throw std::invalid_argument("bad letter code in packed pattern");
    }
    pairs.push_back({qubit, static_cast<Pauli>(code)});
  }
  return LabeledPattern(std::move(pairs));
}

std::array<Pauli, 2> conflicting_letters(Pauli letter) {
  switch (letter) {
    case Pauli::X:
      return {Pauli::Y, Pauli::Z};
    case Pauli::Y:
      return {Pauli::X, Pauli::Z};
    case Pauli::Z:
      return {Pauli::X, Pauli::Y};
    case Pauli::I:
      break;
  }
  throw std::invalid_argument("identity has no conflicting letters");
}

std::vector<LabeledPattern> conflicting_assignments(const SparsePauliString& p,
                                                    std::uint64_t entry_mask) {
  const auto& entries = p.entries();
  if (entries.size() < 64 && (entry_mask >> entries.size()) != 0) {
    throw std::invalid_argument("entry mask selects past the support");
  }
  std::vector<const PauliTerm*> selected;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if ((entry_mask >> i) & 1u) {
      selected.push_back(&entries[i]);
    }
  }
  const std::size_t r = selected.size();
  std::vector<LabeledPattern> out;
  out.reserve(std::size_t{1} << r);
  for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << r); ++combo) {
    std::vector<PauliTerm> pairs;
    pairs.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
      const auto choices = conflicting_letters(selected[i]->letter);
      const auto bit = (combo >> (r - 1 - i)) & 1u;
      pairs.push_back({selected[i]->qubit, choices[bit]});
    }
    out.push_back(LabeledPattern(std::move(pairs)));
  }
  return out;
}

std::vector<LabeledPattern> conflicting_assignments(
    const SparsePauliString& p, std::span<const std::uint32_t> subset) {
  const auto& entries = p.entries();
  std::uint64_t mask = 0;
  for (const auto qubit : subset) {
    auto it = std::lower_bound(
        entries.begin(), entries.end(), qubit,
        [](const PauliTerm& t, std::uint32_t q) { return t.qubit < q; });
    if (it == entries.end() || it->qubit != qubit) {
      throw std::invalid_argument("subset qubit " + std::to_string(qubit) +
                                  " is not in the support");
    }
    mask |= std::uint64_t{1} << static_cast<std::size_t>(it - entries.begin());
  }
  return conflicting_assignments(p, mask);
}

std::int64_t zeta_identity_check(int set_size) {
  if (set_size < 0 || set_size > 20) {
    throw std::invalid_argument("set_size must be in [0, 20]");
  }
  std::int64_t sum = 0;
  std::uint64_t binomial = 1;  // C(r, 0)
  for (int t = 0; t <= set_size; ++t) {
    const auto term = static_cast<std::int64_t>(binomial << t);
    sum += (t & 1) ? -term : term;
    if (t < set_size) {
      binomial = binomial * static_cast<std::uint64_t>(set_size - t) /
                 static_cast<std::uint64_t>(t + 1);
    }
  }
  return sum;
}

PatternCountTable::PatternCountTable(std::size_t weight_cap)
    : weight_cap_(weight_cap) {
  if (weight_cap > 30) {
    throw std::invalid_argument(
        "weight cap above 30 is not supported (subset enumeration alone "
        "would exceed any practical budget)");
  }
}

void PatternCountTable::insert(const SparsePauliString& q) {
  const auto& entries = q.entries();
  const std::size_t w = entries.size();
  if (w > weight_cap_) {
    throw WeightCapExceededError("weight " + std::to_string(w) +
                                 " exceeds the table cap " +
                                 std::to_string(weight_cap_));
  }
  if (inserted_ >= kMaxInserted) {
    throw CountOverflowError(
        "table holds 2^62 strings; further counts would lose exactness");
  }
  const std::uint64_t n_subsets = std::uint64_t{1} << w;
  std::string key;
  key.reserve(kEntryBytes * w);
  for (std::uint64_t mask = 0; mask < n_subsets; ++mask) {
    key.clear();
    for (std::size_t i = 0; i < w; ++i) {
      if ((mask >> i) & 1u) {
        append_packed(key, entries[i]);
      }
    }
    auto it = counts_.find(std::string_view(key));
    if (it == counts_.end()) {
      counts_.emplace(key, 1);
    } else {
      ++it->second;
    }
  }
  ++inserted_;
  dict_updates_.fetch_add(n_subsets, std::memory_order_relaxed);
}

PatternCountTable::QueryResult PatternCountTable::anti_count_against_previous(
    const SparsePauliString& p) const {
  const auto& entries = p.entries();
  const std::size_t w = entries.size();
  if (w > weight_cap_) {
    throw WeightCapExceededError("weight " + std::to_string(w) +
                                 " exceeds the table cap " +
                                 std::to_string(weight_cap_));
  }

  // Z is accumulated in an unsigned 64-bit register with wraparound. Every
  // intermediate is exact mod 2^64, and the final |Z| <= inserted <= 2^62,
  // so the two's-complement reinterpretation recovers the exact value.
  std::uint64_t z_acc = 0;
  std::uint64_t lookups = 0;

  const std::uint64_t n_subsets = std::uint64_t{1} << w;
  std::string key;
  key.reserve(kEntryBytes * w);
  std::array<std::size_t, 31> letter_slot{};
  std::array<std::array<Pauli, 2>, 31> choices{};

  for (std::uint64_t mask = 0; mask < n_subsets; ++mask) {
    key.clear();
    std::size_t r = 0;
    for (std::size_t i = 0; i < w; ++i) {
      if ((mask >> i) & 1u) {
        append_packed(key, entries[i]);
        letter_slot[r] = key.size() - 1;
        choices[r] = conflicting_letters(entries[i].letter);
        ++r;
      }
    }
    std::uint64_t subset_sum = 0;  // F(A): strings conflicting on all of A
    const std::uint64_t n_combos = std::uint64_t{1} << r;
    for (std::uint64_t combo = 0; combo < n_combos; ++combo) {
      for (std::size_t i = 0; i < r; ++i) {
        key[letter_slot[i]] = static_cast<char>(
            static_cast<std::uint8_t>(choices[i][(combo >> i) & 1u]));
      }
      auto it = counts_.find(std::string_view(key));
      if (it != counts_.end()) {
        subset_sum += it->second;
      }
      ++lookups;
    }
    const std::uint64_t term = subset_sum << r;  // (+/-2)^|A| * F(A), mod 2^64
    if (r & 1u) {
      z_acc -= term;
    } else {
      z_acc += term;
    }
  }
  dict_lookups_.fetch_add(lookups, std::memory_order_relaxed);

  const std::uint64_t diff = inserted_ - z_acc;  // exact: 0 <= N - Z <= 2N
  if (diff & 1u) {
    throw ParityViolationError(
        "(inserted - Z) is odd: the pattern table is corrupted");
  }
  return {diff >> 1, static_cast<std::int64_t>(z_acc)};
}

std::uint64_t PatternCountTable::count_of(const LabeledPattern& pattern) const {
  auto it = counts_.find(pattern.packed());
  return it == counts_.end() ? 0 : it->second;
}

std::vector<std::pair<LabeledPattern, std::uint64_t>>
PatternCountTable::snapshot() const {
  std::vector<std::pair<std::string_view, std::uint64_t>> keys;
  keys.reserve(counts_.size());
  for (const auto& [key, count] : counts_) {
    keys.emplace_back(key, count);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<std::pair<LabeledPattern, std::uint64_t>> out;
  out.reserve(keys.size());
  for (const auto& [key, count] : keys) {
    out.emplace_back(LabeledPattern::from_packed(key), count);
  }
  return out;
}

OpCounters PatternCountTable::stats() const noexcept {
  return {dict_updates_.load(std::memory_order_relaxed),
          dict_lookups_.load(std::memory_order_relaxed)};
}

void PatternCountTable::reserve(std::size_t expected_keys) {
  counts_.reserve(expected_keys);
}

}  // namespace locz
