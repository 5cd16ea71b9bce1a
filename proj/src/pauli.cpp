#include "locz/pauli.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "locz/errors.hpp"

namespace locz {

char to_char(Pauli p) noexcept {
  switch (p) {
    case Pauli::I:
      return 'I';
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    case Pauli::Z:
      return 'Z';
  }
  return '?';
}

std::optional<Pauli> pauli_from_char(char c) noexcept {
  switch (c) {
    case 'I':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      return std::nullopt;
  }
}

std::vector<std::uint32_t> SparsePauliString::support() const {
  std::vector<std::uint32_t> out;
  out.reserve(entries_.size());
  for (const auto& t : entries_) {
    out.push_back(t.qubit);
  }
  return out;
}

Pauli SparsePauliString::letter_at(std::uint32_t qubit) const noexcept {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), qubit,
      [](const PauliTerm& t, std::uint32_t q) { return t.qubit < q; });
  if (it != entries_.end() && it->qubit == qubit) {
    return it->letter;
  }
  return Pauli::I;
}

SparsePauliString normalize_terms(std::vector<PauliTerm> entries) {
  std::erase_if(entries,
                [](const PauliTerm& t) { return t.letter == Pauli::I; });
  std::sort(entries.begin(), entries.end(),
            [](const PauliTerm& a, const PauliTerm& b) {
              return a.qubit < b.qubit;
            });
  std::vector<PauliTerm> merged;
  merged.reserve(entries.size());
  for (const auto& t : entries) {
    if (!merged.empty() && merged.back().qubit == t.qubit) {
      if (merged.back().letter != t.letter) {
        throw DuplicateIndexError("conflicting letters " +
                                  std::string(1, to_char(merged.back().letter)) +
                                  " and " + std::string(1, to_char(t.letter)) +
                                  " at qubit " + std::to_string(t.qubit));
      }
      continue;  // repeated consistent assignment
    }
    merged.push_back(t);
  }
  return SparsePauliString(std::move(merged));
}

SparsePauliString normalize(std::span<const RawEntry> raw) {
  std::vector<PauliTerm> entries;
  entries.reserve(raw.size());
  for (const auto& [index, letter] : raw) {
    if (index < 0) {
      throw NegativeIndexError("negative qubit index " + std::to_string(index));
    }
    if (index > std::numeric_limits<std::uint32_t>::max()) {
      throw IndexOutOfRangeError("qubit index " + std::to_string(index) +
                                 " exceeds the 32-bit index range");
    }
    entries.push_back({static_cast<std::uint32_t>(index), letter});
  }
  return normalize_terms(std::move(entries));
}

SparsePauliString normalize(std::initializer_list<RawEntry> raw) {
  return normalize(std::span<const RawEntry>(raw.begin(), raw.size()));
}

std::vector<std::uint32_t> conflict_set(const SparsePauliString& p,
                                        const SparsePauliString& q) {
  std::vector<std::uint32_t> out;
  const auto& a = p.entries();
  const auto& b = q.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].qubit < b[j].qubit) {
      ++i;
    } else if (b[j].qubit < a[i].qubit) {
      ++j;
    } else {
      if (a[i].letter != b[j].letter) {
        out.push_back(a[i].qubit);
      }
      ++i;
      ++j;
    }
  }
  return out;
}

bool anticommutes(const SparsePauliString& p, const SparsePauliString& q) {
  const auto& a = p.entries();
  const auto& b = q.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  bool odd = false;
  while (i < a.size() && j < b.size()) {
    if (a[i].qubit < b[j].qubit) {
      ++i;
    } else if (b[j].qubit < a[i].qubit) {
      ++j;
    } else {
      odd ^= (a[i].letter != b[j].letter);
      ++i;
      ++j;
    }
  }
  return odd;
}

SymplecticPair to_symplectic(const SparsePauliString& p) {
  SymplecticPair out;
  for (const auto& t : p.entries()) {
    if (x_bit(t.letter)) {
      out.x.push_back(t.qubit);
    }
    if (z_bit(t.letter)) {
      out.z.push_back(t.qubit);
    }
  }
  return out;
}

namespace {

std::size_t intersection_size(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
  std::size_t n = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

bool symplectic_anticommutes(const SymplecticPair& a, const SymplecticPair& b) {
  return ((intersection_size(a.x, b.z) + intersection_size(a.z, b.x)) & 1u) !=
         0;
}

}  // namespace locz
