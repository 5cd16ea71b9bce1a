#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace locz {

/// One-qubit Pauli letter. The numeric value is the letter's symplectic bit
/// pair: bit 1 is the x component, bit 0 the z component, so X=(1,0), Z=(0,1),
/// Y=(1,1) and two letters conflict iff both are non-zero and their codes
/// differ.
enum class Pauli : std::uint8_t {
  I = 0b00,
  Z = 0b01,
  X = 0b10,
  Y = 0b11,
};

constexpr bool x_bit(Pauli p) noexcept {
  return (static_cast<std::uint8_t>(p) >> 1) & 1u;
}
constexpr bool z_bit(Pauli p) noexcept {
  return static_cast<std::uint8_t>(p) & 1u;
}

char to_char(Pauli p) noexcept;
std::optional<Pauli> pauli_from_char(char c) noexcept;

/// A non-identity letter pinned to a qubit.
struct PauliTerm {
  std::uint32_t qubit = 0;
  Pauli letter = Pauli::I;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// Phase-free Pauli string stored sparsely: the sorted list of (qubit, letter)
/// pairs over its support. Identity positions are absent, indices are strictly
/// ascending, and no stored letter is I. Construct through normalize().
///
/// Strings do not record a total qubit count; commutation only ever inspects
/// the support.
class SparsePauliString {
 public:
  SparsePauliString() = default;  // weight-0 string

  const std::vector<PauliTerm>& entries() const noexcept { return entries_; }
  std::size_t weight() const noexcept { return entries_.size(); }

  std::vector<std::uint32_t> support() const;

  /// Letter at a qubit; Pauli::I when the qubit is outside the support.
  Pauli letter_at(std::uint32_t qubit) const noexcept;

  friend bool operator==(const SparsePauliString&,
                         const SparsePauliString&) = default;

 private:
  explicit SparsePauliString(std::vector<PauliTerm> entries)
      : entries_(std::move(entries)) {}
  friend SparsePauliString normalize_terms(std::vector<PauliTerm> entries);

  std::vector<PauliTerm> entries_;
};

/// Raw (index, letter) pair before canonicalization; the index is signed so
/// out-of-domain inputs can be diagnosed.
using RawEntry = std::pair<std::int64_t, Pauli>;

/// Canonicalize a list of raw entries: drop identities, sort by index, merge
/// repeats. Throws NegativeIndexError, IndexOutOfRangeError, or
/// DuplicateIndexError (two different non-identity letters on one qubit).
SparsePauliString normalize(std::span<const RawEntry> raw);
SparsePauliString normalize(std::initializer_list<RawEntry> raw);

/// Same canonicalization for entries already in the 32-bit index domain.
SparsePauliString normalize_terms(std::vector<PauliTerm> entries);

/// Qubits where both strings are non-identity with different letters, in
/// ascending order. Merge over the two sorted entry lists, O(wt(p) + wt(q)).
std::vector<std::uint32_t> conflict_set(const SparsePauliString& p,
                                        const SparsePauliString& q);

/// True iff the conflict set has odd size.
bool anticommutes(const SparsePauliString& p, const SparsePauliString& q);

/// Binary symplectic form of a string: sorted index lists of the set bits of
/// the x and z vectors. (x_j, z_j) = (0,0) exactly off the support.
struct SymplecticPair {
  std::vector<std::uint32_t> x;
  std::vector<std::uint32_t> z;

  friend bool operator==(const SymplecticPair&, const SymplecticPair&) = default;
};

SymplecticPair to_symplectic(const SparsePauliString& p);

/// Symplectic form over GF(2): parity of |a.x ∩ b.z| + |a.z ∩ b.x|.
bool symplectic_anticommutes(const SymplecticPair& a, const SymplecticPair& b);

}  // namespace locz
