#pragma once

// Test-only reference implementations. Everything here re-derives commutation
// from a dense qubit -> letter map, sharing no logic with the library's merge
// or subset-sum paths, so agreement is meaningful evidence.

#include <cstdint>
#include <map>
#include <random>
#include <string_view>
#include <vector>

#include "locz/corpus.hpp"
#include "locz/pauli.hpp"

namespace ref {

inline locz::SparsePauliString ps(std::string_view sparse_text) {
  return locz::parse_sparse_line(sparse_text);
}

inline std::map<std::uint32_t, char> dense_view(const locz::SparsePauliString& p) {
  std::map<std::uint32_t, char> out;
  for (const auto& t : p.entries()) {
    out[t.qubit] = locz::to_char(t.letter);
  }
  return out;
}

inline bool anticommutes(const locz::SparsePauliString& a,
                         const locz::SparsePauliString& b) {
  const auto da = dense_view(a);
  const auto db = dense_view(b);
  std::size_t conflicts = 0;
  for (const auto& [qubit, letter] : da) {
    const auto it = db.find(qubit);
    if (it != db.end() && it->second != letter) {
      ++conflicts;
    }
  }
  return conflicts % 2 == 1;
}

inline std::uint64_t pair_count(const std::vector<locz::SparsePauliString>& v) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      total += ref::anticommutes(v[i], v[j]) ? 1 : 0;
    }
  }
  return total;
}

inline std::vector<std::uint64_t> profile(
    const std::vector<locz::SparsePauliString>& v) {
  std::vector<std::uint64_t> out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      out[i] += ref::anticommutes(v[j], v[i]) ? 1 : 0;
    }
  }
  return out;
}

// Random strings of weight 0..max_w (weight 0 included, unlike the shipped
// generator, so the edge case gets exercised).
inline locz::SparsePauliString random_string(std::mt19937_64& rng,
                                             std::uint32_t n,
                                             std::uint32_t max_w) {
  const auto w = static_cast<std::uint32_t>(rng() % (max_w + 1));
  std::vector<locz::PauliTerm> entries;
  while (entries.size() < w) {
    const auto q = static_cast<std::uint32_t>(rng() % n);
    bool seen = false;
    for (const auto& t : entries) {
      seen |= t.qubit == q;
    }
    if (!seen) {
      const auto letter = static_cast<locz::Pauli>(1 + rng() % 3);
      entries.push_back({q, letter});
    }
  }
  return locz::normalize_terms(std::move(entries));
}

inline std::vector<locz::SparsePauliString> random_instance(
    std::mt19937_64& rng, std::size_t m, std::uint32_t n, std::uint32_t max_w) {
  std::vector<locz::SparsePauliString> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back(random_string(rng, n, max_w));
  }
  return out;
}

}  // namespace ref
