#include "locz/corpus.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>

#include "locz/errors.hpp"

namespace locz {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

std::string_view trim(std::string_view v, std::size_t* leading = nullptr) {
  std::size_t begin = 0;
  while (begin < v.size() && is_space(v[begin])) {
    ++begin;
  }
  std::size_t end = v.size();
  while (end > begin && is_space(v[end - 1])) {
    --end;
  }
  if (leading) {
    *leading = begin;
  }
  return v.substr(begin, end - begin);
}

}  // namespace

SparsePauliString parse_dense_line(std::string_view line) {
  std::size_t offset = 0;
  const std::string_view body = trim(line, &offset);
  if (body.empty()) {
    throw EmptyLineError(
        "empty line is not a dense string; a weight-0 string is all 'I'");
  }
  std::vector<PauliTerm> entries;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const auto letter = pauli_from_char(body[i]);
    if (!letter) {
      const std::size_t position = offset + i;
      throw BadCharacterError("bad character '" + std::string(1, body[i]) +
                                  "' at position " + std::to_string(position),
                              position);
    }
    if (*letter != Pauli::I) {
      entries.push_back({static_cast<std::uint32_t>(i), *letter});
    }
  }
  return normalize_terms(std::move(entries));
}

SparsePauliString parse_sparse_line(std::string_view line) {
  std::vector<RawEntry> raw;
  std::size_t i = 0;
  while (i < line.size()) {
    if (is_space(line[i])) {
      ++i;
      continue;
    }
    const std::size_t token_start = i;
    while (i < line.size() && !is_space(line[i])) {
      ++i;
    }
    const std::string_view token = line.substr(token_start, i - token_start);
    const auto letter = pauli_from_char(token[0]);
    const std::string_view digits = token.substr(1);
    if (!letter || digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char c) {
          return c >= '0' && c <= '9';
        })) {
      throw BadTokenError("bad token '" + std::string(token) + "' at position " +
                          std::to_string(token_start) +
                          " (expected <letter><index>, e.g. X0)");
    }
    std::uint64_t index = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() ||
        index > std::numeric_limits<std::uint32_t>::max()) {
      throw BadTokenError("index in token '" + std::string(token) +
                          "' exceeds the 32-bit index range");
    }
    raw.emplace_back(static_cast<std::int64_t>(index), *letter);
  }
  return normalize(std::span<const RawEntry>(raw));
}

std::string serialize_dense(const SparsePauliString& p, std::size_t n) {
  if (n == 0) {
    throw IndexOutOfRangeError("dense rendering needs at least one qubit");
  }
  if (!p.entries().empty() && p.entries().back().qubit >= n) {
    throw IndexOutOfRangeError(
        "dense rendering over " + std::to_string(n) +
        " qubits cannot hold index " +
        std::to_string(p.entries().back().qubit));
  }
  std::string out(n, 'I');
  for (const auto& t : p.entries()) {
    out[t.qubit] = to_char(t.letter);
  }
  return out;
}

std::string serialize_sparse(const SparsePauliString& p) {
  std::string out;
  for (const auto& t : p.entries()) {
    if (!out.empty()) {
      out.push_back(' ');
    }
    out.push_back(to_char(t.letter));
    out += std::to_string(t.qubit);
  }
  return out;
}

Corpus read_corpus(std::istream& in, CorpusFormat format) {
  Corpus corpus;
  CorpusFormat mode = format;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    const std::string_view body = trim(line);
    if (!body.empty() && body.front() == '#') {
      continue;
    }
    if (mode == CorpusFormat::Auto) {
      if (body.empty()) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": blank line is ambiguous under auto format "
                             "(weight-0 in sparse files, invalid in dense); "
                             "pass an explicit format",
                         line_no);
      }
      const bool has_digit = std::any_of(body.begin(), body.end(), [](char c) {
        return c >= '0' && c <= '9';
      });
      mode = has_digit ? CorpusFormat::Sparse : CorpusFormat::Dense;
    }
    try {
      corpus.strings.push_back(mode == CorpusFormat::Dense
                                   ? parse_dense_line(line)
                                   : parse_sparse_line(line));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                       line_no);
    }
    corpus.lines.push_back(line_no);
  }
  corpus.format = mode;
  return corpus;
}

Corpus read_corpus_file(const std::string& path, CorpusFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open corpus file: " + path);
  }
  return read_corpus(in, format);
}

void write_corpus(std::ostream& out, std::span<const SparsePauliString> strings,
                  CorpusFormat format, std::size_t dense_n) {
  if (format == CorpusFormat::Auto) {
    throw std::invalid_argument("write_corpus needs an explicit format");
  }
  for (const auto& s : strings) {
    if (format == CorpusFormat::Dense) {
      out << serialize_dense(s, dense_n) << '\n';
    } else {
      out << serialize_sparse(s) << '\n';
    }
  }
}

namespace {

// Unbiased draw from [0, bound) by masked rejection. Paired with the
// standards-pinned mt19937_64 stream this reproduces bit-identically
// everywhere, which std::uniform_int_distribution does not.
std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) {
    return 0;
  }
  const std::uint64_t mask = std::bit_ceil(bound) - 1;
  for (;;) {
    const std::uint64_t r = rng() & mask;
    if (r < bound) {
      return r;
    }
  }
}

constexpr Pauli kLetterByDraw[3] = {Pauli::X, Pauli::Y, Pauli::Z};

}  // namespace

std::vector<SparsePauliString> generate(const InstanceSpec& spec) {
  if (spec.qubits < 1 || spec.max_weight < 1 || spec.max_weight > spec.qubits) {
    throw InvalidSpecError("instance spec requires 1 <= k <= n, got k=" +
                           std::to_string(spec.max_weight) +
                           " n=" + std::to_string(spec.qubits));
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<SparsePauliString> out;
  out.reserve(spec.count);
  std::vector<std::uint32_t> support;
  for (std::size_t s = 0; s < spec.count; ++s) {
    const std::uint32_t w =
        spec.weight_dist == WeightDist::FixedK
            ? spec.max_weight
            : 1 + static_cast<std::uint32_t>(bounded_uniform(rng, spec.max_weight));
    support.clear();
    while (support.size() < w) {
      const auto q = static_cast<std::uint32_t>(bounded_uniform(rng, spec.qubits));
      if (std::find(support.begin(), support.end(), q) == support.end()) {
        support.push_back(q);
      }
    }
    std::sort(support.begin(), support.end());
    std::vector<PauliTerm> entries;
    entries.reserve(w);
    for (const auto q : support) {
      entries.push_back({q, kLetterByDraw[bounded_uniform(rng, 3)]});
    }
    out.push_back(normalize_terms(std::move(entries)));
  }
  return out;
}

}  // namespace locz
