#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locz/pauli.hpp"

namespace locz {

enum class CorpusFormat {
  Auto,    // decide from the first data line: sparse iff it contains a digit
  Dense,   // one letter per qubit, e.g. "XYI"
  Sparse,  // <letter><index> tokens, e.g. "X0 Y1"
};

/// Parse a dense rendering: character position p (0-based) with a letter
/// other than I becomes the entry (p, letter). Throws BadCharacterError with
/// the offending position, or EmptyLineError for a line with no letters at
/// all ("I...I" is how a weight-0 string is spelled densely).
SparsePauliString parse_dense_line(std::string_view line);

/// Parse whitespace-separated <letter><index> tokens, e.g. "X0 Z3". An empty
/// line is the weight-0 string. Throws BadTokenError or DuplicateIndexError.
SparsePauliString parse_sparse_line(std::string_view line);

/// Dense rendering over qubits 0..n-1. Throws IndexOutOfRangeError unless
/// n >= 1 and n > every support index.
std::string serialize_dense(const SparsePauliString& p, std::size_t n);

/// Sparse rendering: entries as <letter><index> joined by single spaces;
/// weight 0 serializes to the empty line.
std::string serialize_sparse(const SparsePauliString& p);

/// A parsed corpus. lines[i] is the 1-based source line of strings[i];
/// format is the effective format (never Auto unless the file had no data).
struct Corpus {
  std::vector<SparsePauliString> strings;
  std::vector<std::size_t> lines;
  CorpusFormat format = CorpusFormat::Auto;
};

/// Read one string per line. '#' lines are comments; CRLF is tolerated.
/// Blank lines are weight-0 strings in sparse files, an error in dense
/// files, and rejected before format detection under Auto (ambiguous).
/// Line-level failures are rethrown as ParseError with the 1-based line.
Corpus read_corpus(std::istream& in, CorpusFormat format = CorpusFormat::Auto);
Corpus read_corpus_file(const std::string& path,
                        CorpusFormat format = CorpusFormat::Auto);

/// Write one string per line (LF). format must be Dense or Sparse; dense
/// rendering uses dense_n qubits per line.
void write_corpus(std::ostream& out, std::span<const SparsePauliString> strings,
                  CorpusFormat format, std::size_t dense_n = 0);

enum class WeightDist {
  FixedK,        // every string has weight exactly k
  UniformOneToK  // weight uniform over {1, ..., k}
};

/// Parameters of a reproducible random instance.
struct InstanceSpec {
  std::size_t count = 0;        // m
  std::uint32_t qubits = 1;     // n: indices drawn from {0, ..., n-1}
  std::uint32_t max_weight = 1; // k
  WeightDist weight_dist = WeightDist::FixedK;
  std::uint64_t seed = 0;
};

/// Deterministic instance generation, identical on every conforming
/// platform: a std::mt19937_64 seeded with spec.seed drives bitmask-rejection
/// bounded draws. Per string: the weight (uniform distribution only), then
/// support indices redrawn until distinct, then letters X/Y/Z uniformly in
/// ascending support order. Throws InvalidSpecError unless 1 <= k <= n.
std::vector<SparsePauliString> generate(const InstanceSpec& spec);

}  // namespace locz
