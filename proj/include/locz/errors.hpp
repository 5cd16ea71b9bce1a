#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locz {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- input canonicalization ---

/// A raw entry carries a qubit index below zero.
class NegativeIndexError : public Error {
 public:
  using Error::Error;
};

/// A qubit index does not fit the 32-bit index range, or a dense rendering
/// was requested with too few qubits.
class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// Two entries assign different non-identity letters to the same qubit.
class DuplicateIndexError : public Error {
 public:
  using Error::Error;
};

// --- pattern table ---

/// A string's weight exceeds the table's configured cap.
class WeightCapExceededError : public Error {
 public:
  using Error::Error;
};

/// Inserting one more string would break the exact-arithmetic bound.
class CountOverflowError : public Error {
 public:
  using Error::Error;
};

/// (inserted - Z) came out odd; the table contents are corrupted.
class ParityViolationError : public Error {
 public:
  using Error::Error;
};

// --- batch engine ---

/// A positive query count had no matching predecessor in the witness scan.
class InternalInconsistencyError : public Error {
 public:
  using Error::Error;
};

// --- baseline ---

/// Edge listing was requested for an instance above the size limit.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

// --- corpus ---

/// A dense line contains a character outside {I, X, Y, Z}.
class BadCharacterError : public Error {
 public:
  BadCharacterError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_ = 0;
};

/// A sparse line contains a token that is not <letter><index>.
class BadTokenError : public Error {
 public:
  using Error::Error;
};

/// An empty line was parsed as a dense string (weight 0 is spelled "I...I").
class EmptyLineError : public Error {
 public:
  using Error::Error;
};

/// An instance spec violates 1 <= k <= n.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

/// A corpus line failed to parse; carries the 1-based source line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

}  // namespace locz
