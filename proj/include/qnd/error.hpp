#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qnd {

enum class ErrorKind {
  EntryOutOfRange,
  NotSquare,
  DiagonalViolation,
  ColumnNotBijective,
  DistributivityViolation,
  NotAGroup,
  SubsetNotClosed,
  NotACongruence,
  NotAHomomorphism,
  EmptyFiber,
  NotSymmetric,
  NotSurjective,
  NotASection,
  PreconditionFailed,
  OrderTooLarge,
  Parse,
};

// snake_case name used in CLI output, e.g. "column_not_bijective".
std::string_view to_string(ErrorKind kind) noexcept;

// Every recoverable failure in the library. `witness()` holds the indices
// that pinpoint the first violation (e.g. the column, or the triple a b c).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::vector<std::size_t> witness, std::string const& message);

  ErrorKind kind() const noexcept { return kind_; }
  std::vector<std::size_t> const& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

// Raised when an internal consistency tripwire fires (for example the three
// centrality notions disagree). Not recoverable: it means a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qnd
