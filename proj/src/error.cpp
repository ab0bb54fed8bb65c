#include "qnd/error.hpp"

namespace qnd {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EntryOutOfRange: return "entry_out_of_range";
    case ErrorKind::NotSquare: return "not_square";
    case ErrorKind::DiagonalViolation: return "diagonal_violation";
    case ErrorKind::ColumnNotBijective: return "column_not_bijective";
    case ErrorKind::DistributivityViolation: return "distributivity_violation";
    case ErrorKind::NotAGroup: return "not_a_group";
    case ErrorKind::SubsetNotClosed: return "subset_not_closed";
    case ErrorKind::NotACongruence: return "not_a_congruence";
    case ErrorKind::NotAHomomorphism: return "not_a_homomorphism";
    case ErrorKind::EmptyFiber: return "empty_fiber";
    case ErrorKind::NotSymmetric: return "not_symmetric";
    case ErrorKind::NotSurjective: return "not_surjective";
    case ErrorKind::NotASection: return "not_a_section";
    case ErrorKind::PreconditionFailed: return "precondition_failed";
    case ErrorKind::OrderTooLarge: return "order_too_large";
    case ErrorKind::Parse: return "parse_error";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, std::vector<std::size_t> witness, std::string const& message)
    : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

}  // namespace qnd
