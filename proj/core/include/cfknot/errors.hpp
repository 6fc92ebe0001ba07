#pragma once

#include <stdexcept>

namespace cfknot {

/// A caller violated a documented precondition (CLI exit code 3).
struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The surface criterion does not apply to the coefficient list, i.e. the
/// |b1| >= 3, |bi| >= 2 bounds fail (CLI exit code 4).
struct CriterionInapplicable : std::domain_error {
  using std::domain_error::domain_error;
};

/// Neither global sign gives a non-negative expression of the class in the
/// c, b basis, so the positive-braid genus formula does not apply.
struct NotPositivelyRepresentable : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// A twist count of zero: the seven-component surgery description needs all
/// three annular twists present.
struct DegenerateTwist : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// Malformed operand text (CLI exit code 2).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace cfknot
