#pragma once

#include <stdexcept>
#include <string>

namespace stripstar {

/// Base for failures of a numerical procedure (as opposed to bad arguments).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByNonUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonzeroConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonzeroInnerConstant : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A log argument came within rounding distance of the branch cut.
class BranchHazard : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class ExcludedTheta : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DerivativeVanishes : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class BoundViolation : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class NoSignChange : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// An internal identity failed by more than rounding noise.
class InternalConsistencyError : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

}  // namespace stripstar
