#pragma once

#include <stdexcept>
#include <string>

namespace nodal_hodge {

/// Base for conditions that can only arise from a bug in an assembly or a
/// transcription error in a formula. The CLI maps these to exit code 3.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Exact division left a nonzero remainder.
class NotDivisible : public InvariantViolation {
public:
  using InvariantViolation::InvariantViolation;
};

/// A quotient Hilbert function had a class in odd degree.
class OddDegreePresent : public InvariantViolation {
public:
  using InvariantViolation::InvariantViolation;
};

/// A subtraction formula for a dimension went negative.
class NegativeDimension : public InvariantViolation {
public:
  using InvariantViolation::InvariantViolation;
};

/// Differential ranks supplied to a spectral sequence exceed their bounds.
class InconsistentRanks : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace nodal_hodge
