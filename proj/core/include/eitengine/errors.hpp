#pragma once

#include <stdexcept>
#include <string>

namespace eitengine {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A scalar argument is outside the mathematical domain of an operation
// (nonpositive frequency, nonpositive brightness, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A parameter set failed validation; message lists the issue codes.
class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

// A closed-form expression lost meaning because a combination of inputs
// made a factor vanish. The message names the vanishing factor.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// The requested quantity is only defined below an inversion threshold.
// `discriminant` is the signed threshold expression (negative means below
// threshold, i.e. the regime where the quantity exists).
class ThresholdError : public Error {
 public:
  ThresholdError(const std::string& what, double discriminant_)
      : Error(what), discriminant(discriminant_) {}
  double discriminant;
};

// The medium amplifies instead of absorbing at the probed detuning.
class GainMediumError : public Error {
 public:
  using Error::Error;
};

// A required optional parameter is absent.
class MissingParameterError : public Error {
 public:
  using Error::Error;
};

// A numerical method failed (singular or ill-conditioned linear system,
// integrator breakdown). Message carries the diagnostic.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace eitengine
