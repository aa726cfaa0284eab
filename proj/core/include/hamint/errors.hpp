#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hamint {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (mismatched jet orders, bad scheme id, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Jet division by a series whose constant term vanishes.
class SingularDivisionError : public Error {
 public:
  using Error::Error;
};

/// Locally exact step hit the tan pole: h*omega >= pi.
class ResonanceError : public Error {
 public:
  using Error::Error;
};

/// Scheme requires structure the system does not have (e.g. separable H).
class UnsupportedSchemeError : public UsageError {
 public:
  using UsageError::UsageError;
};

/// sin(omega h) vanished in the harmonic momentum recovery.
class DegenerateStepError : public Error {
 public:
  using Error::Error;
};

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, double last_increment)
      : Error(what), last_increment_(last_increment) {}
  double last_increment() const noexcept { return last_increment_; }

 private:
  double last_increment_;
};

class DivergenceError : public NonConvergenceError {
 public:
  using NonConvergenceError::NonConvergenceError;
};

/// Solver failure annotated with the step index of a trajectory.
class TrajectoryAbort : public Error {
 public:
  TrajectoryAbort(const std::string& what, std::int64_t step)
      : Error(what), step_(step) {}
  std::int64_t step() const noexcept { return step_; }

 private:
  std::int64_t step_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hamint
