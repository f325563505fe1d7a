#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace critmult {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a formula (e.g. N < 3 for K_N).
class DomainError : public Error {
public:
  using Error::Error;
};

// A standing hypothesis of a theorem or construction is violated
// (dimension restrictions, A1 < A2, crit in (2,4), ...).
class HypothesisError : public Error {
public:
  using Error::Error;
};

// Caller-side precondition on parameters (example windows, flatness of f, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

class NumericError : public Error {
public:
  using Error::Error;
};

// Newton did not reach the residual tolerance. Carries the best iterate seen.
class ConvergenceError : public NumericError {
public:
  ConvergenceError(const std::string& what, std::vector<double> best_iterate,
                   double best_residual)
      : NumericError(what), best_iterate_(std::move(best_iterate)),
        best_residual_(best_residual) {}

  const std::vector<double>& best_iterate() const { return best_iterate_; }
  double best_residual() const { return best_residual_; }

private:
  std::vector<double> best_iterate_;
  double best_residual_;
};

class DegeneracyError : public NumericError {
public:
  using NumericError::NumericError;
};

class QuadratureError : public NumericError {
public:
  using NumericError::NumericError;
};

} // namespace critmult
