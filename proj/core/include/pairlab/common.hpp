#pragma once

#include <stdexcept>
#include <string>

namespace pairlab {

// Base class for all numerical/domain failures raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Evaluation requested exactly at a pole.
class PoleError : public DomainError {
 public:
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

// A quantity diverges at the requested point (e.g. infinite coupling).
class DivergenceError : public Error {
 public:
  explicit DivergenceError(const std::string& what) : Error(what) {}
};

// An iterative scheme failed to reach its tolerance within its cap.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Root bracketing failed.
class BracketingError : public Error {
 public:
  explicit BracketingError(const std::string& what) : Error(what) {}
};

// Too much probability mass leaks outside a quadrature grid.
class LeakageError : public Error {
 public:
  explicit LeakageError(const std::string& what) : Error(what) {}
};

// Incompatible shapes or index ranges.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

}  // namespace pairlab
