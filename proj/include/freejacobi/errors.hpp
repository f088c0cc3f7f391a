#ifndef FREEJACOBI_ERRORS_HPP
#define FREEJACOBI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fj {

// Precondition violation: argument outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An iterative method (Newton, bisection, continuation, quadrature) gave up.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

// A computed object broke one of its invariants or a tolerance check.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace fj

#endif
