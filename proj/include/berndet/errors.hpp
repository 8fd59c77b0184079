#pragma once

#include <stdexcept>
#include <string>

namespace berndet {

// Raised by solve_linear and the system routes when the determinant is zero:
// the route is unavailable, which is a reportable outcome, not a bug.
class SingularMatrixError : public std::domain_error {
 public:
  explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};

// Raised by exact_div on a nonzero remainder. Several checks treat this as a
// first-class result (a failed division falsifies the factorization claim).
class NotDivisibleError : public std::domain_error {
 public:
  explicit NotDivisibleError(const std::string& what) : std::domain_error(what) {}
};

// Raised when a size guard on an expensive expansion would be exceeded.
class GuardExceededError : public std::invalid_argument {
 public:
  explicit GuardExceededError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace berndet
