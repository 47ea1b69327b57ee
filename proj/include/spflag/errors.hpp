#ifndef SPFLAG_ERRORS_HPP
#define SPFLAG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace spflag {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input fails a documented shape or invariant precondition (CLI exit 2).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Numerical failure or tolerance-level domain violation (CLI exit 3).
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& msg) : Error(msg) {}
};

/// det(c z - d) (or a cell-action denominator) lies inside the zero band:
/// the point is outside the affine chart of the group element.
class SingularDenominator : public NumericalError {
 public:
  explicit SingularDenominator(const std::string& msg) : NumericalError(msg) {}
};

/// z has an eigenvalue inside the zero band where an invertible z is required.
class SingularZ : public NumericalError {
 public:
  explicit SingularZ(const std::string& msg) : NumericalError(msg) {}
};

/// y does not have full column rank.
class RankDeficientY : public ValidationError {
 public:
  explicit RankDeficientY(const std::string& msg) : ValidationError(msg) {}
};

/// A Monte-Carlo estimate kept growing by more than the divergence factor
/// across every budget-doubling round.
class DivergenceSuspected : public NumericalError {
 public:
  DivergenceSuspected(const std::string& msg, std::vector<double> rounds)
      : NumericalError(msg), round_estimates(std::move(rounds)) {}
  std::vector<double> round_estimates;
};

}  // namespace spflag

#endif
