#pragma once

#include <stdexcept>
#include <string>

namespace trk {

/// Correlation matrix could not be factorized even at the largest nugget.
class IllConditionedError : public std::runtime_error {
public:
  explicit IllConditionedError(const std::string& what) : std::runtime_error(what) {}
};

/// Rank-deficient generalized least squares system (F^T R^-1 F singular).
class SingularRegressionError : public std::runtime_error {
public:
  explicit SingularRegressionError(const std::string& what) : std::runtime_error(what) {}
};

/// Pattern search could not evaluate the objective anywhere.
class FitFailedError : public std::runtime_error {
public:
  explicit FitFailedError(const std::string& what) : std::runtime_error(what) {}
};

/// Every tuning candidate was infeasible.
class TuningFailedError : public std::runtime_error {
public:
  explicit TuningFailedError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed, truncated, or version-mismatched model document.
class DeserializationError : public std::runtime_error {
public:
  explicit DeserializationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trk
