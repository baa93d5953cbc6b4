#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "trk/model.hpp"
#include "trk/objective.hpp"

namespace trk {

/// Pattern-search controls. theta_init broadcasts a scalar when empty.
/// Steps are in log10(theta) units; every candidate is clipped to
/// [theta_lo, theta_hi] per dimension.
struct FitOptions {
  Eigen::VectorXd theta_init;
  double theta_init_scalar = 10.0;
  double theta_lo = 1e-2;
  double theta_hi = 1e2;
  int max_iters = 500;
  double epsilon = 1e-8;     // relative best-objective decrease threshold
  double step_expand = 2.0;  // pattern-move extrapolation factor
  double step_shrink = 0.5;
  double min_step = 1e-6;
  double step_init = 1.0;

  Eigen::VectorXd initial_theta(Eigen::Index dim) const;
  void validate(Eigen::Index dim) const;
};

enum class StopReason { epsilon, step, max_iters };
std::string stop_reason_name(StopReason value);

struct TraceRow {
  int iter;
  Eigen::VectorXd theta;  // candidate accepted (or retained) this iteration
  double objective;       // psi at that candidate
  double best_objective;  // best psi seen so far; nonincreasing
};

struct FitTrace {
  std::vector<TraceRow> rows;
  StopReason reason = StopReason::max_iters;
  long evaluations = 0;
};

struct FitResult {
  FittedModel model;
  FitTrace trace;
};

/// Algorithm: minimize psi(theta) = sigma2 |R|^{1/n} + penalty over the theta
/// box by Hooke-Jeeves search in log10(theta). Exploratory +-step coordinate
/// moves, then a pattern extrapolation through the improved point; a failed
/// cycle shrinks the step. Candidates whose factorization fails score +inf.
/// Deterministic: no randomness anywhere.
FitResult fit_trk(const Dataset& data, RegressionBasis basis, const PenaltySpec& spec,
                  const FitOptions& opts = {});

/// Universal Kriging fit: exactly fit_trk with no penalty.
FitResult fit_uk(const Dataset& data, RegressionBasis basis, const FitOptions& opts = {});

void write_trace_csv(const FitTrace& trace, const std::string& path);

}  // namespace trk
