#pragma once

#include <Eigen/Dense>
#include <vector>

#include "trk/basis.hpp"
#include "trk/dataset.hpp"
#include "trk/kernel.hpp"

namespace trk {

/// Trained Kriging state at a fixed theta. Everything internal lives in the
/// dataset's normalized coordinates; predict/predict_mse map back to raw
/// units. Immutable after construction — concurrent reads are safe.
struct FittedModel {
  Theta theta;
  Eigen::VectorXd beta;        // GLS coefficients, normalized space
  double sigma2 = 0.0;         // profiled process variance, normalized space
  Eigen::MatrixXd corr_factor; // lower Cholesky factor of R + nugget I
  Eigen::VectorXd gamma_star;  // (R + nugget I)^-1 (y - F beta)
  RegressionBasis basis;
  double nugget = 0.0;
  double log_det = 0.0;        // ln|R + nugget I|

  // dataset_ref
  Eigen::MatrixXd train_points_norm;
  Eigen::VectorXd train_responses_norm;
  std::vector<Affine> input_transform;
  Affine output_transform;

  Eigen::Index n() const { return train_points_norm.rows(); }
  Eigen::Index dim() const { return train_points_norm.cols(); }
};

/// Profiled GLS estimation at fixed theta: beta, sigma2, gamma* via the
/// Cholesky factor of R (never an explicit inverse). Escalates a diagonal
/// nugget through {0, 1e-12, 1e-10, 1e-8} x mean(diag R) until the
/// factorization succeeds; throws IllConditionedError beyond that and
/// SingularRegressionError when F^T R^-1 F is rank deficient.
FittedModel fit_given_theta(const Dataset& data, RegressionBasis basis, const Theta& theta);

/// Kriging mean prediction in raw output units.
double predict(const FittedModel& model, const Eigen::VectorXd& x_raw);

/// Universal-Kriging prediction MSE sigma2 (1 - r'R^-1 r + u'(F'R^-1 F)^-1 u)
/// with u = F'R^-1 r - f(x), in raw output units; clamped at zero. A dip below
/// -10 eps sigma2 before clamping sets *conditioning_warning when given.
double predict_mse(const FittedModel& model, const Eigen::VectorXd& x_raw,
                   bool* conditioning_warning = nullptr);

namespace detail {
/// Normalized-space prediction for a probe already in normalized coordinates.
double predict_normalized(const FittedModel& model, const Eigen::VectorXd& x_norm);
}  // namespace detail

}  // namespace trk
