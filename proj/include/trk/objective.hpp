#pragma once

#include <Eigen/Dense>

#include "trk/basis.hpp"
#include "trk/dataset.hpp"
#include "trk/kernel.hpp"
#include "trk/model.hpp"
#include "trk/penalty.hpp"

namespace trk {

/// Penalized fitting objective psi(theta) = sigma2 |R|^{1/n} + sum_k p(theta_k),
/// evaluated through the profiled fit at theta. The determinant power is
/// computed in the log domain from the Cholesky factor.
double trk_objective(const Dataset& data, RegressionBasis basis, const Theta& theta,
                     const PenaltySpec& spec);

/// Same value computed from an existing fit, so optimizer loops fit once.
double trk_objective(const FittedModel& model, const PenaltySpec& spec);

/// Gaussian log-likelihood ln L(beta, sigma2, theta | y) at the given
/// parameter values (not profiled), in the dataset's normalized coordinates.
double log_likelihood(const Dataset& data, RegressionBasis basis, const Theta& theta,
                      const Eigen::VectorXd& beta, double sigma2);

/// Gradient in theta of the fitting objective -ln L profiled over
/// (beta, sigma2): component i is
///   1/2 tr(R^-1 dR_i) - (gamma*' dR_i gamma*) / (2 sigma2)
/// with dR_i entries -(x_a_i - x_b_i)^2 R_ab.
Eigen::VectorXd likelihood_gradient(const Dataset& data, RegressionBasis basis, const Theta& theta);

/// Exact Hessian of the profiled objective, including the chain terms from
/// the theta-dependence of the profiled beta-hat and sigma2-hat. Symmetric.
Eigen::MatrixXd likelihood_hessian(const Dataset& data, RegressionBasis basis, const Theta& theta);

struct SpectrumResult {
  Eigen::VectorXd singular_values;  // nonincreasing
  double condition_ratio;           // s_1 / s_D (inf when s_D == 0)
};

/// SVD spectrum of the likelihood Hessian; the condition ratio diagnoses how
/// unevenly curvature is distributed across dimensions.
SpectrumResult hessian_spectrum(const Dataset& data, RegressionBasis basis, const Theta& theta);

}  // namespace trk
