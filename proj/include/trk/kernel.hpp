#pragma once

#include <Eigen/Dense>

namespace trk {

/// Positive per-dimension decay rates of the Gaussian correlation kernel,
/// boxed to [lo, hi] in every dimension.
struct Theta {
  Eigen::VectorXd values;
  double lo = 1e-2;
  double hi = 1e2;

  Theta(Eigen::VectorXd v, double lo_ = 1e-2, double hi_ = 1e2);
  static Theta broadcast(double value, Eigen::Index dim, double lo = 1e-2, double hi = 1e2);

  Eigen::Index dim() const { return values.size(); }
};

/// Gaussian correlation exp(-sum_k theta_k (xi_k - xj_k)^2); 1 iff xi == xj.
double correlation(const Theta& theta, const Eigen::VectorXd& xi, const Eigen::VectorXd& xj);

/// Symmetric unit-diagonal correlation matrix over the rows of X.
Eigen::MatrixXd correlation_matrix(const Theta& theta, const Eigen::MatrixXd& X);

/// Correlations between a probe point and every row of X.
Eigen::VectorXd cross_correlation(const Theta& theta, const Eigen::MatrixXd& X,
                                  const Eigen::VectorXd& x);

}  // namespace trk
