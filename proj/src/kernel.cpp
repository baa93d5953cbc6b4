#include "trk/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace trk {

Theta::Theta(Eigen::VectorXd v, double lo_, double hi_) : values(std::move(v)), lo(lo_), hi(hi_) {
  if (values.size() < 1) throw std::invalid_argument("Theta: empty vector");
  if (!(lo > 0.0) || !(lo <= hi)) throw std::invalid_argument("Theta: need 0 < lo <= hi");
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (!(values[k] >= lo && values[k] <= hi))
      throw std::invalid_argument("Theta: component " + std::to_string(k) + " outside bounds");
  }
}

Theta Theta::broadcast(double value, Eigen::Index dim, double lo, double hi) {
  return Theta(Eigen::VectorXd::Constant(dim, value), lo, hi);
}

double correlation(const Theta& theta, const Eigen::VectorXd& xi, const Eigen::VectorXd& xj) {
  if (xi.size() != theta.dim() || xj.size() != theta.dim())
    throw std::invalid_argument("correlation: point dimension mismatch");
  double exponent = 0.0;
  for (Eigen::Index k = 0; k < theta.dim(); ++k) {
    const double d = xi[k] - xj[k];
    exponent += theta.values[k] * d * d;
  }
  return std::exp(-exponent);
}

Eigen::MatrixXd correlation_matrix(const Theta& theta, const Eigen::MatrixXd& X) {
  if (X.rows() < 1) throw std::invalid_argument("correlation_matrix: empty point set");
  if (X.cols() != theta.dim())
    throw std::invalid_argument("correlation_matrix: dimension mismatch");
  const Eigen::Index n = X.rows();
  Eigen::MatrixXd R = Eigen::MatrixXd::Ones(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double exponent = 0.0;
      for (Eigen::Index k = 0; k < X.cols(); ++k) {
        const double d = X(i, k) - X(j, k);
        exponent += theta.values[k] * d * d;
      }
      const double r = std::exp(-exponent);
      R(i, j) = r;
      R(j, i) = r;
    }
  }
  return R;
}

Eigen::VectorXd cross_correlation(const Theta& theta, const Eigen::MatrixXd& X,
                                  const Eigen::VectorXd& x) {
  if (X.cols() != theta.dim() || x.size() != theta.dim())
    throw std::invalid_argument("cross_correlation: dimension mismatch");
  Eigen::VectorXd r(X.rows());
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    double exponent = 0.0;
    for (Eigen::Index k = 0; k < X.cols(); ++k) {
      const double d = x[k] - X(i, k);
      exponent += theta.values[k] * d * d;
    }
    r[i] = std::exp(-exponent);
  }
  return r;
}

}  // namespace trk
