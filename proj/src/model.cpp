#include "trk/model.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>
#include <cmath>
#include <limits>

#include "trk/errors.hpp"

namespace trk {

namespace {

constexpr double kNuggetLadder[] = {0.0, 1e-12, 1e-10, 1e-8};

// Cholesky with a near-singularity gate: a factor whose smallest pivot is
// below sqrt(n eps) of the largest behaves like a failure for interpolation
// purposes, so it triggers the same nugget escalation.
bool try_cholesky(const Eigen::MatrixXd& A, Eigen::MatrixXd& L) {
  Eigen::LLT<Eigen::MatrixXd> llt(A);
  if (llt.info() != Eigen::Success) return false;
  L = llt.matrixL();
  const auto diag = L.diagonal();
  const double dmin = diag.minCoeff();
  const double dmax = diag.maxCoeff();
  const double eps = std::numeric_limits<double>::epsilon();
  return dmin * dmin > static_cast<double>(A.rows()) * eps * dmax * dmax;
}

}  // namespace

FittedModel fit_given_theta(const Dataset& data, RegressionBasis basis, const Theta& theta) {
  if (theta.dim() != data.dim())
    throw std::invalid_argument("fit_given_theta: theta dimension mismatch");
  const Eigen::Index n = data.n();
  const Eigen::MatrixXd& X = data.normalized_points();
  const Eigen::VectorXd& y = data.normalized_responses();

  const Eigen::MatrixXd R = correlation_matrix(theta, X);
  const double mean_diag = R.trace() / static_cast<double>(n);

  Eigen::MatrixXd L;
  double nugget = 0.0;
  bool factored = false;
  for (double scale : kNuggetLadder) {
    nugget = scale * mean_diag;
    Eigen::MatrixXd A = R;
    A.diagonal().array() += nugget;
    if (try_cholesky(A, L)) {
      factored = true;
      break;
    }
  }
  if (!factored)
    throw IllConditionedError("fit_given_theta: correlation matrix not factorizable at nugget <= 1e-8");

  const Eigen::MatrixXd F = design_matrix(basis, X);
  const Eigen::MatrixXd Ft = L.triangularView<Eigen::Lower>().solve(F);
  const Eigen::VectorXd yt = L.triangularView<Eigen::Lower>().solve(y);

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Ft);
  if (qr.rank() < Ft.cols())
    throw SingularRegressionError("fit_given_theta: rank-deficient regression design");
  const Eigen::VectorXd beta = qr.solve(yt);

  const Eigen::VectorXd resid = yt - Ft * beta;
  const double sigma2 = resid.squaredNorm() / static_cast<double>(n);
  const Eigen::VectorXd gamma = L.transpose().triangularView<Eigen::Upper>().solve(resid);

  FittedModel model{theta,
                    beta,
                    sigma2,
                    L,
                    gamma,
                    basis,
                    nugget,
                    2.0 * L.diagonal().array().log().sum(),
                    X,
                    y,
                    data.input_transform(),
                    data.output_transform()};
  return model;
}

namespace detail {

double predict_normalized(const FittedModel& model, const Eigen::VectorXd& x_norm) {
  const Eigen::VectorXd r = cross_correlation(model.theta, model.train_points_norm, x_norm);
  const Eigen::RowVectorXd f = basis_row(model.basis, x_norm);
  return f.dot(model.beta) + r.dot(model.gamma_star);
}

}  // namespace detail

double predict(const FittedModel& model, const Eigen::VectorXd& x_raw) {
  if (x_raw.size() != model.dim()) throw std::invalid_argument("predict: dimension mismatch");
  Eigen::VectorXd xn(x_raw.size());
  for (Eigen::Index k = 0; k < x_raw.size(); ++k)
    xn[k] = model.input_transform[static_cast<std::size_t>(k)].forward(x_raw[k]);
  return model.output_transform.inverse(detail::predict_normalized(model, xn));
}

double predict_mse(const FittedModel& model, const Eigen::VectorXd& x_raw,
                   bool* conditioning_warning) {
  if (x_raw.size() != model.dim()) throw std::invalid_argument("predict_mse: dimension mismatch");
  Eigen::VectorXd xn(x_raw.size());
  for (Eigen::Index k = 0; k < x_raw.size(); ++k)
    xn[k] = model.input_transform[static_cast<std::size_t>(k)].forward(x_raw[k]);

  const Eigen::VectorXd r = cross_correlation(model.theta, model.train_points_norm, xn);
  const Eigen::VectorXd rt = model.corr_factor.triangularView<Eigen::Lower>().solve(r);
  const Eigen::MatrixXd F = design_matrix(model.basis, model.train_points_norm);
  const Eigen::MatrixXd Ft = model.corr_factor.triangularView<Eigen::Lower>().solve(F);
  const Eigen::VectorXd u = Ft.transpose() * rt - basis_row(model.basis, xn).transpose();

  Eigen::LLT<Eigen::MatrixXd> gram(Eigen::MatrixXd(Ft.transpose() * Ft));
  const double trend_term = gram.info() == Eigen::Success ? u.dot(gram.solve(u)) : 0.0;
  double mse = model.sigma2 * (1.0 - rt.squaredNorm() + trend_term);
  if (conditioning_warning)
    *conditioning_warning = mse < -10.0 * std::numeric_limits<double>::epsilon() * model.sigma2;
  if (mse < 0.0) mse = 0.0;  // round-off at training points can dip slightly negative
  const double scale = model.output_transform.scale;
  return mse * scale * scale;
}

}  // namespace trk
