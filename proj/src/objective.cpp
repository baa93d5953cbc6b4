#include "trk/objective.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace trk {

double trk_objective(const FittedModel& model, const PenaltySpec& spec) {
  const double n = static_cast<double>(model.n());
  const double base =
      model.sigma2 > 0.0 ? std::exp(std::log(model.sigma2) + model.log_det / n) : 0.0;
  return base + penalty(spec, model.theta.values);
}

double trk_objective(const Dataset& data, RegressionBasis basis, const Theta& theta,
                     const PenaltySpec& spec) {
  return trk_objective(fit_given_theta(data, basis, theta), spec);
}

double log_likelihood(const Dataset& data, RegressionBasis basis, const Theta& theta,
                      const Eigen::VectorXd& beta, double sigma2) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("log_likelihood: sigma2 must be positive");
  const Eigen::Index n = data.n();
  const Eigen::MatrixXd& X = data.normalized_points();
  const Eigen::VectorXd& y = data.normalized_responses();
  const FittedModel fit = fit_given_theta(data, basis, theta);  // factorization + nugget policy
  const Eigen::MatrixXd F = design_matrix(basis, X);
  const Eigen::VectorXd e = y - F * beta;
  const Eigen::VectorXd et = fit.corr_factor.triangularView<Eigen::Lower>().solve(e);
  const double nd = static_cast<double>(n);
  return -0.5 * nd * std::log(2.0 * std::numbers::pi) - 0.5 * nd * std::log(sigma2) -
         0.5 * fit.log_det - 0.5 * et.squaredNorm() / sigma2;
}

namespace {

// Shared scaffolding for the derivative diagnostics: the profiled fit plus
// per-dimension squared-difference matrices of the normalized inputs.
struct DerivativeContext {
  FittedModel fit;
  Eigen::MatrixXd Rbare;  // correlation matrix without the nugget
  Eigen::MatrixXd Rinv;   // inverse of the factored (nugget-inflated) matrix
  Eigen::MatrixXd F;
  std::vector<Eigen::MatrixXd> sqdiff;  // (x_a_k - x_b_k)^2 per dimension
  std::vector<Eigen::MatrixXd> dR;      // -sqdiff_k o R (nugget term is constant in theta)

  DerivativeContext(const Dataset& data, RegressionBasis basis, const Theta& theta)
      : fit(fit_given_theta(data, basis, theta)) {
    const Eigen::MatrixXd& X = data.normalized_points();
    const Eigen::Index n = X.rows();
    const Eigen::Index d = X.cols();
    Rbare = correlation_matrix(theta, X);
    const auto& L = fit.corr_factor;
    Rinv = L.transpose().triangularView<Eigen::Upper>().solve(
        L.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd::Identity(n, n)));
    F = design_matrix(basis, X);
    sqdiff.reserve(d);
    dR.reserve(d);
    for (Eigen::Index k = 0; k < d; ++k) {
      Eigen::MatrixXd s(n, n);
      for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) {
          const double diff = X(a, k) - X(b, k);
          s(a, b) = diff * diff;
        }
      dR.push_back((-s.array() * Rbare.array()).matrix());
      sqdiff.push_back(std::move(s));
    }
  }
};

}  // namespace

Eigen::VectorXd likelihood_gradient(const Dataset& data, RegressionBasis basis,
                                    const Theta& theta) {
  DerivativeContext ctx(data, basis, theta);
  const Eigen::Index d = theta.dim();
  const Eigen::VectorXd& gamma = ctx.fit.gamma_star;
  Eigen::VectorXd g(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double trace = (ctx.Rinv.array() * ctx.dR[i].array()).sum();
    const double quad = gamma.dot(ctx.dR[i] * gamma);
    g[i] = 0.5 * trace - 0.5 * quad / ctx.fit.sigma2;
  }
  return g;
}

Eigen::MatrixXd likelihood_hessian(const Dataset& data, RegressionBasis basis,
                                   const Theta& theta) {
  DerivativeContext ctx(data, basis, theta);
  const std::size_t d = static_cast<std::size_t>(theta.dim());
  const double nd = static_cast<double>(data.n());
  const double s2 = ctx.fit.sigma2;
  const Eigen::VectorXd& gamma = ctx.fit.gamma_star;

  std::vector<Eigen::MatrixXd> Z(d);  // R^-1 dR_i
  std::vector<Eigen::VectorXd> u(d);  // dR_i gamma
  std::vector<Eigen::VectorXd> v(d);  // R^-1 dR_i gamma
  std::vector<Eigen::VectorXd> a(d);  // F' R^-1 dR_i gamma
  std::vector<double> q(d);           // gamma' dR_i gamma
  for (std::size_t i = 0; i < d; ++i) {
    Z[i] = ctx.Rinv * ctx.dR[i];
    u[i] = ctx.dR[i] * gamma;
    v[i] = ctx.Rinv * u[i];
    a[i] = ctx.F.transpose() * v[i];
    q[i] = gamma.dot(u[i]);
  }

  // Gram factor for the (F' R^-1 F)^-1 chain term from the profiled beta-hat.
  const Eigen::MatrixXd Ft = ctx.fit.corr_factor.triangularView<Eigen::Lower>().solve(ctx.F);
  Eigen::LLT<Eigen::MatrixXd> gram(Eigen::MatrixXd(Ft.transpose() * Ft));

  Eigen::MatrixXd H(theta.dim(), theta.dim());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const Eigen::MatrixXd d2R =
          (ctx.sqdiff[i].array() * ctx.sqdiff[j].array() * ctx.Rbare.array()).matrix();
      const double tr_d2 = (ctx.Rinv.array() * d2R.array()).sum();
      const double tr_zz = (Z[i].array() * Z[j].transpose().array()).sum();
      const double s_ij = u[i].dot(v[j]);
      const double u_ij = gamma.dot(d2R * gamma);
      const double w_ij = a[i].dot(gram.solve(a[j]));
      const double h = 0.5 * (tr_d2 - tr_zz) + s_ij / s2 - 0.5 * u_ij / s2 - w_ij / s2 -
                       q[i] * q[j] / (2.0 * nd * s2 * s2);
      H(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = h;
      H(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = h;
    }
  }
  return H;
}

SpectrumResult hessian_spectrum(const Dataset& data, RegressionBasis basis, const Theta& theta) {
  const Eigen::MatrixXd H = likelihood_hessian(data, basis, theta);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(H);
  Eigen::VectorXd sv = svd.singularValues();
  const double smallest = sv[sv.size() - 1];
  const double ratio =
      smallest > 0.0 ? sv[0] / smallest : std::numeric_limits<double>::infinity();
  return {std::move(sv), ratio};
}

}  // namespace trk
