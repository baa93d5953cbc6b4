#pragma once

#include <Eigen/Dense>
#include <string>

namespace trk {

enum class PenaltyKind { none, lasso, ridge, elastic_net };

/// Penalty family and its coefficients. Only the coefficients of the active
/// kind are meaningful: lasso uses lambda, ridge uses mu, elastic-net uses
/// (gamma, alpha) with alpha in [0, 1].
struct PenaltySpec {
  PenaltyKind kind = PenaltyKind::none;
  double lambda = 0.0;
  double mu = 0.0;
  double gamma = 0.0;
  double alpha = 0.0;

  static PenaltySpec none();
  static PenaltySpec lasso(double lambda);
  static PenaltySpec ridge(double mu);
  static PenaltySpec elastic_net(double gamma, double alpha);

  /// The single coefficient of the active kind (gamma for elastic-net).
  double coefficient() const;
};

PenaltyKind parse_penalty_kind(const std::string& name);
std::string penalty_kind_name(PenaltyKind kind);

/// Sum over dimensions of the per-component penalty. Theta is positive on the
/// feasible set, so |theta| = theta throughout.
double penalty(const PenaltySpec& spec, const Eigen::VectorXd& theta);

}  // namespace trk
