#include "trk/penalty.hpp"

#include <cmath>
#include <stdexcept>

namespace trk {

PenaltySpec PenaltySpec::none() { return {}; }

PenaltySpec PenaltySpec::lasso(double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("lasso coefficient must be >= 0");
  PenaltySpec s;
  s.kind = PenaltyKind::lasso;
  s.lambda = lambda;
  return s;
}

PenaltySpec PenaltySpec::ridge(double mu) {
  if (mu < 0.0) throw std::invalid_argument("ridge coefficient must be >= 0");
  PenaltySpec s;
  s.kind = PenaltyKind::ridge;
  s.mu = mu;
  return s;
}

PenaltySpec PenaltySpec::elastic_net(double gamma, double alpha) {
  if (gamma < 0.0) throw std::invalid_argument("elastic-net coefficient must be >= 0");
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("elastic-net alpha must be in [0,1]");
  PenaltySpec s;
  s.kind = PenaltyKind::elastic_net;
  s.gamma = gamma;
  s.alpha = alpha;
  return s;
}

double PenaltySpec::coefficient() const {
  switch (kind) {
    case PenaltyKind::lasso: return lambda;
    case PenaltyKind::ridge: return mu;
    case PenaltyKind::elastic_net: return gamma;
    case PenaltyKind::none: return 0.0;
  }
  return 0.0;
}

PenaltyKind parse_penalty_kind(const std::string& name) {
  if (name == "none") return PenaltyKind::none;
  if (name == "lasso") return PenaltyKind::lasso;
  if (name == "ridge") return PenaltyKind::ridge;
  if (name == "elastic-net" || name == "elastic_net") return PenaltyKind::elastic_net;
  throw std::invalid_argument("unknown penalty '" + name + "' (none|lasso|ridge|elastic-net)");
}

std::string penalty_kind_name(PenaltyKind kind) {
  switch (kind) {
    case PenaltyKind::none: return "none";
    case PenaltyKind::lasso: return "lasso";
    case PenaltyKind::ridge: return "ridge";
    case PenaltyKind::elastic_net: return "elastic-net";
  }
  return "none";
}

double penalty(const PenaltySpec& spec, const Eigen::VectorXd& theta) {
  switch (spec.kind) {
    case PenaltyKind::none:
      return 0.0;
    case PenaltyKind::lasso:
      return spec.lambda * theta.array().abs().sum();
    case PenaltyKind::ridge:
      return spec.mu * theta.squaredNorm();
    case PenaltyKind::elastic_net:
      return spec.gamma *
             (spec.alpha * theta.array().abs().sum() + (1.0 - spec.alpha) * theta.squaredNorm());
  }
  return 0.0;
}

}  // namespace trk
