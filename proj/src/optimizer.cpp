#include "trk/optimizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "trk/csv.hpp"
#include "trk/errors.hpp"

namespace trk {

Eigen::VectorXd FitOptions::initial_theta(Eigen::Index dim) const {
  if (theta_init.size() == 0) return Eigen::VectorXd::Constant(dim, theta_init_scalar);
  if (theta_init.size() != dim)
    throw std::invalid_argument("FitOptions: theta_init dimension mismatch");
  return theta_init;
}

void FitOptions::validate(Eigen::Index dim) const {
  if (!(theta_lo > 0.0) || !(theta_lo < theta_hi))
    throw std::invalid_argument("FitOptions: need 0 < theta_lo < theta_hi");
  if (max_iters < 1) throw std::invalid_argument("FitOptions: max_iters >= 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("FitOptions: epsilon > 0");
  if (!(step_expand > 1.0)) throw std::invalid_argument("FitOptions: step_expand > 1");
  if (!(step_shrink > 0.0 && step_shrink < 1.0))
    throw std::invalid_argument("FitOptions: step_shrink in (0,1)");
  const Eigen::VectorXd t0 = initial_theta(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (!(t0[k] >= theta_lo && t0[k] <= theta_hi))
      throw std::invalid_argument("FitOptions: theta_init outside bounds");
  }
}

std::string stop_reason_name(StopReason value) {
  switch (value) {
    case StopReason::epsilon: return "epsilon";
    case StopReason::step: return "step";
    case StopReason::max_iters: return "max_iters";
  }
  return "max_iters";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Objective in log10(theta) coordinates; infeasible factorizations score +inf
// so the search steps around them.
class LogObjective {
public:
  LogObjective(const Dataset& data, RegressionBasis basis, const PenaltySpec& spec,
               const FitOptions& opts)
      : data_(data), basis_(basis), spec_(spec), theta_lo_(opts.theta_lo),
        theta_hi_(opts.theta_hi), lo_(std::log10(opts.theta_lo)), hi_(std::log10(opts.theta_hi)) {}

  Theta theta_at(const Eigen::VectorXd& z) const {
    Eigen::VectorXd values(z.size());
    // Clamp in theta space as well: the log10/pow round trip can land a hair
    // outside the box.
    for (Eigen::Index k = 0; k < z.size(); ++k)
      values[k] = std::min(std::max(std::pow(10.0, z[k]), theta_lo_), theta_hi_);
    return Theta(std::move(values), theta_lo_, theta_hi_);
  }

  double operator()(const Eigen::VectorXd& z) {
    ++evaluations;
    try {
      return trk_objective(data_, basis_, theta_at(z), spec_);
    } catch (const IllConditionedError&) {
      return kInf;
    } catch (const SingularRegressionError&) {
      return kInf;
    }
  }

  Eigen::VectorXd clip(Eigen::VectorXd z) const {
    for (Eigen::Index k = 0; k < z.size(); ++k) z[k] = std::min(std::max(z[k], lo_), hi_);
    return z;
  }

  double log_lo() const { return lo_; }
  double log_hi() const { return hi_; }

  long evaluations = 0;

private:
  const Dataset& data_;
  RegressionBasis basis_;
  PenaltySpec spec_;
  double theta_lo_, theta_hi_;
  double lo_, hi_;
};

}  // namespace

FitResult fit_trk(const Dataset& data, RegressionBasis basis, const PenaltySpec& spec,
                  const FitOptions& opts) {
  opts.validate(data.dim());
  const Eigen::Index d = data.dim();
  LogObjective psi(data, basis, spec, opts);

  Eigen::VectorXd base = psi.clip(opts.initial_theta(d).array().log10().matrix());
  double f_base = psi(base);

  Eigen::VectorXd best = base;
  double f_best = f_base;

  FitTrace trace;
  trace.rows.push_back({0, psi.theta_at(base).values, f_base, f_best});

  // Greedy coordinate exploration: try +step then -step in each dimension,
  // keeping any strict improvement before moving on to the next coordinate.
  const auto explore = [&](Eigen::VectorXd z, double fz, double step) {
    for (Eigen::Index k = 0; k < d; ++k) {
      for (double sign : {+1.0, -1.0}) {
        Eigen::VectorXd zt = z;
        zt[k] = std::min(std::max(zt[k] + sign * step, psi.log_lo()), psi.log_hi());
        if (zt[k] == z[k]) continue;
        const double ft = psi(zt);
        if (ft < fz) {
          z = zt;
          fz = ft;
          break;
        }
      }
    }
    return std::make_pair(z, fz);
  };

  double step = opts.step_init;
  trace.reason = StopReason::max_iters;
  for (int iter = 1; iter <= opts.max_iters; ++iter) {
    const double prev_best = f_best;
    auto [x, fx] = explore(base, f_base, step);
    if (fx < f_base) {
      // Pattern move through the improved point, then explore around it.
      const Eigen::VectorXd pattern = psi.clip(base + opts.step_expand * (x - base));
      const double f_pattern = psi(pattern);
      auto [x2, fx2] = explore(pattern, f_pattern, step);
      if (fx2 < fx) {
        base = x2;
        f_base = fx2;
      } else {
        base = x;
        f_base = fx;
      }
      if (f_base < f_best) {
        best = base;
        f_best = f_base;
      }
      trace.rows.push_back({iter, psi.theta_at(base).values, f_base, f_best});
      const double decrease = (prev_best - f_best) / std::max(1.0, std::abs(prev_best));
      if (decrease > 0.0 && decrease < opts.epsilon) {
        trace.reason = StopReason::epsilon;
        break;
      }
    } else {
      // Failed cycle: refine the mesh.
      trace.rows.push_back({iter, psi.theta_at(base).values, f_base, f_best});
      step *= opts.step_shrink;
      if (step < opts.min_step) {
        trace.reason = StopReason::step;
        break;
      }
    }
  }
  trace.evaluations = psi.evaluations;

  if (!std::isfinite(f_best))
    throw FitFailedError("fit_trk: objective infeasible at every visited theta");

  return {fit_given_theta(data, basis, psi.theta_at(best)), std::move(trace)};
}

FitResult fit_uk(const Dataset& data, RegressionBasis basis, const FitOptions& opts) {
  return fit_trk(data, basis, PenaltySpec::none(), opts);
}

void write_trace_csv(const FitTrace& trace, const std::string& path) {
  csv::Writer out(path);
  if (trace.rows.empty()) return;
  std::vector<std::string> header{"iter"};
  for (Eigen::Index k = 0; k < trace.rows.front().theta.size(); ++k)
    header.push_back("theta_" + std::to_string(k + 1));
  header.emplace_back("objective");
  header.emplace_back("best_objective");
  out.row(header);
  for (const auto& row : trace.rows) {
    std::vector<std::string> fields{std::to_string(row.iter)};
    for (Eigen::Index k = 0; k < row.theta.size(); ++k)
      fields.push_back(csv::format_double(row.theta[k]));
    fields.push_back(csv::format_double(row.objective));
    fields.push_back(csv::format_double(row.best_objective));
    out.row(fields);
  }
}

}  // namespace trk
