#include "trk/tuner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "trk/errors.hpp"
#include "trk/rng.hpp"

namespace trk {

void GscvConfig::validate() const {
  if (k < 2) throw std::invalid_argument("GscvConfig: k >= 2");
  if (!(a0 > 0.0)) throw std::invalid_argument("GscvConfig: a0 > 0");
  if (!(q > 1.0)) throw std::invalid_argument("GscvConfig: q > 1");
  if (n_terms < 1) throw std::invalid_argument("GscvConfig: n_terms >= 1");
  if (!(alpha_step > 0.0 && alpha_step <= 1.0))
    throw std::invalid_argument("GscvConfig: alpha_step in (0,1]");
}

std::vector<double> GscvConfig::coefficient_sequence() const {
  std::vector<double> seq;
  seq.reserve(static_cast<std::size_t>(n_terms));
  double value = a0;
  for (int i = 0; i < n_terms; ++i) {
    seq.push_back(value);
    value *= q;
  }
  return seq;
}

std::vector<double> GscvConfig::alpha_grid() const {
  std::vector<double> grid;
  for (double a = 0.0; a < 1.0 - 1e-12; a += alpha_step) grid.push_back(a);
  grid.push_back(1.0);  // both reduction endpoints are always present
  return grid;
}

std::vector<std::vector<int>> kfold_partition(int n, int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("kfold_partition: k >= 2");
  if (k > n) throw std::invalid_argument("kfold_partition: k must not exceed n");
  std::vector<int> indices(static_cast<std::size_t>(n));
  std::iota(indices.begin(), indices.end(), 0);
  Rng rng(derive_seed(seed, 0xf01d5));
  rng.shuffle(indices);

  std::vector<std::vector<int>> folds(static_cast<std::size_t>(k));
  const int base = n / k;
  const int remainder = n % k;
  int cursor = 0;
  for (int f = 0; f < k; ++f) {
    const int size = base + (f < remainder ? 1 : 0);
    auto& fold = folds[static_cast<std::size_t>(f)];
    fold.assign(indices.begin() + cursor, indices.begin() + cursor + size);
    std::sort(fold.begin(), fold.end());
    cursor += size;
  }
  return folds;
}

CvScore cv_score(const Dataset& data, RegressionBasis basis, const PenaltySpec& spec,
                 const FitOptions& opts, int k, std::uint64_t seed) {
  const int n = static_cast<int>(data.n());
  const auto folds = kfold_partition(n, k, seed);
  const Eigen::Index p = basis.p(data.dim());
  for (const auto& fold : folds) {
    if (n - static_cast<int>(fold.size()) < p + 1)
      throw std::invalid_argument("cv_score: a training fold retains fewer than p+1 points");
  }

  CvScore result;
  double total = 0.0;
  for (const auto& fold : folds) {
    std::vector<int> train_rows;
    train_rows.reserve(static_cast<std::size_t>(n) - fold.size());
    std::vector<bool> held(static_cast<std::size_t>(n), false);
    for (int idx : fold) held[static_cast<std::size_t>(idx)] = true;
    for (int i = 0; i < n; ++i)
      if (!held[static_cast<std::size_t>(i)]) train_rows.push_back(i);

    try {
      const Dataset train = data.subset(train_rows);
      const FitResult fit = fit_trk(train, basis, spec, opts);
      double fold_sse = 0.0;
      for (int idx : fold) {
        const double pred = predict(fit.model, data.points().row(idx).transpose());
        const double err = pred - data.responses()[idx];
        fold_sse += err * err;
      }
      total += fold_sse / static_cast<double>(fold.size());
    } catch (const std::exception& ex) {
      ++result.failed_folds;
      if (result.diagnostic.empty()) result.diagnostic = ex.what();
    }
  }
  if (result.failed_folds > 0) {
    result.value = std::numeric_limits<double>::infinity();
  } else {
    result.value = total / static_cast<double>(k);
  }
  return result;
}

PenaltySpec make_penalty(PenaltyKind kind, double coefficient, std::optional<double> alpha) {
  switch (kind) {
    case PenaltyKind::none: return PenaltySpec::none();
    case PenaltyKind::lasso: return PenaltySpec::lasso(coefficient);
    case PenaltyKind::ridge: return PenaltySpec::ridge(coefficient);
    case PenaltyKind::elastic_net:
      if (!alpha) throw std::invalid_argument("elastic-net candidate needs alpha");
      return PenaltySpec::elastic_net(coefficient, *alpha);
  }
  throw std::invalid_argument("make_penalty: bad kind");
}

PenaltySpec GscvResult::best_spec(PenaltyKind kind) const {
  return make_penalty(kind, best.coefficient, best.alpha);
}

GscvResult gscv(const Dataset& data, RegressionBasis basis, PenaltyKind kind,
                const GscvConfig& cfg, const FitOptions& opts) {
  cfg.validate();
  if (kind == PenaltyKind::none)
    throw std::invalid_argument("gscv: penalty kind must be lasso, ridge, or elastic-net");

  std::vector<GscvCandidate> candidates;
  for (double coeff : cfg.coefficient_sequence()) {
    if (kind == PenaltyKind::elastic_net) {
      for (double a : cfg.alpha_grid()) candidates.push_back({coeff, a, 0.0, true});
    } else {
      candidates.push_back({coeff, std::nullopt, 0.0, true});
    }
  }

  // One partition shared by every candidate keeps the comparison fair.
  for (auto& cand : candidates) {
    const PenaltySpec spec = make_penalty(kind, cand.coefficient, cand.alpha);
    const CvScore score = cv_score(data, basis, spec, opts, cfg.k, cfg.seed);
    cand.score = score.value;
    cand.feasible = score.failed_folds == 0;
  }

  GscvResult result;
  result.candidates = candidates;
  const GscvCandidate* best = nullptr;
  bool tied = false;
  for (const auto& cand : candidates) {
    if (!cand.feasible) continue;
    if (!best || cand.score < best->score) {
      best = &cand;
      tied = false;
    } else if (cand.score == best->score) {
      tied = true;
      // Smaller coefficient wins, then smaller alpha. Candidates are generated
      // in increasing coefficient order, so the incumbent already wins on the
      // coefficient; only the alpha ordering within a coefficient matters.
      if (cand.coefficient == best->coefficient && cand.alpha && best->alpha &&
          *cand.alpha < *best->alpha) {
        best = &cand;
      }
    }
  }
  if (!best) throw TuningFailedError("gscv: every candidate was infeasible");
  result.best = *best;
  result.ties_broken = tied;
  return result;
}

}  // namespace trk
