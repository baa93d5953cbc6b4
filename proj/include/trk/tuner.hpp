#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trk/optimizer.hpp"
#include "trk/penalty.hpp"

namespace trk {

/// Geometric-search cross-validation controls: candidate coefficients form
/// the progression a0 q^{i-1}, i = 1..n_terms; elastic-net adds an alpha grid
/// {0, h, 2h, ... <= 1} united with {1}.
struct GscvConfig {
  int k = 5;
  double a0 = 1e-5;
  double q = 3.1622776601683795;  // 10^(1/2)
  int n_terms = 20;
  double alpha_step = 0.05;
  std::uint64_t seed = 0;

  void validate() const;
  std::vector<double> coefficient_sequence() const;
  std::vector<double> alpha_grid() const;
};

/// Disjoint index folds covering 0..n-1, sizes differing by at most one;
/// assignment is a seeded shuffle, deterministic per seed.
std::vector<std::vector<int>> kfold_partition(int n, int k, std::uint64_t seed);

struct CvScore {
  double value = 0.0;  // +inf when any fold fit failed
  int failed_folds = 0;
  std::string diagnostic;
};

/// k-fold CV mean-squared error of the TRK fit under the given penalty:
/// per-fold MSE in raw output units, averaged over folds.
CvScore cv_score(const Dataset& data, RegressionBasis basis, const PenaltySpec& spec,
                 const FitOptions& opts, int k, std::uint64_t seed);

struct GscvCandidate {
  double coefficient = 0.0;
  std::optional<double> alpha;  // elastic-net only
  double score = 0.0;
  bool feasible = true;
};

struct GscvResult {
  std::vector<GscvCandidate> candidates;
  GscvCandidate best;
  bool ties_broken = false;

  PenaltySpec best_spec(PenaltyKind kind) const;
};

/// Scan the candidate grid, score each by CV, and select the minimum. Ties
/// break toward the smaller coefficient, then the smaller alpha.
GscvResult gscv(const Dataset& data, RegressionBasis basis, PenaltyKind kind,
                const GscvConfig& cfg, const FitOptions& opts);

PenaltySpec make_penalty(PenaltyKind kind, double coefficient, std::optional<double> alpha = {});

}  // namespace trk
