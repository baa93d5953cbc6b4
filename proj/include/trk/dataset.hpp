#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace trk {

/// Per-dimension affine record: normalized = (raw - shift) / scale.
struct Affine {
  double shift = 0.0;
  double scale = 1.0;

  double forward(double raw) const { return (raw - shift) / scale; }
  double inverse(double normalized) const { return shift + scale * normalized; }
};

enum class Normalize { zscore, none };

/// Immutable training data: raw design matrix and responses plus the
/// normalization transforms everything downstream works in. Correlation
/// hyperparameters, penalties, and objectives all live in normalized
/// coordinates; predictions are mapped back to raw units.
class Dataset {
public:
  Dataset(Eigen::MatrixXd points, Eigen::VectorXd responses,
          std::vector<std::pair<double, double>> bounds = {},
          Normalize mode = Normalize::zscore);

  /// Reads a CSV with header x1,...,xD,y. Bounds are inferred column-wise.
  static Dataset load_csv(const std::string& path, Normalize mode = Normalize::zscore);
  void save_csv(const std::string& path) const;

  Eigen::Index n() const { return points_.rows(); }
  Eigen::Index dim() const { return points_.cols(); }

  const Eigen::MatrixXd& points() const { return points_; }
  const Eigen::VectorXd& responses() const { return responses_; }
  const Eigen::MatrixXd& normalized_points() const { return points_norm_; }
  const Eigen::VectorXd& normalized_responses() const { return responses_norm_; }
  const std::vector<Affine>& input_transform() const { return input_transform_; }
  const Affine& output_transform() const { return output_transform_; }
  const std::vector<std::pair<double, double>>& bounds() const { return bounds_; }

  Eigen::VectorXd normalize_point(const Eigen::VectorXd& raw) const;

  /// Subset by row indices, renormalized on the subset (used by CV folds).
  Dataset subset(const std::vector<int>& rows) const;
  Normalize mode() const { return mode_; }

private:
  Eigen::MatrixXd points_;
  Eigen::VectorXd responses_;
  std::vector<std::pair<double, double>> bounds_;
  Normalize mode_;
  std::vector<Affine> input_transform_;
  Affine output_transform_;
  Eigen::MatrixXd points_norm_;
  Eigen::VectorXd responses_norm_;
};

}  // namespace trk
