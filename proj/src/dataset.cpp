#include "trk/dataset.hpp"

#include <cmath>
#include <stdexcept>

#include "trk/csv.hpp"

namespace trk {

namespace {

constexpr double kDuplicateTol = 1e-12;

Affine column_transform(const Eigen::VectorXd& column, Normalize mode) {
  if (mode == Normalize::none) return {0.0, 1.0};
  const double mean = column.mean();
  const auto n = static_cast<double>(column.size());
  const double var = (column.array() - mean).square().sum() / (n - 1.0);
  const double sd = std::sqrt(var);
  return {mean, sd > 0.0 ? sd : 1.0};
}

}  // namespace

Dataset::Dataset(Eigen::MatrixXd points, Eigen::VectorXd responses,
                 std::vector<std::pair<double, double>> bounds, Normalize mode)
    : points_(std::move(points)), responses_(std::move(responses)),
      bounds_(std::move(bounds)), mode_(mode) {
  const Eigen::Index n = points_.rows();
  const Eigen::Index d = points_.cols();
  if (n < 2) throw std::invalid_argument("Dataset: need at least 2 points");
  if (d < 1) throw std::invalid_argument("Dataset: need at least 1 dimension");
  if (responses_.size() != n)
    throw std::invalid_argument("Dataset: responses length must equal point count");

  if (bounds_.empty()) {
    bounds_.reserve(d);
    for (Eigen::Index k = 0; k < d; ++k) {
      double lo = points_.col(k).minCoeff();
      double hi = points_.col(k).maxCoeff();
      if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
      }
      bounds_.emplace_back(lo, hi);
    }
  }
  if (static_cast<Eigen::Index>(bounds_.size()) != d)
    throw std::invalid_argument("Dataset: bounds count must equal dimension");
  for (const auto& [lo, hi] : bounds_) {
    if (!(lo < hi)) throw std::invalid_argument("Dataset: bounds require low < high");
  }

  input_transform_.reserve(d);
  points_norm_.resize(n, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const Affine t = column_transform(points_.col(k), mode_);
    input_transform_.push_back(t);
    points_norm_.col(k) = (points_.col(k).array() - t.shift) / t.scale;
  }
  output_transform_ = column_transform(responses_, mode_);
  responses_norm_ = (responses_.array() - output_transform_.shift) / output_transform_.scale;

  // Duplicate rows make the correlation matrix exactly singular.
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if ((points_norm_.row(i) - points_norm_.row(j)).norm() < kDuplicateTol)
        throw std::invalid_argument("Dataset: duplicate points (rows " + std::to_string(i) +
                                    " and " + std::to_string(j) + ")");
    }
  }
}

Eigen::VectorXd Dataset::normalize_point(const Eigen::VectorXd& raw) const {
  if (raw.size() != dim()) throw std::invalid_argument("Dataset: point dimension mismatch");
  Eigen::VectorXd out(raw.size());
  for (Eigen::Index k = 0; k < raw.size(); ++k) out[k] = input_transform_[k].forward(raw[k]);
  return out;
}

Dataset Dataset::subset(const std::vector<int>& rows) const {
  Eigen::MatrixXd pts(static_cast<Eigen::Index>(rows.size()), dim());
  Eigen::VectorXd rsp(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    pts.row(static_cast<Eigen::Index>(i)) = points_.row(rows[i]);
    rsp[static_cast<Eigen::Index>(i)] = responses_[rows[i]];
  }
  return Dataset(std::move(pts), std::move(rsp), bounds_, mode_);
}

Dataset Dataset::load_csv(const std::string& path, Normalize mode) {
  const auto table = csv::read_table(path);
  if (table.header.size() < 2)
    throw std::runtime_error("Dataset: CSV needs x1..xD,y columns");
  if (table.header.back() != "y")
    throw std::runtime_error("Dataset: CSV last column must be 'y'");
  const auto n = static_cast<Eigen::Index>(table.rows.size());
  const auto d = static_cast<Eigen::Index>(table.header.size()) - 1;
  Eigen::MatrixXd pts(n, d);
  Eigen::VectorXd rsp(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < d; ++k) pts(i, k) = table.rows[i][k];
    rsp[i] = table.rows[i][d];
  }
  return Dataset(std::move(pts), std::move(rsp), {}, mode);
}

void Dataset::save_csv(const std::string& path) const {
  csv::Writer out(path);
  std::vector<std::string> header;
  for (Eigen::Index k = 0; k < dim(); ++k) header.push_back("x" + std::to_string(k + 1));
  header.push_back("y");
  out.row(header);
  for (Eigen::Index i = 0; i < n(); ++i) {
    std::vector<std::string> row;
    for (Eigen::Index k = 0; k < dim(); ++k) row.push_back(csv::format_double(points_(i, k)));
    row.push_back(csv::format_double(responses_[i]));
    out.row(row);
  }
}

}  // namespace trk
