#pragma once

#include <Eigen/Dense>
#include <string>

namespace trk {

enum class BasisKind { constant, linear };

struct RegressionBasis {
  BasisKind kind = BasisKind::linear;

  Eigen::Index p(Eigen::Index dim) const { return kind == BasisKind::constant ? 1 : dim + 1; }
};

RegressionBasis parse_basis(const std::string& name);
std::string basis_name(RegressionBasis basis);

/// n x p design matrix: a column of ones, plus the coordinates for the linear
/// basis. Throws when p > n (GLS underdetermined).
Eigen::MatrixXd design_matrix(RegressionBasis basis, const Eigen::MatrixXd& X);

/// Single basis row f(x)^T.
Eigen::RowVectorXd basis_row(RegressionBasis basis, const Eigen::VectorXd& x);

}  // namespace trk
