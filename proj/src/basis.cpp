#include "trk/basis.hpp"

#include <stdexcept>

namespace trk {

RegressionBasis parse_basis(const std::string& name) {
  if (name == "constant") return {BasisKind::constant};
  if (name == "linear") return {BasisKind::linear};
  throw std::invalid_argument("unknown basis '" + name + "' (constant|linear)");
}

std::string basis_name(RegressionBasis basis) {
  return basis.kind == BasisKind::constant ? "constant" : "linear";
}

Eigen::MatrixXd design_matrix(RegressionBasis basis, const Eigen::MatrixXd& X) {
  const Eigen::Index n = X.rows();
  const Eigen::Index p = basis.p(X.cols());
  if (p > n)
    throw std::invalid_argument("design_matrix: " + std::to_string(p) + " basis functions for " +
                                std::to_string(n) + " points is underdetermined");
  Eigen::MatrixXd F(n, p);
  F.col(0).setOnes();
  if (basis.kind == BasisKind::linear) F.rightCols(X.cols()) = X;
  return F;
}

Eigen::RowVectorXd basis_row(RegressionBasis basis, const Eigen::VectorXd& x) {
  Eigen::RowVectorXd f(basis.p(x.size()));
  f[0] = 1.0;
  if (basis.kind == BasisKind::linear) f.tail(x.size()) = x.transpose();
  return f;
}

}  // namespace trk
