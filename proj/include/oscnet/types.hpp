#pragma once

#include <Eigen/Dense>

#include <complex>

namespace oscnet {

using Index = Eigen::Index;
using Complex = std::complex<double>;

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2d;
using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Largest absolute coefficient, 0 for empty matrices.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace oscnet
