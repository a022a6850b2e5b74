#include "oscnet/state.hpp"

#include "oscnet/error.hpp"

namespace oscnet {

DoubledState assemble_state(const ComplexVector& x_plus, const ComplexVector& x_minus) {
  if (x_plus.size() != x_minus.size())
    raise(errc::dimension_mismatch, "branch vectors must have equal length");
  DoubledState x(2 * x_plus.size());
  for (Index i = 0; i < x_plus.size(); ++i) {
    x[2 * i] = x_plus[i];
    x[2 * i + 1] = x_minus[i];
  }
  return x;
}

ComplexVector plus_branch(const DoubledState& x_hat) {
  return Eigen::Map<const ComplexVector, 0, Eigen::InnerStride<2>>(x_hat.data(),
                                                                   x_hat.size() / 2);
}

ComplexVector minus_branch(const DoubledState& x_hat) {
  return Eigen::Map<const ComplexVector, 0, Eigen::InnerStride<2>>(x_hat.data() + 1,
                                                                   x_hat.size() / 2);
}

ComplexVector project_state(const DoubledState& x_hat) {
  if (x_hat.size() % 2 != 0)
    raise(errc::dimension_mismatch, "doubled state must have even length");
  const Index n = x_hat.size() / 2;
  ComplexVector x(n);
  for (Index i = 0; i < n; ++i) x[i] = x_hat[2 * i] + x_hat[2 * i + 1];
  return x;
}

DoubledState apply_pair_op(const Matrix& M, const Matrix2& m, const DoubledState& x_hat) {
  const Index n = M.rows();
  if (M.cols() != n || x_hat.size() != 2 * n)
    raise(errc::dimension_mismatch, "apply_pair_op: state length must be 2 * rows(M)");
  using Pairs = Eigen::Matrix<double, Eigen::Dynamic, 2>;
  Pairs x_re(n, 2), x_im(n, 2);
  for (Index i = 0; i < n; ++i) {
    x_re(i, 0) = x_hat[2 * i].real();
    x_re(i, 1) = x_hat[2 * i + 1].real();
    x_im(i, 0) = x_hat[2 * i].imag();
    x_im(i, 1) = x_hat[2 * i + 1].imag();
  }
  const Pairs y_re = M * x_re * m.transpose();
  const Pairs y_im = M * x_im * m.transpose();
  DoubledState y(2 * n);
  for (Index i = 0; i < n; ++i) {
    y[2 * i] = Complex(y_re(i, 0), y_im(i, 0));
    y[2 * i + 1] = Complex(y_re(i, 1), y_im(i, 1));
  }
  return y;
}

}  // namespace oscnet
