#include "oscnet/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "oscnet/error.hpp"

namespace oscnet {

namespace {

struct ResolvedTols {
  double zero_tol;
  double complex_tol;
  double reconstruct_tol;
};

ResolvedTols resolve(const DecomposeOptions& opts, double scale, Index n) {
  ResolvedTols t{};
  t.zero_tol = opts.zero_tol >= 0.0 ? opts.zero_tol : 1e-9 * scale;
  t.complex_tol = opts.complex_tol >= 0.0 ? opts.complex_tol : 1e-9 * scale;
  t.reconstruct_tol =
      opts.reconstruct_tol >= 0.0 ? opts.reconstruct_tol : 1e-8 * scale * double(n);
  return t;
}

}  // namespace

Index SpectralDecomposition::zero_mode_count() const {
  Index count = 0;
  for (Index i = 0; i < lambda.size(); ++i)
    if (lambda[i] == 0.0) ++count;
  return count;
}

SpectralDecomposition decompose(const Matrix& L, const DecomposeOptions& opts) {
  if (L.rows() != L.cols())
    raise(errc::dimension_mismatch, "decompose expects a square matrix");
  const Index n = L.rows();
  if (n == 0) raise(errc::invalid_size, "decompose expects a nonempty matrix");

  const double scale = max_abs(L);
  const ResolvedTols tols = resolve(opts, scale, n);

  SpectralDecomposition dec;
  dec.L = L;
  dec.zero_tol = tols.zero_tol;
  dec.symmetric =
      max_abs(L - L.transpose()) <= opts.symmetry_tol * std::max(scale, 1.0);

  Vector lambda(n);
  Matrix P(n, n);

  if (dec.symmetric) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(L);
    if (solver.info() != Eigen::Success)
      raise(errc::not_diagonalizable, "self-adjoint eigensolver did not converge");
    lambda = solver.eigenvalues();  // already ascending
    P = solver.eigenvectors();
    dec.cond_P = 1.0;
    dec.P_inv = P.transpose();
  } else {
    Eigen::EigenSolver<Matrix> solver(L);
    if (solver.info() != Eigen::Success)
      raise(errc::not_diagonalizable, "eigensolver did not converge");
    const ComplexVector values = solver.eigenvalues();
    const double worst_imag = values.imag().cwiseAbs().maxCoeff();
    if (worst_imag > tols.complex_tol)
      raise(errc::complex_spectrum,
            "eigenvalue imaginary part " + std::to_string(worst_imag) +
                " exceeds complex_tol " + std::to_string(tols.complex_tol));
    // Conjugate pairs within complex_tol land here with their real pair
    // basis (Re v, Im v); a defective basis is caught by the cond check.
    Matrix basis = solver.pseudoEigenvectors();

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
      return values[a].real() < values[b].real();
    });
    for (Index i = 0; i < n; ++i) {
      lambda[i] = values[order[std::size_t(i)]].real();
      P.col(i) = basis.col(order[std::size_t(i)]);
    }

    Eigen::BDCSVD<Matrix> svd(P);
    const double smin = svd.singularValues()(n - 1);
    dec.cond_P = smin > 0.0 ? svd.singularValues()(0) / smin
                            : std::numeric_limits<double>::infinity();
    if (!(dec.cond_P <= opts.cond_max))
      raise(errc::not_diagonalizable,
            "eigenvector matrix condition number " + std::to_string(dec.cond_P) +
                " exceeds cond_max");
    dec.P_inv = P.inverse();
  }

  const double min_lambda = lambda.minCoeff();
  if (min_lambda < -tols.zero_tol)
    raise(errc::negative_eigenvalue,
          "eigenvalue " + std::to_string(min_lambda) + " below -zero_tol; "
          "frequencies sqrt(lambda) are undefined");

  // Snap the kernel to exact zeros so Omega^2 = Lambda holds coefficient-wise.
  for (Index i = 0; i < n; ++i)
    if (std::abs(lambda[i]) <= tols.zero_tol) lambda[i] = 0.0;

  dec.P = P;
  dec.lambda = lambda;
  dec.omega = lambda.array().sqrt();
  dec.mho = Vector::Zero(n);
  for (Index i = 0; i < n; ++i)
    if (lambda[i] > 0.0) dec.mho[i] = 1.0 / dec.omega[i];

  const double reconstruct_err =
      max_abs(dec.P * dec.lambda.asDiagonal() * dec.P_inv - L);
  if (reconstruct_err > tols.reconstruct_tol)
    raise(errc::not_diagonalizable,
          "reconstruction error " + std::to_string(reconstruct_err) +
              " exceeds tolerance " + std::to_string(tols.reconstruct_tol));
  return dec;
}

bool pattern_matches(const Matrix& mat, const Matrix& L, double pattern_tol) {
  if (mat.rows() != L.rows() || mat.cols() != L.cols() || mat.rows() != mat.cols())
    raise(errc::dimension_mismatch, "pattern_matches expects square matrices of equal size");
  for (Index i = 0; i < L.rows(); ++i)
    for (Index j = 0; j < L.cols(); ++j) {
      if (i == j || L(i, j) != 0.0) continue;
      if (std::abs(mat(i, j)) > pattern_tol) return false;
    }
  return true;
}

SqrtLaplacian sqrt_laplacian(const SpectralDecomposition& dec, double pattern_tol) {
  SqrtLaplacian root;
  root.S = dec.P * dec.omega.asDiagonal() * dec.P_inv;
  const double tol = pattern_tol >= 0.0 ? pattern_tol : 1e-9 * max_abs(root.S);
  root.pattern_dense = !pattern_matches(root.S, dec.L, tol);
  return root;
}

}  // namespace oscnet
