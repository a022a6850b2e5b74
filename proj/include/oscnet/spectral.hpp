#pragma once

#include "oscnet/types.hpp"

namespace oscnet {

struct DecomposeOptions {
  /// Eigenvalues with |lambda| <= zero_tol are snapped to exactly 0.
  /// Negative values mean "auto": 1e-9 * ||L||_max.
  double zero_tol = -1.0;
  /// Imaginary parts above this reject the spectrum as complex.
  /// Auto: 1e-9 * ||L||_max.
  double complex_tol = -1.0;
  /// Condition-number bound on the eigenvector matrix.
  double cond_max = 1e12;
  /// Bound on ||P Lambda P^-1 - L||_max. Auto: 1e-8 * ||L||_max * n.
  double reconstruct_tol = -1.0;
  /// Relative bound deciding whether to use the self-adjoint solver.
  double symmetry_tol = 1e-12;
};

/// Eigendecomposition L = P Lambda P^-1 with the derived frequency
/// diagonals. Eigenvalues are ascending (ties keep original order), kernel
/// eigenvalues are stored as exact zeros, so omega = sqrt(lambda) holds
/// coefficient-wise and mho * omega is the identity away from the kernel.
struct SpectralDecomposition {
  Matrix L;  // the matrix that was decomposed
  Matrix P;
  Matrix P_inv;
  Vector lambda;  // diagonal of Lambda
  Vector omega;   // sqrt(lambda)
  Vector mho;     // 0 on the kernel, elsewhere 1/omega
  double zero_tol = 0.0;
  double cond_P = 0.0;
  bool symmetric = false;

  Index size() const { return lambda.size(); }
  Index zero_mode_count() const;

  auto Lambda() const { return lambda.asDiagonal(); }
  auto Omega() const { return omega.asDiagonal(); }
  auto Mho() const { return mho.asDiagonal(); }
};

/// Dense eigendecomposition of a Laplacian-like matrix. Throws
/// complex_spectrum, negative_eigenvalue or not_diagonalizable when the
/// spectrum or eigenbasis falls outside what the closed-form solvers can
/// use. Symmetric inputs take the self-adjoint path, so P is orthogonal.
SpectralDecomposition decompose(const Matrix& L, const DecomposeOptions& opts = {});

struct SqrtLaplacian {
  Matrix S;  // principal square root P Omega P^-1
  bool pattern_dense = false;  // S has nonzeros where L has off-diagonal zeros
};

/// Principal square root via the decomposition. pattern_tol < 0 means
/// auto: 1e-9 * ||S||_max.
SqrtLaplacian sqrt_laplacian(const SpectralDecomposition& dec, double pattern_tol = -1.0);

/// True iff every off-diagonal structural zero of L is also a zero of mat
/// within pattern_tol, i.e. mat introduces no links absent from L.
bool pattern_matches(const Matrix& mat, const Matrix& L, double pattern_tol);

}  // namespace oscnet
