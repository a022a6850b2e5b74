#include "oscnet/hamiltonian.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <stdexcept>
#include <string>

#include "oscnet/error.hpp"

namespace oscnet {

const GeneratorAlgebra& GeneratorAlgebra::canonical() {
  static const GeneratorAlgebra instance = [] {
    GeneratorAlgebra g;
    g.a_hat << 0.5, 0.5, -0.5, -0.5;
    g.b_hat << 0.5, -0.5, 0.5, -0.5;
    g.e_hat = Matrix2::Identity();
    g.ab = g.a_hat * g.b_hat;
    g.ba = g.b_hat * g.a_hat;
    return g;
  }();
  return instance;
}

BoolMatrix block_nonzero_pattern(const Matrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    raise(errc::dimension_mismatch, "block_nonzero_pattern expects a square 2n x 2n matrix");
  const Index n = m.rows() / 2;
  BoolMatrix pattern(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      pattern(i, j) = max_abs(m.block<2, 2>(2 * i, 2 * j)) > tol;
  return pattern;
}

Hamiltonian build_hamiltonian(const LaplacianBundle& bundle) {
  const Index n = bundle.L.rows();
  const Vector sqrt_d = bundle.sqrt_degrees();
  const Vector inv_sqrt_d = sqrt_d.cwiseInverse();
  const auto& gen = GeneratorAlgebra::canonical();

  Matrix2 sign_split;
  sign_split << 1.0, 0.0, 0.0, -1.0;

  const Matrix sqrt_D = Matrix(sqrt_d.asDiagonal());
  const Matrix scaled_A = inv_sqrt_d.asDiagonal() * bundle.A;

  Hamiltonian ham;
  ham.bundle = bundle;
  ham.H_hat = Eigen::kroneckerProduct(sqrt_D, sign_split) -
              Eigen::kroneckerProduct(scaled_A, gen.a_hat);

  const Matrix rearranged = Eigen::kroneckerProduct(bundle.H, gen.a_hat) +
                            Eigen::kroneckerProduct(sqrt_D, gen.b_hat);
  const double deviation = max_abs(ham.H_hat - rearranged);
  if (deviation > 1e-12 * std::max(max_abs(ham.H_hat), 1.0))
    throw std::logic_error("Hamiltonian construction mismatch: " + std::to_string(deviation));

  ham.block_pattern = BoolMatrix(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      ham.block_pattern(i, j) = (i == j) || bundle.A(i, j) != 0.0;
  return ham;
}

Matrix hamiltonian_power(const LaplacianBundle& bundle, const SpectralDecomposition& dec,
                         int k) {
  if (k < 0) raise(errc::invalid_params, "hamiltonian_power expects k >= 0");
  const auto& gen = GeneratorAlgebra::canonical();
  const Vector sqrt_d = bundle.sqrt_degrees();
  const Vector inv_sqrt_d = sqrt_d.cwiseInverse();

  const int half = k / 2;
  const Vector lambda_pow =
      dec.lambda.array().pow(double(half));  // 0^0 == 1 covers k in {0, 1}
  const Matrix L_pow = dec.P * lambda_pow.asDiagonal() * dec.P_inv;

  if (k % 2 == 0) {
    const Matrix left = inv_sqrt_d.asDiagonal() * L_pow * sqrt_d.asDiagonal();
    return Eigen::kroneckerProduct(left, gen.ab) +
           Eigen::kroneckerProduct(L_pow, gen.ba);
  }
  const Matrix odd_a = bundle.H * L_pow;
  const Matrix odd_b = L_pow * sqrt_d.asDiagonal();
  return Eigen::kroneckerProduct(odd_a, gen.a_hat) +
         Eigen::kroneckerProduct(odd_b, gen.b_hat);
}

}  // namespace oscnet
