#pragma once

#include "oscnet/types.hpp"

namespace oscnet {

/// Doubled state over n nodes: a complex 2n-vector in interleaved (node-major)
/// layout. Components 2i and 2i+1 hold node i's (+, -) pair.
using DoubledState = ComplexVector;

/// x_hat = x_plus (x) (1,0)^T + x_minus (x) (0,1)^T in interleaved layout.
DoubledState assemble_state(const ComplexVector& x_plus, const ComplexVector& x_minus);

ComplexVector plus_branch(const DoubledState& x_hat);
ComplexVector minus_branch(const DoubledState& x_hat);

/// Projection to node space: component i is x_hat[2i] + x_hat[2i+1].
ComplexVector project_state(const DoubledState& x_hat);

/// y = (M (x) m) x_hat without materializing the 2n x 2n product: with the
/// interleaved state viewed as an n x 2 matrix X, y = vec(M * X * m^T).
DoubledState apply_pair_op(const Matrix& M, const Matrix2& m, const DoubledState& x_hat);

}  // namespace oscnet
