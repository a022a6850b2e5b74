#pragma once

#include "oscnet/generators.hpp"
#include "oscnet/graph.hpp"
#include "oscnet/spectral.hpp"
#include "oscnet/state.hpp"

namespace oscnet {

/// The 2n x 2n generator of the doubled first-order dynamics,
///   H_hat = sqrt(D) (x) [ +1 0 ; 0 -1 ] - (sqrt(D^-1) A) (x) a_hat
/// together with its 2x2-block nonzero pattern (diagonal blocks always
/// count as present; off-diagonal blocks follow the structural zeros of A,
/// which coincide with those of L).
struct Hamiltonian {
  Matrix H_hat;
  BoolMatrix block_pattern;
  LaplacianBundle bundle;

  Index nodes() const { return block_pattern.rows(); }
};

/// Builds H_hat both as defined above and through the equivalent
/// rearrangement H (x) a_hat + sqrt(D) (x) b_hat, and verifies the two
/// constructions agree to 1e-12 relative.
Hamiltonian build_hamiltonian(const LaplacianBundle& bundle);

/// Closed-form power of H_hat:
///   H_hat^(2k)   = sqrt(D^-1) L^k sqrt(D) (x) ab + L^k (x) ba
///   H_hat^(2k+1) = H L^k (x) a_hat + L^k sqrt(D) (x) b_hat
/// with L^k evaluated spectrally from dec. k must be >= 0.
Matrix hamiltonian_power(const LaplacianBundle& bundle,
                         const SpectralDecomposition& dec, int k);

/// 2x2-block nonzero pattern of a 2n x 2n matrix: block (i, j) counts as
/// nonzero when any of its four entries exceeds tol in magnitude.
BoolMatrix block_nonzero_pattern(const Matrix& m, double tol);

}  // namespace oscnet
