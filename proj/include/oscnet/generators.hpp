#pragma once

#include "oscnet/types.hpp"

namespace oscnet {

/// The 2x2 generator pair of the doubled-state formulation together with
/// their products. All entries are multiples of 1/2, so the anticommutation
/// identities below hold exactly in binary floating point:
///   {a, b} = e,  a^2 = b^2 = 0,  aba = a,  bab = b,
///   (ab)^2 = ab,  (ba)^2 = ba.
struct GeneratorAlgebra {
  Matrix2 a_hat;  //  1/2 [ +1 +1 ; -1 -1 ]
  Matrix2 b_hat;  //  1/2 [ +1 -1 ; +1 -1 ]
  Matrix2 e_hat;  //  identity
  Matrix2 ab;     //  a_hat * b_hat = 1/2 [ +1 -1 ; -1 +1 ]
  Matrix2 ba;     //  b_hat * a_hat = 1/2 [ +1 +1 ; +1 +1 ]

  static const GeneratorAlgebra& canonical();
};

/// {x, y} = xy + yx.
template <typename DerivedX, typename DerivedY>
typename DerivedX::PlainObject anticommutator(const Eigen::MatrixBase<DerivedX>& x,
                                              const Eigen::MatrixBase<DerivedY>& y) {
  return x.derived() * y.derived() + y.derived() * x.derived();
}

}  // namespace oscnet
