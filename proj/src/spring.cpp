#include "oscnet/spring.hpp"

#include <Eigen/Cholesky>

#include <string>

#include "oscnet/error.hpp"

namespace oscnet {

namespace {

void validate(const SpringChain& chain) {
  if (chain.n < 1) raise(errc::invalid_params, "spring chain needs at least one mass");
  if (chain.spring_constants.size() != chain.n - 1)
    raise(errc::invalid_params, "expected n-1 internal spring constants");
  if (chain.natural_lengths.size() != chain.n + 1)
    raise(errc::invalid_params, "expected n+1 natural lengths");
  if (chain.spring_constants.size() > 0 && chain.spring_constants.minCoeff() <= 0.0)
    raise(errc::invalid_params, "spring constants must be > 0");
  if (chain.natural_lengths.minCoeff() <= 0.0)
    raise(errc::invalid_params, "natural lengths must be > 0");
  if (!(chain.wall_stiffness > 0.0)) raise(errc::invalid_params, "wall stiffness must be > 0");
  if (!(chain.wall_gap > 0.0)) raise(errc::invalid_params, "wall gap must be > 0");
}

// Force balance for the chain, optionally with one internal spring removed.
// Spring j in 0..n joins mass j-1 and mass j, where mass -1 is the left wall
// (position 0) and mass n the right wall (position wall_gap).
Vector solve_positions(const SpringChain& chain, int skip_spring) {
  const int n = chain.n;
  Matrix K = Matrix::Zero(n, n);
  Vector f = Vector::Zero(n);
  for (int j = 0; j <= n; ++j) {
    if (j == skip_spring) continue;
    const double k = (j == 0 || j == n) ? chain.wall_stiffness : chain.spring_constants[j - 1];
    const double rest = chain.natural_lengths[j];
    const int a = j - 1;
    const int b = j;
    if (a < 0) {  // left anchor
      K(b, b) += k;
      f(b) += k * rest;
    } else if (b >= n) {  // right anchor
      K(a, a) += k;
      f(a) += k * (chain.wall_gap - rest);
    } else {
      K(a, a) += k;
      K(b, b) += k;
      K(a, b) -= k;
      K(b, a) -= k;
      f(a) -= k * rest;
      f(b) += k * rest;
    }
  }
  Eigen::LDLT<Matrix> ldlt(K);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
    raise(errc::singular_system, "spring system is singular; wall anchoring violated");
  return ldlt.solve(f);
}

}  // namespace

SpringChain SpringChain::uniform(int n, double stiffness, double natural_length,
                                 double wall_gap) {
  SpringChain chain;
  chain.n = n;
  chain.spring_constants = Vector::Constant(std::max(n - 1, 0), stiffness);
  chain.natural_lengths = Vector::Constant(n + 1, natural_length);
  chain.wall_stiffness = stiffness;
  chain.wall_gap = wall_gap;
  return chain;
}

SpringEquilibrium spring_equilibrium(const SpringChain& chain, std::optional<int> cut_after) {
  validate(chain);
  SpringEquilibrium eq;
  eq.uncut = solve_positions(chain, -1);
  if (!cut_after) return eq;

  const int c = *cut_after;
  if (c < 0 || c > chain.n - 2)
    raise(errc::index_out_of_range,
          "cut_after must name an internal spring in [0, " + std::to_string(chain.n - 2) + "]");
  eq.cut_after = c;
  eq.cut = solve_positions(chain, c + 1);  // spring c+1 joins masses c and c+1

  const auto segment_mean = [](const Vector& q, int begin, int end) {
    return q.segment(begin, end - begin).mean();
  };
  eq.left_mean_shift = segment_mean(eq.cut, 0, c + 1) - segment_mean(eq.uncut, 0, c + 1);
  eq.right_mean_shift =
      segment_mean(eq.cut, c + 1, chain.n) - segment_mean(eq.uncut, c + 1, chain.n);
  return eq;
}

}  // namespace oscnet
