#include "oscnet/potential.hpp"

#include <cmath>

#include "oscnet/error.hpp"

namespace oscnet {

PotentialParams make_potential(double a, double b) {
  if (!(b > 0.0)) raise(errc::invalid_b, "quartic coefficient b must be > 0");
  PotentialParams params;
  params.a = a;
  params.b = b;
  params.c0 = a >= 0.0 ? 0.0 : a * a / (4.0 * b);
  return params;
}

double potential(const PotentialParams& params, double sq_norm) {
  if (sq_norm < 0.0) raise(errc::negative_sq_norm, "|psi|^2 must be >= 0");
  return params.a * sq_norm + params.b * sq_norm * sq_norm + params.c0;
}

double ground_state(const PotentialParams& params) {
  if (!(params.b > 0.0)) raise(errc::invalid_b, "quartic coefficient b must be > 0");
  if (params.a >= 0.0) return 0.0;
  return std::sqrt(-params.a / (2.0 * params.b));
}

ModeAmplitude make_mode_amplitude(Complex psi_plus, Complex psi_minus) {
  ModeAmplitude mode;
  mode.psi_plus = psi_plus;
  mode.psi_minus = psi_minus;
  mode.sq_norm = std::norm(psi_plus) + std::norm(psi_minus);
  return mode;
}

}  // namespace oscnet
