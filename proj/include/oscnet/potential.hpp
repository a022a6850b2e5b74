#pragma once

#include "oscnet/types.hpp"

namespace oscnet {

/// Quartic potential V(s) = a s + b s^2 + c0 over s = |psi|^2, with c0
/// chosen so the minimum value is 0: c0 = 0 for a >= 0, a^2 / (4b) for a < 0.
struct PotentialParams {
  double a = 0.0;
  double b = 1.0;
  double c0 = 0.0;
};

/// Validates b > 0 and computes the calibration constant c0.
PotentialParams make_potential(double a, double b);

double potential(const PotentialParams& params, double sq_norm);

/// The stable |psi|: 0 for a >= 0, sqrt(|a| / (2b)) for a < 0.
double ground_state(const PotentialParams& params);

/// Two-branch amplitude of one oscillation mode.
struct ModeAmplitude {
  Complex psi_plus;
  Complex psi_minus;
  double sq_norm = 0.0;  // |psi_plus|^2 + |psi_minus|^2
};

ModeAmplitude make_mode_amplitude(Complex psi_plus, Complex psi_minus);

}  // namespace oscnet
