#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oscnet/hamiltonian.hpp"
#include "oscnet/spectral.hpp"
#include "oscnet/state.hpp"

namespace oscnet {

/// Uniform sample grid on [t0, t1].
struct TimeGrid {
  double t0 = 0.0;
  double t1 = 1.0;
  Index samples = 2;

  double dt() const { return samples > 1 ? (t1 - t0) / double(samples - 1) : 0.0; }
  Vector times() const;
};

struct TrajectoryMeta {
  std::string solver;
  std::string graph_hash;
  double dt = 0.0;           // sample spacing
  double dt_internal = 0.0;  // integrator step, 0 for closed forms
  double zero_tol = 0.0;
};

/// Time-sampled solution. For the closed-form solvers `states` holds the
/// doubled 2n-states; for the wave-equation integrator it holds stacked
/// (x; dx/dt) pairs. `projected` always holds the node-space n-vectors.
struct TrajectoryRecord {
  Vector times;
  std::vector<ComplexVector> states;
  std::vector<ComplexVector> projected;
  TrajectoryMeta meta;
};

/// Closed-form propagation of the doubled state,
///   x_hat(t) = ( sqrt(D^-1) P cos(Omega t) P^-1 sqrt(D) (x) ab
///              + P cos(Omega t) P^-1 (x) ba ) x_hat(0)
///          - i ( sqrt(D^-1) P Omega sin(Omega t) P^-1 (x) a_hat
///              + P Mho sin(Omega t) P^-1 sqrt(D) (x) b_hat ) x_hat(0),
/// evaluated independently at every sample. The Mho factor deliberately
/// annihilates kernel content in the b_hat term, so initial data with a
/// kernel velocity component evolves without the corresponding drift.
TrajectoryRecord solve_fermionic(const Hamiltonian& ham,
                                 const SpectralDecomposition& dec,
                                 const DoubledState& x_hat_0,
                                 const TimeGrid& grid);

/// Closed-form branch propagation x_pm(t) = P exp(-+ i Omega t) P^-1 x_pm(0),
/// assembled into the interleaved doubled state.
TrajectoryRecord solve_bosonic(const SpectralDecomposition& dec,
                               const ComplexVector& x_plus_0,
                               const ComplexVector& x_minus_0,
                               const TimeGrid& grid);

enum class Branch { plus, minus };

/// Max over interior samples of || +-i * d/dt x_pm - sqrt(L) x_pm || / ||x_pm||
/// with a central-difference derivative on the sample grid.
double fundamental_residual(const SpectralDecomposition& dec,
                            const TrajectoryRecord& trajectory, Branch branch);

/// Classical RK4 integration of d^2x/dt^2 = -L x as the first-order system
/// (x, v). Serves as the independent oracle for the closed forms: it touches
/// neither the decomposition nor the doubled-state machinery. Throws
/// unstable_step when dt_internal exceeds 0.1 / omega_max (omega_max from a
/// power-iteration estimate of the spectral radius of L).
TrajectoryRecord integrate_wave(const Matrix& L, const ComplexVector& x0,
                                const ComplexVector& v0, const TimeGrid& grid,
                                double dt_internal);

/// Initial data for the wave equation matching a doubled state:
/// x(0) = project(x_hat_0), v(0) = project(-i H_hat x_hat_0).
std::pair<ComplexVector, ComplexVector> wave_initial_conditions(
    const Hamiltonian& ham, const DoubledState& x_hat_0);

/// E = 1/2 ||v||^2 + 1/2 Re(x^* L x). Defined for symmetric L only.
double total_energy(const Matrix& L, const ComplexVector& x, const ComplexVector& v);

/// Max over interior samples of the second-difference residual
/// || (x(t+dt) - 2 x(t) + x(t-dt)) / dt^2 + L x(t) || / ||x(t)||
/// of the projected trajectory.
double wave_equation_residual(const Matrix& L, const TrajectoryRecord& trajectory);

/// Power-iteration estimate of the spectral radius.
double spectral_radius_estimate(const Matrix& m);

}  // namespace oscnet
