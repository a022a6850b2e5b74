#include "oscnet/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "oscnet/error.hpp"

namespace oscnet {

namespace {

constexpr Complex kImaginary{0.0, 1.0};

double guarded_ratio(double numerator, double denominator) {
  if (denominator == 0.0) return numerator == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return numerator / denominator;
}

}  // namespace

Vector TimeGrid::times() const {
  if (samples < 1) raise(errc::invalid_params, "time grid needs at least one sample");
  if (samples > 1 && !(t1 > t0))
    raise(errc::invalid_params, "time grid needs t1 > t0 for multiple samples");
  Vector t(samples);
  const double step = dt();
  for (Index i = 0; i < samples; ++i) t[i] = t0 + double(i) * step;
  return t;
}

TrajectoryRecord solve_fermionic(const Hamiltonian& ham, const SpectralDecomposition& dec,
                                 const DoubledState& x_hat_0, const TimeGrid& grid) {
  const Index n = dec.size();
  if (x_hat_0.size() != 2 * n)
    raise(errc::dimension_mismatch, "initial doubled state must have length 2n");
  if (!x_hat_0.allFinite())
    raise(errc::invalid_params, "initial doubled state must be finite");

  const Vector sqrt_d = ham.bundle.sqrt_degrees();
  const Vector inv_sqrt_d = sqrt_d.cwiseInverse();
  const ComplexMatrix P = dec.P.cast<Complex>();
  const ComplexMatrix P_inv = dec.P_inv.cast<Complex>();

  // The four generator terms collapse onto two mode-space channels of the
  // branch split: scaled difference u and sum v. Each sample is then
  //   x_plus  =  sqrt(D^-1) P r(t) + P s(t)
  //   x_minus = -sqrt(D^-1) P r(t) + P s(t)
  // with r = cos(wt) u - i w sin(wt) v and s = cos(wt) v - i mho sin(wt) u.
  const ComplexVector x_plus_0 = plus_branch(x_hat_0);
  const ComplexVector x_minus_0 = minus_branch(x_hat_0);
  const ComplexVector u =
      0.5 * (P_inv * (sqrt_d.cast<Complex>().cwiseProduct(x_plus_0 - x_minus_0)));
  const ComplexVector v = 0.5 * (P_inv * (x_plus_0 + x_minus_0));

  TrajectoryRecord record;
  record.times = grid.times();
  record.meta.solver = "fermionic";
  record.meta.dt = grid.dt();
  record.meta.zero_tol = dec.zero_tol;
  record.states.reserve(std::size_t(grid.samples));
  record.projected.reserve(std::size_t(grid.samples));

  for (Index s = 0; s < grid.samples; ++s) {
    const double t = record.times[s];
    ComplexVector r(n), w(n);
    for (Index k = 0; k < n; ++k) {
      const double cos_wt = std::cos(dec.omega[k] * t);
      const double sin_wt = std::sin(dec.omega[k] * t);
      r[k] = cos_wt * u[k] - kImaginary * (dec.omega[k] * sin_wt) * v[k];
      w[k] = cos_wt * v[k] - kImaginary * (dec.mho[k] * sin_wt) * u[k];
    }
    const ComplexVector difference = inv_sqrt_d.cast<Complex>().cwiseProduct(P * r);
    const ComplexVector sum = P * w;
    DoubledState x = assemble_state(sum + difference, sum - difference);
    record.projected.push_back(project_state(x));
    record.states.push_back(std::move(x));
  }
  return record;
}

TrajectoryRecord solve_bosonic(const SpectralDecomposition& dec, const ComplexVector& x_plus_0,
                               const ComplexVector& x_minus_0, const TimeGrid& grid) {
  const Index n = dec.size();
  if (x_plus_0.size() != n || x_minus_0.size() != n)
    raise(errc::dimension_mismatch, "branch initial states must have length n");
  if (!x_plus_0.allFinite() || !x_minus_0.allFinite())
    raise(errc::invalid_params, "branch initial states must be finite");

  const ComplexMatrix P = dec.P.cast<Complex>();
  const ComplexVector plus_coeffs = dec.P_inv.cast<Complex>() * x_plus_0;
  const ComplexVector minus_coeffs = dec.P_inv.cast<Complex>() * x_minus_0;

  TrajectoryRecord record;
  record.times = grid.times();
  record.meta.solver = "bosonic";
  record.meta.dt = grid.dt();
  record.meta.zero_tol = dec.zero_tol;
  record.states.reserve(std::size_t(grid.samples));
  record.projected.reserve(std::size_t(grid.samples));

  for (Index s = 0; s < grid.samples; ++s) {
    const double t = record.times[s];
    ComplexVector phase_minus(n), phase_plus(n);
    for (Index k = 0; k < n; ++k) {
      const double angle = dec.omega[k] * t;
      phase_minus[k] = Complex(std::cos(angle), -std::sin(angle));  // e^{-i w t}
      phase_plus[k] = std::conj(phase_minus[k]);
    }
    const ComplexVector x_plus = P * phase_minus.cwiseProduct(plus_coeffs);
    const ComplexVector x_minus = P * phase_plus.cwiseProduct(minus_coeffs);
    DoubledState x = assemble_state(x_plus, x_minus);
    record.projected.push_back(project_state(x));
    record.states.push_back(std::move(x));
  }
  return record;
}

double fundamental_residual(const SpectralDecomposition& dec,
                            const TrajectoryRecord& trajectory, Branch branch) {
  const Index samples = trajectory.times.size();
  if (samples < 3) raise(errc::invalid_params, "residual needs at least three samples");
  const double dt = trajectory.times[1] - trajectory.times[0];
  const Matrix sqrt_L = dec.P * dec.omega.asDiagonal() * dec.P_inv;
  const ComplexMatrix S = sqrt_L.cast<Complex>();
  const Complex sign = branch == Branch::plus ? kImaginary : -kImaginary;

  auto branch_of = [&](Index s) {
    return branch == Branch::plus ? plus_branch(trajectory.states[std::size_t(s)])
                                  : minus_branch(trajectory.states[std::size_t(s)]);
  };

  double worst = 0.0;
  for (Index s = 1; s + 1 < samples; ++s) {
    const ComplexVector derivative = (branch_of(s + 1) - branch_of(s - 1)) / (2.0 * dt);
    const ComplexVector x = branch_of(s);
    const double residual = (sign * derivative - S * x).norm();
    worst = std::max(worst, guarded_ratio(residual, x.norm()));
  }
  return worst;
}

TrajectoryRecord integrate_wave(const Matrix& L, const ComplexVector& x0,
                                const ComplexVector& v0, const TimeGrid& grid,
                                double dt_internal) {
  const Index n = L.rows();
  if (L.cols() != n) raise(errc::dimension_mismatch, "integrate_wave expects a square L");
  if (x0.size() != n || v0.size() != n)
    raise(errc::dimension_mismatch, "initial conditions must have length n");
  if (!(dt_internal > 0.0)) raise(errc::invalid_params, "dt_internal must be > 0");

  const double omega_max = std::sqrt(std::max(spectral_radius_estimate(L), 0.0));
  if (omega_max > 0.0 && dt_internal > 0.1 / omega_max)
    raise(errc::unstable_step, "dt_internal " + std::to_string(dt_internal) +
                                   " exceeds stability bound " +
                                   std::to_string(0.1 / omega_max));

  TrajectoryRecord record;
  record.times = grid.times();
  record.meta.solver = "oracle";
  record.meta.dt = grid.dt();
  record.meta.dt_internal = dt_internal;
  record.states.reserve(std::size_t(grid.samples));
  record.projected.reserve(std::size_t(grid.samples));

  const ComplexMatrix Lc = L.cast<Complex>();
  ComplexVector x = x0;
  ComplexVector v = v0;
  double t = grid.t0;

  auto emit = [&] {
    ComplexVector stacked(2 * n);
    stacked.head(n) = x;
    stacked.tail(n) = v;
    record.states.push_back(std::move(stacked));
    record.projected.push_back(x);
  };

  auto rk4_step = [&](double h) {
    const ComplexVector k1x = v;
    const ComplexVector k1v = -(Lc * x);
    const ComplexVector k2x = v + (h / 2.0) * k1v;
    const ComplexVector k2v = -(Lc * (x + (h / 2.0) * k1x));
    const ComplexVector k3x = v + (h / 2.0) * k2v;
    const ComplexVector k3v = -(Lc * (x + (h / 2.0) * k2x));
    const ComplexVector k4x = v + h * k3v;
    const ComplexVector k4v = -(Lc * (x + h * k3x));
    x += (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  };

  emit();
  for (Index s = 1; s < grid.samples; ++s) {
    const double target = record.times[s];
    while (t < target) {
      const double h = std::min(dt_internal, target - t);
      rk4_step(h);
      t += h;
    }
    t = target;  // guard against accumulated drift
    emit();
  }
  return record;
}

std::pair<ComplexVector, ComplexVector> wave_initial_conditions(const Hamiltonian& ham,
                                                                const DoubledState& x_hat_0) {
  if (x_hat_0.size() != ham.H_hat.rows())
    raise(errc::dimension_mismatch, "doubled state length must match the Hamiltonian");
  ComplexVector h_x(x_hat_0.size());
  h_x.real() = ham.H_hat * x_hat_0.real();
  h_x.imag() = ham.H_hat * x_hat_0.imag();
  return {project_state(x_hat_0), project_state(-kImaginary * h_x)};
}

double total_energy(const Matrix& L, const ComplexVector& x, const ComplexVector& v) {
  if (L.rows() != L.cols() || x.size() != L.rows() || v.size() != L.rows())
    raise(errc::dimension_mismatch, "total_energy expects matching dimensions");
  if (max_abs(L - L.transpose()) > 1e-12 * std::max(max_abs(L), 1.0))
    raise(errc::unsupported, "total_energy is defined for symmetric L only");
  ComplexVector Lx(x.size());
  Lx.real() = L * x.real();
  Lx.imag() = L * x.imag();
  return 0.5 * v.squaredNorm() + 0.5 * x.dot(Lx).real();
}

double wave_equation_residual(const Matrix& L, const TrajectoryRecord& trajectory) {
  const Index samples = trajectory.times.size();
  if (samples < 3) raise(errc::invalid_params, "residual needs at least three samples");
  const double dt = trajectory.times[1] - trajectory.times[0];
  double worst = 0.0;
  for (Index s = 1; s + 1 < samples; ++s) {
    const ComplexVector& prev = trajectory.projected[std::size_t(s - 1)];
    const ComplexVector& here = trajectory.projected[std::size_t(s)];
    const ComplexVector& next = trajectory.projected[std::size_t(s + 1)];
    const ComplexVector second = (next - 2.0 * here + prev) / (dt * dt);
    ComplexVector Lx(here.size());
    Lx.real() = L * here.real();
    Lx.imag() = L * here.imag();
    worst = std::max(worst, guarded_ratio((second + Lx).norm(), here.norm()));
  }
  return worst;
}

double spectral_radius_estimate(const Matrix& m) {
  if (m.rows() != m.cols())
    raise(errc::dimension_mismatch, "spectral_radius_estimate expects a square matrix");
  const Index n = m.rows();
  if (max_abs(m) == 0.0) return 0.0;
  Vector v = Vector::Ones(n);
  for (Index i = 0; i < n; ++i) v[i] += 1e-3 * double(i % 7);  // break symmetry
  v.normalize();
  double radius = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    Vector w = m * v;
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    w /= norm;
    const double rayleigh = std::abs(double(w.dot(m * w)));
    if (iter > 10 && std::abs(rayleigh - radius) <= 1e-9 * std::max(rayleigh, 1.0)) {
      radius = rayleigh;
      break;
    }
    radius = rayleigh;
    v = w;
  }
  return radius;
}

}  // namespace oscnet
