// Acceptance suite. Each criterion prints exactly one [PASS]/[FAIL] line;
// the process exits nonzero if any criterion fails. Criterion 11 drives the
// CLI binary named by OSCNET_CLI_PATH.

#include <unistd.h>

#include <unsupported/Eigen/KroneckerProduct>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oscnet/dynamics.hpp"
#include "oscnet/generate.hpp"
#include "oscnet/generators.hpp"
#include "oscnet/graph.hpp"
#include "oscnet/hamiltonian.hpp"
#include "oscnet/io.hpp"
#include "oscnet/polarization.hpp"
#include "oscnet/potential.hpp"
#include "oscnet/spring.hpp"
#include "support.hpp"

using namespace oscnet;
namespace fs = std::filesystem;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail << message;
    }
  }
};

bool exactly(const Matrix2& a, const Matrix2& b) { return (a.array() == b.array()).all(); }

Matrix laplacian_of(const WeightedDigraph& g) {
  return Matrix(g.out_degrees().asDiagonal()) - g.adjacency();
}

// --------------------------------------------------------------------------
// 1. generator algebra, exact to the last bit, under one second
// --------------------------------------------------------------------------
void criterion_algebra(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto& g = GeneratorAlgebra::canonical();
  const Matrix2 zero = Matrix2::Zero();
  c.require(exactly(anticommutator(g.a_hat, g.b_hat), g.e_hat), "{a,b} != e");
  c.require(exactly(g.a_hat * g.a_hat, zero), "a^2 != 0");
  c.require(exactly(g.b_hat * g.b_hat, zero), "b^2 != 0");
  c.require(exactly(g.a_hat * g.b_hat * g.a_hat, g.a_hat), "aba != a");
  c.require(exactly(g.b_hat * g.a_hat * g.b_hat, g.b_hat), "bab != b");
  c.require(exactly(g.ab * g.ab, g.ab), "(ab)^2 != ab");
  c.require(exactly(g.ba * g.ba, g.ba), "(ba)^2 != ba");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(seconds < 1.0, "runtime " + std::to_string(seconds) + "s >= 1s");
}

// --------------------------------------------------------------------------
// 2. the two Hamiltonian constructions agree; blocks mirror L
// --------------------------------------------------------------------------
void criterion_equivalence(Check& c) {
  const auto& gen = GeneratorAlgebra::canonical();
  Matrix2 sign_split;
  sign_split << 1, 0, 0, -1;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + int(seed % 29);
    WeightedDigraph g = testing::random_symmetric_connected(n, seed);
    if (seed % 2 == 1) g = testing::row_scaled_asymmetric(g, seed + 1000);
    const LaplacianBundle bundle = laplacian_bundle(g);
    const Vector sqrt_d = bundle.sqrt_degrees();

    const Matrix defining =
        Eigen::kroneckerProduct(Matrix(sqrt_d.asDiagonal()), sign_split) -
        Eigen::kroneckerProduct(Matrix(sqrt_d.cwiseInverse().asDiagonal() * bundle.A),
                                gen.a_hat);
    const Matrix rearranged =
        Eigen::kroneckerProduct(bundle.H, gen.a_hat) +
        Eigen::kroneckerProduct(Matrix(sqrt_d.asDiagonal()), gen.b_hat);
    const double deviation = max_abs(defining - rearranged) / max_abs(defining);
    c.require(deviation <= 1e-12,
              "form deviation " + std::to_string(deviation) + " at seed " +
                  std::to_string(seed));

    const Hamiltonian ham = build_hamiltonian(bundle);
    const BoolMatrix expected = testing::laplacian_pattern_with_diag(bundle.L);
    const BoolMatrix numeric =
        block_nonzero_pattern(ham.H_hat, 1e-12 * max_abs(ham.H_hat));
    c.require((numeric.array() == expected.array()).all(),
              "block pattern mismatch at seed " + std::to_string(seed));
  }
}

// --------------------------------------------------------------------------
// 3. closed-form powers against naive repeated multiplication
// --------------------------------------------------------------------------
void criterion_powers(Check& c) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 2 + int(seed % 14);
    WeightedDigraph g = testing::random_symmetric_connected(n, seed);
    if (seed % 3 == 2) g = testing::row_scaled_asymmetric(g, seed + 500);
    const LaplacianBundle bundle = laplacian_bundle(g);
    const SpectralDecomposition dec = decompose(bundle.L);
    const Hamiltonian ham = build_hamiltonian(bundle);
    Matrix naive = Matrix::Identity(2 * n, 2 * n);
    for (int k = 0; k <= 7; ++k) {
      const double scale = std::max(max_abs(naive), 1.0);
      const double deviation = max_abs(hamiltonian_power(bundle, dec, k) - naive) / scale;
      c.require(deviation <= 1e-8, "power " + std::to_string(k) + " deviation " +
                                       std::to_string(deviation) + " at seed " +
                                       std::to_string(seed));
      naive = naive * ham.H_hat;
    }
  }
}

// --------------------------------------------------------------------------
// 4. square roots: reconstruction, complete-graph closed form, dense paths
// --------------------------------------------------------------------------
void criterion_sqrt(Check& c) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 2 + int((11 * seed) % 49);
    const Matrix L = laplacian_of(testing::random_symmetric_connected(n, seed));
    const SqrtLaplacian root = sqrt_laplacian(decompose(L));
    c.require(max_abs(root.S * root.S - L) <= 1e-8 * max_abs(L) * double(n),
              "sqrt reconstruction failed at seed " + std::to_string(seed));
  }
  for (int n = 2; n <= 10; ++n) {
    const Matrix L = laplacian_of(complete_graph(n, 1.0));
    const SqrtLaplacian root = sqrt_laplacian(decompose(L));
    c.require(max_abs(root.S - L / std::sqrt(double(n))) <= 1e-10,
              "K_n proportionality failed at n = " + std::to_string(n));
  }
  for (int n = 3; n <= 10; ++n) {
    const Matrix L = laplacian_of(make_path_graph(n, 1.0));
    const SqrtLaplacian root = sqrt_laplacian(decompose(L));
    c.require(root.pattern_dense, "path root unexpectedly sparse at n = " + std::to_string(n));
    c.require(!pattern_matches(root.S, L, 1e-9 * max_abs(root.S)),
              "pattern_matches true for path n = " + std::to_string(n));
  }
}

// --------------------------------------------------------------------------
// 5. closed form vs RK4 oracle on 100 random symmetric graphs
// --------------------------------------------------------------------------
void criterion_oracle(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 3 + int(seed % 18);  // n <= 20
    const WeightedDigraph g = testing::random_symmetric_connected(n, seed);
    const LaplacianBundle bundle = laplacian_bundle(g);
    const SpectralDecomposition dec = decompose(bundle.L);
    const Hamiltonian ham = build_hamiltonian(bundle);

    std::mt19937_64 rng(seed + 4000);
    const ComplexVector x_plus = testing::random_complex_vector(n, rng);
    ComplexVector x_minus = testing::random_complex_vector(n, rng);
    testing::remove_kernel_velocity(dec, bundle.degrees, x_plus, x_minus);
    const DoubledState x0 = assemble_state(x_plus, x_minus);

    const TimeGrid grid{0.0, 10.0, 26};
    const TrajectoryRecord closed = solve_fermionic(ham, dec, x0, grid);
    const auto [wx0, wv0] = wave_initial_conditions(ham, x0);
    const TrajectoryRecord oracle =
        integrate_wave(bundle.L, wx0, wv0, grid, 0.01 / dec.omega.maxCoeff());

    double deviation = 0.0, scale = 0.0;
    for (std::size_t s = 0; s < closed.projected.size(); ++s) {
      deviation = std::max(
          deviation, (closed.projected[s] - oracle.projected[s]).cwiseAbs().maxCoeff());
      scale = std::max(scale, oracle.projected[s].cwiseAbs().maxCoeff());
    }
    worst = std::max(worst, deviation / scale);
    c.require(deviation / scale <= 1e-6, "relative deviation " +
                                             std::to_string(deviation / scale) +
                                             " at seed " + std::to_string(seed));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(seconds < 60.0, "runtime " + std::to_string(seconds) + "s >= 60s");
  c.detail << " (worst " << worst << ", " << seconds << "s)";
}

// --------------------------------------------------------------------------
// 6. branch-solution residual: O(dt^2) convergence and norm preservation
// --------------------------------------------------------------------------
void criterion_residual(Check& c) {
  const std::vector<double> dts{1e-2, 1e-3, 1e-4};
  std::uint64_t graph_id = 0;
  for (const WeightedDigraph& g :
       {build_graph(2, {{0, 1, 1.0}, {1, 0, 1.0}}), complete_graph(3, 1.0),
        testing::random_symmetric_connected(6, 60)}) {
    const SpectralDecomposition dec = decompose(laplacian_of(g));
    std::mt19937_64 rng(70 + graph_id);
    const ComplexVector xp = testing::random_complex_vector(dec.size(), rng);
    const ComplexVector xm = testing::random_complex_vector(dec.size(), rng);

    std::vector<double> residuals;
    for (double dt : dts) {
      const Index samples = Index(std::lround(1.0 / dt)) + 1;
      const TrajectoryRecord traj = solve_bosonic(dec, xp, xm, {0.0, 1.0, samples});
      residuals.push_back(fundamental_residual(dec, traj, Branch::plus));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < dts.size(); ++i) {
      const double x = std::log(dts[i]);
      const double y = std::log(residuals[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (3.0 * sxy - sx * sy) / (3.0 * sxx - sx * sx);
    c.require(std::abs(slope - 2.0) <= 0.1,
              "convergence slope " + std::to_string(slope) + " on graph " +
                  std::to_string(graph_id));
    ++graph_id;
  }

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SpectralDecomposition dec =
        decompose(laplacian_of(testing::random_symmetric_connected(4 + int(seed), seed)));
    std::mt19937_64 rng(seed + 90);
    ComplexVector xp = testing::random_complex_vector(dec.size(), rng);
    ComplexVector xm = testing::random_complex_vector(dec.size(), rng);
    xp.normalize();
    xm.normalize();
    const TrajectoryRecord traj = solve_bosonic(dec, xp, xm, {0.0, 10.0, 51});
    for (const auto& state : traj.states) {
      c.require(std::abs(plus_branch(state).norm() - 1.0) <= 1e-9,
                "plus-branch norm drift at seed " + std::to_string(seed));
      c.require(std::abs(minus_branch(state).norm() - 1.0) <= 1e-9,
                "minus-branch norm drift at seed " + std::to_string(seed));
    }
  }
}

// --------------------------------------------------------------------------
// 7. RK4 energy conservation
// --------------------------------------------------------------------------
void criterion_energy(Check& c) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 3 + int(seed % 18);
    const WeightedDigraph g = testing::random_symmetric_connected(n, seed + 300);
    const LaplacianBundle bundle = laplacian_bundle(g);
    const Hamiltonian ham = build_hamiltonian(bundle);
    std::mt19937_64 rng(seed);
    const DoubledState x0 = testing::random_complex_vector(2 * n, rng);
    const auto [wx0, wv0] = wave_initial_conditions(ham, x0);
    const TrajectoryRecord traj = integrate_wave(bundle.L, wx0, wv0, {0.0, 10.0, 11}, 1e-3);
    const double e0 = total_energy(bundle.L, traj.states[0].head(n), traj.states[0].tail(n));
    for (const auto& state : traj.states) {
      const double e = total_energy(bundle.L, state.head(n), state.tail(n));
      c.require(std::abs(e - e0) <= 1e-6 * e0, "energy drift " + std::to_string(e - e0) +
                                                   " of E0 " + std::to_string(e0) +
                                                   " at seed " + std::to_string(seed));
    }
  }
}

// --------------------------------------------------------------------------
// 8. polarization pipeline on the two-cluster scenario
// --------------------------------------------------------------------------
void criterion_polarization(Check& c) {
  TwoClusterParams params;
  params.size_a = 6;
  params.size_b = 6;
  params.intra_weight = 1.0;
  params.bridge_weight = 0.1;
  params.bridges = 2;
  const WeightedDigraph g = make_two_cluster_graph(params, 7);

  ScenarioOptions opts;
  opts.threshold = 0.5;
  opts.clique_weight = 1.0;
  opts.potential = make_potential(-2.0, 1.0);
  opts.grid = {0.0, 2.0, 11};

  std::mt19937_64 rng(8);
  const ComplexVector xp = testing::random_complex_vector(12, rng);
  const ScenarioResult result = run_polarization_scenario(g, assemble_state(xp, xp), opts);

  c.require(result.report.components.size() == 2,
            "expected 2 components, got " + std::to_string(result.report.components.size()));
  c.require(result.report.zero_modes_pre == 1,
            "zero modes pre = " + std::to_string(result.report.zero_modes_pre));
  c.require(result.report.zero_modes_post == 2,
            "zero modes post = " + std::to_string(result.report.zero_modes_post));
  c.require(!result.report.sqrt_pattern_pre, "pre-split sqrt pattern unexpectedly sparse");
  for (const ComponentReport& comp : result.report.component_reports)
    c.require(comp.bosonic_exists, "component lost the branch solution");
}

// --------------------------------------------------------------------------
// 9. potential ground state
// --------------------------------------------------------------------------
void criterion_potential(Check& c) {
  std::mt19937_64 rng(900);
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = detail::uniform(rng, -5.0, 5.0);
    const double b = detail::uniform(rng, 0.05, 4.0);
    const PotentialParams p = make_potential(a, b);
    const double ground = ground_state(p);
    if (a < 0.0)
      c.require(ground == std::sqrt(std::abs(a) / (2.0 * b)),
                "closed form mismatch at trial " + std::to_string(trial));
    else
      c.require(ground == 0.0, "nonzero ground state for a >= 0");

    const double v_min = potential(p, ground * ground);
    const double hi = 4.0 * std::abs(a) / (2.0 * b) + 1.0;
    for (int k = 0; k <= 1000; ++k) {
      const double s = hi * double(k) / 1000.0;
      const double v = potential(p, s);
      c.require(v >= v_min - 1e-9 * (1.0 + std::abs(a) * s + b * s * s),
                "grid point below the reported ground state at trial " +
                    std::to_string(trial));
    }
  }
}

// --------------------------------------------------------------------------
// 10. spring-chain equilibrium shift
// --------------------------------------------------------------------------
void criterion_spring(Check& c) {
  const SpringEquilibrium stressed =
      spring_equilibrium(SpringChain::uniform(6, 1.0, 1.4, 6.0), 2);
  c.require(stressed.left_mean_shift * stressed.right_mean_shift < 0.0,
            "segment shifts do not have opposite signs");
  c.require(std::abs(stressed.left_mean_shift) > 1e-6, "left shift vanishes");

  const SpringEquilibrium relaxed =
      spring_equilibrium(SpringChain::uniform(6, 1.0, 6.0 / 7.0, 6.0), 2);
  c.require(std::abs(relaxed.left_mean_shift) <= 1e-12 &&
                std::abs(relaxed.right_mean_shift) <= 1e-12,
            "stress-free cut moved the segments");
}

// --------------------------------------------------------------------------
// 11. CLI determinism: identical config and seed, byte-identical outputs
// --------------------------------------------------------------------------
#ifndef OSCNET_CLI_PATH
#error "OSCNET_CLI_PATH must point at the oscnet binary"
#endif

int run_cli(const std::string& args) {
  const std::string cmd = std::string(OSCNET_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void criterion_determinism(Check& c) {
  const fs::path root =
      fs::temp_directory_path() / ("oscnet_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  fs::create_directories(root);

  const std::string scenario = R"({
    "graph": "g.json",
    "init": "random:3",
    "threshold": 0.5,
    "potential": {"a": -2.0, "b": 1.0},
    "times": {"t0": 0.0, "t1": 2.0, "samples": 11}
  })";

  auto produce = [&](const std::string& name) {
    const fs::path dir = root / name;
    fs::create_directories(dir);
    write_text_file(dir / "scenario.json", scenario);
    bool ok = true;
    ok &= run_cli("--output-dir " + dir.string() +
                  " gen two-cluster --seed 9 --bridges 2 --output g.json") == 0;
    ok &= run_cli("--output-dir " + dir.string() + " simulate " + (dir / "g.json").string() +
                  " --solver fermionic --init random:5 --t1 3 --samples 16 "
                  "--output t.csv --json t.json") == 0;
    ok &= run_cli("--output-dir " + dir.string() + " polarize --config " +
                  (dir / "scenario.json").string()) == 0;
    return ok;
  };

  c.require(produce("a"), "first CLI run failed");
  c.require(produce("b"), "second CLI run failed");
  if (!c.ok) return;

  for (const char* name :
       {"g.json", "t.csv", "t.json", "report.json", "pre_trajectory.csv",
        "post_component_0.csv", "post_component_1.csv"}) {
    const std::string first = read_text_file(root / "a" / name);
    const std::string second = read_text_file(root / "b" / name);
    c.require(first == second, std::string("output differs between runs: ") + name);
    c.require(!first.empty(), std::string("empty output: ") + name);
  }
  fs::remove_all(root);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "generator algebra identities, exact", criterion_algebra},
      {2, "Hamiltonian construction equivalence and block pattern", criterion_equivalence},
      {3, "closed-form powers vs naive multiplication", criterion_powers},
      {4, "square-root reconstruction, K_n closed form, dense paths", criterion_sqrt},
      {5, "doubled closed form vs RK4 wave oracle", criterion_oracle},
      {6, "branch residual convergence and norm preservation", criterion_residual},
      {7, "RK4 energy conservation", criterion_energy},
      {8, "two-cluster polarization pipeline", criterion_polarization},
      {9, "quartic potential ground state", criterion_potential},
      {10, "spring-chain equilibrium shift", criterion_spring},
      {11, "CLI determinism under fixed seeds", criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail << "exception: " << e.what();
    }
    std::cout << (check.ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
              << criterion.label;
    const std::string detail = check.detail.str();
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!check.ok) ++failures;
  }
  if (failures > 0) {
    std::cout << failures << " of " << criteria.size() << " criteria failed\n";
    return 1;
  }
  std::cout << "all " << criteria.size() << " criteria passed\n";
  return 0;
}
