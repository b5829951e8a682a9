#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "pseudoinv/dynamics.hpp"
#include "pseudoinv/invariant.hpp"
#include "pseudoinv/linalg.hpp"
#include "pseudoinv/metric.hpp"
#include "pseudoinv/models.hpp"

using namespace pseudoinv;

namespace {

PresetOptions short_run(std::size_t steps = 200, double horizon = 2.0) {
  return {std::nullopt, std::nullopt, horizon, steps};
}

}  // namespace

TEST_CASE("real_zeta_reproduces_two_minus_sqrt_three") {
  const double z = real_coefficient_zeta(2.0, 0.5, 0.5, AlgebraKind::su11);
  CHECK(std::abs(z - (2.0 - std::sqrt(3.0))) <= 1e-12);
  const double other = real_coefficient_zeta(2.0, 0.5, 0.5, AlgebraKind::su11, Branch::minus);
  CHECK(std::abs(other - (2.0 + std::sqrt(3.0))) <= 1e-12);
  CHECK(real_coefficient_zeta(2.0, 0.5, 0.5, AlgebraKind::su11, Branch::plus) ==
        doctest::Approx(z).epsilon(1e-15));
}

TEST_CASE("real_zeta_frozen_roots") {
  // Polynomial roots at 40 digits, smaller magnitude first.
  CHECK(real_coefficient_zeta(1.0, 1.0, 1.0, AlgebraKind::su2) ==
        doctest::Approx(0.6180339887498948482).epsilon(1e-15));
  CHECK(real_coefficient_zeta(1.0, 1.0, 1.0, AlgebraKind::su2, Branch::minus) ==
        doctest::Approx(-1.6180339887498948482).epsilon(1e-15));
  CHECK(real_coefficient_zeta(1.0, -0.05, 0.05, AlgebraKind::su11) ==
        doctest::Approx(-0.049875621120890272974).epsilon(1e-15));
  CHECK(real_coefficient_zeta(1.0, -0.2, 0.5, AlgebraKind::su2) ==
        doctest::Approx(-0.2254033307585166373).epsilon(1e-15));
}

TEST_CASE("real_zeta_degenerate_and_invalid_inputs") {
  CHECK(real_coefficient_zeta(1.0, 0.0, 0.3, AlgebraKind::su2) == 0.0);
  CHECK_THROWS_AS(real_coefficient_zeta(1.0, -1.0, 1.0, AlgebraKind::su2), PreconditionError);
  CHECK_THROWS_AS(real_coefficient_zeta(1.0, 0.2, 0.0, AlgebraKind::su2), PreconditionError);
}

TEST_CASE("real_zeta_satisfies_algebraic_relations") {
  for (AlgebraKind kind : {AlgebraKind::su2, AlgebraKind::su11}) {
    for (Branch b : {Branch::plus, Branch::minus}) {
      const double omega = 1.3, alpha = -0.2, beta = 0.45;
      const double z = real_coefficient_zeta(omega, alpha, beta, kind, b);
      const double chi = alpha / beta;
      const double hd = half_structure_constant(kind);
      CHECK(std::abs(chi * beta - alpha) <= 1e-12);
      CHECK(std::abs(z * omega - (chi - hd * z * z) * beta) <= 1e-12);
      CHECK(std::abs((chi - hd * z * z) * alpha - chi * z * omega) <= 1e-12);
    }
  }
}

TEST_CASE("positive_ratio_has_no_admissible_metric") {
  CHECK_THROWS_AS(real_coefficient_metric(2.0, 0.5, 0.5, AlgebraKind::su11), PreconditionError);
  CHECK_NOTHROW(real_coefficient_metric(1.0, -0.05, 0.05, AlgebraKind::su11));
}

TEST_CASE("real_case_hamiltonian_is_proportional_to_invariant") {
  const ScenarioSpec spin = make_preset("real-case-check", short_run());
  CHECK(real_case_proportionality(spin) <= 1e-12);
  const ScenarioSpec swanson = make_preset("swanson-const-real", short_run(50));
  CHECK(real_case_proportionality(swanson) <= 1e-10);
  CHECK_THROWS_AS(real_case_proportionality(make_preset("spin-half-complex", short_run())),
                  PreconditionError);
}

TEST_CASE("proportionality_survives_time_dependent_scale") {
  // H(t) = s(t) H0 with fixed ratios keeps the same constant metric.
  ScenarioSpec s = make_preset("real-case-check", short_run());
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    const double scale = 1.0 + 0.5 * std::sin(s.metric.grid[i]);
    s.coeffs.omega[i] *= scale;
    s.coeffs.alpha[i] *= scale;
    s.coeffs.beta[i] *= scale;
  }
  CHECK(real_case_proportionality(s) <= 1e-12);
  CHECK(auxiliary_residuals(s.metric, s.coeffs).max() <= 1e-12);
}

TEST_CASE("spin_eigenstates_match_frozen_vectors") {
  // exp[zeta J-] exp[-ln theta0 (Jz - m)] exp[zeta J+] |m> at 40 digits, zeta=-0.3, theta0=1.1.
  const Vector up = spin_eigenstate(0.5, 0.5, -0.3, 1.1);
  CHECK(std::abs(up(0) - 1.0) <= 1e-15);
  CHECK(std::abs(up(1) + 0.3) <= 1e-15);
  const Vector down = spin_eigenstate(0.5, -0.5, -0.3, 1.1);
  CHECK(std::abs(down(0) + 0.27272727272727272727) <= 1e-15);
  CHECK(std::abs(down(1) - 1.0818181818181818182) <= 1e-15);
  const Vector zero = spin_eigenstate(1.0, 0.0, -0.3, 1.1);
  CHECK(std::abs(zero(0) + 0.38569460791993501331) <= 1e-14);
  CHECK(std::abs(zero(1) - 1.1636363636363636364) <= 1e-14);
  CHECK(std::abs(zero(2) + 0.45897658342472266584) <= 1e-14);
  CHECK_THROWS_AS(spin_eigenstate(1.0, 0.5, -0.3, 1.1), PreconditionError);
}

TEST_CASE("swanson_eigenstates_match_frozen_vectors") {
  const double expected[3][6] = {
      {1.0017693909442540577, 0, -0.041815698318878372911, 0, 0.0021377483483550717362, 0},
      {0, 1.0053175706052136353, 0, -0.07268344384407243903, 0, 0.0047970815015978334863},
      {-0.042652012285255940369, 0, 1.0106586911102000123, 0, -0.10324500315426578399, 0},
  };
  for (std::size_t n = 0; n < 3; ++n) {
    const Vector v = swanson_eigenstate(n, -0.06, 1.02, 40);
    for (Eigen::Index k = 0; k < 6; ++k) CHECK(std::abs(v(k) - expected[n][k]) <= 1e-14);
  }
}

TEST_CASE("section_eigenstates_agree_with_generic_pipeline") {
  // Section form = theta0^{k_n} rho^{-1} |n>.
  const AlgebraRep spin = build_su2_rep(1.0);
  const MetricPoint ms = make_metric_point(-0.25, 0.9, spin.kind);
  const InvariantPair ps = eigensystem(spin, ms, build_rho(spin, ms));
  for (std::size_t n = 0; n < ps.eigenvalues.size(); ++n) {
    const double m = ps.eigenvalues[n];
    const Vector generic = std::pow(ms.theta0, m) * ps.eigenvectors_ph.col(static_cast<Eigen::Index>(n));
    CHECK(max_norm(Vector(spin_eigenstate(1.0, m, ms.zeta, ms.theta0) - generic)) <= 1e-12);
  }
  const AlgebraRep boson = build_boson_rep(40);
  const MetricPoint mb = make_metric_point(-0.06, 1.02, boson.kind);
  const InvariantPair pb = eigensystem(boson, mb, build_rho(boson, mb));
  for (std::size_t n = 0; n <= 12; ++n) {
    const Vector generic =
        std::pow(mb.theta0, pb.eigenvalues[n]) * pb.eigenvectors_ph.col(static_cast<Eigen::Index>(n));
    const Vector section = swanson_eigenstate(n, mb.zeta, mb.theta0, 80).head(20);
    CHECK(max_norm(Vector(section - generic.head(20))) <= 1e-9);
  }
}

TEST_CASE("section_phases_agree_with_generic_phase") {
  const ScenarioSpec spin = make_preset("spin-one-complex", short_run(400));
  for (double m : {-1.0, 0.0, 1.0}) {
    const auto a = spin_phase(m, spin.metric, spin.coeffs);
    const auto b = phase(m, spin.metric, spin.coeffs);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-12);
  }
  const ScenarioSpec swanson = make_preset("swanson-driven", short_run(100));
  for (std::size_t n : {0u, 3u, 12u}) {
    const auto a = swanson_phase(n, swanson.metric, swanson.coeffs);
    const auto b = phase(0.5 * (static_cast<double>(n) + 0.5), swanson.metric, swanson.coeffs);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-12);
  }
}

TEST_CASE("presets_are_consistent") {
  for (const auto& name : preset_names()) {
    const ScenarioSpec s = make_preset(name, short_run(64, 1.0));
    CHECK(s.name == name);
    CHECK(s.steps == 64);
    CHECK(auxiliary_residuals(s.metric, s.coeffs).max() <= 1e-8);
  }
  CHECK_THROWS_AS(make_preset("no-such-scenario"), PreconditionError);
}

TEST_CASE("spin_one_half_constant_metric_has_half_integer_spectrum") {
  const ScenarioSpec s = make_preset("real-case-check", short_run(32));
  const auto ev = invariant_spectrum(build_invariant_ph(s.rep, s.metric.points[0]));
  CHECK(ev[0].real() == doctest::Approx(-1.0));
  CHECK(ev[1].real() == doctest::Approx(1.0));
}

TEST_CASE("swanson_scenario_requires_dimension_eight") {
  const TimeGrid grid = TimeGrid::uniform(1.0, 32);
  const MetricPreset metric{Curve::Constant{-0.05}, Curve::Constant{1.0}};
  CHECK_THROWS_AS(swanson_scenario(6, metric, Curve::Constant{0.05}, grid), PreconditionError);
  const ScenarioSpec s = swanson_scenario(16, metric, Curve::Constant{0.05}, grid);
  CHECK(s.rep.dim == 16);
  CHECK_THROWS_AS(spin_scenario(0.25, metric, Curve::Constant{0.05}, grid), PreconditionError);
}

TEST_CASE("random_drives_are_admissible") {
  std::mt19937_64 rng(9);
  const TimeGrid grid = TimeGrid::uniform(10.0, 200);
  for (int k = 0; k < 25; ++k) {
    const RandomDrive d = random_drive(rng);
    for (double z : d.metric.zeta.sample(grid)) CHECK(std::abs(z) >= 0.05);
    for (double t : d.metric.theta0.sample(grid)) CHECK(t >= 0.4);
  }
}

TEST_CASE("seed_comes_from_environment") {
  ::setenv("PSEUDOINV_SEED", "12345", 1);
  CHECK(seed_from_env() == 12345u);
  ::setenv("PSEUDOINV_SEED", "junk", 1);
  CHECK(seed_from_env(7) == 7u);
  ::unsetenv("PSEUDOINV_SEED");
  CHECK(seed_from_env(7) == 7u);
}
