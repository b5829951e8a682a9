#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "pseudoinv/linalg.hpp"
#include "pseudoinv/models.hpp"
#include "pseudoinv/verify.hpp"

using namespace pseudoinv;

namespace {

ScenarioSpec spin_half(std::size_t steps, double horizon = 2.0) {
  return make_preset("spin-half-complex", {std::nullopt, std::nullopt, horizon, steps});
}

}  // namespace

TEST_CASE("residual_curve_max_skips_nan") {
  ResidualCurve c{{std::nan(""), 1e-3, 2e-3, std::nan("")}};
  CHECK(c.max() == 2e-3);
}

TEST_CASE("kernel_rk4_matches_plain_eigen_rk4") {
  const std::size_t steps = 100;
  const ScenarioSpec fine = spin_half(2 * steps);
  const ScenarioSpec coarse = spin_half(steps);
  const auto states = integrate_tdse(coarse.rep, coarse.coeffs, coarse.initial_state);
  const double dt = 2.0 / static_cast<double>(2 * steps);
  const auto h = [&](double t) {
    return assemble_hamiltonian(fine.rep,
                                coefficients_at(fine.coeffs, static_cast<std::size_t>(std::lround(t / dt))));
  };
  const auto reference = oracle::rk4(h, coarse.initial_state, 2.0, steps);
  // Half-step coefficients come from cubic interpolation in the library, exact
  // values in the oracle: agreement is at the interpolation error.
  double diff = 0.0;
  for (std::size_t i = 0; i <= steps; ++i) {
    diff = std::max(diff, max_norm(Vector(states[i] - reference[i])));
  }
  CHECK(diff <= 1e-6);
}

TEST_CASE("rk4_overflow_is_reported") {
  const AlgebraRep rep = build_su2_rep(0.5);
  CoefficientTrajectory c;
  c.grid = TimeGrid::uniform(10.0, 100);
  c.omega.assign(c.grid.size(), Complex(0.0, 5.0));
  c.alpha.assign(c.grid.size(), Complex());
  c.beta.assign(c.grid.size(), Complex());
  Vector psi = Vector::Zero(2);
  psi(0) = 1.0;
  CHECK_THROWS_AS(integrate_tdse(rep, c, psi), BlowUp);
}

TEST_CASE("consistent_scenario_has_small_residuals") {
  const ScenarioSpec s = spin_half(400);
  const VerificationResult r = verify_scenario(s.rep, s.metric, s.coeffs, s.initial_state);
  const VerificationReport& v = r.report;
  CHECK(v.auxiliary_max <= 1e-12);
  CHECK(v.uv_max <= 1e-12);
  CHECK(v.imag_w_max <= 1e-12);
  CHECK(v.similarity_residual <= 1e-12);
  CHECK(v.eta_orthonormality_defect <= 1e-12);
  CHECK(v.pseudo_norm_drift <= 1e-12);
  CHECK(v.oracle_difference <= 1e-6);
  CHECK(v.phh1_residual <= 1e-4);
  CHECK(v.dyson_hermiticity_defect <= 1e-4);
  CHECK(v.tdse_residual <= 1e-5);
  CHECK(r.report.tdse_curve.values.size() == s.metric.size());
  CHECK(std::isnan(r.report.tdse_curve.values.front()));
}

TEST_CASE("perturbed_hamiltonian_is_flagged") {
  const ScenarioSpec s = spin_half(400);
  CoefficientTrajectory bent = s.coeffs;
  for (auto& b : bent.beta) b += 1e-2;
  CHECK(invariance_residual(s.metric, bent, s.rep).max() >= 1e-3);
  CHECK(phh1_residual(s.metric, bent, s.rep).max() >= 1e-3);
  CHECK(dyson_check(s.metric, bent, s.rep).hermiticity_defect.max() >= 1e-3);
}

TEST_CASE("finite_difference_residuals_converge_at_second_order") {
  const ScenarioSpec a = spin_half(200);
  const ScenarioSpec b = spin_half(400);
  const double ra = phh1_residual(a.metric, a.coeffs, a.rep).max();
  const double rb = phh1_residual(b.metric, b.coeffs, b.rep).max();
  CHECK(ra / rb == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("static_quasi_hermiticity_fails_for_time_dependent_metric") {
  const ScenarioSpec s = spin_half(100);
  CHECK(static_quasi_hermiticity(s.metric, s.coeffs, s.rep).max() >= 1e-3);
}

TEST_CASE("pseudo_norm_drift_is_zero_at_start") {
  const ScenarioSpec s = spin_half(64);
  std::vector<Vector> states(s.metric.size(), s.initial_state);
  const ResidualCurve drift = pseudo_norm_drift(states, s.metric, s.rep);
  CHECK(drift.values.front() == 0.0);
  CHECK(drift.max() > 1e-3);  // a frozen state is not a solution
}

TEST_CASE("invariant_checks_on_boson_block") {
  const ScenarioSpec s =
      make_preset("swanson-driven", {std::nullopt, std::nullopt, 1.0, 20});
  const InvariantChecks c = invariant_checks(s.metric, s.rep, s.check_block);
  CHECK(c.similarity.max() <= 1e-9);
  CHECK(c.spectrum_imag.max() <= 1e-9);
  CHECK(c.spectrum_drift <= 1e-8);
  CHECK(c.eta_orthonormality.max() <= 1e-9);
}
