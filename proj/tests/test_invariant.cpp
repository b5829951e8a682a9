#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "pseudoinv/invariant.hpp"
#include "pseudoinv/linalg.hpp"
#include "pseudoinv/metric.hpp"

using namespace pseudoinv;

namespace {

// Coefficients of rho X rho^{-1} on (K0, K-, K+) read off the 2x2 matrix.
struct Decomposed {
  Complex k0, kminus, kplus;
};

Decomposed decompose(const Matrix& x, int d) {
  return {x(0, 0) - x(1, 1), x(1, 0) / (d > 0 ? 1.0 : -1.0), x(0, 1)};
}

}  // namespace

TEST_CASE("delta_coefficients_satisfy_hermiticity_constraints") {
  for (AlgebraKind kind : {AlgebraKind::su2, AlgebraKind::su11}) {
    for (double zeta : {-0.4, -0.05, 0.2, 0.6}) {
      const MetricPoint m = make_metric_point(zeta, 1.3, kind);
      const DeltaCoefficients d = delta_coefficients(m, kind);
      CHECK(delta_constraint_residuals(d, m, kind).max() <= 1e-15);
      CHECK(d.bracket == doctest::Approx(m.theta0).epsilon(1e-14));
    }
  }
}

TEST_CASE("conjugated_invariant_matches_brute_force_conjugation") {
  for (int d : {2, -2}) {
    const AlgebraKind kind = algebra_kind_from_structure_constant(d);
    const oracle::Pair p = oracle::two_dim(d);
    const double tp = 0.37, tm = -0.21, th0 = 1.7;
    const double d1 = 0.4, d2 = -1.1, d3 = 0.25;
    const Matrix rho = oracle::taylor_expm(tp * p.kplus) *
                       oracle::taylor_expm(std::log(th0) * p.k0) *
                       oracle::taylor_expm(tm * p.kminus);
    const Matrix inv = rho.inverse();
    const Matrix ansatz = 2.0 * (d1 * p.k0 + d2 * p.kminus + d3 * p.kplus);
    const Decomposed brute = decompose(rho * ansatz * inv, d);
    const ConjugatedInvariantCoeffs c = conjugated_invariant_coeffs(tp, tm, th0, d1, d2, d3, kind);
    CHECK(std::abs(brute.k0 - 2.0 * c.k0) <= 1e-13);
    CHECK(std::abs(brute.kminus - 2.0 * c.kminus) <= 1e-13);
    CHECK(std::abs(brute.kplus - 2.0 * c.kplus) <= 1e-13);
  }
}

TEST_CASE("pseudo_hermitian_invariant_maps_to_two_k0") {
  for (const AlgebraRep& rep : {build_su2_rep(0.5), build_su2_rep(1.5), build_boson_rep(40)}) {
    const MetricPoint m = make_metric_point(rep.kind == AlgebraKind::su2 ? -0.3 : -0.06, 1.1,
                                            rep.kind);
    const Matrix rho = build_rho(rep, m);
    const Matrix inv = build_rho_inverse(rep, m);
    const Matrix ih = build_invariant_h(rep, m, false);
    CHECK(max_norm(Matrix(ih - 2.0 * rep.k0)) <= 1e-14);
    const Eigen::Index block = rep.kind == AlgebraKind::su2 ? rep.dim : 20;
    CHECK(max_norm_block(rho * build_invariant_ph(rep, m) * inv - ih, block, block) <= 1e-12);
  }
}

TEST_CASE("eigensystem_is_eta_orthonormal_with_real_spectrum") {
  const AlgebraRep rep = build_su2_rep(2.0);
  const MetricPoint m = make_metric_point(0.35, 0.8, rep.kind);
  const Matrix rho = build_rho(rep, m);
  const Matrix eta = build_eta(rho);
  const InvariantPair pair = eigensystem(rep, m, rho);
  CHECK(pair.eigenvalues.front() == doctest::Approx(-2.0));
  CHECK(pair.eigenvalues.back() == doctest::Approx(2.0));
  CHECK(eta_orthonormality_defect(pair.eigenvectors_ph, eta) <= 1e-12);
  CHECK(quasi_hermiticity_residual(pair.invariant_ph, eta) <= 1e-12);
  for (std::size_t n = 0; n < pair.eigenvalues.size(); ++n) {
    const auto col = static_cast<Eigen::Index>(n);
    const Vector lhs = pair.invariant_ph * pair.eigenvectors_ph.col(col);
    const Vector rhs = 2.0 * pair.eigenvalues[n] * pair.eigenvectors_ph.col(col);
    CHECK(max_norm(Vector(lhs - rhs)) <= 1e-12);
  }
  const auto spectrum = invariant_spectrum(pair.invariant_ph);
  for (std::size_t n = 0; n < spectrum.size(); ++n) {
    CHECK(spectrum[n].real() == doctest::Approx(2.0 * pair.eigenvalues[n]).epsilon(1e-12));
    CHECK(std::abs(spectrum[n].imag()) <= 1e-12);
  }
}

TEST_CASE("invariant_ph_is_not_hermitian_but_quasi_hermitian") {
  const AlgebraRep rep = build_su2_rep(0.5);
  const MetricPoint m = make_metric_point(-0.3, 1.1, rep.kind);
  const Matrix inv = build_invariant_ph(rep, m);
  CHECK(max_norm(Matrix(inv - inv.adjoint())) > 0.1);
  CHECK(quasi_hermiticity_residual(inv, build_eta(build_rho(rep, m))) <= 1e-14);
}

TEST_CASE("normalized_invariant_h_ignores_inconsistent_points") {
  const AlgebraRep rep = build_su2_rep(0.5);
  MetricPoint m = make_metric_point(0.2, 1.0, rep.kind);
  m.chi += 0.5;
  CHECK(max_norm(Matrix(build_invariant_h(rep, m, true) - 2.0 * rep.k0)) == 0.0);
  CHECK(max_norm(Matrix(build_invariant_h(rep, m, false) - 2.0 * rep.k0)) > 0.1);
}
