#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "pseudoinv/algebra.hpp"
#include "pseudoinv/linalg.hpp"

using namespace pseudoinv;

TEST_CASE("structure_constant_round_trip") {
  CHECK(structure_constant(AlgebraKind::su2) == 2);
  CHECK(structure_constant(AlgebraKind::su11) == -2);
  CHECK(algebra_kind_from_structure_constant(2) == AlgebraKind::su2);
  CHECK(algebra_kind_from_structure_constant(-2) == AlgebraKind::su11);
  CHECK_THROWS_AS(algebra_kind_from_structure_constant(1), PreconditionError);
}

TEST_CASE("spin_half_matches_explicit_generators") {
  const AlgebraRep rep = build_su2_rep(0.5);
  const oracle::Pair p = oracle::two_dim(2);
  CHECK(rep.dim == 2);
  CHECK(oracle::max_abs(rep.k0 - p.k0) == 0.0);
  CHECK(oracle::max_abs(rep.kplus - p.kplus) == 0.0);
  CHECK(oracle::max_abs(rep.kminus - p.kminus) == 0.0);
}

TEST_CASE("spin_reps_close_on_the_full_matrix") {
  for (double j : {0.5, 1.0, 1.5, 2.0, 3.5}) {
    const AlgebraRep rep = build_su2_rep(j);
    CHECK(rep.dim == static_cast<Eigen::Index>(2 * j + 1));
    CHECK(rep.boundary_rows == 0);
    CHECK(commutator_residuals(rep).max() <= 1e-12);
  }
}

TEST_CASE("spin_one_ladder_entries_are_sqrt_two") {
  const AlgebraRep rep = build_su2_rep(1.0);
  CHECK(rep.kplus(0, 1).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(rep.kplus(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("boson_rep_closes_off_the_boundary") {
  for (Eigen::Index dim : {8, 20, 40, 60}) {
    const AlgebraRep rep = build_boson_rep(dim);
    CHECK(rep.kind == AlgebraKind::su11);
    CHECK(commutator_residuals(rep).max() <= 1e-12);
    // The last rows are where truncation shows.
    const Matrix full = commutator(rep.kplus, rep.kminus) + 2.0 * rep.k0;
    CHECK(max_norm(full) > 1.0);
  }
}

TEST_CASE("boson_generators_are_quadratic_in_a") {
  const AlgebraRep rep = build_boson_rep(12);
  const Matrix a = oracle::annihilation(12);
  const Matrix ad = a.adjoint();
  CHECK(oracle::max_abs(rep.kminus - 0.5 * a * a) <= 1e-15);
  CHECK(oracle::max_abs(rep.kplus - 0.5 * ad * ad) <= 1e-15);
  CHECK(oracle::max_abs(rep.k0 - 0.5 * (ad * a + 0.5 * Matrix::Identity(12, 12))) <= 1e-15);
}

TEST_CASE("bargmann_series_has_shifted_k0_spectrum") {
  const AlgebraRep rep = build_su11_rep(0.75, 30);
  for (Eigen::Index n = 0; n < rep.dim; ++n) {
    CHECK(rep.k0(n, n).real() == doctest::Approx(0.75 + static_cast<double>(n)));
  }
  CHECK(commutator_residuals(rep).max() <= 1e-12);
}

TEST_CASE("invalid_representations_are_rejected") {
  CHECK_THROWS_AS(build_su2_rep(0.0), PreconditionError);
  CHECK_THROWS_AS(build_su2_rep(0.7), PreconditionError);
  CHECK_THROWS_AS(build_su11_rep(0.75, 2), PreconditionError);
  CHECK_THROWS_AS(build_su11_rep(0.0, 10), PreconditionError);
}

TEST_CASE("linalg_expm_matches_taylor_oracle") {
  const AlgebraRep rep = build_su2_rep(1.5);
  const Matrix x = 0.7 * rep.kplus - 0.4 * rep.kminus + Complex(0.2, 0.3) * rep.k0;
  CHECK(oracle::max_abs(expm(x) - oracle::taylor_expm(x)) <= 1e-13);
}
