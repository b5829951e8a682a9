#pragma once

#include <vector>

#include "pseudoinv/algebra.hpp"
#include "pseudoinv/metric.hpp"
#include "pseudoinv/types.hpp"

namespace pseudoinv {

/// Real coefficients of I = 2 delta1 K0 + 2 delta2 K- + 2 delta3 K+ that make I
/// pseudo-Hermitian with respect to the metric at `m`.
struct DeltaCoefficients {
  double delta1 = 1.0;
  double delta2 = 0.0;
  double delta3 = 0.0;
  /// [((D/2) zeta^2 - chi) delta1 - 2 D chi zeta delta3]; equals theta0 on a consistent point.
  double bracket = 1.0;
};

DeltaCoefficients delta_coefficients(const MetricPoint& m, AlgebraKind kind);

struct DeltaConstraintResiduals {
  double chi_relation = 0.0;   // |delta2 - chi delta3|
  double zeta_relation = 0.0;  // |zeta delta1 + ((D/2) zeta^2 - chi) delta3|

  double max() const { return std::max(chi_relation, zeta_relation); }
};

/// Residuals of the two Hermiticity constraints that fix delta1, delta2 in terms of delta3.
DeltaConstraintResiduals delta_constraint_residuals(const DeltaCoefficients& delta,
                                                    const MetricPoint& m, AlgebraKind kind);

/// Coefficients (of K0, K-, K+) of rho I rho^{-1} for a general ansatz
/// I = 2 d1 K0 + 2 d2 K- + 2 d3 K+ and independent th+, th-. Used to check the
/// conjugation algebra before the reality constraints are imposed.
struct ConjugatedInvariantCoeffs {
  double k0 = 0.0;
  double kminus = 0.0;
  double kplus = 0.0;
};
ConjugatedInvariantCoeffs conjugated_invariant_coeffs(double theta_plus, double theta_minus,
                                                      double theta0, double delta1, double delta2,
                                                      double delta3, AlgebraKind kind);

/// I^PH = (2/theta0)[((D/2) zeta^2 - chi) K0 - chi zeta K- - zeta K+]
Matrix build_invariant_ph(const AlgebraRep& rep, const MetricPoint& m);

/// I^h = (2/theta0) bracket K0; with `normalize` the prefactor is set to exactly 2.
Matrix build_invariant_h(const AlgebraRep& rep, const MetricPoint& m, bool normalize);

struct InvariantPair {
  Matrix invariant_ph;
  Matrix invariant_h;
  /// Eigenvalues k_n of K0, ascending. I^PH and I^h have eigenvalues 2 k_n.
  std::vector<double> eigenvalues;
  /// Columns |phi_n^H> = rho^{-1} |psi_n^h>.
  Matrix eigenvectors_ph;
  /// Columns |psi_n^h>, eigenvectors of K0.
  Matrix eigenvectors_h;
};

/// Orthonormal K0 eigenbasis, ascending eigenvalue, each vector's largest
/// component made real and positive. Rejects gaps below 1e-10.
void k0_eigenbasis(const AlgebraRep& rep, std::vector<double>& eigenvalues, Matrix& vectors);

/// Builds both invariants at `m` and the eta-orthonormal eigenbasis of I^PH.
InvariantPair eigensystem(const AlgebraRep& rep, const MetricPoint& m, const Matrix& rho);

/// |I^dagger eta - eta I| (max norm) on the leading `block` rows and columns (all if < 0).
double quasi_hermiticity_residual(const Matrix& invariant, const Matrix& eta,
                                  Eigen::Index block = -1);

/// max_{m,n} |<phi_m|eta|phi_n> - delta_mn| over the first `count` columns.
double eta_orthonormality_defect(const Matrix& eigenvectors_ph, const Matrix& eta,
                                 Eigen::Index count = -1);

/// Eigenvalues of a (non-Hermitian) invariant ordered by real part.
std::vector<Complex> invariant_spectrum(const Matrix& invariant);

}  // namespace pseudoinv
