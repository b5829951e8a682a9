#pragma once

#include <vector>

#include "pseudoinv/algebra.hpp"
#include "pseudoinv/dynamics.hpp"
#include "pseudoinv/trajectory.hpp"
#include "pseudoinv/types.hpp"

namespace pseudoinv {

/// Residual per grid sample. Samples where the quantity is undefined (the
/// endpoints of centered differences) hold NaN and are skipped by max().
struct ResidualCurve {
  std::vector<double> values;
  double max() const;
};

/// Classical RK4 propagation of i d/dt psi = H psi, H(t) = 2 omega K0 + 2 alpha K- + 2 beta K+,
/// with coefficients at half steps from cubic interpolation. No renormalization.
/// Throws BlowUp if |psi| exceeds 1e8.
std::vector<Vector> integrate_tdse(const AlgebraRep& rep, const CoefficientTrajectory& coeffs,
                                   const Vector& psi0);

/// |i dPhi/dt - H Phi| / |Phi| on the leading `block` components, with a five-point
/// centered difference on uniform grids (three-point otherwise).
ResidualCurve tdse_residual(const std::vector<Vector>& states, const CoefficientTrajectory& coeffs,
                            const AlgebraRep& rep, Eigen::Index block = -1);

/// |dI^PH/dt - i[I^PH, H]| with a centered difference for the time derivative.
ResidualCurve invariance_residual(const MetricTrajectory& metric,
                                  const CoefficientTrajectory& coeffs, const AlgebraRep& rep,
                                  Eigen::Index block = -1);

/// |H^dagger - eta H eta^{-1} - i (d eta/dt) eta^{-1}| with a centered difference for d eta/dt.
ResidualCurve phh1_residual(const MetricTrajectory& metric, const CoefficientTrajectory& coeffs,
                            const AlgebraRep& rep, Eigen::Index block = -1);

/// |H^dagger eta - eta H|: the time-independent quasi-Hermiticity defect.
ResidualCurve static_quasi_hermiticity(const MetricTrajectory& metric,
                                       const CoefficientTrajectory& coeffs, const AlgebraRep& rep,
                                       Eigen::Index block = -1);

struct DysonCheck {
  /// |h - h^dagger| for h = rho H rho^{-1} + i (d rho/dt) rho^{-1}
  ResidualCurve hermiticity_defect;
  /// |[h, I^h]|
  ResidualCurve commutator_defect;
};

DysonCheck dyson_check(const MetricTrajectory& metric, const CoefficientTrajectory& coeffs,
                       const AlgebraRep& rep, Eigen::Index block = -1);

/// |<Phi|eta(t)|Phi>(t) - <Phi|eta(0)|Phi>(0)| per sample.
ResidualCurve pseudo_norm_drift(const std::vector<Vector>& states, const MetricTrajectory& metric,
                                const AlgebraRep& rep);

/// max_n |<phi_m^H|eta|phi_n^H> - delta_mn|, similarity defect and spectrum of I^PH per sample.
struct InvariantChecks {
  ResidualCurve similarity;        // |rho I^PH rho^{-1} - I^h|
  ResidualCurve quasi_hermiticity; // |I^PH^dagger eta - eta I^PH|
  ResidualCurve eta_orthonormality;
  ResidualCurve spectrum_imag;     // max |Im lambda| over the leading eigenvalues
  double spectrum_drift = 0.0;     // max over samples of |lambda_n(t) - lambda_n(0)|
};

InvariantChecks invariant_checks(const MetricTrajectory& metric, const AlgebraRep& rep,
                                 Eigen::Index block = -1);

struct VerificationReport {
  double tdse_residual = 0.0;
  double invariance_residual = 0.0;
  double quasi_hermiticity_residual = 0.0;
  double dyson_hermiticity_defect = 0.0;
  double dyson_commutator_defect = 0.0;
  double phh1_residual = 0.0;
  double pseudo_norm_drift = 0.0;
  double pseudo_norm_drift_rk4 = 0.0;
  double oracle_difference = 0.0;
  double uv_max = 0.0;
  double imag_w_max = 0.0;
  double auxiliary_max = 0.0;
  double similarity_residual = 0.0;
  double eta_orthonormality_defect = 0.0;
  double spectrum_imag_max = 0.0;
  double spectrum_drift = 0.0;

  // Per-sample curves.
  ResidualCurve tdse_curve;
  ResidualCurve invariance_curve;
  ResidualCurve phh1_curve;
  ResidualCurve dyson_curve;
  ResidualCurve pseudo_norm_curve;
  ResidualCurve oracle_curve;
  ResidualCurve uv_curve;
  AuxiliaryResiduals auxiliary;
};

struct VerificationResult {
  SolutionBundle solution;
  std::vector<Vector> rk4_states;
  VerificationReport report;
};

/// Builds the invariant-based solution, the RK4 oracle and every residual.
/// `block` bounds all matrix residuals to the leading basis states (-1: whole space).
VerificationResult verify_scenario(const AlgebraRep& rep, const MetricTrajectory& metric,
                                   const CoefficientTrajectory& coeffs, const Vector& psi0,
                                   Eigen::Index block = -1);

}  // namespace pseudoinv
