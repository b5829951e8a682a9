#pragma once

#include <string>
#include <vector>

#include "pseudoinv/algebra.hpp"
#include "pseudoinv/metric.hpp"
#include "pseudoinv/trajectory.hpp"
#include "pseudoinv/types.hpp"

namespace pseudoinv {

/// Coefficients of i rho d(rho^{-1})/dt - rho H rho^{-1} = 2W K0 + 2U K- + 2V K+.
struct TransformedCoeffs {
  Complex w;
  Complex u;
  Complex v;
};

/// W, U, V evaluated literally from the metric point (with its derivatives) and
/// the Hamiltonian coefficients; theta^2 in V is read as th+ th- = zeta^2.
TransformedCoeffs transformed_coeffs(const MetricPoint& m, Complex omega, Complex alpha,
                                     Complex beta, AlgebraKind kind);

/// Hamiltonian compatible with a chosen metric trajectory.
///
/// Re beta(t) is the free input. Im beta(t) = zeta_dot / (2 theta0) is forced by
/// the reality of W; omega and alpha then follow from the auxiliary relations.
/// Throws ZetaTooSmall if |zeta| < 1e-8 at any sample.
CoefficientTrajectory synthesize_hamiltonian(const MetricTrajectory& metric,
                                             const std::vector<double>& beta_re);

/// Per-sample residuals of the relations tying the metric to the Hamiltonian.
struct AuxiliaryResiduals {
  std::vector<double> cont1;   // theta0_dot equation
  std::vector<double> cont2;   // zeta_dot equation
  std::vector<double> rel1;    // chi Re(beta) = Re(alpha)
  std::vector<double> rel2;    // (chi - (D/2) zeta^2) Re(alpha) = chi zeta Re(omega)
  std::vector<double> rel3;    // zeta Re(omega) = (chi - (D/2) zeta^2) Re(beta)
  std::vector<double> imag_w;  // Im W

  double max() const;
  double max_rel() const;
  static const std::vector<std::string>& names();
  const std::vector<double>& curve(std::size_t index) const;
};

/// Residuals using the metric's stored derivatives.
AuxiliaryResiduals auxiliary_residuals(const MetricTrajectory& metric,
                                       const CoefficientTrajectory& coeffs);

struct AuxiliaryOptions {
  /// Largest admissible algebraic residual (rel lines and Im W) along the solution.
  double tol = 1e-6;
};

struct AuxiliarySolution {
  MetricTrajectory metric;
  /// max over the three rel lines and Im W per sample.
  std::vector<double> rel_residual;
  double max_rel_residual = 0.0;
};

/// Integrates zeta_dot and theta0_dot from (zeta0, theta00) with classical RK4
/// (coefficients at half steps by cubic interpolation). Throws BlowUp when |zeta|
/// or theta0 leaves [1e-8, 1e8], Inconsistent when the algebraic residual exceeds
/// options.tol.
AuxiliarySolution solve_auxiliary(const CoefficientTrajectory& coeffs, double zeta0,
                                  double theta00, AlgebraKind kind,
                                  const AuxiliaryOptions& options = {});

/// (1/theta0)[((D/2) zeta^2 - chi) Re(omega) - 2 D zeta Re(alpha)] per sample;
/// the phase of eigenstate n grows at -2 k_n times this rate.
std::vector<double> phase_rate(const MetricTrajectory& metric, const CoefficientTrajectory& coeffs);

/// Cumulative integral with phi(0) = 0: composite Simpson on uniform grids
/// (odd nodes close with a three-point half-panel rule), trapezoid otherwise.
std::vector<double> cumulative_integral(const std::vector<double>& f, const TimeGrid& grid);

/// Real phase phi_n(t) of the eigenstate with K0 eigenvalue k_n.
std::vector<double> phase(double k_n, const MetricTrajectory& metric,
                          const CoefficientTrajectory& coeffs);

struct SolutionBundle {
  std::vector<double> eigenvalues;
  /// phases[n][i] = phi_n(t_i)
  std::vector<std::vector<double>> phases;
  /// C_n = <phi_n(0)| eta(0) |Phi(0)>
  std::vector<Complex> coefficients;
  std::vector<Vector> states;
};

struct EvolveOptions {
  double consistency_tol = 1e-8;
  double normalization_tol = 1e-8;
};

/// Phi(t) = sum_n C_n exp(i phi_n(t)) rho^{-1}(t) |psi_n^h>.
SolutionBundle evolve(const AlgebraRep& rep, const MetricTrajectory& metric,
                      const CoefficientTrajectory& coeffs, const Vector& psi0,
                      const EvolveOptions& options = {});

/// Initial state rho^{-1}(0) sum_n w_n |psi_n^h> with the weights normalized,
/// so that <Phi|eta(0)|Phi> = 1.
Vector initial_state_from_weights(const AlgebraRep& rep, const MetricPoint& m0,
                                  const std::vector<std::pair<std::size_t, Complex>>& weights);

}  // namespace pseudoinv
