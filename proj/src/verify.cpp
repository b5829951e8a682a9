#include "pseudoinv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include "pseudoinv/invariant.hpp"
#include "pseudoinv/kernels.hpp"
#include "pseudoinv/linalg.hpp"
#include "pseudoinv/metric.hpp"

namespace pseudoinv {

namespace {

constexpr double kOverflow = 1e8;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Eigen::Index resolve_block(const AlgebraRep& rep, Eigen::Index block) {
  return block < 0 ? rep.dim : std::min(block, rep.dim);
}

double block_norm(const Matrix& m, Eigen::Index block) { return max_norm_block(m, block, block); }

std::span<const kernels::cplx> view(const Matrix& m) { return {m.data(), static_cast<std::size_t>(m.size())}; }
std::span<kernels::cplx> view(Vector& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

void check_shared_grid(const MetricTrajectory& metric, const CoefficientTrajectory& coeffs) {
  coeffs.validate();
  if (metric.points.size() != coeffs.size() || !(metric.grid == coeffs.grid)) {
    throw PreconditionError("metric and coefficient trajectories must share one grid");
  }
}

// Centered-difference weight 1 / (t_{i+1} - t_{i-1}).
double centered_scale(const TimeGrid& grid, std::size_t i) {
  return 1.0 / (grid[i + 1] - grid[i - 1]);
}

// rho, rho^{-1} and eta at every sample, built once and shared by the checks.
struct Maps {
  std::vector<Matrix> rho;
  std::vector<Matrix> rho_inv;
  std::vector<Matrix> eta;
};

Maps build_maps(const MetricTrajectory& metric, const AlgebraRep& rep) {
  Maps maps;
  maps.rho.reserve(metric.size());
  maps.rho_inv.reserve(metric.size());
  maps.eta.reserve(metric.size());
  for (const auto& m : metric.points) {
    maps.rho.push_back(build_rho(rep, m));
    maps.rho_inv.push_back(build_rho_inverse(rep, m));
    maps.eta.push_back(build_eta(maps.rho.back()));
  }
  return maps;
}

ResidualCurve phh1_curve(const Maps& maps, const MetricTrajectory& metric,
                         const CoefficientTrajectory& coeffs, const AlgebraRep& rep,
                         Eigen::Index b) {
  ResidualCurve out;
  out.values.assign(metric.size(), kNaN);
  for (std::size_t i = 1; i + 1 < metric.size(); ++i) {
    const Matrix eta_inv = maps.rho_inv[i] * maps.rho_inv[i].adjoint();
    const Matrix deta = (maps.eta[i + 1] - maps.eta[i - 1]) * centered_scale(metric.grid, i);
    const Matrix h = assemble_hamiltonian(rep, coefficients_at(coeffs, i));
    const Matrix defect = h.adjoint() - maps.eta[i] * h * eta_inv - kI * deta * eta_inv;
    out.values[i] = block_norm(defect, b);
  }
  return out;
}

ResidualCurve static_curve(const Maps& maps, const MetricTrajectory& metric,
                           const CoefficientTrajectory& coeffs, const AlgebraRep& rep,
                           Eigen::Index b) {
  ResidualCurve out;
  out.values.resize(metric.size());
  for (std::size_t i = 0; i < metric.size(); ++i) {
    const Matrix h = assemble_hamiltonian(rep, coefficients_at(coeffs, i));
    out.values[i] = block_norm(h.adjoint() * maps.eta[i] - maps.eta[i] * h, b);
  }
  return out;
}

DysonCheck dyson_curves(const Maps& maps, const MetricTrajectory& metric,
                        const CoefficientTrajectory& coeffs, const AlgebraRep& rep,
                        Eigen::Index b) {
  DysonCheck out;
  out.hermiticity_defect.values.assign(metric.size(), kNaN);
  out.commutator_defect.values.assign(metric.size(), kNaN);
  for (std::size_t i = 1; i + 1 < metric.size(); ++i) {
    const Matrix drho = (maps.rho[i + 1] - maps.rho[i - 1]) * centered_scale(metric.grid, i);
    const Matrix h = assemble_hamiltonian(rep, coefficients_at(coeffs, i));
    const Matrix dyson = maps.rho[i] * h * maps.rho_inv[i] + kI * drho * maps.rho_inv[i];
    out.hermiticity_defect.values[i] = block_norm(dyson - dyson.adjoint(), b);
    const Matrix ih = build_invariant_h(rep, metric.points[i], false);
    out.commutator_defect.values[i] = block_norm(commutator(dyson, ih), b);
  }
  return out;
}

ResidualCurve pseudo_norm_curve(const Maps& maps, const std::vector<Vector>& states) {
  ResidualCurve out;
  out.values.resize(states.size());
  double reference = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    // <Phi|eta|Phi> = |rho Phi|^2
    const double value = (maps.rho[i] * states[i]).squaredNorm();
    if (i == 0) reference = value;
    out.values[i] = std::abs(value - reference);
  }
  return out;
}

InvariantChecks invariant_curves(const Maps& maps, const MetricTrajectory& metric,
                                 const AlgebraRep& rep, Eigen::Index b) {
  const std::size_t n = metric.size();
  InvariantChecks out;
  out.similarity.values.resize(n);
  out.quasi_hermiticity.values.resize(n);
  out.eta_orthonormality.values.resize(n);
  out.spectrum_imag.values.resize(n);
  std::vector<Complex> reference;
  for (std::size_t i = 0; i < n; ++i) {
    const InvariantPair pair = eigensystem(rep, metric.points[i], maps.rho[i]);
    out.similarity.values[i] =
        block_norm(maps.rho[i] * pair.invariant_ph * maps.rho_inv[i] - pair.invariant_h, b);
    out.quasi_hermiticity.values[i] = quasi_hermiticity_residual(pair.invariant_ph, maps.eta[i], b);
    out.eta_orthonormality.values[i] =
        eta_orthonormality_defect(pair.eigenvectors_ph, maps.eta[i], b);

    std::vector<Complex> spectrum = invariant_spectrum(pair.invariant_ph);
    spectrum.resize(static_cast<std::size_t>(b));
    double imag = 0.0;
    for (Complex ev : spectrum) imag = std::max(imag, std::abs(ev.imag()));
    out.spectrum_imag.values[i] = imag;
    if (i == 0) {
      reference = spectrum;
    } else {
      for (std::size_t k = 0; k < spectrum.size(); ++k) {
        out.spectrum_drift = std::max(out.spectrum_drift, std::abs(spectrum[k] - reference[k]));
      }
    }
  }
  return out;
}

}  // namespace

double ResidualCurve::max() const {
  double r = 0.0;
  for (double v : values) {
    if (!std::isnan(v)) r = std::max(r, v);
  }
  return r;
}

std::vector<Vector> integrate_tdse(const AlgebraRep& rep, const CoefficientTrajectory& coeffs,
                                   const Vector& psi0) {
  coeffs.validate();
  if (psi0.size() != rep.dim) throw PreconditionError("initial state has the wrong dimension");
  const double h = coeffs.grid.step();
  const Complex minus_i{0.0, -1.0};

  std::vector<Vector> states;
  states.reserve(coeffs.size());
  states.push_back(psi0);

  Vector y = psi0;
  Vector stage(rep.dim), hy1(rep.dim), hy2(rep.dim), hy3(rep.dim), hy4(rep.dim);
  Matrix h_now = assemble_hamiltonian(rep, coefficients_at(coeffs, 0));
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
    const Matrix h_mid = assemble_hamiltonian(rep, coefficients_at_midpoint(coeffs, i));
    const Matrix h_next = assemble_hamiltonian(rep, coefficients_at(coeffs, i + 1));

    kernels::cgemv(view(h_now), view(y), view(hy1));
    stage = y;
    kernels::caxpy(minus_i * (0.5 * h), view(hy1), view(stage));
    kernels::cgemv(view(h_mid), view(stage), view(hy2));
    stage = y;
    kernels::caxpy(minus_i * (0.5 * h), view(hy2), view(stage));
    kernels::cgemv(view(h_mid), view(stage), view(hy3));
    stage = y;
    kernels::caxpy(minus_i * h, view(hy3), view(stage));
    kernels::cgemv(view(h_next), view(stage), view(hy4));

    kernels::caxpy(minus_i * (h / 6.0), view(hy1), view(y));
    kernels::caxpy(minus_i * (h / 3.0), view(hy2), view(y));
    kernels::caxpy(minus_i * (h / 3.0), view(hy3), view(y));
    kernels::caxpy(minus_i * (h / 6.0), view(hy4), view(y));

    const double norm = y.norm();
    if (!(norm <= kOverflow)) {
      throw BlowUp("TDSE state norm exceeded 1e8 at sample " + std::to_string(i + 1));
    }
    states.push_back(y);
    h_now = h_next;
  }
  return states;
}

ResidualCurve tdse_residual(const std::vector<Vector>& states, const CoefficientTrajectory& coeffs,
                            const AlgebraRep& rep, Eigen::Index block) {
  coeffs.validate();
  if (states.size() != coeffs.size()) throw PreconditionError("state count does not match grid");
  if (states.size() < 3) throw PreconditionError("TDSE residual needs at least three samples");
  const Eigen::Index b = resolve_block(rep, block);
  ResidualCurve r;
  r.values.assign(states.size(), kNaN);
  const bool five_point = coeffs.grid.is_uniform() && states.size() >= 5;
  const std::size_t edge = five_point ? 2 : 1;
  for (std::size_t i = edge; i + edge < states.size(); ++i) {
    Vector dpsi;
    if (five_point) {
      // Fourth-order stencil: the oscillation of Phi would swamp a second-order one.
      dpsi = (states[i - 2] - 8.0 * states[i - 1] + 8.0 * states[i + 1] - states[i + 2]) /
             (12.0 * coeffs.grid.step());
    } else {
      dpsi = (states[i + 1] - states[i - 1]) * centered_scale(coeffs.grid, i);
    }
    const Matrix h = assemble_hamiltonian(rep, coefficients_at(coeffs, i));
    const Vector defect = kI * dpsi - h * states[i];
    r.values[i] = defect.head(b).norm() / states[i].head(b).norm();
  }
  return r;
}

ResidualCurve invariance_residual(const MetricTrajectory& metric,
                                  const CoefficientTrajectory& coeffs, const AlgebraRep& rep,
                                  Eigen::Index block) {
  check_shared_grid(metric, coeffs);
  const Eigen::Index b = resolve_block(rep, block);
  std::vector<Matrix> inv;
  inv.reserve(metric.size());
  for (const auto& m : metric.points) inv.push_back(build_invariant_ph(rep, m));
  ResidualCurve r;
  r.values.assign(metric.size(), kNaN);
  for (std::size_t i = 1; i + 1 < metric.size(); ++i) {
    const Matrix di = (inv[i + 1] - inv[i - 1]) * centered_scale(metric.grid, i);
    const Matrix h = assemble_hamiltonian(rep, coefficients_at(coeffs, i));
    r.values[i] = block_norm(di - kI * commutator(inv[i], h), b);
  }
  return r;
}

ResidualCurve phh1_residual(const MetricTrajectory& metric, const CoefficientTrajectory& coeffs,
                            const AlgebraRep& rep, Eigen::Index block) {
  check_shared_grid(metric, coeffs);
  return phh1_curve(build_maps(metric, rep), metric, coeffs, rep, resolve_block(rep, block));
}

ResidualCurve static_quasi_hermiticity(const MetricTrajectory& metric,
                                       const CoefficientTrajectory& coeffs, const AlgebraRep& rep,
                                       Eigen::Index block) {
  check_shared_grid(metric, coeffs);
  return static_curve(build_maps(metric, rep), metric, coeffs, rep, resolve_block(rep, block));
}

DysonCheck dyson_check(const MetricTrajectory& metric, const CoefficientTrajectory& coeffs,
                       const AlgebraRep& rep, Eigen::Index block) {
  check_shared_grid(metric, coeffs);
  return dyson_curves(build_maps(metric, rep), metric, coeffs, rep, resolve_block(rep, block));
}

ResidualCurve pseudo_norm_drift(const std::vector<Vector>& states, const MetricTrajectory& metric,
                                const AlgebraRep& rep) {
  if (states.size() != metric.size()) throw PreconditionError("state count does not match grid");
  return pseudo_norm_curve(build_maps(metric, rep), states);
}

InvariantChecks invariant_checks(const MetricTrajectory& metric, const AlgebraRep& rep,
                                 Eigen::Index block) {
  return invariant_curves(build_maps(metric, rep), metric, rep, resolve_block(rep, block));
}

VerificationResult verify_scenario(const AlgebraRep& rep, const MetricTrajectory& metric,
                                   const CoefficientTrajectory& coeffs, const Vector& psi0,
                                   Eigen::Index block) {
  VerificationResult out;
  VerificationReport& r = out.report;

  r.auxiliary = auxiliary_residuals(metric, coeffs);
  r.auxiliary_max = r.auxiliary.max();

  r.uv_curve.values.resize(metric.size());
  for (std::size_t i = 0; i < metric.size(); ++i) {
    const auto t = transformed_coeffs(metric.points[i], coeffs.omega[i], coeffs.alpha[i],
                                      coeffs.beta[i], metric.kind);
    r.uv_curve.values[i] = std::max(std::abs(t.u), std::abs(t.v));
    r.imag_w_max = std::max(r.imag_w_max, std::abs(t.w.imag()));
  }
  r.uv_max = r.uv_curve.max();

  out.solution = evolve(rep, metric, coeffs, psi0);
  out.rk4_states = integrate_tdse(rep, coeffs, psi0);

  const Eigen::Index b = resolve_block(rep, block);
  r.oracle_curve.values.resize(metric.size());
  for (std::size_t i = 0; i < metric.size(); ++i) {
    r.oracle_curve.values[i] =
        max_norm(Vector((out.solution.states[i] - out.rk4_states[i]).head(b)));
  }
  r.oracle_difference = r.oracle_curve.max();

  r.tdse_curve = tdse_residual(out.solution.states, coeffs, rep, b);
  r.tdse_residual = r.tdse_curve.max();
  r.invariance_curve = invariance_residual(metric, coeffs, rep, b);
  r.invariance_residual = r.invariance_curve.max();
  const Maps maps = build_maps(metric, rep);
  r.phh1_curve = phh1_curve(maps, metric, coeffs, rep, b);
  r.phh1_residual = r.phh1_curve.max();
  const DysonCheck dyson = dyson_curves(maps, metric, coeffs, rep, b);
  r.dyson_curve = dyson.hermiticity_defect;
  r.dyson_hermiticity_defect = dyson.hermiticity_defect.max();
  r.dyson_commutator_defect = dyson.commutator_defect.max();
  r.pseudo_norm_curve = pseudo_norm_curve(maps, out.solution.states);
  r.pseudo_norm_drift = r.pseudo_norm_curve.max();
  r.pseudo_norm_drift_rk4 = pseudo_norm_curve(maps, out.rk4_states).max();

  const InvariantChecks inv = invariant_curves(maps, metric, rep, b);
  r.similarity_residual = inv.similarity.max();
  r.quasi_hermiticity_residual = inv.quasi_hermiticity.max();
  r.eta_orthonormality_defect = inv.eta_orthonormality.max();
  r.spectrum_imag_max = inv.spectrum_imag.max();
  r.spectrum_drift = inv.spectrum_drift;
  return out;
}

}  // namespace pseudoinv
