#include "pseudoinv/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "pseudoinv/invariant.hpp"
#include "pseudoinv/linalg.hpp"

namespace pseudoinv {

namespace {

constexpr double kMinZeta = 1e-8;
constexpr double kMaxMetric = 1e8;

double max_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

void check_shared_grid(const MetricTrajectory& metric, const CoefficientTrajectory& coeffs) {
  coeffs.validate();
  if (metric.points.size() != coeffs.size() || !(metric.grid == coeffs.grid)) {
    throw PreconditionError("metric and coefficient trajectories must share one grid");
  }
}

struct MetricRate {
  double zeta_dot;
  double theta0_dot;
};

// zeta_dot and theta0_dot as functions of the Hamiltonian's imaginary parts.
MetricRate auxiliary_rhs(double zeta, double theta0, const HamiltonianCoeffs& c, AlgebraKind kind) {
  const double d = structure_constant(kind);
  const double chi = chi_from(zeta, theta0, kind);
  const double sw = c.omega.imag();
  const double sa = c.alpha.imag();
  const double sb = c.beta.imag();
  MetricRate r;
  r.zeta_dot = -2.0 * zeta * sw + 2.0 * sa - d * zeta * zeta * sb;
  r.theta0_dot = (2.0 * theta0 / zeta) * (-2.0 * zeta * sw + sa + (chi - d * zeta * zeta) * sb);
  return r;
}

std::array<double, 4> algebraic_residuals(const MetricPoint& m, const HamiltonianCoeffs& c,
                                          AlgebraKind kind) {
  const double hd = half_structure_constant(kind);
  const double cw = c.omega.real();
  const double ca = c.alpha.real();
  const double cb = c.beta.real();
  const double shifted = m.chi - hd * m.zeta * m.zeta;
  const TransformedCoeffs t = transformed_coeffs(m, c.omega, c.alpha, c.beta, kind);
  return {std::abs(m.chi * cb - ca), std::abs(shifted * ca - m.chi * m.zeta * cw),
          std::abs(m.zeta * cw - shifted * cb), std::abs(t.w.imag())};
}

}  // namespace

TransformedCoeffs transformed_coeffs(const MetricPoint& m, Complex omega, Complex alpha,
                                     Complex beta, AlgebraKind kind) {
  if (!(m.theta0 > 0.0)) throw PreconditionError("theta0 must be positive");
  const double d = structure_constant(kind);
  const double hd = 0.5 * d;
  const double z = m.zeta;
  const double chi = m.chi;
  const double inv = 1.0 / m.theta0;
  TransformedCoeffs t;
  t.w = -inv * (omega * (hd * z * z - chi) - d * z * (alpha + beta * chi) +
                0.5 * kI * (m.theta0_dot + d * z * m.zeta_dot));
  t.u = inv * (omega * z - alpha + hd * beta * z * z + 0.5 * kI * m.zeta_dot);
  t.v = inv * (omega * chi * z + hd * alpha * z * z - beta * chi * chi -
               0.5 * kI * (z * m.theta0_dot - m.theta0 * m.zeta_dot + hd * z * z * m.zeta_dot));
  return t;
}

CoefficientTrajectory synthesize_hamiltonian(const MetricTrajectory& metric,
                                             const std::vector<double>& beta_re) {
  metric.validate();
  if (beta_re.size() != metric.size()) {
    throw PreconditionError("Re(beta) samples do not match the metric grid");
  }
  const double d = structure_constant(metric.kind);
  const double hd = 0.5 * d;
  CoefficientTrajectory c;
  c.grid = metric.grid;
  c.omega.resize(metric.size());
  c.alpha.resize(metric.size());
  c.beta.resize(metric.size());
  for (std::size_t i = 0; i < metric.size(); ++i) {
    const MetricPoint& m = metric.points[i];
    if (std::abs(m.zeta) < kMinZeta) throw ZetaTooSmall(i, m.zeta);
    const double z = m.zeta;
    const double cb = beta_re[i];
    const double sb = m.zeta_dot / (2.0 * m.theta0);
    const double ca = m.chi * cb;
    const double cw = (m.chi - hd * z * z) * cb / z;
    const double sa = m.zeta_dot - z * m.theta0_dot / (2.0 * m.theta0) + m.chi * sb;
    const double sw = (-m.zeta_dot + 2.0 * sa - d * z * z * sb) / (2.0 * z);
    c.omega[i] = {cw, sw};
    c.alpha[i] = {ca, sa};
    c.beta[i] = {cb, sb};
  }
  return c;
}

const std::vector<std::string>& AuxiliaryResiduals::names() {
  static const std::vector<std::string> n{"cont1", "cont2", "rel1", "rel2", "rel3", "imag_w"};
  return n;
}

const std::vector<double>& AuxiliaryResiduals::curve(std::size_t index) const {
  switch (index) {
    case 0: return cont1;
    case 1: return cont2;
    case 2: return rel1;
    case 3: return rel2;
    case 4: return rel3;
    case 5: return imag_w;
    default: throw std::out_of_range("auxiliary residual index");
  }
}

double AuxiliaryResiduals::max() const {
  double r = 0.0;
  for (std::size_t k = 0; k < names().size(); ++k) r = std::max(r, max_of(curve(k)));
  return r;
}

double AuxiliaryResiduals::max_rel() const {
  return std::max({max_of(rel1), max_of(rel2), max_of(rel3)});
}

AuxiliaryResiduals auxiliary_residuals(const MetricTrajectory& metric,
                                       const CoefficientTrajectory& coeffs) {
  check_shared_grid(metric, coeffs);
  const std::size_t n = metric.size();
  AuxiliaryResiduals r;
  for (auto* v : {&r.cont1, &r.cont2, &r.rel1, &r.rel2, &r.rel3, &r.imag_w}) v->resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const MetricPoint& m = metric.points[i];
    const HamiltonianCoeffs c = coefficients_at(coeffs, i);
    const MetricRate rate = auxiliary_rhs(m.zeta, m.theta0, c, metric.kind);
    r.cont1[i] = std::abs(m.theta0_dot - rate.theta0_dot);
    r.cont2[i] = std::abs(m.zeta_dot - rate.zeta_dot);
    const auto alg = algebraic_residuals(m, c, metric.kind);
    r.rel1[i] = alg[0];
    r.rel2[i] = alg[1];
    r.rel3[i] = alg[2];
    r.imag_w[i] = alg[3];
  }
  return r;
}

AuxiliarySolution solve_auxiliary(const CoefficientTrajectory& coeffs, double zeta0,
                                  double theta00, AlgebraKind kind,
                                  const AuxiliaryOptions& options) {
  coeffs.validate();
  if (std::abs(zeta0) < kMinZeta) throw ZetaTooSmall(0, zeta0);
  if (!(theta00 > 0.0)) throw PreconditionError("theta0(0) must be positive");
  const double h = coeffs.grid.step();
  const std::size_t n = coeffs.size();

  const auto check_range = [](std::size_t i, double z, double th) {
    const bool ok = std::abs(z) >= kMinZeta && std::abs(z) <= kMaxMetric && th >= kMinZeta &&
                    th <= kMaxMetric;
    if (!ok) {
      throw BlowUp("auxiliary integration left the admissible range at sample " +
                   std::to_string(i) + " (zeta=" + std::to_string(z) +
                   ", theta0=" + std::to_string(th) + ")");
    }
  };

  AuxiliarySolution out;
  out.metric.grid = coeffs.grid;
  out.metric.kind = kind;
  out.metric.points.resize(n);
  double z = zeta0;
  double th = theta00;
  for (std::size_t i = 0;; ++i) {
    const HamiltonianCoeffs here = coefficients_at(coeffs, i);
    const MetricRate k1 = auxiliary_rhs(z, th, here, kind);
    out.metric.points[i] = make_metric_point(z, th, kind, k1.zeta_dot, k1.theta0_dot);
    if (i + 1 == n) break;
    const HamiltonianCoeffs mid = coefficients_at_midpoint(coeffs, i);
    const HamiltonianCoeffs next = coefficients_at(coeffs, i + 1);
    const MetricRate k2 = auxiliary_rhs(z + 0.5 * h * k1.zeta_dot, th + 0.5 * h * k1.theta0_dot,
                                        mid, kind);
    const MetricRate k3 = auxiliary_rhs(z + 0.5 * h * k2.zeta_dot, th + 0.5 * h * k2.theta0_dot,
                                        mid, kind);
    const MetricRate k4 = auxiliary_rhs(z + h * k3.zeta_dot, th + h * k3.theta0_dot, next, kind);
    z += h / 6.0 * (k1.zeta_dot + 2.0 * k2.zeta_dot + 2.0 * k3.zeta_dot + k4.zeta_dot);
    th += h / 6.0 * (k1.theta0_dot + 2.0 * k2.theta0_dot + 2.0 * k3.theta0_dot + k4.theta0_dot);
    if (!std::isfinite(z) || !std::isfinite(th)) {
      throw BlowUp("auxiliary integration diverged at sample " + std::to_string(i + 1));
    }
    check_range(i + 1, z, th);
  }

  out.rel_residual.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto alg = algebraic_residuals(out.metric.points[i], coefficients_at(coeffs, i), kind);
    out.rel_residual[i] = *std::max_element(alg.begin(), alg.end());
  }
  out.max_rel_residual = max_of(out.rel_residual);
  if (out.max_rel_residual > options.tol) {
    throw Inconsistent("Hamiltonian is incompatible with the auxiliary relations (residual " +
                       std::to_string(out.max_rel_residual) + " > " +
                       std::to_string(options.tol) + ")");
  }
  return out;
}

std::vector<double> phase_rate(const MetricTrajectory& metric,
                               const CoefficientTrajectory& coeffs) {
  check_shared_grid(metric, coeffs);
  const double d = structure_constant(metric.kind);
  const double hd = 0.5 * d;
  std::vector<double> g(metric.size());
  for (std::size_t i = 0; i < metric.size(); ++i) {
    const MetricPoint& m = metric.points[i];
    g[i] = ((hd * m.zeta * m.zeta - m.chi) * coeffs.omega[i].real() -
            2.0 * d * m.zeta * coeffs.alpha[i].real()) /
           m.theta0;
  }
  return g;
}

std::vector<double> cumulative_integral(const std::vector<double>& f, const TimeGrid& grid) {
  const std::size_t n = grid.size();
  if (f.size() != n) throw PreconditionError("sample count does not match grid");
  std::vector<double> out(n, 0.0);
  if (!grid.is_uniform() || n < 3) {
    for (std::size_t i = 1; i < n; ++i) {
      out[i] = out[i - 1] + 0.5 * (grid[i] - grid[i - 1]) * (f[i - 1] + f[i]);
    }
    return out;
  }
  const double h = grid.step();
  for (std::size_t i = 1; i < n; ++i) {
    if (i % 2 == 0) {
      out[i] = out[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    } else if (i + 1 < n) {
      out[i] = out[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
    } else {
      out[i] = out[i - 1] + h / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
    }
  }
  return out;
}

std::vector<double> phase(double k_n, const MetricTrajectory& metric,
                          const CoefficientTrajectory& coeffs) {
  std::vector<double> integral = cumulative_integral(phase_rate(metric, coeffs), metric.grid);
  for (double& v : integral) v *= -2.0 * k_n;
  return integral;
}

Vector initial_state_from_weights(const AlgebraRep& rep, const MetricPoint& m0,
                                  const std::vector<std::pair<std::size_t, Complex>>& weights) {
  std::vector<double> k;
  Matrix basis;
  k0_eigenbasis(rep, k, basis);
  Vector psi_h = Vector::Zero(rep.dim);
  double norm_sq = 0.0;
  for (const auto& [index, w] : weights) {
    if (index >= static_cast<std::size_t>(rep.dim)) {
      throw PreconditionError("initial-state eigenindex " + std::to_string(index) +
                              " outside the representation");
    }
    psi_h += w * basis.col(static_cast<Eigen::Index>(index));
    norm_sq += std::norm(w);
  }
  if (!(norm_sq > 0.0)) throw PreconditionError("initial-state weights are all zero");
  psi_h /= std::sqrt(norm_sq);
  return build_rho_inverse(rep, m0) * psi_h;
}

SolutionBundle evolve(const AlgebraRep& rep, const MetricTrajectory& metric,
                      const CoefficientTrajectory& coeffs, const Vector& psi0,
                      const EvolveOptions& options) {
  check_shared_grid(metric, coeffs);
  metric.validate();
  if (psi0.size() != rep.dim) throw PreconditionError("initial state has the wrong dimension");
  const double inconsistency = auxiliary_residuals(metric, coeffs).max();
  if (inconsistency > options.consistency_tol) {
    throw Inconsistent("trajectories violate the auxiliary relations (residual " +
                       std::to_string(inconsistency) + ")");
  }

  const Matrix rho0 = build_rho(rep, metric.points.front());
  const Matrix eta0 = build_eta(rho0);
  const double pseudo_norm = (psi0.adjoint() * eta0 * psi0)(0, 0).real();
  if (std::abs(pseudo_norm - 1.0) > options.normalization_tol) {
    throw PreconditionError("initial state is not normalized in the eta(0) inner product (" +
                            std::to_string(pseudo_norm) + ")");
  }

  SolutionBundle out;
  Matrix basis;
  k0_eigenbasis(rep, out.eigenvalues, basis);
  const Matrix phi0 = build_rho_inverse(rep, metric.points.front()) * basis;
  const Vector c = phi0.adjoint() * (eta0 * psi0);
  out.coefficients.assign(c.data(), c.data() + c.size());

  const std::vector<double> integral =
      cumulative_integral(phase_rate(metric, coeffs), metric.grid);
  out.phases.assign(out.eigenvalues.size(), std::vector<double>(metric.size()));
  for (std::size_t n = 0; n < out.eigenvalues.size(); ++n) {
    for (std::size_t i = 0; i < metric.size(); ++i) {
      out.phases[n][i] = -2.0 * out.eigenvalues[n] * integral[i];
    }
  }

  out.states.reserve(metric.size());
  for (std::size_t i = 0; i < metric.size(); ++i) {
    Vector psi_h = Vector::Zero(rep.dim);
    for (std::size_t n = 0; n < out.eigenvalues.size(); ++n) {
      const Complex cn = out.coefficients[n];
      if (cn == Complex{}) continue;
      psi_h += cn * std::exp(kI * out.phases[n][i]) * basis.col(static_cast<Eigen::Index>(n));
    }
    out.states.push_back(build_rho_inverse(rep, metric.points[i]) * psi_h);
  }
  return out;
}

}  // namespace pseudoinv
