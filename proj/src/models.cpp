#include "pseudoinv/models.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "pseudoinv/dynamics.hpp"
#include "pseudoinv/invariant.hpp"
#include "pseudoinv/linalg.hpp"
#include "pseudoinv/metric.hpp"

namespace pseudoinv {

namespace {

constexpr double kScenarioTol = 1e-8;
constexpr Eigen::Index kSwansonDim = 40;
constexpr Eigen::Index kSwansonBlock = 20;

std::vector<std::pair<std::size_t, Complex>> default_weights(Eigen::Index dim) {
  if (dim <= 2) return {{0, 0.6}, {1, 0.8}};
  return {{0, 0.6}, {1, Complex(0.5, 0.1)}, {2, 0.4}};
}

MetricPreset swanson_driven_metric() {
  return {Curve::Sinusoid{-0.06, 0.01, 0.7, 0.0}, Curve::Sinusoid{1.0, 0.05, 0.5, 0.3}};
}

MetricPreset spin_complex_metric() {
  return {Curve::Sinusoid{-0.3, 0.1, 0.7, 0.0}, Curve::Sinusoid{1.1, 0.2, 0.5, 1.2}};
}

// Spin matrices in the m = j..-j basis, built here rather than borrowed from
// the algebra module so the section formulas are checked independently.
void spin_matrices(double j, Matrix& jz, Matrix& jplus) {
  const auto dim = static_cast<Eigen::Index>(std::lround(2.0 * j)) + 1;
  jz = Matrix::Zero(dim, dim);
  jplus = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double m = j - static_cast<double>(i);
    jz(i, i) = m;
    if (i > 0) jplus(i - 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
}

void check_spin(double j) {
  const double twice = 2.0 * j;
  if (!(j >= 0.5) || std::abs(twice - std::round(twice)) > 1e-12) {
    throw PreconditionError("spin j must be a positive half-integer");
  }
}

}  // namespace

ScenarioSpec build_scenario(std::string name, AlgebraRep rep, const MetricPreset& metric,
                            const Curve& beta_re, const TimeGrid& grid,
                            std::vector<std::pair<std::size_t, Complex>> weights,
                            Eigen::Index check_block) {
  ScenarioSpec s;
  s.name = std::move(name);
  s.metric = sample_metric(metric.zeta, metric.theta0, grid, rep.kind);
  s.coeffs = synthesize_hamiltonian(s.metric, beta_re.sample(grid));
  const double residual = auxiliary_residuals(s.metric, s.coeffs).max();
  if (residual > kScenarioTol) {
    throw Inconsistent("scenario " + s.name + " is inconsistent (auxiliary residual " +
                       std::to_string(residual) + ")");
  }
  double norm_sq = 0.0;
  for (const auto& w : weights) norm_sq += std::norm(w.second);
  if (!(norm_sq > 0.0)) throw PreconditionError("initial-state weights are all zero");
  for (auto& w : weights) w.second /= std::sqrt(norm_sq);
  s.initial_state = initial_state_from_weights(rep, s.metric.points.front(), weights);
  s.weights = std::move(weights);
  s.horizon = grid.horizon();
  s.steps = grid.steps();
  s.check_block = check_block;
  s.rep = std::move(rep);
  return s;
}

ScenarioSpec swanson_scenario(Eigen::Index dim, const MetricPreset& metric, const Curve& beta_re,
                              const TimeGrid& grid) {
  if (dim < 8) throw PreconditionError("Swanson scenarios need at least 8 Fock states");
  const Eigen::Index block = std::min(dim, std::max<Eigen::Index>(dim / 2, 4));
  return build_scenario("swanson", build_boson_rep(dim), metric, beta_re, grid,
                        default_weights(dim), block);
}

ScenarioSpec spin_scenario(double j, const MetricPreset& metric, const Curve& beta_re,
                           const TimeGrid& grid) {
  check_spin(j);
  AlgebraRep rep = build_su2_rep(j);
  const Eigen::Index dim = rep.dim;
  return build_scenario("spin", std::move(rep), metric, beta_re, grid, default_weights(dim));
}

double real_coefficient_zeta(double omega, double alpha, double beta, AlgebraKind kind,
                             Branch branch) {
  const double a = half_structure_constant(kind) * beta;
  if (beta == 0.0) throw PreconditionError("real-coefficient zeta needs beta != 0");
  const double disc = omega * omega + 2.0 * structure_constant(kind) * alpha * beta;
  if (disc < 0.0) {
    throw PreconditionError("negative discriminant: no real metric for these coefficients");
  }
  const double root = std::sqrt(disc);
  // Cancellation-free pair: q / a and c / q with c = -alpha.
  const double q = -0.5 * (omega + (omega >= 0.0 ? root : -root));
  const double big = q / a;
  const double small = q != 0.0 ? -alpha / q : big;
  const double plus = (-omega + root) / (2.0 * a);
  switch (branch) {
    case Branch::plus:
      return std::abs(plus - big) < std::abs(plus - small) ? big : small;
    case Branch::minus:
      return std::abs(plus - big) < std::abs(plus - small) ? small : big;
    case Branch::smaller_magnitude:
      break;
  }
  return std::abs(small) <= std::abs(big) ? small : big;
}

MetricPreset real_coefficient_metric(double omega, double alpha, double beta, AlgebraKind kind,
                                     Branch branch) {
  const double zeta = real_coefficient_zeta(omega, alpha, beta, kind, branch);
  const double chi = alpha / beta;
  const double theta0 = -chi - half_structure_constant(kind) * zeta * zeta;
  if (!(theta0 > 0.0)) {
    throw PreconditionError("real coefficients give theta0 = " + std::to_string(theta0) +
                            " <= 0; no admissible metric");
  }
  return {Curve::Constant{zeta}, Curve::Constant{theta0}};
}

double real_case_proportionality(const ScenarioSpec& spec) {
  if (!spec.coeffs.is_real(1e-12)) {
    throw PreconditionError("proportionality check needs real coefficients");
  }
  const double hd = half_structure_constant(spec.rep.kind);
  double worst = 0.0;
  for (std::size_t i = 0; i < spec.coeffs.size(); ++i) {
    const MetricPoint& m = spec.metric.points[i];
    const HamiltonianCoeffs c = coefficients_at(spec.coeffs, i);
    const double scale = c.omega.real() * m.theta0 / (hd * m.zeta * m.zeta - m.chi);
    const Matrix h = assemble_hamiltonian(spec.rep, c);
    const Matrix defect = h - scale * build_invariant_ph(spec.rep, m);
    worst = std::max(worst, max_norm_block(defect, spec.rep.closed_rows(), spec.rep.dim));
  }
  return worst;
}

Vector swanson_eigenstate(std::size_t n, double zeta, double theta0, Eigen::Index fock_dim) {
  if (static_cast<Eigen::Index>(n) >= fock_dim) throw PreconditionError("n outside Fock space");
  if (!(theta0 > 0.0)) throw PreconditionError("theta0 must be positive");
  const Matrix a = boson_annihilation(fock_dim);
  const Matrix a2 = a * a;
  const Matrix ad2 = a.adjoint() * a.adjoint();
  Vector diag(fock_dim);
  const double log_theta = std::log(theta0);
  for (Eigen::Index k = 0; k < fock_dim; ++k) {
    diag(k) = std::exp(-0.5 * log_theta * static_cast<double>(k - static_cast<Eigen::Index>(n)));
  }
  Vector ket = Vector::Zero(fock_dim);
  ket(static_cast<Eigen::Index>(n)) = 1.0;
  const Vector right = expm(Complex(0.5 * zeta) * ad2) * ket;
  const Vector mid = diag.cwiseProduct(right);
  return expm(Complex(0.5 * zeta) * a2) * mid;
}

Vector spin_eigenstate(double j, double m, double zeta, double theta0) {
  check_spin(j);
  if (!(theta0 > 0.0)) throw PreconditionError("theta0 must be positive");
  Matrix jz, jplus;
  spin_matrices(j, jz, jplus);
  const Eigen::Index index = static_cast<Eigen::Index>(std::lround(j - m));
  if (index < 0 || index >= jz.rows() || std::abs(j - m - static_cast<double>(index)) > 1e-12) {
    throw PreconditionError("m is not a weight of the spin-j representation");
  }
  const Matrix shifted = jz - m * Matrix::Identity(jz.rows(), jz.cols());
  Vector ket = Vector::Zero(jz.rows());
  ket(index) = 1.0;
  return expm(zeta * jplus.adjoint()) * expm(-std::log(theta0) * shifted) *
         expm(zeta * jplus) * ket;
}

std::vector<double> swanson_phase(std::size_t n, const MetricTrajectory& metric,
                                  const CoefficientTrajectory& coeffs) {
  std::vector<double> f(metric.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const MetricPoint& m = metric.points[i];
    f[i] = ((m.zeta * m.zeta + m.chi) * coeffs.omega[i].real() -
            4.0 * m.zeta * coeffs.alpha[i].real()) /
           m.theta0;
  }
  std::vector<double> out = cumulative_integral(f, metric.grid);
  for (double& v : out) v *= static_cast<double>(n) + 0.5;
  return out;
}

std::vector<double> spin_phase(double m_value, const MetricTrajectory& metric,
                               const CoefficientTrajectory& coeffs) {
  std::vector<double> f(metric.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const MetricPoint& m = metric.points[i];
    f[i] = (2.0 / m.theta0) * ((m.zeta * m.zeta - m.chi) * coeffs.omega[i].real() -
                               4.0 * m.zeta * coeffs.alpha[i].real());
  }
  std::vector<double> out = cumulative_integral(f, metric.grid);
  for (double& v : out) v *= -m_value;
  return out;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"swanson-const-real", "swanson-driven",
                                                 "spin-half-complex", "spin-one-complex",
                                                 "real-case-check"};
  return names;
}

ScenarioSpec make_preset(const std::string& name, const PresetOptions& options) {
  const TimeGrid grid = TimeGrid::uniform(options.horizon, options.steps);
  const Eigen::Index dim = options.dim.value_or(kSwansonDim);
  auto swanson = [&](const MetricPreset& metric, const Curve& beta_re) {
    if (dim < 8) throw PreconditionError("Swanson scenarios need at least 8 Fock states");
    return build_scenario(name, build_boson_rep(dim), metric, beta_re, grid,
                          default_weights(dim), std::min(dim, kSwansonBlock));
  };
  auto spin = [&](double default_j, const MetricPreset& metric, const Curve& beta_re) {
    const double j = options.j.value_or(default_j);
    check_spin(j);
    AlgebraRep rep = build_su2_rep(j);
    const Eigen::Index d = rep.dim;
    return build_scenario(name, std::move(rep), metric, beta_re, grid, default_weights(d));
  };

  if (name == "swanson-const-real") {
    const double omega = 1.0, alpha = -0.05, beta = 0.05;
    return swanson(real_coefficient_metric(omega, alpha, beta, AlgebraKind::su11),
                   Curve::Constant{beta});
  }
  if (name == "swanson-driven") {
    return swanson(swanson_driven_metric(), Curve::Sinusoid{0.05, 0.01, 0.3, 0.0});
  }
  if (name == "spin-half-complex") {
    return spin(0.5, spin_complex_metric(), Curve::Sinusoid{0.3, 0.1, 0.3, 0.0});
  }
  if (name == "spin-one-complex") {
    return spin(1.0, {Curve::Sinusoid{-0.25, 0.08, 0.9, 0.4}, Curve::Sinusoid{0.9, 0.15, 0.6, 0.0}},
                Curve::Sinusoid{0.25, 0.05, 0.4, 1.0});
  }
  if (name == "real-case-check") {
    const double omega = 1.0, alpha = -0.2, beta = 0.5;
    return spin(0.5, real_coefficient_metric(omega, alpha, beta, AlgebraKind::su2),
                Curve::Constant{beta});
  }
  throw PreconditionError("unknown scenario preset '" + name + "'");
}

RandomDrive random_drive(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };
  const double sign = unit(rng) < 0.5 ? -1.0 : 1.0;
  const double zeta_offset = sign * uniform(0.1, 0.4);
  // Amplitudes at most half the offsets keep |zeta| and theta0 away from zero.
  Curve::Sinusoid zeta{zeta_offset, uniform(0.0, 0.5) * std::abs(zeta_offset),
                       uniform(0.1, 2.0), uniform(0.0, 6.283185307179586)};
  const double theta_offset = uniform(0.7, 1.5);
  Curve::Sinusoid theta0{theta_offset, uniform(0.0, 0.4) * theta_offset, uniform(0.1, 2.0),
                         uniform(0.0, 6.283185307179586)};
  const double beta_offset = uniform(0.1, 0.5);
  Curve::Sinusoid beta{beta_offset, uniform(0.0, 0.5) * beta_offset, uniform(0.1, 2.0),
                       uniform(0.0, 6.283185307179586)};
  return {{zeta, theta0}, beta};
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("PSEUDOINV_SEED");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  return (end != nullptr && *end == '\0') ? value : fallback;
}

}  // namespace pseudoinv
