#include "pseudoinv/metric.hpp"

#include <cmath>
#include <utility>

#include "pseudoinv/linalg.hpp"

namespace pseudoinv {

namespace {

constexpr double kSingularDenominator = 1e-12;
constexpr double kMaxConditionNumber = 1e12;
// Below this |theta^2| the power series of sinh(x)/x is exact to rounding.
constexpr double kSeriesThreshold = 1e-4;

bool is_diagonal(const Matrix& m) {
  return (m - Matrix(m.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0;
}

}  // namespace

double even_cosh(double x) {
  if (x >= 0.0) return std::cosh(std::sqrt(x));
  return std::cos(std::sqrt(-x));
}

double even_sinhc(double x) {
  if (std::abs(x) < kSeriesThreshold) {
    return 1.0 + x / 6.0 * (1.0 + x / 20.0 * (1.0 + x / 42.0));
  }
  if (x > 0.0) {
    const double t = std::sqrt(x);
    return std::sinh(t) / t;
  }
  const double t = std::sqrt(-x);
  return std::sin(t) / t;
}

FactorizationCoeffs factorization_coeffs(const ExponentParams& p, AlgebraKind kind) {
  const double d = structure_constant(kind);
  const double theta_sq = p.epsilon * p.epsilon + 2.0 * d * p.mu * p.mu;
  const double c = even_cosh(theta_sq);
  const double s = even_sinhc(theta_sq);
  const double den = c - p.epsilon * s;
  if (std::abs(den) < kSingularDenominator) {
    throw SingularFactorization("BCH denominator vanishes for eps=" + std::to_string(p.epsilon) +
                                ", mu=" + std::to_string(p.mu));
  }
  FactorizationCoeffs f;
  f.theta_plus = 2.0 * p.mu * s / den;
  f.theta_minus = f.theta_plus;
  f.theta0 = 1.0 / (den * den);
  f.chi = -(c + p.epsilon * s) / den;
  return f;
}

double chi_from(double zeta, double theta0, AlgebraKind kind) {
  return -theta0 - half_structure_constant(kind) * zeta * zeta;
}

MetricPoint make_metric_point(double zeta, double theta0, AlgebraKind kind, double zeta_dot,
                              double theta0_dot) {
  return MetricPoint{zeta, theta0, chi_from(zeta, theta0, kind), zeta_dot, theta0_dot};
}

MetricPoint metric_point_from(const ExponentParams& p, AlgebraKind kind) {
  const FactorizationCoeffs f = factorization_coeffs(p, kind);
  MetricPoint m;
  m.zeta = -f.theta_plus;
  m.theta0 = f.theta0;
  m.chi = f.chi;
  return m;
}

double metric_consistency_residual(const MetricPoint& m, AlgebraKind kind) {
  return std::abs(m.theta0 + half_structure_constant(kind) * m.zeta * m.zeta + m.chi);
}

Matrix lie_exponential(const AlgebraRep& rep, const ExponentParams& p) {
  return expm(2.0 * (p.epsilon * rep.k0 + p.mu * (rep.kminus + rep.kplus)));
}

Matrix diagonal_power(const AlgebraRep& rep, double log_scale) {
  if (!is_diagonal(rep.k0)) return expm(log_scale * rep.k0);
  Vector d(rep.dim);
  for (Eigen::Index n = 0; n < rep.dim; ++n) d(n) = std::exp(log_scale * rep.k0(n, n).real());
  return d.asDiagonal();
}

Matrix factorized_product(const AlgebraRep& rep, double theta_plus, double theta0,
                          double theta_minus) {
  if (!(theta0 > 0.0)) throw PreconditionError("theta0 must be positive");
  return expm(theta_plus * rep.kplus) * diagonal_power(rep, std::log(theta0)) *
         expm(theta_minus * rep.kminus);
}

namespace {

// exp(s K+) and exp(s K-); for real s and K- = K+^dagger the second is the
// adjoint of the first, which saves one exponential.
std::pair<Matrix, Matrix> ladder_exponentials(const AlgebraRep& rep, double s) {
  Matrix up = expm(s * rep.kplus);
  if (rep.kminus == rep.kplus.adjoint()) {
    Matrix down = up.adjoint();
    return {std::move(up), std::move(down)};
  }
  return {std::move(up), expm(s * rep.kminus)};
}

}  // namespace

Matrix build_rho(const AlgebraRep& rep, const MetricPoint& m) {
  if (!(m.theta0 > 0.0)) {
    throw PreconditionError("theta0 must be positive, got " + std::to_string(m.theta0));
  }
  const auto [up, down] = ladder_exponentials(rep, -m.zeta);
  Matrix rho = up * diagonal_power(rep, std::log(m.theta0)) * down;
  const double cond = condition_number(rho);
  if (!(cond <= kMaxConditionNumber)) {
    throw NonInvertibleMap("rho condition number " + std::to_string(cond) + " exceeds 1e12");
  }
  return rho;
}

Matrix build_rho_inverse(const AlgebraRep& rep, const MetricPoint& m) {
  if (!(m.theta0 > 0.0)) {
    throw PreconditionError("theta0 must be positive, got " + std::to_string(m.theta0));
  }
  const auto [up, down] = ladder_exponentials(rep, m.zeta);
  return down * diagonal_power(rep, -std::log(m.theta0)) * up;
}

Matrix build_eta(const Matrix& rho) {
  Matrix eta = rho.adjoint() * rho;
  // Symmetrize away rounding so the eigen-solver sees an exactly Hermitian input.
  eta = 0.5 * (eta + eta.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> es(eta, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success || !(es.eigenvalues().minCoeff() > 0.0)) {
    throw NonInvertibleMap("metric is not positive definite");
  }
  return eta;
}

std::array<double, 6> adjoint_identity_residuals(const AlgebraRep& rep, double theta_plus,
                                                 double theta0, double theta_minus,
                                                 Eigen::Index rows) {
  if (!(theta0 > 0.0)) throw PreconditionError("theta0 must be positive");
  if (rows < 0) rows = rep.closed_rows();
  const double d = rep.d();
  const double log0 = std::log(theta0);
  const Matrix ep = expm(theta_plus * rep.kplus);
  const Matrix ep_inv = expm(-theta_plus * rep.kplus);
  const Matrix em = expm(theta_minus * rep.kminus);
  const Matrix em_inv = expm(-theta_minus * rep.kminus);
  const Matrix e0 = diagonal_power(rep, log0);
  const Matrix e0_inv = diagonal_power(rep, -log0);
  const auto& k0 = rep.k0;
  const auto& kp = rep.kplus;
  const auto& km = rep.kminus;
  const auto residual = [&](const Matrix& lhs, const Matrix& rhs) {
    return max_norm_block(lhs - rhs, rows, rows);
  };
  return {
      residual(em * k0 * em_inv, k0 + theta_minus * km),
      residual(ep * k0 * ep_inv, k0 - theta_plus * kp),
      residual(e0 * km * e0_inv, km / theta0),
      residual(ep * km * ep_inv, km + d * theta_plus * k0 - 0.5 * d * theta_plus * theta_plus * kp),
      residual(e0 * kp * e0_inv, theta0 * kp),
      residual(em * kp * em_inv,
               kp - d * theta_minus * k0 - 0.5 * d * theta_minus * theta_minus * km),
  };
}

}  // namespace pseudoinv
