#pragma once

#include <array>

#include "pseudoinv/algebra.hpp"
#include "pseudoinv/types.hpp"

namespace pseudoinv {

/// Exponent of the Hermitian group element exp{2[eps K0 + mu (K- + K+)]}; mu is real.
struct ExponentParams {
  double epsilon = 0.0;
  double mu = 0.0;
};

/// Ordered-product coefficients: exp(th+ K+) exp(ln th0 K0) exp(th- K-).
struct FactorizationCoeffs {
  double theta_plus = 0.0;
  double theta0 = 1.0;
  double theta_minus = 0.0;
  double chi = -1.0;
};

/// Disentangles the Hermitian exponential into the K+ K0 K- ordered product.
/// theta^2 = eps^2 + 2 D mu^2 may be negative for su(1,1); cosh and sinh(x)/x
/// are evaluated as even functions of theta^2 so no complex intermediate appears.
/// Throws SingularFactorization when |cosh theta - eps sinh(theta)/theta| < 1e-12.
FactorizationCoeffs factorization_coeffs(const ExponentParams& p, AlgebraKind kind);

/// cosh(sqrt(x)) and sinh(sqrt(x))/sqrt(x), continued to x < 0.
double even_cosh(double theta_squared);
double even_sinhc(double theta_squared);

/// Metric parameters at one instant. The rotation angle of theta+- is fixed at
/// zero (mu real), so theta+ = theta- = -zeta and only zeta is stored.
struct MetricPoint {
  double zeta = 0.0;
  double theta0 = 1.0;
  double chi = -1.0;
  double zeta_dot = 0.0;
  double theta0_dot = 0.0;
};

/// chi = -theta0 - (D/2) zeta^2
double chi_from(double zeta, double theta0, AlgebraKind kind);

MetricPoint make_metric_point(double zeta, double theta0, AlgebraKind kind, double zeta_dot = 0.0,
                              double theta0_dot = 0.0);

/// MetricPoint of the group element with exponent p.
MetricPoint metric_point_from(const ExponentParams& p, AlgebraKind kind);

/// |theta0 + (D/2) zeta^2 + chi|, zero for a consistent point.
double metric_consistency_residual(const MetricPoint& m, AlgebraKind kind);

/// exp{2[eps K0 + mu (K- + K+)]} by direct exponentiation.
Matrix lie_exponential(const AlgebraRep& rep, const ExponentParams& p);

/// exp(th+ K+) exp(ln th0 K0) exp(th- K-) for arbitrary real coefficients.
Matrix factorized_product(const AlgebraRep& rep, double theta_plus, double theta0,
                          double theta_minus);

/// rho = exp(-zeta K+) exp(ln theta0 K0) exp(-zeta K-).
/// Throws PreconditionError for theta0 <= 0 and NonInvertibleMap when cond(rho) > 1e12.
Matrix build_rho(const AlgebraRep& rep, const MetricPoint& m);

/// rho^{-1} = exp(zeta K-) exp(-ln theta0 K0) exp(zeta K+), assembled factor by factor.
Matrix build_rho_inverse(const AlgebraRep& rep, const MetricPoint& m);

/// eta = rho^dagger rho; throws NonInvertibleMap unless positive definite.
Matrix build_eta(const Matrix& rho);

/// exp(s K0) for diagonal K0, built from elementwise exponentials of the diagonal.
Matrix diagonal_power(const AlgebraRep& rep, double log_scale);

/// Residuals of the six conjugation identities used to move K0, K+- through
/// the factors of rho, evaluated on the leading `rows` x `rows` block (default: closed rows).
///   0: e^{th- K-} K0 e^{-th- K-} = K0 + th- K-
///   1: e^{th+ K+} K0 e^{-th+ K+} = K0 - th+ K+
///   2: e^{ln th0 K0} K- e^{-ln th0 K0} = K- / th0
///   3: e^{th+ K+} K- e^{-th+ K+} = K- + D th+ K0 - (D/2) th+^2 K+
///   4: e^{ln th0 K0} K+ e^{-ln th0 K0} = th0 K+
///   5: e^{th- K-} K+ e^{-th- K-} = K+ - D th- K0 - (D/2) th-^2 K-
std::array<double, 6> adjoint_identity_residuals(const AlgebraRep& rep, double theta_plus,
                                                 double theta0, double theta_minus,
                                                 Eigen::Index rows = -1);

}  // namespace pseudoinv
