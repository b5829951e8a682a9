#include "pseudoinv/invariant.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pseudoinv/linalg.hpp"

namespace pseudoinv {

namespace {
constexpr double kMinEigenGap = 1e-10;
constexpr double kMaxImaginaryEigenvalue = 1e-9;
}

DeltaCoefficients delta_coefficients(const MetricPoint& m, AlgebraKind kind) {
  if (!(m.theta0 > 0.0)) throw PreconditionError("theta0 must be positive");
  const double d = structure_constant(kind);
  const double hd = 0.5 * d;
  DeltaCoefficients out;
  out.delta1 = (hd * m.zeta * m.zeta - m.chi) / m.theta0;
  out.delta2 = -m.chi * m.zeta / m.theta0;
  out.delta3 = -m.zeta / m.theta0;
  out.bracket = (hd * m.zeta * m.zeta - m.chi) * out.delta1 - 2.0 * d * m.chi * m.zeta * out.delta3;
  return out;
}

DeltaConstraintResiduals delta_constraint_residuals(const DeltaCoefficients& delta,
                                                    const MetricPoint& m, AlgebraKind kind) {
  const double hd = half_structure_constant(kind);
  DeltaConstraintResiduals r;
  r.chi_relation = std::abs(delta.delta2 - m.chi * delta.delta3);
  // With th- = -zeta: delta1 = ((D/2) th-^2 - chi)/th- delta3.
  r.zeta_relation = std::abs(m.zeta * delta.delta1 + (hd * m.zeta * m.zeta - m.chi) * delta.delta3);
  return r;
}

ConjugatedInvariantCoeffs conjugated_invariant_coeffs(double tp, double tm, double theta0,
                                                      double d1, double d2, double d3,
                                                      AlgebraKind kind) {
  const double d = structure_constant(kind);
  const double hd = 0.5 * d;
  const double chi = -theta0 - hd * tp * tm;
  const double scale = 1.0 / theta0;
  ConjugatedInvariantCoeffs c;
  c.k0 = scale * ((hd * tm * tp - chi) * d1 + d * (tp * d2 + chi * tm * d3));
  c.kminus = scale * (tm * d1 + d2 - hd * tm * tm * d3);
  c.kplus = scale * (chi * tp * d1 - hd * tp * tp * d2 + chi * chi * d3);
  return c;
}

Matrix build_invariant_ph(const AlgebraRep& rep, const MetricPoint& m) {
  if (!(m.theta0 > 0.0)) throw PreconditionError("theta0 must be positive");
  const double hd = half_structure_constant(rep.kind);
  return (2.0 / m.theta0) * ((hd * m.zeta * m.zeta - m.chi) * rep.k0 -
                             m.chi * m.zeta * rep.kminus - m.zeta * rep.kplus);
}

Matrix build_invariant_h(const AlgebraRep& rep, const MetricPoint& m, bool normalize) {
  if (normalize) return 2.0 * rep.k0;
  const DeltaCoefficients delta = delta_coefficients(m, rep.kind);
  return (2.0 / m.theta0) * delta.bracket * rep.k0;
}

void k0_eigenbasis(const AlgebraRep& rep, std::vector<double>& eigenvalues, Matrix& vectors) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rep.k0);
  if (es.info() != Eigen::Success) throw Error("K0 eigen-decomposition failed");
  // SelfAdjointEigenSolver already sorts ascending.
  eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + rep.dim);
  for (std::size_t n = 1; n < eigenvalues.size(); ++n) {
    if (eigenvalues[n] - eigenvalues[n - 1] < kMinEigenGap) {
      throw PreconditionError("K0 spectrum is degenerate");
    }
  }
  vectors = es.eigenvectors();
  for (Eigen::Index n = 0; n < vectors.cols(); ++n) {
    Eigen::Index imax = 0;
    vectors.col(n).cwiseAbs().maxCoeff(&imax);
    const Complex c = vectors(imax, n);
    vectors.col(n) *= std::abs(c) / c;
  }
}

InvariantPair eigensystem(const AlgebraRep& rep, const MetricPoint& m, const Matrix& rho) {
  InvariantPair out;
  out.invariant_ph = build_invariant_ph(rep, m);
  out.invariant_h = build_invariant_h(rep, m, false);
  k0_eigenbasis(rep, out.eigenvalues, out.eigenvectors_h);
  Eigen::PartialPivLU<Matrix> lu(rho);
  out.eigenvectors_ph = lu.solve(out.eigenvectors_h);

  // <phi_n| eta I^PH |phi_n> = <psi_n| rho I^PH rho^{-1} |psi_n> must come out real.
  const Matrix projected = out.eigenvectors_ph.adjoint() * (rho.adjoint() * rho) *
                           out.invariant_ph * out.eigenvectors_ph;
  for (Eigen::Index n = 0; n < rep.closed_rows(); ++n) {
    if (std::abs(projected(n, n).imag()) > kMaxImaginaryEigenvalue) {
      throw Error("invariant eigenvalue " + std::to_string(n) + " has imaginary part " +
                  std::to_string(projected(n, n).imag()));
    }
  }
  return out;
}

double quasi_hermiticity_residual(const Matrix& invariant, const Matrix& eta, Eigen::Index block) {
  const Matrix defect = invariant.adjoint() * eta - eta * invariant;
  if (block < 0) return max_norm(defect);
  return max_norm_block(defect, block, block);
}

double eta_orthonormality_defect(const Matrix& vectors, const Matrix& eta, Eigen::Index count) {
  if (count < 0) count = vectors.cols();
  const auto cols = vectors.leftCols(count);
  const Matrix gram = cols.adjoint() * eta * cols;
  return max_norm(Matrix(gram - Matrix::Identity(count, count)));
}

std::vector<Complex> invariant_spectrum(const Matrix& invariant) {
  Eigen::ComplexEigenSolver<Matrix> es(invariant, false);
  if (es.info() != Eigen::Success) throw Error("invariant eigen-decomposition failed");
  std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + invariant.rows());
  std::sort(ev.begin(), ev.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  return ev;
}

}  // namespace pseudoinv
