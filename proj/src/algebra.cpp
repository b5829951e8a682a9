#include "pseudoinv/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "pseudoinv/linalg.hpp"

namespace pseudoinv {

AlgebraKind algebra_kind_from_structure_constant(int d) {
  if (d == 2) return AlgebraKind::su2;
  if (d == -2) return AlgebraKind::su11;
  throw PreconditionError("structure constant must be +2 or -2, got " + std::to_string(d));
}

std::string to_string(AlgebraKind kind) { return kind == AlgebraKind::su2 ? "su2" : "su11"; }

double CommutatorResiduals::max() const { return std::max({k0_kplus, k0_kminus, kplus_kminus}); }

AlgebraRep build_su2_rep(double j) {
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (!(j > 0.0) || std::abs(twice - rounded) > 1e-12) {
    throw PreconditionError("spin j must be a positive half-integer, got " + std::to_string(j));
  }
  const auto dim = static_cast<Eigen::Index>(rounded) + 1;
  const double jj = 0.5 * rounded;

  AlgebraRep rep;
  rep.kind = AlgebraKind::su2;
  rep.dim = dim;
  rep.k0 = Matrix::Zero(dim, dim);
  rep.kplus = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double m = jj - static_cast<double>(i);
    rep.k0(i, i) = m;
    if (i > 0) {
      // J+|m> = sqrt(j(j+1) - m(m+1)) |m+1>, and |m+1> sits one row above.
      rep.kplus(i - 1, i) = std::sqrt(jj * (jj + 1.0) - m * (m + 1.0));
    }
  }
  rep.kminus = rep.kplus.adjoint();
  rep.boundary_rows = 0;
  rep.label = "spin-" + std::to_string(jj);
  return rep;
}

AlgebraRep build_su11_rep(double bargmann_k, Eigen::Index dim) {
  if (!(bargmann_k > 0.0)) {
    throw PreconditionError("Bargmann index must be positive");
  }
  if (dim < 4) {
    throw PreconditionError("su(1,1) truncation needs dim >= 4");
  }
  AlgebraRep rep;
  rep.kind = AlgebraKind::su11;
  rep.dim = dim;
  rep.k0 = Matrix::Zero(dim, dim);
  rep.kplus = Matrix::Zero(dim, dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    const double nd = static_cast<double>(n);
    rep.k0(n, n) = bargmann_k + nd;
    if (n + 1 < dim) {
      rep.kplus(n + 1, n) = std::sqrt((nd + 1.0) * (2.0 * bargmann_k + nd));
    }
  }
  rep.kminus = rep.kplus.adjoint();
  rep.boundary_rows = 1;
  rep.label = "su11-k" + std::to_string(bargmann_k);
  return rep;
}

Matrix boson_annihilation(Eigen::Index dim) {
  Matrix a = Matrix::Zero(dim, dim);
  for (Eigen::Index n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

AlgebraRep build_boson_rep(Eigen::Index dim) {
  if (dim < 4) {
    throw PreconditionError("boson truncation needs dim >= 4");
  }
  const Matrix a = boson_annihilation(dim);
  const Matrix ad = a.adjoint();
  AlgebraRep rep;
  rep.kind = AlgebraKind::su11;
  rep.dim = dim;
  rep.k0 = 0.5 * (ad * a + 0.5 * Matrix::Identity(dim, dim));
  rep.kminus = 0.5 * a * a;
  rep.kplus = rep.kminus.adjoint();
  rep.boundary_rows = 2;
  rep.label = "boson";
  return rep;
}

CommutatorResiduals commutator_residuals(const AlgebraRep& rep) {
  const Eigen::Index rows = rep.closed_rows();
  const Eigen::Index cols = rep.dim;
  const double d = static_cast<double>(rep.d());
  CommutatorResiduals r;
  r.k0_kplus = max_norm_block(commutator(rep.k0, rep.kplus) - rep.kplus, rows, cols);
  r.k0_kminus = max_norm_block(commutator(rep.k0, rep.kminus) + rep.kminus, rows, cols);
  r.kplus_kminus = max_norm_block(commutator(rep.kplus, rep.kminus) - d * rep.k0, rows, cols);
  return r;
}

}  // namespace pseudoinv
