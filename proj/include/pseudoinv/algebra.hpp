#pragma once

#include <string>

#include "pseudoinv/types.hpp"

namespace pseudoinv {

/// su(1,1) (D = -2) or su(2) (D = +2); the structure constant of [K+, K-] = D K0.
enum class AlgebraKind { su11, su2 };

constexpr int structure_constant(AlgebraKind kind) { return kind == AlgebraKind::su2 ? 2 : -2; }

/// D / 2 as a double, the combination that appears throughout the construction.
constexpr double half_structure_constant(AlgebraKind kind) {
  return 0.5 * structure_constant(kind);
}

/// Inverse of structure_constant; rejects anything other than +-2.
AlgebraKind algebra_kind_from_structure_constant(int d);

std::string to_string(AlgebraKind kind);

/// Finite matrix representation of a generator triple (K0, K+, K-).
///
/// For the infinite-dimensional su(1,1) representations the basis is truncated
/// and the commutation relations fail on the last `boundary_rows` rows; every
/// algebraic check is restricted to the rows above that boundary.
struct AlgebraRep {
  AlgebraKind kind = AlgebraKind::su2;
  Eigen::Index dim = 0;
  Matrix k0;
  Matrix kplus;
  Matrix kminus;
  Eigen::Index boundary_rows = 0;
  std::string label;

  int d() const { return structure_constant(kind); }
  /// Number of leading basis rows on which the algebra holds.
  Eigen::Index closed_rows() const { return dim - boundary_rows; }
};

/// Spin-j matrices: K0 = Jz (diagonal, m = j..-j), K+- = J+-.
AlgebraRep build_su2_rep(double j);

/// Discrete-series su(1,1) matrices with Bargmann index k, truncated to `dim` states.
AlgebraRep build_su11_rep(double bargmann_k, Eigen::Index dim);

/// K0 = (a+a + 1/2)/2, K- = a^2/2, K+ = a+^2/2 on a truncated Fock space.
AlgebraRep build_boson_rep(Eigen::Index dim);

/// Truncated annihilation operator a on `dim` Fock states.
Matrix boson_annihilation(Eigen::Index dim);

struct CommutatorResiduals {
  double k0_kplus = 0.0;      // |[K0,K+] - K+|
  double k0_kminus = 0.0;     // |[K0,K-] + K-|
  double kplus_kminus = 0.0;  // |[K+,K-] - D K0|

  double max() const;
};

/// Max-norm residuals of the three commutation relations on the closed rows.
CommutatorResiduals commutator_residuals(const AlgebraRep& rep);

}  // namespace pseudoinv
