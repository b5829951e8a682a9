#pragma once

// Reference implementations that share no code with the library: a Taylor
// matrix exponential, explicit two-dimensional generators, a plain Eigen RK4
// and a brute-force decomposition of rho H rho^-1 + i rho' rho^-1.

#include <cmath>
#include <functional>
#include <vector>

#include "pseudoinv/types.hpp"

namespace oracle {

using pseudoinv::Complex;
using pseudoinv::Matrix;
using pseudoinv::Vector;

/// exp(A) by scaling, a 30-term Taylor sum and repeated squaring.
inline Matrix taylor_expm(const Matrix& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::ldexp(1.0, squarings) > 0.25) ++squarings;
  const Matrix scaled = a / std::ldexp(1.0, squarings);
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// Two-dimensional generators with [K0, K+-] = +-K+-, [K+, K-] = D K0.
struct Pair {
  Matrix k0, kplus, kminus;
};

inline Pair two_dim(int d) {
  Pair p;
  p.k0 = Matrix::Zero(2, 2);
  p.k0(0, 0) = 0.5;
  p.k0(1, 1) = -0.5;
  p.kplus = Matrix::Zero(2, 2);
  p.kplus(0, 1) = 1.0;
  p.kminus = Matrix::Zero(2, 2);
  p.kminus(1, 0) = d > 0 ? 1.0 : -1.0;
  return p;
}

/// Fock-space annihilation operator.
inline Matrix annihilation(Eigen::Index dim) {
  Matrix a = Matrix::Zero(dim, dim);
  for (Eigen::Index k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

/// Classical RK4 for i psi' = H(t) psi on a uniform grid.
inline std::vector<Vector> rk4(const std::function<Matrix(double)>& h, const Vector& psi0,
                               double horizon, std::size_t steps) {
  const double dt = horizon / static_cast<double>(steps);
  const Complex mi(0.0, -1.0);
  std::vector<Vector> out{psi0};
  Vector y = psi0;
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = dt * static_cast<double>(i);
    const Vector k1 = mi * (h(t) * y);
    const Vector k2 = mi * (h(t + dt / 2) * (y + dt / 2 * k1));
    const Vector k3 = mi * (h(t + dt / 2) * (y + dt / 2 * k2));
    const Vector k4 = mi * (h(t + dt) * (y + dt * k3));
    y += dt / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.push_back(y);
  }
  return out;
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace oracle
