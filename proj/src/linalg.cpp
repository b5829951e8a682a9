#include "pseudoinv/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace pseudoinv {

Matrix expm(const Matrix& a) { return a.exp(); }

double max_norm(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double max_norm(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

double max_norm_block(const Matrix& a, Eigen::Index rows, Eigen::Index cols) {
  rows = std::min(rows, a.rows());
  cols = std::min(cols, a.cols());
  if (rows <= 0 || cols <= 0) return 0.0;
  return a.topLeftCorner(rows, cols).cwiseAbs().maxCoeff();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

double condition_number(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

}  // namespace pseudoinv
