#pragma once

#include "pseudoinv/types.hpp"

namespace pseudoinv {

/// Matrix exponential (scaling and squaring with Pade approximant).
Matrix expm(const Matrix& a);

/// Largest absolute entry.
double max_norm(const Matrix& a);
double max_norm(const Vector& v);

/// Largest absolute entry of the leading rows x cols sub-block.
double max_norm_block(const Matrix& a, Eigen::Index rows, Eigen::Index cols);

Matrix commutator(const Matrix& a, const Matrix& b);

/// Ratio of extreme singular values.
double condition_number(const Matrix& a);

}  // namespace pseudoinv
