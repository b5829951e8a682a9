#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pseudoinv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by its inputs.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// BCH factorization denominator cosh(theta) - (eps/theta) sinh(theta) vanished.
class SingularFactorization : public Error {
public:
  using Error::Error;
};

/// The Dyson map or metric is numerically singular.
class NonInvertibleMap : public Error {
public:
  using Error::Error;
};

/// |zeta| dropped below the coordinate-singularity threshold at a grid sample.
class ZetaTooSmall : public Error {
public:
  ZetaTooSmall(std::size_t sample, double zeta)
      : Error("|zeta| = " + std::to_string(zeta) + " below 1e-8 at sample " +
              std::to_string(sample)),
        sample_(sample) {}
  std::size_t sample() const noexcept { return sample_; }

private:
  std::size_t sample_;
};

/// An integrated quantity left its admissible range (metric blow-up, state overflow).
class BlowUp : public Error {
public:
  using Error::Error;
};

/// Hamiltonian and metric trajectories do not satisfy the auxiliary relations.
class Inconsistent : public Error {
public:
  using Error::Error;
};

/// Scenario document could not be parsed.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace pseudoinv
