#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pseudoinv/algebra.hpp"
#include "pseudoinv/metric.hpp"
#include "pseudoinv/types.hpp"

namespace pseudoinv {

/// Strictly increasing time samples t_0 .. t_M (hbar = 1).
class TimeGrid {
public:
  TimeGrid() = default;
  explicit TimeGrid(std::vector<double> times);

  static TimeGrid uniform(double horizon, std::size_t steps);

  std::size_t size() const { return times_.size(); }
  std::size_t steps() const { return times_.empty() ? 0 : times_.size() - 1; }
  double operator[](std::size_t i) const { return times_[i]; }
  const std::vector<double>& times() const { return times_; }
  double horizon() const { return times_.empty() ? 0.0 : times_.back() - times_.front(); }
  bool is_uniform() const { return uniform_; }
  /// Uniform spacing; throws PreconditionError on a non-uniform grid.
  double step() const;

  bool operator==(const TimeGrid& other) const { return times_ == other.times_; }

private:
  std::vector<double> times_;
  bool uniform_ = false;
};

/// Closed-form or tabulated real function of time with its derivative.
class Curve {
public:
  struct Constant {
    double value = 0.0;
  };
  struct Ramp {
    double start = 0.0;
    double slope = 0.0;
  };
  /// offset + amplitude * sin(frequency t + phase)
  struct Sinusoid {
    double offset = 0.0;
    double amplitude = 0.0;
    double frequency = 0.0;
    double phase = 0.0;
  };
  /// Values on a grid; only evaluable at the grid's own sample times.
  struct Sampled {
    TimeGrid grid;
    std::vector<double> values;
  };

  Curve() : form_(Constant{}) {}
  Curve(Constant c) : form_(c) {}
  Curve(Ramp r) : form_(r) {}
  Curve(Sinusoid s) : form_(s) {}
  Curve(Sampled s);

  double value(double t) const;
  double derivative(double t) const;
  std::vector<double> sample(const TimeGrid& grid) const;
  std::vector<double> sample_derivative(const TimeGrid& grid) const;
  bool is_constant() const { return std::holds_alternative<Constant>(form_); }
  std::string describe() const;

private:
  std::size_t sample_index(double t) const;

  std::variant<Constant, Ramp, Sinusoid, Sampled> form_;
  std::vector<double> sampled_derivative_;
};

/// Second-order finite-difference derivative (centered inside, one-sided at the ends).
std::vector<double> grid_derivative(const std::vector<double>& values, const TimeGrid& grid);

/// Complex coefficients (omega, alpha, beta) of H = 2 omega K0 + 2 alpha K- + 2 beta K+.
struct CoefficientTrajectory {
  TimeGrid grid;
  std::vector<Complex> omega;
  std::vector<Complex> alpha;
  std::vector<Complex> beta;

  std::size_t size() const { return grid.size(); }
  void validate() const;
  bool is_real(double tol = 0.0) const;
};

struct HamiltonianCoeffs {
  Complex omega;
  Complex alpha;
  Complex beta;
};

HamiltonianCoeffs coefficients_at(const CoefficientTrajectory& c, std::size_t i);

/// Coefficients at t_i + h/2 by four-point cubic interpolation (uniform grids).
HamiltonianCoeffs coefficients_at_midpoint(const CoefficientTrajectory& c, std::size_t i);

Matrix assemble_hamiltonian(const AlgebraRep& rep, const HamiltonianCoeffs& c);

struct MetricTrajectory {
  TimeGrid grid;
  AlgebraKind kind = AlgebraKind::su2;
  std::vector<MetricPoint> points;

  std::size_t size() const { return grid.size(); }
  /// theta0 > 0 and chi = -theta0 - (D/2) zeta^2 to 1e-10 at every sample.
  void validate() const;
};

/// Samples zeta(t), theta0(t) with their derivatives; chi follows from the constraint.
MetricTrajectory sample_metric(const Curve& zeta, const Curve& theta0, const TimeGrid& grid,
                               AlgebraKind kind);

/// Replace the stored derivatives by second-order grid differences.
MetricTrajectory with_grid_derivatives(MetricTrajectory metric);

}  // namespace pseudoinv
