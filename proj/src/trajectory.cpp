#include "pseudoinv/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pseudoinv {

namespace {

constexpr double kUniformTolerance = 1e-9;
constexpr double kConstraintTolerance = 1e-10;

// Derivative at x of the quadratic through (x0,f0), (x1,f1), (x2,f2).
double quadratic_derivative(double x, double x0, double x1, double x2, double f0, double f1,
                            double f2) {
  const double l0 = (2.0 * x - x1 - x2) / ((x0 - x1) * (x0 - x2));
  const double l1 = (2.0 * x - x0 - x2) / ((x1 - x0) * (x1 - x2));
  const double l2 = (2.0 * x - x0 - x1) / ((x2 - x0) * (x2 - x1));
  return l0 * f0 + l1 * f1 + l2 * f2;
}

template <typename T>
T midpoint_value(const std::vector<T>& f, std::size_t i) {
  const std::size_t last = f.size() - 1;
  if (last < 3) return 0.5 * (f[i] + f[i + 1]);
  if (i == 0) return (5.0 * f[0] + 15.0 * f[1] - 5.0 * f[2] + f[3]) / 16.0;
  if (i + 1 == last) {
    return (f[last - 3] - 5.0 * f[last - 2] + 15.0 * f[last - 1] + 5.0 * f[last]) / 16.0;
  }
  return (-f[i - 1] + 9.0 * f[i] + 9.0 * f[i + 1] - f[i + 2]) / 16.0;
}

}  // namespace

TimeGrid::TimeGrid(std::vector<double> times) : times_(std::move(times)) {
  if (times_.size() < 2) throw PreconditionError("time grid needs at least two samples");
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1])) {
      throw PreconditionError("time grid must be strictly increasing (sample " +
                              std::to_string(i) + ")");
    }
  }
  const double h = (times_.back() - times_.front()) / static_cast<double>(times_.size() - 1);
  uniform_ = true;
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (std::abs((times_[i] - times_[i - 1]) - h) > kUniformTolerance * std::max(1.0, h)) {
      uniform_ = false;
      break;
    }
  }
}

TimeGrid TimeGrid::uniform(double horizon, std::size_t steps) {
  if (!(horizon > 0.0)) throw PreconditionError("horizon must be positive");
  if (steps < 1) throw PreconditionError("grid needs at least one step");
  std::vector<double> t(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    t[i] = horizon * static_cast<double>(i) / static_cast<double>(steps);
  }
  return TimeGrid(std::move(t));
}

double TimeGrid::step() const {
  if (!uniform_) throw PreconditionError("grid is not uniform");
  return (times_.back() - times_.front()) / static_cast<double>(times_.size() - 1);
}

std::vector<double> grid_derivative(const std::vector<double>& f, const TimeGrid& grid) {
  const std::size_t n = grid.size();
  if (f.size() != n) throw PreconditionError("sample count does not match grid");
  if (n < 3) throw PreconditionError("finite differences need at least three samples");
  const auto& t = grid.times();
  std::vector<double> d(n);
  d[0] = quadratic_derivative(t[0], t[0], t[1], t[2], f[0], f[1], f[2]);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    d[i] = quadratic_derivative(t[i], t[i - 1], t[i], t[i + 1], f[i - 1], f[i], f[i + 1]);
  }
  d[n - 1] = quadratic_derivative(t[n - 1], t[n - 3], t[n - 2], t[n - 1], f[n - 3], f[n - 2],
                                  f[n - 1]);
  return d;
}

Curve::Curve(Sampled s) : form_(std::move(s)) {
  const auto& sampled = std::get<Sampled>(form_);
  if (sampled.values.size() != sampled.grid.size()) {
    throw PreconditionError("sampled curve has " + std::to_string(sampled.values.size()) +
                            " values for " + std::to_string(sampled.grid.size()) + " grid points");
  }
  sampled_derivative_ = grid_derivative(sampled.values, sampled.grid);
}

std::size_t Curve::sample_index(double t) const {
  const auto& s = std::get<Sampled>(form_);
  const auto& times = s.grid.times();
  auto it = std::lower_bound(times.begin(), times.end(), t - 1e-9 * std::max(1.0, std::abs(t)));
  if (it == times.end() || std::abs(*it - t) > 1e-9 * std::max(1.0, std::abs(t))) {
    throw PreconditionError("sampled curve evaluated off its grid at t=" + std::to_string(t));
  }
  return static_cast<std::size_t>(it - times.begin());
}

double Curve::value(double t) const {
  return std::visit(
      [&](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Constant>) {
          return f.value;
        } else if constexpr (std::is_same_v<F, Ramp>) {
          return f.start + f.slope * t;
        } else if constexpr (std::is_same_v<F, Sinusoid>) {
          return f.offset + f.amplitude * std::sin(f.frequency * t + f.phase);
        } else {
          return f.values[sample_index(t)];
        }
      },
      form_);
}

double Curve::derivative(double t) const {
  return std::visit(
      [&](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Constant>) {
          return 0.0;
        } else if constexpr (std::is_same_v<F, Ramp>) {
          return f.slope;
        } else if constexpr (std::is_same_v<F, Sinusoid>) {
          return f.amplitude * f.frequency * std::cos(f.frequency * t + f.phase);
        } else {
          return sampled_derivative_[sample_index(t)];
        }
      },
      form_);
}

std::vector<double> Curve::sample(const TimeGrid& grid) const {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = value(grid[i]);
  return out;
}

std::vector<double> Curve::sample_derivative(const TimeGrid& grid) const {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = derivative(grid[i]);
  return out;
}

std::string Curve::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Constant>) {
          os << "constant(" << f.value << ")";
        } else if constexpr (std::is_same_v<F, Ramp>) {
          os << "ramp(start=" << f.start << ", slope=" << f.slope << ")";
        } else if constexpr (std::is_same_v<F, Sinusoid>) {
          os << "sinusoid(offset=" << f.offset << ", amplitude=" << f.amplitude
             << ", frequency=" << f.frequency << ", phase=" << f.phase << ")";
        } else {
          os << "table(" << f.values.size() << " samples)";
        }
      },
      form_);
  return os.str();
}

void CoefficientTrajectory::validate() const {
  const std::size_t n = grid.size();
  if (n < 2 || omega.size() != n || alpha.size() != n || beta.size() != n) {
    throw PreconditionError("coefficient trajectory arrays do not match the grid");
  }
}

bool CoefficientTrajectory::is_real(double tol) const {
  const auto real = [tol](const std::vector<Complex>& v) {
    return std::all_of(v.begin(), v.end(), [tol](Complex c) { return std::abs(c.imag()) <= tol; });
  };
  return real(omega) && real(alpha) && real(beta);
}

HamiltonianCoeffs coefficients_at(const CoefficientTrajectory& c, std::size_t i) {
  return {c.omega[i], c.alpha[i], c.beta[i]};
}

HamiltonianCoeffs coefficients_at_midpoint(const CoefficientTrajectory& c, std::size_t i) {
  return {midpoint_value(c.omega, i), midpoint_value(c.alpha, i), midpoint_value(c.beta, i)};
}

Matrix assemble_hamiltonian(const AlgebraRep& rep, const HamiltonianCoeffs& c) {
  return 2.0 * (c.omega * rep.k0 + c.alpha * rep.kminus + c.beta * rep.kplus);
}

void MetricTrajectory::validate() const {
  if (points.size() != grid.size()) {
    throw PreconditionError("metric trajectory does not match the grid");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const MetricPoint& m = points[i];
    if (!(m.theta0 > 0.0)) {
      throw PreconditionError("theta0 <= 0 at sample " + std::to_string(i));
    }
    if (metric_consistency_residual(m, kind) > kConstraintTolerance * std::max(1.0, m.theta0)) {
      throw PreconditionError("chi violates chi = -theta0 - (D/2) zeta^2 at sample " +
                              std::to_string(i));
    }
  }
}

MetricTrajectory sample_metric(const Curve& zeta, const Curve& theta0, const TimeGrid& grid,
                               AlgebraKind kind) {
  MetricTrajectory m;
  m.grid = grid;
  m.kind = kind;
  m.points.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    m.points.push_back(
        make_metric_point(zeta.value(t), theta0.value(t), kind, zeta.derivative(t),
                          theta0.derivative(t)));
  }
  m.validate();
  return m;
}

MetricTrajectory with_grid_derivatives(MetricTrajectory metric) {
  std::vector<double> z(metric.size()), th(metric.size());
  for (std::size_t i = 0; i < metric.size(); ++i) {
    z[i] = metric.points[i].zeta;
    th[i] = metric.points[i].theta0;
  }
  const auto dz = grid_derivative(z, metric.grid);
  const auto dth = grid_derivative(th, metric.grid);
  for (std::size_t i = 0; i < metric.size(); ++i) {
    metric.points[i].zeta_dot = dz[i];
    metric.points[i].theta0_dot = dth[i];
  }
  return metric;
}

}  // namespace pseudoinv
