#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pseudoinv/algebra.hpp"
#include "pseudoinv/trajectory.hpp"
#include "pseudoinv/types.hpp"

namespace pseudoinv {

/// Closed-form curve family for zeta(t) and theta0(t).
struct MetricPreset {
  Curve zeta;
  Curve theta0;
};

struct ScenarioSpec {
  std::string name;
  AlgebraRep rep;
  MetricTrajectory metric;
  CoefficientTrajectory coeffs;
  Vector initial_state;
  /// Eigen-index weights the initial state was built from (normalized).
  std::vector<std::pair<std::size_t, Complex>> weights;
  double horizon = 0.0;
  std::size_t steps = 0;
  /// Leading basis states on which residuals are trusted (-1: whole space).
  Eigen::Index check_block = -1;
};

/// Samples the metric, synthesizes the Hamiltonian from Re beta and prepares
/// the initial state. Throws Inconsistent if the auxiliary residuals exceed 1e-8.
ScenarioSpec build_scenario(std::string name, AlgebraRep rep, const MetricPreset& metric,
                            const Curve& beta_re, const TimeGrid& grid,
                            std::vector<std::pair<std::size_t, Complex>> weights,
                            Eigen::Index check_block = -1);

/// Generalized Swanson oscillator on `dim` Fock states (dim >= 8).
ScenarioSpec swanson_scenario(Eigen::Index dim, const MetricPreset& metric, const Curve& beta_re,
                              const TimeGrid& grid);

/// Spin j in a complex field (j >= 1/2, half-integer).
ScenarioSpec spin_scenario(double j, const MetricPreset& metric, const Curve& beta_re,
                           const TimeGrid& grid);

enum class Branch { plus, minus, smaller_magnitude };

/// Root of (D/2) beta zeta^2 + omega zeta - alpha = 0 for real coefficients.
/// Throws PreconditionError when omega^2 + 2 D alpha beta < 0 or beta == 0.
double real_coefficient_zeta(double omega, double alpha, double beta, AlgebraKind kind,
                             Branch branch = Branch::smaller_magnitude);

/// Constant metric of the real-coefficient case: zeta from the quadratic, chi = alpha/beta.
/// Throws PreconditionError if theta0 = -chi - (D/2) zeta^2 is not positive.
MetricPreset real_coefficient_metric(double omega, double alpha, double beta, AlgebraKind kind,
                                     Branch branch = Branch::smaller_magnitude);

/// max over the grid of |H - [omega theta0 / ((D/2) zeta^2 - chi)] I^PH|.
/// Requires real coefficients.
double real_case_proportionality(const ScenarioSpec& spec);

/// exp[(zeta/2) a^2] exp[-(ln theta0 / 2)((a+a + 1/2) - (n + 1/2))] exp[(zeta/2) a+^2] |n>
/// built on `fock_dim` states.
Vector swanson_eigenstate(std::size_t n, double zeta, double theta0, Eigen::Index fock_dim);

/// exp[zeta J-] exp[-ln theta0 (Jz - m)] exp[zeta J+] |m> in the basis m = j..-j.
Vector spin_eigenstate(double j, double m, double zeta, double theta0);

/// (n + 1/2) int (1/theta0)[(zeta^2 + chi) Re omega - 4 zeta Re alpha] dt
std::vector<double> swanson_phase(std::size_t n, const MetricTrajectory& metric,
                                  const CoefficientTrajectory& coeffs);

/// -m int (2/theta0)[(zeta^2 - chi) Re omega - 4 zeta Re alpha] dt
std::vector<double> spin_phase(double m, const MetricTrajectory& metric,
                               const CoefficientTrajectory& coeffs);

struct PresetOptions {
  std::optional<Eigen::Index> dim;
  std::optional<double> j;
  double horizon = 10.0;
  std::size_t steps = 2000;
};

const std::vector<std::string>& preset_names();

/// Named scenario; throws PreconditionError for an unknown name.
ScenarioSpec make_preset(const std::string& name, const PresetOptions& options = {});

/// Random smooth (sinusoidal) metric and drive with |zeta| and theta0 bounded away from zero.
struct RandomDrive {
  MetricPreset metric;
  Curve beta_re;
};
RandomDrive random_drive(std::mt19937_64& rng);

/// PSEUDOINV_SEED if set and numeric, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback = 20240611);

}  // namespace pseudoinv
