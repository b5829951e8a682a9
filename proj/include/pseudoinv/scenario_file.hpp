#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "pseudoinv/models.hpp"

namespace pseudoinv {

/// Values from the command line that take precedence over the file.
struct ScenarioOverrides {
  std::optional<Eigen::Index> dim;
  std::optional<double> j;
  std::optional<double> horizon;
  std::optional<std::size_t> steps;
};

/// Parses an INI scenario:
///
///   [algebra]        kind = su2 | su11 | boson; j, dim, bargmann_k as needed
///   [metric]         zeta, theta0 = curve   (or zeta_table, theta0_table = csv path,
///                    or real_coefficients = omega alpha beta)
///   [drive]          beta_re = curve (omitted with real_coefficients)
///   [grid]           horizon, steps
///   [initial_state]  indices, weights_re, weights_im (space-separated lists)
///
/// A curve is "constant v", "ramp start slope" or
/// "sinusoid offset amplitude frequency phase". Tables are CSV with header
/// t,value_re,value_im, one row per grid sample; relative paths resolve against
/// the scenario file's directory. Errors throw ParseError carrying the line.
ScenarioSpec load_scenario_file(const std::string& path, const ScenarioOverrides& overrides = {});

/// Parses a curve description such as "sinusoid 0.3 0.1 0.7 0".
Curve parse_curve(const std::string& text);

/// Reads a sampled table for `grid`; ParseError names the offending row.
std::vector<double> read_table(const std::string& path, const TimeGrid& grid);

}  // namespace pseudoinv
