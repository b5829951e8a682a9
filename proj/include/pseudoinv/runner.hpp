#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <string>

#include "pseudoinv/report.hpp"

namespace pseudoinv {

enum class RunMode { synthesis, analysis };
enum class Emit { report, curves, states };

struct RunConfig {
  /// Preset name or path to a scenario file.
  std::string scenario;
  std::optional<Eigen::Index> dim;
  std::optional<double> j;
  std::optional<double> horizon;
  std::optional<std::size_t> steps;
  double tol = 1e-5;
  RunMode mode = RunMode::synthesis;
  std::filesystem::path output_dir;
  std::set<Emit> emit = {Emit::report, Emit::curves};
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitResidual = 2;

struct RunOutcome {
  int exit_code = kExitConfig;
  std::string message;
  std::vector<ReportEntry> entries;
};

/// Resolves the scenario, verifies it and writes the requested files into
/// config.output_dir. Files appear only once every one of them is complete;
/// configuration errors leave the directory untouched.
RunOutcome run(const RunConfig& config);

RunMode parse_mode(const std::string& text);
std::set<Emit> parse_emit(const std::string& text);

}  // namespace pseudoinv
