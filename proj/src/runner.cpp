#include "pseudoinv/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "pseudoinv/dynamics.hpp"
#include "pseudoinv/models.hpp"
#include "pseudoinv/scenario_file.hpp"
#include "pseudoinv/verify.hpp"

namespace pseudoinv {

namespace {

namespace fs = std::filesystem;

constexpr double kRealCaseThreshold = 1e-10;
constexpr double kRoundTripThreshold = 1e-7;

bool is_preset(const std::string& name) {
  const auto& names = preset_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

ScenarioSpec resolve_scenario(const RunConfig& config) {
  if (is_preset(config.scenario)) {
    PresetOptions options;
    options.dim = config.dim;
    options.j = config.j;
    if (config.horizon) options.horizon = *config.horizon;
    if (config.steps) options.steps = *config.steps;
    return make_preset(config.scenario, options);
  }
  if (fs::is_regular_file(config.scenario)) {
    return load_scenario_file(config.scenario,
                              {config.dim, config.j, config.horizon, config.steps});
  }
  std::string known;
  for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
  throw PreconditionError("scenario '" + config.scenario +
                          "' is neither a preset nor a file (presets: " + known + ")");
}

void validate(const RunConfig& config) {
  if (!(config.tol > 0.0)) throw PreconditionError("--tol must be positive");
  if (config.horizon && !(*config.horizon > 0.0)) {
    throw PreconditionError("--horizon must be positive");
  }
  if (config.steps && *config.steps < 16) throw PreconditionError("--steps must be at least 16");
  if (config.emit.empty()) throw PreconditionError("--emit selects nothing");
  std::error_code ec;
  if (!fs::is_directory(config.output_dir, ec)) {
    throw PreconditionError("output directory '" + config.output_dir.string() +
                            "' does not exist");
  }
}

double max_abs_difference(const MetricTrajectory& a, const MetricTrajectory& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max({worst, std::abs(a.points[i].zeta - b.points[i].zeta),
                      std::abs(a.points[i].theta0 - b.points[i].theta0)});
  }
  return worst;
}

// Real coefficients: the metric must stay put and H must be a multiple of I^PH.
std::vector<ReportEntry> real_case_entries(const ScenarioSpec& spec) {
  const MetricPoint& m0 = spec.metric.points.front();
  const AuxiliarySolution aux = solve_auxiliary(spec.coeffs, m0.zeta, m0.theta0, spec.rep.kind);
  double rate = 0.0;
  for (const auto& p : aux.metric.points) {
    rate = std::max({rate, std::abs(p.zeta_dot), std::abs(p.theta0_dot)});
  }
  const double drift = max_abs_difference(aux.metric, spec.metric);
  const double quasi =
      static_quasi_hermiticity(spec.metric, spec.coeffs, spec.rep, spec.check_block).max();
  return {{"real_case_metric_rate", rate, kRealCaseThreshold},
          {"real_case_metric_drift", drift, kRealCaseThreshold},
          {"real_case_proportionality", real_case_proportionality(spec), kRealCaseThreshold},
          {"real_case_static_quasi_hermiticity", quasi, kRealCaseThreshold}};
}

struct PendingFile {
  fs::path partial;
  fs::path target;
};

class OutputSet {
public:
  explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {}
  OutputSet(const OutputSet&) = delete;
  OutputSet& operator=(const OutputSet&) = delete;
  ~OutputSet() {
    std::error_code ec;
    for (const auto& f : files_) fs::remove(f.partial, ec);
  }

  std::ofstream open(const std::string& name) {
    PendingFile f{dir_ / ("." + name + ".partial"), dir_ / name};
    std::ofstream out(f.partial);
    if (!out) throw PreconditionError("cannot write " + f.target.string());
    files_.push_back(std::move(f));
    return out;
  }

  void commit() {
    for (const auto& f : files_) fs::rename(f.partial, f.target);
    files_.clear();
  }

private:
  fs::path dir_;
  std::vector<PendingFile> files_;
};

void close_checked(std::ofstream& out) {
  out.close();
  if (!out) throw PreconditionError("write failed");
}

}  // namespace

RunMode parse_mode(const std::string& text) {
  if (text == "synthesis") return RunMode::synthesis;
  if (text == "analysis") return RunMode::analysis;
  throw PreconditionError("--mode must be synthesis or analysis");
}

std::set<Emit> parse_emit(const std::string& text) {
  std::set<Emit> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "report") {
      out.insert(Emit::report);
    } else if (item == "curves") {
      out.insert(Emit::curves);
    } else if (item == "states") {
      out.insert(Emit::states);
    } else if (!item.empty()) {
      throw PreconditionError("--emit accepts report, curves, states; got '" + item + "'");
    }
  }
  return out;
}

RunOutcome run(const RunConfig& config) {
  RunOutcome outcome;
  try {
    validate(config);
    ScenarioSpec spec = resolve_scenario(config);

    ReportContext context;
    context.mode = config.mode == RunMode::analysis ? "analysis" : "synthesis";
    context.tol = config.tol;

    MetricTrajectory metric = spec.metric;
    if (config.mode == RunMode::analysis) {
      const MetricPoint& m0 = spec.metric.points.front();
      AuxiliarySolution aux = solve_auxiliary(spec.coeffs, m0.zeta, m0.theta0, spec.rep.kind);
      context.extras.push_back(
          {"analysis_metric_error", max_abs_difference(aux.metric, spec.metric), kRoundTripThreshold});
      context.extras.push_back(
          {"analysis_rel_residual", aux.max_rel_residual, kRoundTripThreshold});
      metric = std::move(aux.metric);
    }
    if (spec.coeffs.is_real(1e-12)) {
      const auto extra = real_case_entries(spec);
      context.extras.insert(context.extras.end(), extra.begin(), extra.end());
    }

    const VerificationResult result =
        verify_scenario(spec.rep, metric, spec.coeffs, spec.initial_state, spec.check_block);

    OutputSet files(config.output_dir);
    if (config.emit.count(Emit::report)) {
      auto out = files.open("report.txt");
      write_report(out, spec, result.report, context);
      close_checked(out);
    }
    if (config.emit.count(Emit::curves)) {
      auto out = files.open("curves.csv");
      write_curves(out, metric, spec.coeffs, result, spec.weights);
      close_checked(out);
    }
    if (config.emit.count(Emit::states)) {
      auto out = files.open("states.csv");
      write_states(out, metric.grid, result.solution.states);
      close_checked(out);
    }
    files.commit();

    outcome.entries = report_entries(result.report);
    outcome.entries.insert(outcome.entries.end(), context.extras.begin(), context.extras.end());
    std::vector<std::string> failing;
    for (const auto& e : outcome.entries) {
      if (!(e.value <= config.tol)) failing.push_back(e.key);
    }
    if (failing.empty()) {
      outcome.exit_code = kExitOk;
      outcome.message = "all residuals within tol";
    } else {
      outcome.exit_code = kExitResidual;
      outcome.message = "residuals above tol:";
      for (const auto& k : failing) outcome.message += " " + k;
    }
  } catch (const std::exception& e) {
    outcome.exit_code = kExitConfig;
    outcome.message = e.what();
  }
  return outcome;
}

}  // namespace pseudoinv
