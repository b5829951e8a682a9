#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "pseudoinv/kernels.hpp"
#include "pseudoinv/models.hpp"
#include "pseudoinv/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-Hermitian invariant solver and verifier"};
  app.require_subcommand(1);

  pseudoinv::RunConfig config;
  std::string mode = "synthesis";
  std::string emit = "report,curves";
  long long dim = 0;
  double j = 0.0;
  double horizon = 0.0;
  long long steps = 0;
  std::string output_dir;

  CLI::App* run = app.add_subcommand("run", "Build a scenario, verify it and write the results");
  run->add_option("--scenario", config.scenario, "Preset name or scenario file")->required();
  auto* dim_opt = run->add_option("--dim", dim, "Truncation dimension (boson, su11)");
  auto* j_opt = run->add_option("--j", j, "Spin quantum number (su2)");
  auto* horizon_opt = run->add_option("--horizon", horizon, "Final time");
  auto* steps_opt = run->add_option("--steps", steps, "Number of grid steps (>= 16)");
  run->add_option("--tol", config.tol, "Largest admissible residual")->capture_default_str();
  run->add_option("--mode", mode, "synthesis or analysis")->capture_default_str();
  run->add_option("--output-dir", output_dir, "Existing directory for the outputs")->required();
  run->add_option("--emit", emit, "Comma list of report, curves, states")->capture_default_str();

  app.add_subcommand("presets", "List the named scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : pseudoinv::kExitConfig;
  }

  if (app.got_subcommand("presets")) {
    for (const auto& name : pseudoinv::preset_names()) std::cout << name << '\n';
    return pseudoinv::kExitOk;
  }

  try {
    if (*dim_opt) {
      if (dim < 1) throw pseudoinv::PreconditionError("--dim must be positive");
      config.dim = static_cast<Eigen::Index>(dim);
    }
    if (*j_opt) config.j = j;
    if (*horizon_opt) config.horizon = horizon;
    if (*steps_opt) {
      if (steps < 0) throw pseudoinv::PreconditionError("--steps must be at least 16");
      config.steps = static_cast<std::size_t>(steps);
    }
    config.mode = pseudoinv::parse_mode(mode);
    config.emit = pseudoinv::parse_emit(emit);
    config.output_dir = output_dir;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return pseudoinv::kExitConfig;
  }

  const pseudoinv::RunOutcome outcome = pseudoinv::run(config);
  std::ostream& out = outcome.exit_code == pseudoinv::kExitConfig ? std::cerr : std::cout;
  if (outcome.exit_code == pseudoinv::kExitConfig) {
    out << "error: " << outcome.message << '\n';
  } else {
    out << config.scenario << " [" << pseudoinv::kernels::to_string(pseudoinv::kernels::active_isa())
        << "]: " << outcome.message << '\n';
  }
  return outcome.exit_code;
}
