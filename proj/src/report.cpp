#include "pseudoinv/report.hpp"

#include <cmath>
#include <cstdio>

namespace pseudoinv {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::vector<ReportEntry> report_entries(const VerificationReport& r) {
  return {
      {"auxiliary_max", r.auxiliary_max, 1e-9},
      {"uv_max", r.uv_max, 1e-8},
      {"imag_w_max", r.imag_w_max, 1e-8},
      {"similarity_residual", r.similarity_residual, 1e-9},
      {"quasi_hermiticity_residual", r.quasi_hermiticity_residual, 1e-9},
      {"eta_orthonormality_defect", r.eta_orthonormality_defect, 1e-9},
      {"spectrum_imag_max", r.spectrum_imag_max, 1e-9},
      {"spectrum_drift", r.spectrum_drift, 1e-8},
      {"oracle_difference", r.oracle_difference, 1e-6},
      {"pseudo_norm_drift", r.pseudo_norm_drift, 1e-8},
      {"pseudo_norm_drift_rk4", r.pseudo_norm_drift_rk4, 1e-6},
      {"tdse_residual", r.tdse_residual, 1e-5},
      {"invariance_residual", r.invariance_residual, 1e-5},
      {"phh1_residual", r.phh1_residual, 1e-5},
      {"dyson_hermiticity_defect", r.dyson_hermiticity_defect, 1e-5},
      {"dyson_commutator_defect", r.dyson_commutator_defect, 1e-5},
  };
}

void write_report(std::ostream& out, const ScenarioSpec& spec, const VerificationReport& report,
                  const ReportContext& context) {
  const TimeGrid& grid = spec.metric.grid;
  out << "format_version = " << kReportFormatVersion << '\n';
  out << "scenario = " << spec.name << '\n';
  out << "mode = " << context.mode << '\n';
  out << "algebra = " << to_string(spec.rep.kind) << '\n';
  out << "representation = " << spec.rep.label << '\n';
  out << "dim = " << spec.rep.dim << '\n';
  out << "structure_constant = " << spec.rep.d() << '\n';
  out << "check_block = " << (spec.check_block < 0 ? spec.rep.dim : spec.check_block) << '\n';
  out << "horizon = " << format_number(grid.horizon()) << '\n';
  out << "steps = " << grid.steps() << '\n';
  out << "uniform_grid = " << (grid.is_uniform() ? "true" : "false") << '\n';
  out << "initial_state =";
  for (const auto& [n, w] : spec.weights) {
    out << ' ' << n << ':' << format_number(w.real()) << ':' << format_number(w.imag());
  }
  out << '\n';
  out << "tol = " << format_number(context.tol) << '\n';

  std::vector<ReportEntry> entries = report_entries(report);
  entries.insert(entries.end(), context.extras.begin(), context.extras.end());
  for (const auto& e : entries) out << e.key << " = " << format_number(e.value) << '\n';
  bool all_threshold = true;
  bool all_tol = true;
  for (const auto& e : entries) {
    out << "threshold." << e.key << " = " << format_number(e.threshold) << '\n';
    out << "pass." << e.key << " = " << (e.passes() ? "true" : "false") << '\n';
    all_threshold = all_threshold && e.passes();
    all_tol = all_tol && e.value <= context.tol;
  }
  out << "pass.thresholds = " << (all_threshold ? "true" : "false") << '\n';
  out << "pass.tol = " << (all_tol ? "true" : "false") << '\n';
}

void write_curves(std::ostream& out, const MetricTrajectory& metric,
                  const CoefficientTrajectory& coeffs, const VerificationResult& result,
                  const std::vector<std::pair<std::size_t, Complex>>& weights) {
  const VerificationReport& r = result.report;
  const SolutionBundle& sol = result.solution;
  std::vector<std::pair<std::string, const std::vector<double>*>> residuals = {
      {"tdse", &r.tdse_curve.values},         {"invariance", &r.invariance_curve.values},
      {"phh1", &r.phh1_curve.values},         {"dyson", &r.dyson_curve.values},
      {"pseudo_norm", &r.pseudo_norm_curve.values}, {"oracle", &r.oracle_curve.values},
      {"uv", &r.uv_curve.values},
  };
  for (std::size_t k = 0; k < AuxiliaryResiduals::names().size(); ++k) {
    residuals.emplace_back(AuxiliaryResiduals::names()[k], &r.auxiliary.curve(k));
  }

  out << "t,zeta,theta0,chi,omega_re,omega_im,alpha_re,alpha_im,beta_re,beta_im";
  for (const auto& w : weights) out << ",phi_" << w.first;
  for (const auto& [name, values] : residuals) out << ",res_" << name;
  out << '\n';
  for (std::size_t i = 0; i < metric.size(); ++i) {
    const MetricPoint& m = metric.points[i];
    out << format_number(metric.grid[i]) << ',' << format_number(m.zeta) << ','
        << format_number(m.theta0) << ',' << format_number(m.chi);
    for (const Complex c : {coeffs.omega[i], coeffs.alpha[i], coeffs.beta[i]}) {
      out << ',' << format_number(c.real()) << ',' << format_number(c.imag());
    }
    for (const auto& w : weights) out << ',' << format_number(sol.phases[w.first][i]);
    for (const auto& [name, values] : residuals) out << ',' << format_number((*values)[i]);
    out << '\n';
  }
}

void write_states(std::ostream& out, const TimeGrid& grid, const std::vector<Vector>& states) {
  const Eigen::Index dim = states.empty() ? 0 : states.front().size();
  out << 't';
  for (Eigen::Index k = 0; k < dim; ++k) out << ",re_" << k << ",im_" << k;
  out << '\n';
  for (std::size_t i = 0; i < states.size(); ++i) {
    out << format_number(grid[i]);
    for (Eigen::Index k = 0; k < dim; ++k) {
      out << ',' << format_number(states[i](k).real()) << ',' << format_number(states[i](k).imag());
    }
    out << '\n';
  }
}

}  // namespace pseudoinv
