#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pseudoinv/models.hpp"
#include "pseudoinv/verify.hpp"

namespace pseudoinv {

inline constexpr int kReportFormatVersion = 1;

/// One named scalar of the report with the threshold it is judged against.
struct ReportEntry {
  std::string key;
  double value = 0.0;
  double threshold = 0.0;

  bool passes() const { return value <= threshold; }
};

/// Residual entries of a verification report in a fixed order, each with its
/// acceptance threshold.
std::vector<ReportEntry> report_entries(const VerificationReport& report);

/// Flat "key = value" document: format version, scenario echo, grid metadata,
/// every entry, then its threshold verdict and the verdict against `tol`.
struct ReportContext {
  std::string mode;
  double tol = 0.0;
  /// Extra entries (analysis round trip, real-case checks), already in order.
  std::vector<ReportEntry> extras;
};

void write_report(std::ostream& out, const ScenarioSpec& spec, const VerificationReport& report,
                  const ReportContext& context);

/// Plot-ready table: metric, coefficients, phases of the initial-state
/// components and every residual curve, one row per grid sample.
void write_curves(std::ostream& out, const MetricTrajectory& metric,
                  const CoefficientTrajectory& coeffs, const VerificationResult& result,
                  const std::vector<std::pair<std::size_t, Complex>>& weights);

/// t followed by interleaved real/imaginary parts of each state component.
void write_states(std::ostream& out, const TimeGrid& grid, const std::vector<Vector>& states);

/// %.17g formatting, with "nan"/"inf"/"-inf" spelled out.
std::string format_number(double value);

}  // namespace pseudoinv
