#pragma once

#include <map>
#include <string>
#include <vector>

#include "lpc/catalog.hpp"
#include "lpc/classify.hpp"
#include "lpc/verify.hpp"

namespace lpc {

inline constexpr char kVersion[] = "1.0.0";

/// Columns of an exported frame table, one entry per node.
struct CsvData {
  std::vector<double> s;
  std::vector<Vec3> pos, T, N, B;
  std::vector<double> kappa, tau;
  std::vector<int> eps_T, eps_N, eps_B;
};

/// Write the curve and its frame as CSV: fixed header, %.17g doubles,
/// LF line endings. Reading back reproduces every bit.
void export_csv(const std::string& path, const UnitSpeedCurve& c, const FrenetApparatus& app);
CsvData read_frenet_csv(const std::string& path);

struct ReportContext {
  std::string donor_name;
  std::map<std::string, double> donor_params;
  std::size_t n = 0;
  Tolerances tol;
};

/// Serialized JSON (sorted keys, two-space indent, trailing newline).
std::string report_json_text(const VerificationReport& rep, const ReportContext& ctx);
std::string checks_json_text(const std::vector<CheckResult>& checks, const std::string& subject);
std::string classification_json_text(const ClassificationSummary& cls, const ReportContext& ctx);
std::string catalog_json_text();

/// Parse a flat JSON object of numbers, e.g. {"tol_frenet": 1e-5}.
std::map<std::string, double> parse_number_map(const std::string& json_text);

void write_text_file(const std::string& path, const std::string& content);

struct PlotSeries {
  std::string label;
  std::vector<Vec3> points;
};

/// Plane projection plot, plane one of x1x2, x1x3, x2x3. Coordinates are the
/// raw data values with the vertical axis negated so larger values sit higher.
void export_svg(const std::string& path, const std::string& plane,
                const std::vector<PlotSeries>& series);

}  // namespace lpc
