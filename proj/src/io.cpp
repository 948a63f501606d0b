#include "lpc/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lpc/errors.hpp"

namespace lpc {

namespace {

using nlohmann::json;

constexpr char kCsvHeader[] =
    "s,x1,x2,x3,T1,T2,T3,N1,N2,N3,B1,B2,B3,kappa,tau,eps_T,eps_N,eps_B";

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

json check_to_json(const CheckResult& c) {
  json j;
  j["id"] = c.id;
  j["detail"] = c.detail;
  j["max_residual"] = c.max_residual;
  j["tolerance"] = c.tolerance;
  j["pass"] = c.pass;
  j["informational"] = c.informational;
  j["notes"] = c.notes;
  return j;
}

json tolerances_to_json(const Tolerances& t) {
  json j;
  j["tol_null"] = t.tol_null;
  j["kappa_min"] = t.kappa_min;
  j["tol_unit"] = t.tol_unit;
  j["tol_frame"] = t.tol_frame;
  j["tol_frenet"] = t.tol_frenet;
  j["tol_frenet_fd"] = t.tol_frenet_fd;
  j["tol_partner"] = t.tol_partner;
  j["tol_transfer_kappa"] = t.tol_transfer_kappa;
  j["tol_transfer_tau"] = t.tol_transfer_tau;
  j["tol_recover_tight"] = t.tol_recover_tight;
  j["tol_recover_loose"] = t.tol_recover_loose;
  j["tol_const"] = t.tol_const;
  j["tol_theorem"] = t.tol_theorem;
  j["tol_planar"] = t.tol_planar;
  j["excise_rel"] = t.excise_rel;
  j["excise_rel_deriv"] = t.excise_rel_deriv;
  j["min_valid_fraction"] = t.min_valid_fraction;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

void export_csv(const std::string& path, const UnitSpeedCurve& c, const FrenetApparatus& app) {
  if (c.size() != app.size()) throw GridMismatchError("curve and frame sizes differ");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  std::string line;
  line.reserve(512);
  out << kCsvHeader << '\n';
  for (std::size_t k = 0; k < c.size(); ++k) {
    line.clear();
    const Vec3& p = c.pos[k];
    const Vec3 cols[4] = {p, app.T[k], app.N[k], app.B[k]};
    line += fmt17(c.s(k));
    for (const Vec3& v : cols) {
      line += ',';
      line += fmt17(v.x1);
      line += ',';
      line += fmt17(v.x2);
      line += ',';
      line += fmt17(v.x3);
    }
    line += ',';
    line += fmt17(app.kappa[k]);
    line += ',';
    line += fmt17(app.tau[k]);
    line += ',';
    line += std::to_string(app.type.eps_T);
    line += ',';
    line += std::to_string(app.type.eps_N);
    line += ',';
    line += std::to_string(app.type.eps_B);
    line += '\n';
    out << line;
  }
  if (!out) throw IoError("write to '" + path + "' failed");
}

CsvData read_frenet_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string line;
  if (!std::getline(in, line)) throw IoError("'" + path + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw IoError("'" + path + "' has an unexpected header");

  CsvData data;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double f[15];
    int e[3];
    const char* p = line.c_str();
    char* end = nullptr;
    for (int i = 0; i < 15; ++i) {
      f[i] = std::strtod(p, &end);
      if (end == p || *end != ',') throw IoError("malformed row in '" + path + "'");
      p = end + 1;
    }
    for (int i = 0; i < 3; ++i) {
      e[i] = int(std::strtol(p, &end, 10));
      if (end == p || (i < 2 && *end != ',') || (i == 2 && *end != '\0'))
        throw IoError("malformed row in '" + path + "'");
      p = i < 2 ? end + 1 : end;
    }
    data.s.push_back(f[0]);
    data.pos.push_back({f[1], f[2], f[3]});
    data.T.push_back({f[4], f[5], f[6]});
    data.N.push_back({f[7], f[8], f[9]});
    data.B.push_back({f[10], f[11], f[12]});
    data.kappa.push_back(f[13]);
    data.tau.push_back(f[14]);
    data.eps_T.push_back(e[0]);
    data.eps_N.push_back(e[1]);
    data.eps_B.push_back(e[2]);
  }
  return data;
}

std::string report_json_text(const VerificationReport& rep, const ReportContext& ctx) {
  json j;
  j["schema_version"] = "1";
  j["version"] = kVersion;
  json run;
  run["kind"] = to_string(rep.spec.kind);
  run["case"] = to_string(rep.spec.case_id);
  run["c0"] = rep.spec.c0;
  run["theta"] = rep.spec.theta;
  run["sigma"] = rep.sigma;
  json donor;
  donor["name"] = ctx.donor_name;
  donor["params"] = json(ctx.donor_params);
  donor["type"] = to_string(rep.donor_type);
  donor["n"] = ctx.n;
  run["donor"] = donor;
  j["run"] = run;
  json hyp;
  hyp["met"] = rep.hypotheses_met;
  hyp["note"] = rep.hypothesis_note;
  j["hypotheses"] = hyp;
  j["excised_fraction"] = rep.excised_fraction;
  j["pass"] = rep.pass();
  json checks = json::array();
  for (const CheckResult& c : rep.checks) checks.push_back(check_to_json(c));
  j["checks"] = checks;
  j["tolerances"] = tolerances_to_json(ctx.tol);
  return dump(j);
}

std::string checks_json_text(const std::vector<CheckResult>& checks, const std::string& subject) {
  json j;
  j["schema_version"] = "1";
  j["version"] = kVersion;
  j["subject"] = subject;
  bool pass = true;
  json arr = json::array();
  for (const CheckResult& c : checks) {
    arr.push_back(check_to_json(c));
    if (!c.informational && !c.pass) pass = false;
  }
  j["checks"] = arr;
  j["pass"] = pass;
  return dump(j);
}

std::string classification_json_text(const ClassificationSummary& cls,
                                     const ReportContext& ctx) {
  json j;
  j["schema_version"] = "1";
  j["version"] = kVersion;
  json donor;
  donor["name"] = ctx.donor_name;
  donor["params"] = json(ctx.donor_params);
  donor["n"] = ctx.n;
  j["curve"] = donor;
  j["type"] = to_string(cls.type);
  j["planar"] = cls.planar;
  j["helix"] = cls.helix;
  j["slant"] = cls.slant;
  json hv;
  hv["mean"] = cls.helix_verdict.mean;
  hv["rel_spread"] = cls.helix_verdict.rel_spread;
  hv["nodes"] = cls.helix_verdict.count;
  j["helix_invariant"] = hv;
  json variants = json::array();
  for (const SlantInvariant& s : cls.slant_analysis.variants) {
    json v;
    v["variant"] = to_string(s.variant);
    v["applicable"] = s.applicable;
    v["mean"] = s.verdict.mean;
    v["rel_spread"] = s.verdict.rel_spread;
    v["nodes"] = s.verdict.count;
    variants.push_back(v);
  }
  j["slant_variants"] = variants;
  return dump(j);
}

std::string catalog_json_text() {
  json arr = json::array();
  for (const CatalogEntry& e : curve_catalog()) {
    json j;
    j["name"] = e.name;
    j["summary"] = e.summary;
    json params = json::array();
    for (const ParamSchema& p : e.params) {
      json pj;
      pj["name"] = p.name;
      pj["default"] = p.default_value;
      pj["doc"] = p.doc;
      params.push_back(pj);
    }
    j["params"] = params;
    j["expected_type"] = e.expected_type ? json(to_string(*e.expected_type)) : json(nullptr);
    j["degenerate"] = e.degenerate;
    arr.push_back(j);
  }
  json top;
  top["schema_version"] = "1";
  top["version"] = kVersion;
  top["curves"] = arr;
  return dump(top);
}

std::map<std::string, double> parse_number_map(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InvalidArgumentError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgumentError("expected a JSON object of numbers");
  std::map<std::string, double> out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number()) throw InvalidArgumentError("value of '" + key + "' is not a number");
    out[key] = value.get<double>();
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

void export_svg(const std::string& path, const std::string& plane,
                const std::vector<PlotSeries>& series) {
  if (series.empty()) throw InvalidArgumentError("nothing to plot");
  int ax = 0, ay = 1;
  if (plane == "x1x2") {
    ax = 0, ay = 1;
  } else if (plane == "x1x3") {
    ax = 0, ay = 2;
  } else if (plane == "x2x3") {
    ax = 1, ay = 2;
  } else {
    throw InvalidArgumentError("plane must be one of x1x2, x1x3, x2x3");
  }
  auto coord = [&](const Vec3& v, int axis) {
    return axis == 0 ? v.x1 : axis == 1 ? v.x2 : v.x3;
  };

  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  bool first = true;
  for (const PlotSeries& s : series) {
    for (const Vec3& p : s.points) {
      const double x = coord(p, ax), y = -coord(p, ay);
      if (first) {
        xmin = xmax = x;
        ymin = ymax = y;
        first = false;
      }
      xmin = std::min(xmin, x), xmax = std::max(xmax, x);
      ymin = std::min(ymin, y), ymax = std::max(ymax, y);
    }
  }
  if (first) throw InvalidArgumentError("all plot series are empty");

  double spanx = xmax - xmin, spany = ymax - ymin;
  const double span = std::max({spanx, spany, 1e-9});
  const double margin = 0.05 * span;
  xmin -= margin, xmax += margin;
  ymin -= margin, ymax += margin;
  spanx = xmax - xmin, spany = ymax - ymin;

  static const char* kColors[] = {"#1f6fb4", "#c23b22", "#2c8a4b", "#8456b8"};
  const double width = span * 0.006;
  const double font = span * 0.045;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt9(xmin) << ' '
      << fmt9(ymin) << ' ' << fmt9(spanx) << ' ' << fmt9(spany) << "\">\n";
  svg << "  <desc>projection onto the " << plane.substr(0, 2) << " " << plane.substr(2)
      << " plane</desc>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const PlotSeries& s = series[i];
    const char* color = kColors[i % 4];
    svg << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << fmt9(width) << "\"";
    if (i > 0) svg << " stroke-dasharray=\"" << fmt9(width * 4) << ' ' << fmt9(width * 2)
                   << "\"";
    svg << " points=\"";
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      if (k) svg << ' ';
      svg << fmt9(coord(s.points[k], ax)) << ',' << fmt9(-coord(s.points[k], ay));
    }
    svg << "\"><title>" << s.label << "</title></polyline>\n";
  }
  for (std::size_t i = 0; i < series.size(); ++i) {
    svg << "  <text x=\"" << fmt9(xmin + margin * 0.5) << "\" y=\""
        << fmt9(ymin + margin * 0.5 + font * double(i + 1)) << "\" font-size=\"" << fmt9(font)
        << "\" fill=\"" << kColors[i % 4] << "\">" << series[i].label << "</text>\n";
  }
  svg << "  <text x=\"" << fmt9(xmax - margin * 0.5 - font * 1.2) << "\" y=\""
      << fmt9(ymax - margin * 0.25) << "\" font-size=\"" << fmt9(font)
      << "\" fill=\"#555555\">" << plane.substr(0, 2) << "</text>\n";
  svg << "  <text x=\"" << fmt9(xmin + margin * 0.25) << "\" y=\""
      << fmt9(ymax - margin * 0.5 - font) << "\" font-size=\"" << fmt9(font)
      << "\" fill=\"#555555\">" << plane.substr(2) << "</text>\n";
  svg << "</svg>\n";
  write_text_file(path, svg.str());
}

}  // namespace lpc
