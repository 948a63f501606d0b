#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpc/lpc.h"

namespace {

struct CurveDeleter {
  void operator()(lpc_curve* c) const { lpc_curve_destroy(c); }
};
using CurvePtr = std::unique_ptr<lpc_curve, CurveDeleter>;

struct ReportDeleter {
  void operator()(lpc_report* r) const { lpc_report_destroy(r); }
};
using ReportPtr = std::unique_ptr<lpc_report, ReportDeleter>;

int exit_for(lpc_status st) {
  switch (st) {
    case LPC_OK: return 0;
    case LPC_ERR_INVALID_ARGUMENT:
    case LPC_ERR_UNKNOWN_CURVE:
    case LPC_ERR_CASE_MISMATCH: return 2;
    default: return 3;
  }
}

int fail(lpc_status st) {
  std::fprintf(stderr, "error: %s\n", lpc_last_error());
  return exit_for(st);
}

bool parse_kv(const std::string& kv, std::string& key, double& value) {
  const std::size_t eq = kv.find('=');
  if (eq == std::string::npos || eq == 0) return false;
  key = kv.substr(0, eq);
  const std::string rest = kv.substr(eq + 1);
  char* end = nullptr;
  value = std::strtod(rest.c_str(), &end);
  return end && *end == '\0' && end != rest.c_str();
}

/// k=v pairs to a JSON object; empty string on parse failure.
bool params_to_json(const std::vector<std::string>& kvs, std::string& out) {
  nlohmann::json j = nlohmann::json::object();
  for (const std::string& kv : kvs) {
    std::string key;
    double value = 0.0;
    if (!parse_kv(kv, key, value)) {
      std::fprintf(stderr, "error: expected name=number, got '%s'\n", kv.c_str());
      return false;
    }
    j[key] = value;
  }
  out = j.dump();
  return true;
}

int make_curve(const std::string& name, const std::vector<std::string>& params, std::size_t n,
               CurvePtr& out) {
  std::string pjson;
  if (!params_to_json(params, pjson)) return 2;
  lpc_curve* raw = nullptr;
  lpc_status st = lpc_curve_create(name.c_str(), pjson.c_str(), n, &raw);
  if (st != LPC_OK) return fail(st);
  out.reset(raw);
  return 0;
}

int emit_report(const lpc_report* rep, const std::string& path) {
  if (!path.empty()) {
    lpc_status st = lpc_report_write(rep, path.c_str());
    if (st != LPC_OK) return fail(st);
    return 0;
  }
  char* text = nullptr;
  lpc_status st = lpc_report_json(rep, &text);
  if (st != LPC_OK) return fail(st);
  std::fputs(text, stdout);
  lpc_string_free(text);
  return 0;
}

int report_verdict(const lpc_report* rep, const char* what) {
  int pass = 0;
  lpc_status st = lpc_report_pass(rep, &pass);
  if (st != LPC_OK) return fail(st);
  std::fprintf(stderr, "%s: %s\n", what, pass ? "PASS" : "FAIL");
  return pass ? 0 : 1;
}

/// Tolerance overrides from the environment plus --tol flags, and the two
/// verify booleans, merged into the options object lpc_verify expects.
bool build_options(const std::vector<std::string>& tol_flags, bool inject, bool theorems,
                   std::string& out) {
  nlohmann::json opts = nlohmann::json::object();
  if (const char* env = std::getenv("LPC_TOL_OVERRIDE")) {
    if (*env) {
      nlohmann::json j = nlohmann::json::parse(env, nullptr, false);
      if (j.is_discarded() || !j.is_object()) {
        std::fprintf(stderr, "error: LPC_TOL_OVERRIDE must hold a JSON object\n");
        return false;
      }
      for (const auto& [key, value] : j.items()) opts[key] = value;
    }
  }
  for (const std::string& kv : tol_flags) {
    std::string key;
    double value = 0.0;
    if (!parse_kv(kv, key, value)) {
      std::fprintf(stderr, "error: expected name=number, got '%s'\n", kv.c_str());
      return false;
    }
    opts[key] = value;
  }
  if (inject) opts["inject_frame_swap"] = true;
  if (theorems) opts["theorems"] = true;
  out = opts.dump();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partner curves in Lorentz-Minkowski 3-space"};
  app.set_version_flag("--version", lpc_version());
  app.require_subcommand(1);

  std::string curve, kind, case_id, out_path, report_path, plane = "x2x3";
  std::vector<std::string> params, tol_flags;
  std::size_t n = 2000;
  double c0 = 0.0, theta = 0.0;
  bool check = false, inject = false, theorems = false, with_partner = false;

  CLI::App* cmd_catalog = app.add_subcommand("catalog", "List the built-in curves as JSON");

  CLI::App* cmd_frenet =
      app.add_subcommand("frenet", "Frame, curvature, and torsion of a catalog curve");
  cmd_frenet->add_option("curve", curve, "catalog curve name")->required();
  cmd_frenet->add_option("--param", params, "curve parameter as name=value");
  cmd_frenet->add_option("-n,--intervals", n, "sample intervals");
  cmd_frenet->add_flag("--check", check, "run the frame residual battery");
  cmd_frenet->add_option("--out", out_path, "write the frame table as CSV");
  cmd_frenet->add_option("--report", report_path, "write the check report as JSON");

  CLI::App* cmd_partner = app.add_subcommand("partner", "Integrate a partner curve");
  cmd_partner->add_option("curve", curve, "donor curve name")->required();
  cmd_partner->add_option("--kind", kind, "evolute, mannheim, or bertrand")->required();
  cmd_partner->add_option("--case", case_id, "i, ii, or iii")->required();
  cmd_partner->add_option("--c0", c0, "phase constant (evolute, mannheim)");
  cmd_partner->add_option("--theta", theta, "angle (bertrand)");
  cmd_partner->add_option("--param", params, "donor parameter as name=value");
  cmd_partner->add_option("-n,--intervals", n, "sample intervals");
  cmd_partner->add_option("--out", out_path, "write the partner frame table as CSV");

  CLI::App* cmd_verify = app.add_subcommand("verify", "Check every partner relation");
  cmd_verify->add_option("curve", curve, "donor curve name")->required();
  cmd_verify->add_option("--kind", kind, "evolute, mannheim, or bertrand")->required();
  cmd_verify->add_option("--case", case_id, "i, ii, or iii")->required();
  cmd_verify->add_option("--c0", c0, "phase constant (evolute, mannheim)");
  cmd_verify->add_option("--theta", theta, "angle (bertrand)");
  cmd_verify->add_option("--param", params, "donor parameter as name=value");
  cmd_verify->add_option("-n,--intervals", n, "sample intervals");
  cmd_verify->add_option("--tol", tol_flags, "tolerance override as name=value");
  cmd_verify->add_flag("--inject-frame-swap", inject,
                       "swap the partner normal and binormal to exercise failure paths");
  cmd_verify->add_flag("--theorems", theorems, "append invariant-correspondence checks");
  cmd_verify->add_option("--report", report_path, "write the report as JSON");

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "Type, plane, helix, and slant verdicts");
  cmd_classify->add_option("curve", curve, "catalog curve name")->required();
  cmd_classify->add_option("--param", params, "curve parameter as name=value");
  cmd_classify->add_option("-n,--intervals", n, "sample intervals");
  cmd_classify->add_option("--report", report_path, "write the report as JSON");

  CLI::App* cmd_plot = app.add_subcommand("plot", "Project curves onto a plane as SVG");
  cmd_plot->add_option("curve", curve, "catalog curve name")->required();
  cmd_plot->add_option("--param", params, "curve parameter as name=value");
  cmd_plot->add_option("-n,--intervals", n, "sample intervals");
  cmd_plot->add_flag("--with-partner", with_partner, "also draw a partner curve");
  cmd_plot->add_option("--kind", kind, "partner kind when --with-partner");
  cmd_plot->add_option("--case", case_id, "partner case when --with-partner");
  cmd_plot->add_option("--c0", c0, "phase constant (evolute, mannheim)");
  cmd_plot->add_option("--theta", theta, "angle (bertrand)");
  cmd_plot->add_option("--plane", plane, "x1x2, x1x3, or x2x3");
  cmd_plot->add_option("--out", out_path, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (app.got_subcommand(cmd_catalog)) {
    char* text = nullptr;
    lpc_status st = lpc_catalog_json(&text);
    if (st != LPC_OK) return fail(st);
    std::fputs(text, stdout);
    lpc_string_free(text);
    return 0;
  }

  if (app.got_subcommand(cmd_frenet)) {
    CurvePtr c;
    if (int rc = make_curve(curve, params, n, c)) return rc;
    const char* type = nullptr;
    lpc_status st = lpc_curve_type(c.get(), &type);
    if (st != LPC_OK) return fail(st);
    size_t count = 0;
    lpc_curve_node_count(c.get(), &count);
    std::fprintf(stderr, "%s: %s, %zu nodes\n", curve.c_str(), type, count);
    if (!out_path.empty()) {
      st = lpc_curve_export_csv(c.get(), out_path.c_str());
      if (st != LPC_OK) return fail(st);
    }
    if (!check) return 0;
    lpc_report* raw = nullptr;
    st = lpc_frenet_check(c.get(), &raw);
    if (st != LPC_OK) return fail(st);
    ReportPtr rep(raw);
    if (int rc = emit_report(rep.get(), report_path)) return rc;
    return report_verdict(rep.get(), "frenet");
  }

  if (app.got_subcommand(cmd_partner)) {
    CurvePtr donor;
    if (int rc = make_curve(curve, params, n, donor)) return rc;
    lpc_curve* raw = nullptr;
    lpc_status st =
        lpc_partner_create(donor.get(), kind.c_str(), case_id.c_str(), c0, theta, &raw);
    if (st != LPC_OK) return fail(st);
    CurvePtr partner(raw);
    const char* type = nullptr;
    st = lpc_curve_type(partner.get(), &type);
    if (st != LPC_OK) return fail(st);
    std::fprintf(stderr, "%s %s-%s: partner is %s\n", curve.c_str(), kind.c_str(),
                 case_id.c_str(), type);
    if (!out_path.empty()) {
      st = lpc_curve_export_csv(partner.get(), out_path.c_str());
      if (st != LPC_OK) return fail(st);
    }
    return 0;
  }

  if (app.got_subcommand(cmd_verify)) {
    CurvePtr donor;
    if (int rc = make_curve(curve, params, n, donor)) return rc;
    std::string options;
    if (!build_options(tol_flags, inject, theorems, options)) return 2;
    lpc_report* raw = nullptr;
    lpc_status st = lpc_verify(donor.get(), kind.c_str(), case_id.c_str(), c0, theta,
                               options.c_str(), &raw);
    if (st != LPC_OK) return fail(st);
    ReportPtr rep(raw);
    if (int rc = emit_report(rep.get(), report_path)) return rc;
    return report_verdict(rep.get(), "verify");
  }

  if (app.got_subcommand(cmd_classify)) {
    CurvePtr c;
    if (int rc = make_curve(curve, params, n, c)) return rc;
    lpc_report* raw = nullptr;
    lpc_status st = lpc_classify(c.get(), &raw);
    if (st != LPC_OK) return fail(st);
    ReportPtr rep(raw);
    return emit_report(rep.get(), report_path);
  }

  if (app.got_subcommand(cmd_plot)) {
    CurvePtr donor;
    if (int rc = make_curve(curve, params, n, donor)) return rc;
    CurvePtr partner;
    std::vector<const lpc_curve*> curves = {donor.get()};
    if (with_partner) {
      if (kind.empty() || case_id.empty()) {
        std::fprintf(stderr, "error: --with-partner needs --kind and --case\n");
        return 2;
      }
      lpc_curve* raw = nullptr;
      lpc_status st =
          lpc_partner_create(donor.get(), kind.c_str(), case_id.c_str(), c0, theta, &raw);
      if (st != LPC_OK) return fail(st);
      partner.reset(raw);
      curves.push_back(partner.get());
    }
    lpc_status st = lpc_export_svg(curves.data(), nullptr, curves.size(), plane.c_str(),
                                   out_path.c_str());
    if (st != LPC_OK) return fail(st);
    return 0;
  }

  return 2;
}
