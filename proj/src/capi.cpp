#include "lpc/lpc.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "json.hpp"
#include "lpc/catalog.hpp"
#include "lpc/classify.hpp"
#include "lpc/errors.hpp"
#include "lpc/io.hpp"
#include "lpc/verify.hpp"

struct lpc_curve {
  lpc::UnitSpeedCurve curve;
  mutable std::optional<lpc::FrenetApparatus> app;
  bool lenient = false;
  bool analytic_tier = true;
  std::string name;
  std::map<std::string, double> params;
};

struct lpc_report {
  std::string json_text;
  bool pass = false;
};

namespace {

thread_local std::string g_last_error;

lpc_status classify_error(const lpc::Error& e) {
  if (dynamic_cast<const lpc::UnknownCurveError*>(&e)) return LPC_ERR_UNKNOWN_CURVE;
  if (dynamic_cast<const lpc::CaseMismatchError*>(&e)) return LPC_ERR_CASE_MISMATCH;
  switch (e.category()) {
    case lpc::ErrorCategory::Usage: return LPC_ERR_INVALID_ARGUMENT;
    case lpc::ErrorCategory::Io: return LPC_ERR_IO;
    case lpc::ErrorCategory::Numeric: return LPC_ERR_NUMERIC;
  }
  return LPC_ERR_INTERNAL;
}

template <typename F>
lpc_status guard(F&& f) noexcept {
  try {
    f();
    g_last_error.clear();
    return LPC_OK;
  } catch (const lpc::Error& e) {
    g_last_error = e.what();
    return classify_error(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LPC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return LPC_ERR_INTERNAL;
  }
}

void require_arg(bool ok, const char* what) {
  if (!ok) throw lpc::InvalidArgumentError(what);
}

const lpc::FrenetApparatus& ensure_app(const lpc_curve& c) {
  if (!c.app) {
    lpc::FrenetOptions opts;
    c.app = lpc::frenet_apparatus(c.curve, opts);
  }
  return *c.app;
}

char* heap_copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::map<std::string, double> params_from_json(const char* params_json) {
  if (!params_json || !*params_json) return {};
  return lpc::parse_number_map(params_json);
}

lpc::PartnerSpec spec_from_args(const char* kind, const char* case_id, double c0,
                                double theta) {
  require_arg(kind != nullptr && case_id != nullptr, "kind and case_id are required");
  lpc::PartnerSpec spec;
  auto k = lpc::partner_kind_from_string(kind);
  if (!k)
    throw lpc::InvalidArgumentError(std::string("unknown partner kind '") + kind + "'");
  auto c = lpc::case_id_from_string(case_id);
  if (!c) throw lpc::InvalidArgumentError(std::string("unknown case '") + case_id + "'");
  spec.kind = *k;
  spec.case_id = *c;
  spec.c0 = c0;
  spec.theta = theta;
  return spec;
}

void fill_vec3(double* dst, const std::vector<lpc::Vec3>& src) {
  for (std::size_t k = 0; k < src.size(); ++k) {
    dst[3 * k + 0] = src[k].x1;
    dst[3 * k + 1] = src[k].x2;
    dst[3 * k + 2] = src[k].x3;
  }
}

}  // namespace

extern "C" {

const char* lpc_version(void) { return lpc::kVersion; }

const char* lpc_last_error(void) { return g_last_error.c_str(); }

void lpc_string_free(char* s) { std::free(s); }

lpc_status lpc_catalog_json(char** out_json) {
  return guard([&] {
    require_arg(out_json != nullptr, "out_json is required");
    *out_json = heap_copy(lpc::catalog_json_text());
  });
}

lpc_status lpc_curve_create(const char* name, const char* params_json, size_t n,
                            lpc_curve** out) {
  return guard([&] {
    require_arg(name != nullptr && out != nullptr, "name and out are required");
    auto params = params_from_json(params_json);
    auto handle = std::make_unique<lpc_curve>();
    handle->name = name;
    handle->params = params;
    handle->curve = lpc::build_catalog_curve(name, params, n);
    *out = handle.release();
  });
}

lpc_status lpc_partner_create(const lpc_curve* donor, const char* kind, const char* case_id,
                              double c0, double theta, lpc_curve** out) {
  return guard([&] {
    require_arg(donor != nullptr && out != nullptr, "donor and out are required");
    lpc::PartnerSpec spec = spec_from_args(kind, case_id, c0, theta);
    lpc::PartnerCurve partner =
        lpc::construct_partner(donor->curve, ensure_app(*donor), spec, lpc::Tolerances{});
    auto handle = std::make_unique<lpc_curve>();
    handle->name = donor->name + ":" + kind + "-" + case_id;
    handle->params = donor->params;
    handle->curve = std::move(partner.curve);
    handle->app = std::move(partner.apparatus);
    handle->lenient = true;
    handle->analytic_tier = false;
    *out = handle.release();
  });
}

void lpc_curve_destroy(lpc_curve* c) { delete c; }

lpc_status lpc_curve_node_count(const lpc_curve* c, size_t* out_count) {
  return guard([&] {
    require_arg(c != nullptr && out_count != nullptr, "curve and out_count are required");
    *out_count = c->curve.size();
  });
}

lpc_status lpc_curve_samples(const lpc_curve* c, double* s, double* pos, double* t, double* n,
                             double* b, double* kappa, double* tau) {
  return guard([&] {
    require_arg(c != nullptr, "curve is required");
    const std::size_t count = c->curve.size();
    if (s)
      for (std::size_t k = 0; k < count; ++k) s[k] = c->curve.s(k);
    if (pos) fill_vec3(pos, c->curve.pos);
    if (t || n || b || kappa || tau) {
      const lpc::FrenetApparatus& app = ensure_app(*c);
      if (t) fill_vec3(t, app.T);
      if (n) fill_vec3(n, app.N);
      if (b) fill_vec3(b, app.B);
      if (kappa)
        for (std::size_t k = 0; k < count; ++k) kappa[k] = app.kappa[k];
      if (tau)
        for (std::size_t k = 0; k < count; ++k) tau[k] = app.tau[k];
    }
  });
}

lpc_status lpc_curve_type(const lpc_curve* c, const char** out_type) {
  return guard([&] {
    require_arg(c != nullptr && out_type != nullptr, "curve and out_type are required");
    *out_type = lpc::to_string(ensure_app(*c).type.tag);
  });
}

lpc_status lpc_curve_export_csv(const lpc_curve* c, const char* path) {
  return guard([&] {
    require_arg(c != nullptr && path != nullptr, "curve and path are required");
    lpc::export_csv(path, c->curve, ensure_app(*c));
  });
}

lpc_status lpc_export_svg(const lpc_curve* const* curves, const char* const* labels,
                          size_t count, const char* plane, const char* path) {
  return guard([&] {
    require_arg(curves != nullptr && plane != nullptr && path != nullptr,
                "curves, plane, and path are required");
    std::vector<lpc::PlotSeries> series;
    for (size_t i = 0; i < count; ++i) {
      require_arg(curves[i] != nullptr, "curve entries must not be null");
      lpc::PlotSeries s;
      s.label = labels && labels[i] ? labels[i] : curves[i]->name;
      s.points = curves[i]->curve.pos;
      series.push_back(std::move(s));
    }
    lpc::export_svg(path, plane, series);
  });
}

lpc_status lpc_verify(const lpc_curve* donor, const char* kind, const char* case_id, double c0,
                      double theta, const char* options_json, lpc_report** out) {
  return guard([&] {
    require_arg(donor != nullptr && out != nullptr, "donor and out are required");
    lpc::PartnerSpec spec = spec_from_args(kind, case_id, c0, theta);

    lpc::Tolerances tol;
    bool inject = false, theorems = false;
    if (options_json && *options_json) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(options_json);
      } catch (const nlohmann::json::exception& e) {
        throw lpc::InvalidArgumentError(std::string("bad options JSON: ") + e.what());
      }
      require_arg(j.is_object(), "options must be a JSON object");
      std::map<std::string, double> overrides;
      for (const auto& [key, value] : j.items()) {
        if (key == "inject_frame_swap") {
          require_arg(value.is_boolean(), "inject_frame_swap must be a boolean");
          inject = value.get<bool>();
        } else if (key == "theorems") {
          require_arg(value.is_boolean(), "theorems must be a boolean");
          theorems = value.get<bool>();
        } else {
          require_arg(value.is_number(), "tolerance overrides must be numbers");
          overrides[key] = value.get<double>();
        }
      }
      tol.apply_overrides(overrides);
    }

    const lpc::FrenetApparatus& app = ensure_app(*donor);
    lpc::PartnerCurve partner = lpc::construct_partner(donor->curve, app, spec, tol);
    lpc::VerificationReport vrep =
        lpc::verify_partner_relation(donor->curve, app, partner, spec, tol, inject);
    if (theorems) {
      std::vector<lpc::CheckResult> extra = lpc::theorem_suite(donor->curve, app, tol);
      vrep.checks.insert(vrep.checks.end(), extra.begin(), extra.end());
    }

    lpc::ReportContext ctx;
    ctx.donor_name = donor->name;
    ctx.donor_params = donor->params;
    ctx.n = donor->curve.size() > 0 ? donor->curve.size() - 1 : 0;
    ctx.tol = tol;
    auto rep = std::make_unique<lpc_report>();
    rep->json_text = lpc::report_json_text(vrep, ctx);
    rep->pass = vrep.pass();
    *out = rep.release();
  });
}

lpc_status lpc_classify(const lpc_curve* c, lpc_report** out) {
  return guard([&] {
    require_arg(c != nullptr && out != nullptr, "curve and out are required");
    lpc::Tolerances tol;
    lpc::ClassificationSummary cls = lpc::classify_curve(ensure_app(*c), tol);
    lpc::ReportContext ctx;
    ctx.donor_name = c->name;
    ctx.donor_params = c->params;
    ctx.n = c->curve.size() > 0 ? c->curve.size() - 1 : 0;
    ctx.tol = tol;
    auto rep = std::make_unique<lpc_report>();
    rep->json_text = lpc::classification_json_text(cls, ctx);
    rep->pass = true;
    *out = rep.release();
  });
}

lpc_status lpc_frenet_check(const lpc_curve* c, lpc_report** out) {
  return guard([&] {
    require_arg(c != nullptr && out != nullptr, "curve and out are required");
    lpc::Tolerances tol;
    std::vector<lpc::CheckResult> checks =
        lpc::frenet_check_results(ensure_app(*c), tol, c->analytic_tier);
    auto rep = std::make_unique<lpc_report>();
    rep->json_text = lpc::checks_json_text(checks, c->name);
    rep->pass = true;
    for (const lpc::CheckResult& chk : checks)
      if (!chk.informational && !chk.pass) rep->pass = false;
    *out = rep.release();
  });
}

lpc_status lpc_report_pass(const lpc_report* r, int* out_pass) {
  return guard([&] {
    require_arg(r != nullptr && out_pass != nullptr, "report and out_pass are required");
    *out_pass = r->pass ? 1 : 0;
  });
}

lpc_status lpc_report_json(const lpc_report* r, char** out_json) {
  return guard([&] {
    require_arg(r != nullptr && out_json != nullptr, "report and out_json are required");
    *out_json = heap_copy(r->json_text);
  });
}

lpc_status lpc_report_write(const lpc_report* r, const char* path) {
  return guard([&] {
    require_arg(r != nullptr && path != nullptr, "report and path are required");
    lpc::write_text_file(path, r->json_text);
  });
}

void lpc_report_destroy(lpc_report* r) { delete r; }

}  // extern "C"
