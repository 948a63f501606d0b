#include "lpc/catalog.hpp"

#include <cmath>

#include "lpc/errors.hpp"

namespace lpc {

namespace {

double arg(const std::map<std::string, double>& m, const char* key) { return m.at(key); }

void require(bool ok, const char* what) {
  if (!ok) throw ParamOutOfRangeError(what);
}

CurveSpec base_spec(const char* name, const std::map<std::string, double>& m) {
  CurveSpec spec;
  spec.name = name;
  spec.params = m;
  spec.t0 = arg(m, "t0");
  spec.t1 = arg(m, "t1");
  require(spec.t1 > spec.t0, "t1 must exceed t0");
  return spec;
}

CurveSpec make_timelike_helix(const std::map<std::string, double>& m) {
  CurveSpec spec = base_spec("timelike_helix", m);
  const double a = arg(m, "a"), b = arg(m, "b");
  require(a > 0.0, "a must be positive");
  require(b > 1.0, "b must exceed 1");
  const double w = std::sqrt(b * b - 1.0) / a;
  AnalyticModel mod;
  mod.position = [=](double t) { return Vec3{b * t, a * std::cos(w * t), a * std::sin(w * t)}; };
  mod.d1 = [=](double t) {
    return Vec3{b, -a * w * std::sin(w * t), a * w * std::cos(w * t)};
  };
  mod.d2 = [=](double t) {
    return Vec3{0.0, -a * w * w * std::cos(w * t), -a * w * w * std::sin(w * t)};
  };
  mod.d3 = [=](double t) {
    return Vec3{0.0, a * w * w * w * std::sin(w * t), -a * w * w * w * std::cos(w * t)};
  };
  spec.model = mod;
  return spec;
}

CurveSpec make_timelike_planar(const std::map<std::string, double>& m) {
  CurveSpec spec = base_spec("timelike_planar", m);
  const double a = arg(m, "a");
  require(a > 0.0, "a must be positive");
  AnalyticModel mod;
  mod.position = [=](double t) { return Vec3{a * std::sinh(t), a * std::cosh(t), 0.0}; };
  mod.d1 = [=](double t) { return Vec3{a * std::cosh(t), a * std::sinh(t), 0.0}; };
  mod.d2 = [=](double t) { return Vec3{a * std::sinh(t), a * std::cosh(t), 0.0}; };
  mod.d3 = [=](double t) { return Vec3{a * std::cosh(t), a * std::sinh(t), 0.0}; };
  spec.model = mod;
  return spec;
}

CurveSpec make_timelike_parabola(const std::map<std::string, double>& m) {
  CurveSpec spec = base_spec("timelike_parabola", m);
  const double q = arg(m, "q"), shift = arg(m, "t_shift");
  require(q > 0.0, "q must be positive");
  const double reach = std::max(std::fabs(spec.t0 + shift), std::fabs(spec.t1 + shift));
  require(2.0 * q * reach < 0.999, "domain leaves the timelike range of the parabola");
  AnalyticModel mod;
  mod.position = [=](double t) {
    const double u = t + shift;
    return Vec3{u, q * u * u, 0.0};
  };
  mod.d1 = [=](double t) { return Vec3{1.0, 2.0 * q * (t + shift), 0.0}; };
  mod.d2 = [=](double) { return Vec3{0.0, 2.0 * q, 0.0}; };
  mod.d3 = [=](double) { return Vec3{0.0, 0.0, 0.0}; };
  spec.model = mod;
  return spec;
}

CurveSpec make_spacelike_helix_type1(const std::map<std::string, double>& m) {
  CurveSpec spec = base_spec("spacelike_helix_type1", m);
  const double a = arg(m, "a"), b = arg(m, "b");
  require(a > 0.0, "a must be positive");
  require(b > 0.0, "b must be positive");
  AnalyticModel mod;
  mod.position = [=](double t) { return Vec3{a * std::cosh(t), a * std::sinh(t), b * t}; };
  mod.d1 = [=](double t) { return Vec3{a * std::sinh(t), a * std::cosh(t), b}; };
  mod.d2 = [=](double t) { return Vec3{a * std::cosh(t), a * std::sinh(t), 0.0}; };
  mod.d3 = [=](double t) { return Vec3{a * std::sinh(t), a * std::cosh(t), 0.0}; };
  spec.model = mod;
  return spec;
}

CurveSpec make_spacelike_helix_type2(const std::map<std::string, double>& m) {
  CurveSpec spec = base_spec("spacelike_helix_type2", m);
  const double a = arg(m, "a"), b = arg(m, "b");
  require(a > 0.0, "a must be positive");
  require(b > a, "b must exceed a");
  AnalyticModel mod;
  mod.position = [=](double t) { return Vec3{a * std::sinh(t), a * std::cosh(t), b * t}; };
  mod.d1 = [=](double t) { return Vec3{a * std::cosh(t), a * std::sinh(t), b}; };
  mod.d2 = [=](double t) { return Vec3{a * std::sinh(t), a * std::cosh(t), 0.0}; };
  mod.d3 = [=](double t) { return Vec3{a * std::cosh(t), a * std::sinh(t), 0.0}; };
  spec.model = mod;
  return spec;
}

CurveSpec make_spacelike_planar(const std::map<std::string, double>& m) {
  CurveSpec spec = base_spec("spacelike_planar", m);
  const double a = arg(m, "a");
  require(a > 0.0, "a must be positive");
  AnalyticModel mod;
  mod.position = [=](double t) { return Vec3{0.0, a * std::cos(t), a * std::sin(t)}; };
  mod.d1 = [=](double t) { return Vec3{0.0, -a * std::sin(t), a * std::cos(t)}; };
  mod.d2 = [=](double t) { return Vec3{0.0, -a * std::cos(t), -a * std::sin(t)}; };
  mod.d3 = [=](double t) { return Vec3{0.0, a * std::sin(t), -a * std::cos(t)}; };
  spec.model = mod;
  return spec;
}

CurveSpec make_spacelike_planar_type1(const std::map<std::string, double>& m) {
  CurveSpec spec = base_spec("spacelike_planar_type1", m);
  const double a = arg(m, "a");
  require(a > 0.0, "a must be positive");
  AnalyticModel mod;
  mod.position = [=](double t) { return Vec3{a * std::cosh(t), a * std::sinh(t), 0.0}; };
  mod.d1 = [=](double t) { return Vec3{a * std::sinh(t), a * std::cosh(t), 0.0}; };
  mod.d2 = [=](double t) { return Vec3{a * std::cosh(t), a * std::sinh(t), 0.0}; };
  mod.d3 = [=](double t) { return Vec3{a * std::sinh(t), a * std::cosh(t), 0.0}; };
  spec.model = mod;
  return spec;
}

CurveSpec make_nonhelix_intrinsic(const std::map<std::string, double>& m) {
  CurveSpec spec = base_spec("nonhelix_intrinsic", m);
  IntrinsicModel mod;
  mod.kappa = [](double) { return 1.0; };
  mod.kappa_prime = [](double) { return 0.0; };
  mod.tau = [](double t) { return 2.0 + t; };
  spec.model = mod;
  return spec;
}

CurveSpec make_slant_helix_timelike(const std::map<std::string, double>& m) {
  CurveSpec spec = base_spec("slant_helix_timelike", m);
  const double c = arg(m, "c");
  require(c > 0.0, "c must be positive");
  IntrinsicModel mod;
  mod.kappa = [=](double t) { return std::cosh(c * t); };
  mod.kappa_prime = [=](double t) { return c * std::sinh(c * t); };
  mod.tau = [=](double t) { return std::sinh(c * t); };
  spec.model = mod;
  return spec;
}

CurveSpec make_slant_helix_type1(const std::map<std::string, double>& m) {
  CurveSpec spec = base_spec("slant_helix_type1", m);
  const double c = arg(m, "c");
  require(c > 0.0, "c must be positive");
  const double reach = c * std::max(std::fabs(spec.t0), std::fabs(spec.t1));
  require(reach < 1.55, "domain leaves the positive-curvature range");
  IntrinsicModel mod;
  mod.kappa = [=](double t) { return std::cos(c * t); };
  mod.kappa_prime = [=](double t) { return -c * std::sin(c * t); };
  mod.tau = [=](double t) { return std::sin(c * t); };
  mod.eps_T = +1;
  mod.eps_N = -1;
  mod.T0 = Vec3{0.0, 1.0, 0.0};
  mod.N0 = Vec3{1.0, 0.0, 0.0};
  spec.model = mod;
  return spec;
}

CurveSpec make_spacelike_line(const std::map<std::string, double>& m) {
  CurveSpec spec = base_spec("spacelike_line", m);
  AnalyticModel mod;
  mod.position = [](double t) { return Vec3{0.0, t, 0.0}; };
  mod.d1 = [](double) { return Vec3{0.0, 1.0, 0.0}; };
  mod.d2 = [](double) { return Vec3{0.0, 0.0, 0.0}; };
  mod.d3 = [](double) { return Vec3{0.0, 0.0, 0.0}; };
  spec.model = mod;
  return spec;
}

std::vector<CatalogEntry> build_entries() {
  const double rt2 = std::sqrt(2.0);
  std::vector<CatalogEntry> out;

  auto add = [&](CatalogEntry e) { out.push_back(std::move(e)); };

  add({"timelike_helix",
       "unit-speed timelike circular helix around the x1 axis",
       {{"a", 1.0, "spatial radius"},
        {"b", rt2, "axial rate, must exceed 1"},
        {"t0", 0.0, "domain start"},
        {"t1", 1.5, "domain end"}},
       CurveTypeTag::Timelike,
       false,
       make_timelike_helix});

  add({"timelike_planar",
       "timelike hyperbola in the x1 x2 plane, zero torsion",
       {{"a", 1.0, "scale"}, {"t0", 0.0, "domain start"}, {"t1", 1.2, "domain end"}},
       CurveTypeTag::Timelike,
       false,
       make_timelike_planar});

  add({"timelike_parabola",
       "plane parabola with non-constant speed, timelike on its domain",
       {{"q", 0.5, "quadratic coefficient"},
        {"t_shift", 0.0, "parameter shift, geometry unchanged"},
        {"t0", -0.6, "domain start"},
        {"t1", 0.6, "domain end"}},
       CurveTypeTag::Timelike,
       false,
       make_timelike_parabola});

  add({"spacelike_helix_type1",
       "spacelike helix whose principal normal is timelike",
       {{"a", 1.0, "hyperbolic radius"},
        {"b", 2.0, "axial rate"},
        {"t0", 0.0, "domain start"},
        {"t1", 1.5, "domain end"}},
       CurveTypeTag::SpacelikeType1,
       false,
       make_spacelike_helix_type1});

  add({"spacelike_helix_type2",
       "spacelike helix whose binormal is timelike",
       {{"a", 1.0, "hyperbolic radius"},
        {"b", 2.0, "axial rate, must exceed a"},
        {"t0", 0.0, "domain start"},
        {"t1", 1.5, "domain end"}},
       CurveTypeTag::SpacelikeType2,
       false,
       make_spacelike_helix_type2});

  add({"spacelike_planar",
       "circle in the x2 x3 plane, timelike binormal",
       {{"a", 1.0, "radius"}, {"t0", 0.0, "domain start"}, {"t1", 1.5, "domain end"}},
       CurveTypeTag::SpacelikeType2,
       false,
       make_spacelike_planar});

  add({"spacelike_planar_type1",
       "hyperbola in the x1 x2 plane, timelike principal normal",
       {{"a", 1.0, "scale"}, {"t0", 0.0, "domain start"}, {"t1", 1.5, "domain end"}},
       CurveTypeTag::SpacelikeType1,
       false,
       make_spacelike_planar_type1});

  add({"nonhelix_intrinsic",
       "timelike curve with kappa = 1 and linearly growing torsion; neither helix nor slant",
       {{"t0", 0.0, "domain start"}, {"t1", 1.5, "domain end"}},
       CurveTypeTag::Timelike,
       false,
       make_nonhelix_intrinsic});

  add({"slant_helix_timelike",
       "timelike curve with kappa = cosh(c s), tau = sinh(c s); constant slant value c",
       {{"c", 0.5, "slant rate"}, {"t0", 0.0, "domain start"}, {"t1", 1.5, "domain end"}},
       CurveTypeTag::Timelike,
       false,
       make_slant_helix_timelike});

  add({"slant_helix_type1",
       "spacelike curve with kappa = cos(c s), tau = sin(c s); constant slant value c",
       {{"c", 0.5, "slant rate"}, {"t0", 0.0, "domain start"}, {"t1", 1.5, "domain end"}},
       CurveTypeTag::SpacelikeType1,
       false,
       make_slant_helix_type1});

  add({"spacelike_line",
       "straight spacelike line; curvature vanishes and no frame exists",
       {{"t0", 0.0, "domain start"}, {"t1", 1.5, "domain end"}},
       std::nullopt,
       true,
       make_spacelike_line});

  return out;
}

}  // namespace

const std::vector<CatalogEntry>& curve_catalog() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : curve_catalog())
    if (e.name == name) return e;
  throw UnknownCurveError("no catalog curve named '" + name + "'");
}

CurveSpec make_curve_spec(const std::string& name, const std::map<std::string, double>& params) {
  const CatalogEntry& entry = catalog_entry(name);
  std::map<std::string, double> merged;
  for (const ParamSchema& p : entry.params) merged[p.name] = p.default_value;
  for (const auto& [key, value] : params) {
    if (merged.find(key) == merged.end())
      throw InvalidArgumentError("curve '" + name + "' has no parameter '" + key + "'");
    merged[key] = value;
  }
  return entry.make(merged);
}

UnitSpeedCurve build_catalog_curve(const std::string& name,
                                   const std::map<std::string, double>& params, std::size_t n,
                                   const Tolerances& tol) {
  CurveSpec spec = make_curve_spec(name, params);
  SampledCurve sampled = sample_curve(spec, n, tol.tol_null);
  return reparametrize_arclength(spec, sampled, n, tol.tol_null);
}

}  // namespace lpc
