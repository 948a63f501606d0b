#include "lpc/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lpc/errors.hpp"
#include "lpc/numerics.hpp"

namespace lpc {

namespace {

constexpr std::size_t kEdgeSkip = 4;  ///< one-sided stencils live here
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::uint8_t> interior_mask(const std::vector<std::uint8_t>& strong,
                                        bool need_stencil) {
  const std::size_t n = strong.size();
  std::vector<std::uint8_t> mask(n, 0);
  if (n <= 2 * kEdgeSkip) return mask;
  for (std::size_t k = kEdgeSkip; k + kEdgeSkip < n; ++k) {
    bool ok = strong[k];
    if (need_stencil)
      for (std::size_t j = k - 2; j <= k + 2; ++j) ok = ok && strong[j];
    mask[k] = ok;
  }
  return mask;
}

}  // namespace

ConstancyVerdict constancy(std::span<const double> values, std::span<const std::uint8_t> mask) {
  ConstancyVerdict out;
  double sum = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!mask[k]) continue;
    sum += values[k];
    ++out.count;
  }
  if (out.count == 0) return out;
  out.mean = sum / double(out.count);
  double dev = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (mask[k]) dev = std::max(dev, std::fabs(values[k] - out.mean));
  out.rel_spread = dev / std::max(1.0, std::fabs(out.mean));
  return out;
}

ConstancyVerdict helix_invariant(const FrenetApparatus& app, const Tolerances& tol) {
  const std::size_t n = app.size();
  std::vector<std::uint8_t> mask = interior_mask(app.strong_mask(tol.excise_rel), false);
  std::vector<double> ratio(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    if (mask[k]) ratio[k] = app.tau[k] / app.kappa[k];
  return constancy(ratio, mask);
}

const char* to_string(SlantVariant v) noexcept {
  switch (v) {
    case SlantVariant::TauDominant: return "tau2_minus_kappa2";
    case SlantVariant::Elliptic: return "kappa2_plus_tau2";
    case SlantVariant::KappaDominant: return "kappa2_minus_tau2";
  }
  return "?";
}

bool SlantAnalysis::is_slant(double tol) const {
  for (const SlantInvariant& s : variants)
    if (s.applicable && s.verdict.constant(tol)) return true;
  return false;
}

const SlantInvariant* SlantAnalysis::best() const {
  const SlantInvariant* b = nullptr;
  for (const SlantInvariant& s : variants) {
    if (!s.applicable || s.verdict.count == 0) continue;
    if (!b || s.verdict.rel_spread < b->verdict.rel_spread) b = &s;
  }
  return b;
}

const SlantInvariant& SlantAnalysis::require(SlantVariant v) const {
  for (const SlantInvariant& s : variants)
    if (s.variant == v) {
      if (!s.applicable)
        throw NoApplicableVariantError(std::string("variant ") + to_string(v) +
                                       " does not apply to this curve");
      return s;
    }
  throw NoApplicableVariantError("unknown variant");
}

SlantAnalysis slant_helix_invariants(const FrenetApparatus& app, const Tolerances& tol) {
  const std::size_t n = app.size();
  // Measured torsion carries one-sided-stencil error at the first and last
  // few nodes; zeroing them keeps the differenced ratio clean.
  std::vector<std::uint8_t> trust = app.strong_mask(tol.excise_rel_deriv);
  for (std::size_t k = 0; k < n; ++k)
    if (k < kEdgeSkip || k + kEdgeSkip >= n) trust[k] = 0;
  std::vector<std::uint8_t> mask = interior_mask(trust, true);

  std::vector<double> ratio(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    if (trust[k] && app.kappa[k] > 0.0) ratio[k] = app.tau[k] / app.kappa[k];
  std::vector<double> dratio = fd_derivative(ratio, app.h);

  SlantAnalysis out;
  const SlantVariant ids[3] = {SlantVariant::TauDominant, SlantVariant::Elliptic,
                               SlantVariant::KappaDominant};
  for (int i = 0; i < 3; ++i) {
    SlantInvariant& si = out.variants[i];
    si.variant = ids[i];
    std::vector<double> value(n, 0.0);
    bool applicable = true;
    std::size_t seen = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!mask[k]) continue;
      const double k2 = app.kappa[k] * app.kappa[k];
      const double t2 = app.tau[k] * app.tau[k];
      double d = 0.0;
      switch (si.variant) {
        case SlantVariant::TauDominant: d = t2 - k2; break;
        case SlantVariant::Elliptic: d = k2 + t2; break;
        case SlantVariant::KappaDominant: d = k2 - t2; break;
      }
      if (!(d > 0.0)) {
        applicable = false;
        break;
      }
      // The frame orientation flips across curvature zeros and takes the
      // sign of this quantity with it; the magnitude is what stays constant.
      value[k] = std::fabs(k2 * dratio[k] / std::pow(d, 1.5));
      ++seen;
    }
    si.applicable = applicable && seen > 0;
    if (si.applicable) si.verdict = constancy(value, mask);
  }
  return out;
}

double max_interior_abs_tau(const FrenetApparatus& app, const Tolerances& tol) {
  std::vector<std::uint8_t> mask = interior_mask(app.strong_mask(tol.excise_rel), false);
  double m = 0.0;
  for (std::size_t k = 0; k < app.size(); ++k)
    if (mask[k]) m = std::max(m, std::fabs(app.tau[k]));
  return m;
}

bool is_plane_curve(const FrenetApparatus& app, const Tolerances& tol) {
  return max_interior_abs_tau(app, tol) < tol.tol_planar;
}

ClassificationSummary classify_curve(const FrenetApparatus& app, const Tolerances& tol) {
  ClassificationSummary s;
  s.type = app.type.tag;
  s.planar = is_plane_curve(app, tol);
  s.helix_verdict = helix_invariant(app, tol);
  s.helix = s.helix_verdict.constant(tol.tol_const);
  s.slant_analysis = slant_helix_invariants(app, tol);
  s.slant = s.slant_analysis.is_slant(tol.tol_const);
  return s;
}

namespace {

CheckResult theorem_result(std::string id, std::string detail, double residual, double tolerance,
                           bool pass, std::string notes) {
  CheckResult c;
  c.id = std::move(id);
  c.detail = std::move(detail);
  c.max_residual = residual;
  c.tolerance = tolerance;
  c.pass = pass;
  c.notes = std::move(notes);
  return c;
}

std::string variant_note(const SlantInvariant& si) {
  std::ostringstream os;
  os << "variant " << to_string(si.variant) << ", mean " << si.verdict.mean << ", nodes "
     << si.verdict.count;
  return os.str();
}

}  // namespace

std::vector<CheckResult> theorem_suite(const UnitSpeedCurve& donor, const FrenetApparatus& app,
                                       const Tolerances& tol) {
  std::vector<CheckResult> out;
  const double th = tol.tol_theorem;
  const ClassificationSummary cls = classify_curve(app, tol);
  const bool tl = cls.type == CurveTypeTag::Timelike;
  const bool t1 = cls.type == CurveTypeTag::SpacelikeType1;

  const CaseId evolute_case = tl ? CaseId::I : CaseId::II;
  const CaseId bertrand_case = t1 ? CaseId::III : CaseId::I;

  // The hyperbolic Mannheim cases need a strict pointwise ordering; pick
  // whichever the donor satisfies, or skip Mannheim checks entirely.
  std::optional<CaseId> mannheim_case;
  if (cls.type == CurveTypeTag::SpacelikeType2) {
    mannheim_case = CaseId::III;
  } else {
    double min_ti = kInf, min_kt = kInf;
    for (std::size_t k = 0; k < app.size(); ++k) {
      min_ti = std::min(min_ti, std::fabs(app.tau[k]) - std::fabs(app.kappa[k]));
      min_kt = std::min(min_kt, std::fabs(app.kappa[k]) - std::fabs(app.tau[k]));
    }
    if (min_ti > 0.0)
      mannheim_case = CaseId::I;
    else if (min_kt > 0.0)
      mannheim_case = CaseId::II;
  }

  auto build = [&](PartnerKind kind, CaseId c, double c0, double theta) {
    PartnerSpec spec;
    spec.kind = kind;
    spec.case_id = c;
    spec.c0 = c0;
    spec.theta = theta;
    return construct_partner(donor, app, spec, tol);
  };

  auto guarded = [&](const char* id, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      out.push_back(theorem_result(id, "construction failed", kInf, th, false, e.what()));
    }
  };

  if (cls.planar) {
    guarded("evolute_plane_to_helix", [&] {
      PartnerCurve p = build(PartnerKind::Evolute, evolute_case, 0.7, 0.0);
      ConstancyVerdict v = helix_invariant(p.apparatus, tol);
      std::ostringstream notes;
      notes << "partner ratio mean " << v.mean << " over " << v.count << " nodes";
      out.push_back(theorem_result("evolute_plane_to_helix",
                                   "the evolute of a plane curve has constant tau/kappa",
                                   v.rel_spread, th, v.constant(th), notes.str()));
    });
    guarded("bertrand_plane_to_helix", [&] {
      PartnerCurve p = build(PartnerKind::Bertrand, bertrand_case, 0.0, 0.4);
      ConstancyVerdict v = helix_invariant(p.apparatus, tol);
      std::ostringstream notes;
      notes << "partner ratio mean " << v.mean << " over " << v.count << " nodes";
      out.push_back(theorem_result("bertrand_plane_to_helix",
                                   "a nonzero-angle partner of a plane curve has constant "
                                   "tau/kappa",
                                   v.rel_spread, th, v.constant(th), notes.str()));
    });
    return out;
  }

  if (cls.helix) {
    const double r = cls.helix_verdict.mean;

    guarded("evolute_helix_to_slant", [&] {
      PartnerCurve p = build(PartnerKind::Evolute, evolute_case, 0.3, 0.0);
      SlantAnalysis sa = slant_helix_invariants(p.apparatus, tol);
      const SlantInvariant* b = sa.best();
      out.push_back(theorem_result(
          "evolute_helix_to_slant", "the evolute of a helix carries a constant slant value",
          b ? b->verdict.rel_spread : kInf, th, sa.is_slant(th), b ? variant_note(*b) : ""));

      const SlantInvariant& si = sa.require(
          evolute_case == CaseId::I ? SlantVariant::Elliptic : SlantVariant::KappaDominant);
      const double res =
          std::fabs(std::fabs(si.verdict.mean) - std::fabs(r)) / std::max(1.0, std::fabs(r));
      out.push_back(theorem_result(
          "evolute_slant_identity",
          "the slant value of the evolute equals the donor ratio, in magnitude", res, th,
          res < th, variant_note(si)));
    });

    if (mannheim_case) {
      guarded("mannheim_helix_to_slant", [&] {
        PartnerCurve p = build(PartnerKind::Mannheim, *mannheim_case, 0.3, 0.0);
        SlantAnalysis sa = slant_helix_invariants(p.apparatus, tol);
        const SlantInvariant* b = sa.best();
        out.push_back(theorem_result(
            "mannheim_helix_to_slant",
            "the mannheim partner of a helix carries a constant slant value",
            b ? b->verdict.rel_spread : kInf, th, sa.is_slant(th), b ? variant_note(*b) : ""));

        const SlantVariant want = *mannheim_case == CaseId::I ? SlantVariant::TauDominant
                                  : *mannheim_case == CaseId::II ? SlantVariant::KappaDominant
                                                                 : SlantVariant::Elliptic;
        const SlantInvariant& si = sa.require(want);
        const double sbar = std::fabs(si.verdict.mean);
        const double res = sbar < 1e-12
                               ? kInf
                               : std::fabs(std::fabs(r) - 1.0 / sbar) / std::max(1.0, std::fabs(r));
        out.push_back(theorem_result(
            "mannheim_slant_identity",
            "the donor ratio equals the reciprocal of the partner slant value, in magnitude",
            res, th, res < th, variant_note(si)));
      });
    }

    guarded("bertrand_helix_preserved", [&] {
      PartnerCurve p = build(PartnerKind::Bertrand, bertrand_case, 0.0, 0.7);
      ConstancyVerdict v = helix_invariant(p.apparatus, tol);
      std::ostringstream notes;
      notes << "partner ratio mean " << v.mean;
      out.push_back(theorem_result("bertrand_helix_preserved",
                                   "every constant-angle partner of a helix is again a helix",
                                   v.rel_spread, th, v.constant(th), notes.str()));
    });

    if (tl && std::fabs(r) > 1.0) {
      guarded("bertrand_helix_to_plane", [&] {
        const double theta_star = std::atanh(1.0 / r);
        PartnerCurve p = build(PartnerKind::Bertrand, CaseId::II, 0.0, theta_star);
        const double res = max_interior_abs_tau(p.apparatus, tol);
        std::ostringstream notes;
        notes << "flattening angle " << theta_star;
        out.push_back(theorem_result("bertrand_helix_to_plane",
                                     "one angle choice flattens the partner of a helix",
                                     res, tol.tol_frenet, res < tol.tol_frenet, notes.str()));
      });
    }
    return out;
  }

  if (cls.slant) {
    guarded("bertrand_slant_preserved", [&] {
      PartnerCurve p = build(PartnerKind::Bertrand, bertrand_case, 0.0, 0.4);
      SlantAnalysis sa = slant_helix_invariants(p.apparatus, tol);
      const SlantInvariant* b = sa.best();
      out.push_back(theorem_result("bertrand_slant_preserved",
                                   "constant-angle partners preserve the slant property",
                                   b ? b->verdict.rel_spread : kInf, th, sa.is_slant(th),
                                   b ? variant_note(*b) : ""));

      const SlantInvariant* db = cls.slant_analysis.best();
      if (b && db) {
        const double sd = std::fabs(db->verdict.mean);
        const double res =
            std::fabs(std::fabs(b->verdict.mean) - sd) / std::max(1.0, sd);
        out.push_back(theorem_result("bertrand_slant_identity",
                                     "the slant value is preserved in magnitude across the "
                                     "partnership",
                                     res, th, res < th,
                                     variant_note(*b) + "; donor " + variant_note(*db)));
      }
    });
    return out;
  }

  // Neither helix nor slant: the correspondences must refuse to produce
  // constant invariants.
  const double wide = 100.0 * th;
  guarded("evolute_nonhelix_to_nonslant", [&] {
    PartnerCurve p = build(PartnerKind::Evolute, evolute_case, 0.3, 0.0);
    SlantAnalysis sa = slant_helix_invariants(p.apparatus, tol);
    const SlantInvariant* b = sa.best();
    const double spread = b ? b->verdict.rel_spread : kInf;
    out.push_back(theorem_result("evolute_nonhelix_to_nonslant",
                                 "the evolute of a non-helix must not be slant", spread, wide,
                                 spread > wide,
                                 "assertion is non-constancy: residual must exceed tolerance"));
  });
  if (mannheim_case) {
    guarded("mannheim_nonhelix_to_nonslant", [&] {
      PartnerCurve p = build(PartnerKind::Mannheim, *mannheim_case, 0.3, 0.0);
      SlantAnalysis sa = slant_helix_invariants(p.apparatus, tol);
      const SlantInvariant* b = sa.best();
      const double spread = b ? b->verdict.rel_spread : kInf;
      out.push_back(theorem_result("mannheim_nonhelix_to_nonslant",
                                   "the mannheim partner of a non-helix must not be slant",
                                   spread, wide, spread > wide,
                                   "assertion is non-constancy: residual must exceed tolerance"));
    });
  }
  guarded("bertrand_nonhelix_preserved", [&] {
    PartnerCurve p = build(PartnerKind::Bertrand, bertrand_case, 0.0, 0.4);
    ConstancyVerdict v = helix_invariant(p.apparatus, tol);
    out.push_back(theorem_result("bertrand_nonhelix_preserved",
                                 "constant-angle partners of non-helices stay non-helices",
                                 v.rel_spread, wide, v.rel_spread > wide,
                                 "assertion is non-constancy: residual must exceed tolerance"));
  });
  return out;
}

}  // namespace lpc
