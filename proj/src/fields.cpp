#include "lpc/fields.hpp"

#include <algorithm>
#include <cmath>

#include "lpc/errors.hpp"
#include "lpc/numerics.hpp"

namespace lpc {

const char* to_string(PartnerKind k) noexcept {
  switch (k) {
    case PartnerKind::Evolute: return "evolute";
    case PartnerKind::Mannheim: return "mannheim";
    case PartnerKind::Bertrand: return "bertrand";
  }
  return "?";
}

const char* to_string(CaseId c) noexcept {
  switch (c) {
    case CaseId::I: return "i";
    case CaseId::II: return "ii";
    case CaseId::III: return "iii";
  }
  return "?";
}

std::optional<PartnerKind> partner_kind_from_string(const std::string& s) {
  if (s == "evolute") return PartnerKind::Evolute;
  if (s == "mannheim") return PartnerKind::Mannheim;
  if (s == "bertrand") return PartnerKind::Bertrand;
  return std::nullopt;
}

std::optional<CaseId> case_id_from_string(const std::string& s) {
  if (s == "i" || s == "1") return CaseId::I;
  if (s == "ii" || s == "2") return CaseId::II;
  if (s == "iii" || s == "3") return CaseId::III;
  return std::nullopt;
}

bool case_admissible(PartnerKind kind, CaseId c, CurveTypeTag donor) {
  const bool tl = donor == CurveTypeTag::Timelike;
  const bool t1 = donor == CurveTypeTag::SpacelikeType1;
  const bool t2 = donor == CurveTypeTag::SpacelikeType2;
  switch (kind) {
    case PartnerKind::Evolute: return c == CaseId::I ? tl : (t1 || t2);
    case PartnerKind::Mannheim: return c == CaseId::III ? t2 : (tl || t1);
    case PartnerKind::Bertrand: return c == CaseId::III ? t1 : (tl || t2);
  }
  return false;
}

int field_sigma(PartnerKind kind, CaseId c, CurveTypeTag donor) {
  const bool tl = donor == CurveTypeTag::Timelike;
  const bool t1 = donor == CurveTypeTag::SpacelikeType1;
  switch (kind) {
    case PartnerKind::Evolute:
      if (c == CaseId::I) return +1;
      if (c == CaseId::II) return t1 ? -1 : +1;
      return t1 ? +1 : -1;
    case PartnerKind::Mannheim:
      if (c == CaseId::I) return tl ? -1 : +1;
      if (c == CaseId::II) return tl ? +1 : -1;
      return +1;
    case PartnerKind::Bertrand:
      if (c == CaseId::I) return tl ? -1 : +1;
      if (c == CaseId::II) return tl ? +1 : -1;
      return +1;
  }
  return +1;
}

namespace {

void require_usable(const FrenetApparatus& donor, const PartnerSpec& spec) {
  if (!case_admissible(spec.kind, spec.case_id, donor.type.tag)) {
    throw CaseMismatchError(std::string("case ") + to_string(spec.case_id) + " of " +
                            to_string(spec.kind) + " is not defined for a " +
                            to_string(donor.type.tag) + " curve");
  }
  if (spec.kind != PartnerKind::Bertrand && spec.theta != 0.0)
    throw InvalidArgumentError("theta applies to bertrand constructions only");
  if (spec.kind == PartnerKind::Bertrand && spec.c0 != 0.0)
    throw InvalidArgumentError("c0 applies to evolute and mannheim constructions only");
  if (donor.invalid_count != 0)
    throw FrameUndefinedError("donor frame has masked nodes; a complete frame is required");
}

std::vector<double> integrated_phase(const FrenetApparatus& donor, const PartnerSpec& spec) {
  const std::vector<double>& rate =
      spec.kind == PartnerKind::Evolute ? donor.tau : donor.kappa;
  return cumulative_simpson(rate, donor.h, spec.c0);
}

DirectionField assemble(const FrenetApparatus& donor, const PartnerSpec& spec,
                        std::vector<double> u, std::vector<double> v, std::vector<double> w,
                        std::vector<double> phase) {
  DirectionField f;
  f.sigma = field_sigma(spec.kind, spec.case_id, donor.type.tag);
  const std::size_t n = donor.size();
  f.X.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    f.X[k] = u[k] * donor.T[k] + v[k] * donor.N[k] + w[k] * donor.B[k];
  f.u = std::move(u);
  f.v = std::move(v);
  f.w = std::move(w);
  f.phase = std::move(phase);
  return f;
}

}  // namespace

DirectionField evolute_direction_field(const FrenetApparatus& donor, const PartnerSpec& spec) {
  require_usable(donor, spec);
  std::vector<double> phase = integrated_phase(donor, spec);
  const std::size_t n = donor.size();
  std::vector<double> u(n, 0.0), v(n), w(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = phase[k];
    switch (spec.case_id) {
      case CaseId::I: v[k] = -std::cos(p), w[k] = std::sin(p); break;
      case CaseId::II: v[k] = -std::cosh(p), w[k] = std::sinh(p); break;
      case CaseId::III: v[k] = std::sinh(p), w[k] = -std::cosh(p); break;
    }
  }
  return assemble(donor, spec, std::move(u), std::move(v), std::move(w), std::move(phase));
}

DirectionField mannheim_direction_field(const FrenetApparatus& donor, const PartnerSpec& spec) {
  require_usable(donor, spec);
  std::vector<double> phase = integrated_phase(donor, spec);
  const std::size_t n = donor.size();
  std::vector<double> u(n), v(n), w(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = phase[k];
    switch (spec.case_id) {
      case CaseId::I: u[k] = -std::cosh(p), v[k] = std::sinh(p); break;
      case CaseId::II: u[k] = std::sinh(p), v[k] = -std::cosh(p); break;
      case CaseId::III: u[k] = -std::cos(p), v[k] = std::sin(p); break;
    }
  }
  return assemble(donor, spec, std::move(u), std::move(v), std::move(w), std::move(phase));
}

DirectionField bertrand_direction_field(const FrenetApparatus& donor, const PartnerSpec& spec) {
  require_usable(donor, spec);
  const std::size_t n = donor.size();
  double cu = 0.0, cw = 0.0;
  switch (spec.case_id) {
    case CaseId::I: cu = std::cosh(spec.theta), cw = std::sinh(spec.theta); break;
    case CaseId::II: cu = std::sinh(spec.theta), cw = std::cosh(spec.theta); break;
    case CaseId::III: cu = std::cos(spec.theta), cw = std::sin(spec.theta); break;
  }
  return assemble(donor, spec, std::vector<double>(n, cu), std::vector<double>(n, 0.0),
                  std::vector<double>(n, cw), std::vector<double>(n, 0.0));
}

DirectionField direction_field(const FrenetApparatus& donor, const PartnerSpec& spec) {
  switch (spec.kind) {
    case PartnerKind::Evolute: return evolute_direction_field(donor, spec);
    case PartnerKind::Mannheim: return mannheim_direction_field(donor, spec);
    case PartnerKind::Bertrand: return bertrand_direction_field(donor, spec);
  }
  throw InvalidArgumentError("unknown partner kind");
}

PartnerCurve construct_partner(const UnitSpeedCurve& donor, const FrenetApparatus& donor_app,
                               const PartnerSpec& spec, const Tolerances& tol) {
  if (donor.size() != donor_app.size() || donor.s0 != donor_app.s0 || donor.h != donor_app.h)
    throw GridMismatchError("donor samples and frame live on different grids");

  PartnerCurve out;
  out.field = direction_field(donor_app, spec);
  const Vec3 base = spec.base.value_or(donor.pos.front() + Vec3{0.0, 1.0, 0.0});
  out.curve = integral_curve(out.field.X, base, donor.s0, donor.h);

  FrenetOptions opts;
  opts.kappa_min = tol.kappa_min;
  opts.tol_null = tol.tol_null;
  opts.allow_degenerate = true;
  opts.min_valid_fraction = tol.min_valid_fraction;
  opts.excise_rel = tol.excise_rel;
  out.apparatus = frenet_apparatus(out.curve, opts);
  return out;
}

BertrandLaw bertrand_forward(CaseId c, CurveTypeTag donor, double theta, double kappa,
                             double tau) {
  const double ch = std::cosh(theta), sh = std::sinh(theta);
  const double co = std::cos(theta), si = std::sin(theta);
  double a = 0.0, b = 0.0;
  if (c == CaseId::III) {
    a = kappa * co + tau * si;
    b = -kappa * si + tau * co;
  } else if (donor == CurveTypeTag::Timelike) {
    if (c == CaseId::I) {
      a = kappa * ch - tau * sh;
      b = -kappa * sh + tau * ch;
    } else {
      a = kappa * sh - tau * ch;
      b = -kappa * ch + tau * sh;
    }
  } else {
    if (c == CaseId::I) {
      a = kappa * ch + tau * sh;
      b = kappa * sh + tau * ch;
    } else {
      a = kappa * sh + tau * ch;
      b = kappa * ch + tau * sh;
    }
  }
  return {std::fabs(a), b};
}

BertrandLaw bertrand_inverse(CaseId c, CurveTypeTag donor, double theta, double kappa_bar,
                             double tau_bar) {
  const double ch = std::cosh(theta), sh = std::sinh(theta);
  const double co = std::cos(theta), si = std::sin(theta);
  double k = 0.0, t = 0.0;
  if (c == CaseId::III) {
    k = kappa_bar * co - tau_bar * si;
    t = kappa_bar * si + tau_bar * co;
  } else if (donor == CurveTypeTag::Timelike) {
    if (c == CaseId::I) {
      k = kappa_bar * ch + tau_bar * sh;
      t = kappa_bar * sh + tau_bar * ch;
    } else {
      k = -kappa_bar * sh - tau_bar * ch;
      t = -kappa_bar * ch - tau_bar * sh;
    }
  } else {
    if (c == CaseId::I) {
      k = kappa_bar * ch - tau_bar * sh;
      t = -kappa_bar * sh + tau_bar * ch;
    } else {
      k = -kappa_bar * sh + tau_bar * ch;
      t = kappa_bar * ch - tau_bar * sh;
    }
  }
  return {std::fabs(k), t};
}

CurvaturePair predicted_partner_curvatures(const FrenetApparatus& donor,
                                           const PartnerSpec& spec) {
  if (!case_admissible(spec.kind, spec.case_id, donor.type.tag))
    throw CaseMismatchError("inadmissible kind/case for this donor type");
  const std::size_t n = donor.size();
  CurvaturePair out;
  out.kappa.resize(n);
  out.tau.resize(n);

  if (spec.kind == PartnerKind::Bertrand) {
    for (std::size_t k = 0; k < n; ++k) {
      BertrandLaw law =
          bertrand_forward(spec.case_id, donor.type.tag, spec.theta, donor.kappa[k], donor.tau[k]);
      out.kappa[k] = law.kappa_bar;
      out.tau[k] = law.tau_bar;
    }
    return out;
  }

  std::vector<double> phase = integrated_phase(donor, spec);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = phase[k];
    const double kap = donor.kappa[k], tau = donor.tau[k];
    if (spec.kind == PartnerKind::Evolute) {
      switch (spec.case_id) {
        case CaseId::I:
          out.kappa[k] = kap * std::fabs(std::cos(p));
          out.tau[k] = kap * std::sin(p);
          break;
        case CaseId::II:
          out.kappa[k] = kap * std::fabs(std::cosh(p));
          out.tau[k] = kap * std::sinh(p);
          break;
        case CaseId::III:
          out.kappa[k] = kap * std::fabs(std::sinh(p));
          out.tau[k] = -kap * std::cosh(p);
          break;
      }
    } else {
      switch (spec.case_id) {
        case CaseId::I:
          out.kappa[k] = std::fabs(tau * std::sinh(p));
          out.tau[k] = -tau * std::cosh(p);
          break;
        case CaseId::II:
          out.kappa[k] = std::fabs(tau * std::cosh(p));
          out.tau[k] = -tau * std::sinh(p);
          break;
        case CaseId::III:
          out.kappa[k] = std::fabs(tau * std::sin(p));
          out.tau[k] = tau * std::cos(p);
          break;
      }
    }
  }
  return out;
}

RecoveredCurvatures recover_donor_curvatures(const FrenetApparatus& partner,
                                             const PartnerSpec& spec, CurveTypeTag donor_type,
                                             const Tolerances& tol) {
  const std::size_t n = partner.size();
  if (n < 5) throw GridTooSmallError("recovery needs at least five samples");
  RecoveredCurvatures out;
  out.kappa.assign(n, 0.0);
  out.tau.assign(n, 0.0);
  out.valid.assign(n, 0);

  // Measured partner curvatures rest on finite differences, so the first and
  // last few nodes carry one-sided stencils and are never marked valid.
  constexpr std::size_t kEdgeSkip = 4;

  if (spec.kind == PartnerKind::Bertrand) {
    std::vector<std::uint8_t> strong = partner.strong_mask(tol.excise_rel);
    for (std::size_t k = kEdgeSkip; k + kEdgeSkip < n; ++k) {
      if (!strong[k]) continue;
      BertrandLaw law = bertrand_inverse(spec.case_id, donor_type, spec.theta, partner.kappa[k],
                                         partner.tau[k]);
      out.kappa[k] = law.kappa_bar;
      out.tau[k] = law.tau_bar;
      out.valid[k] = 1;
    }
    if (std::count(out.valid.begin(), out.valid.end(), std::uint8_t{1}) == 0)
      throw DegenerateKappaBarError("no usable node for recovery");
    return out;
  }

  // Derivative-bearing inverse: difference tau/kappa where kappa is well away
  // from its excised zeros, then apply the per-case radicand.
  std::vector<std::uint8_t> trust = partner.strong_mask(tol.excise_rel_deriv);
  for (std::size_t k = 0; k < n; ++k)
    if (k < kEdgeSkip || k + kEdgeSkip >= n) trust[k] = 0;
  std::vector<double> ratio(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    if (trust[k] && partner.kappa[k] > 0.0) ratio[k] = partner.tau[k] / partner.kappa[k];
  std::vector<double> dratio = fd_derivative(ratio, partner.h);

  // Fraction of the recovery budget the difference itself may consume; the
  // rest absorbs the measurement error already in the sampled curvatures.
  constexpr double kDerivBudgetFraction = 0.25;

  for (std::size_t k = 0; k < n; ++k) {
    if (!trust[k]) continue;
    bool stencil_ok = true;
    for (std::size_t j = k - kEdgeSkip; j <= k + kEdgeSkip; ++j)
      stencil_ok = stencil_ok && trust[j];
    if (!stencil_ok) continue;

    const double kb = partner.kappa[k], tb = partner.tau[k];
    const double kb2 = kb * kb, tb2 = tb * tb;
    double disc = 0.0;
    if (spec.kind == PartnerKind::Evolute) {
      switch (spec.case_id) {
        case CaseId::I: disc = kb2 + tb2; break;
        case CaseId::II: disc = kb2 - tb2; break;
        case CaseId::III: disc = tb2 - kb2; break;
      }
    } else {
      switch (spec.case_id) {
        case CaseId::I: disc = tb2 - kb2; break;
        case CaseId::II: disc = kb2 - tb2; break;
        case CaseId::III: disc = kb2 + tb2; break;
      }
    }
    if (!(disc > 0.0)) {
      ++out.radicand_violations;
      continue;
    }
    const double root = std::sqrt(disc);
    const double deriv_term = kb2 / disc * dratio[k];

    // Same five-point formula at doubled spacing; for a fourth-order scheme
    // the disagreement is fifteen times the fine-step error.
    const double d2h = (ratio[k - 4] - ratio[k + 4] + 8.0 * (ratio[k + 2] - ratio[k - 2])) /
                       (24.0 * partner.h);
    const double deriv_err = kb2 / disc * std::fabs(dratio[k] - d2h) / 15.0;
    if (deriv_err >= kDerivBudgetFraction * tol.tol_recover_loose *
                         std::max(1.0, std::fabs(deriv_term))) {
      ++out.derivative_rejections;
      continue;
    }

    if (spec.kind == PartnerKind::Evolute) {
      out.kappa[k] = root;
      out.tau[k] = deriv_term;
    } else {
      out.kappa[k] = std::fabs(deriv_term);
      out.tau[k] = root;  // magnitude of the donor torsion
    }
    out.valid[k] = 1;
  }
  if (std::count(out.valid.begin(), out.valid.end(), std::uint8_t{1}) == 0)
    throw DegenerateKappaBarError("no usable node for recovery");
  return out;
}

}  // namespace lpc
