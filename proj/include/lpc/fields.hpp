#pragma once

#include <optional>
#include <vector>

#include "lpc/frenet.hpp"

namespace lpc {

enum class PartnerKind { Evolute, Mannheim, Bertrand };
enum class CaseId { I, II, III };

const char* to_string(PartnerKind k) noexcept;
const char* to_string(CaseId c) noexcept;
std::optional<PartnerKind> partner_kind_from_string(const std::string& s);
std::optional<CaseId> case_id_from_string(const std::string& s);

/// Recipe for one partner construction. c0 shifts the integrated phase of the
/// evolute and Mannheim fields; theta is the constant hyperbolic/circular
/// angle of the Bertrand field and is rejected elsewhere.
struct PartnerSpec {
  PartnerKind kind = PartnerKind::Evolute;
  CaseId case_id = CaseId::I;
  double c0 = 0.0;
  double theta = 0.0;
  std::optional<Vec3> base;  ///< default: donor start + (0, 1, 0)
};

/// Unit direction field X = u T + v N + w B along the donor, with
/// eps_T u^2 + eps_N v^2 + eps_B w^2 = sigma = <X,X> = +/-1.
struct DirectionField {
  std::vector<double> u, v, w;
  std::vector<double> phase;  ///< integrated phase (zeros for Bertrand)
  std::vector<Vec3> X;
  int sigma = +1;
};

/// True when the case row exists for the donor's type.
bool case_admissible(PartnerKind kind, CaseId c, CurveTypeTag donor);

/// Causal sign of X for an admissible combination.
int field_sigma(PartnerKind kind, CaseId c, CurveTypeTag donor);

DirectionField evolute_direction_field(const FrenetApparatus& donor, const PartnerSpec& spec);
DirectionField mannheim_direction_field(const FrenetApparatus& donor, const PartnerSpec& spec);
DirectionField bertrand_direction_field(const FrenetApparatus& donor, const PartnerSpec& spec);
DirectionField direction_field(const FrenetApparatus& donor, const PartnerSpec& spec);

struct PartnerCurve {
  UnitSpeedCurve curve;
  FrenetApparatus apparatus;  ///< degenerate-tolerant; masked nodes possible
  DirectionField field;
};

/// Integrate the direction field from the base point on the donor's grid and
/// measure the partner's own Frenet data.
PartnerCurve construct_partner(const UnitSpeedCurve& donor, const FrenetApparatus& donor_app,
                               const PartnerSpec& spec, const Tolerances& tol = {});

/// Closed-form partner curvature/torsion transfer laws, evaluated on the
/// donor data. Torsion signs follow this library's frame conventions only up
/// to an orientation of the partner normal; comparisons downstream are by
/// magnitude with the sign pattern reported.
struct CurvaturePair {
  std::vector<double> kappa, tau;
};

CurvaturePair predicted_partner_curvatures(const FrenetApparatus& donor, const PartnerSpec& spec);

/// Inverse transfer: donor curvature/torsion from measured partner data.
/// Derivative-bearing formulas difference tau/kappa on the grid; nodes
/// where a radicand fails or kappa collapses are flagged invalid. The
/// difference is certified per node by recomputing it at doubled spacing:
/// where the two disagree beyond the recovery budget the ratio is changing
/// too fast for the grid (tau/kappa steepens without bound beside excised
/// curvature zeros) and the node is rejected rather than reported wrong.
struct RecoveredCurvatures {
  std::vector<double> kappa, tau;
  std::vector<std::uint8_t> valid;
  std::size_t radicand_violations = 0;
  std::size_t derivative_rejections = 0;
};

RecoveredCurvatures recover_donor_curvatures(const FrenetApparatus& partner,
                                             const PartnerSpec& spec, CurveTypeTag donor_type,
                                             const Tolerances& tol = {});

/// Pure-algebra Bertrand transfer at one point, forward and inverse. The
/// kind's five rows are keyed by case and donor type. The inverse accepts a
/// signed kappa_bar: feeding the signed transfer coefficient instead of the
/// measured magnitude makes it exact on both sides of a sign change.
struct BertrandLaw {
  double kappa_bar, tau_bar;
};
BertrandLaw bertrand_forward(CaseId c, CurveTypeTag donor, double theta, double kappa, double tau);
BertrandLaw bertrand_inverse(CaseId c, CurveTypeTag donor, double theta, double kappa_bar,
                             double tau_bar);

}  // namespace lpc
