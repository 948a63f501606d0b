#pragma once

#include <string>
#include <vector>

#include "lpc/fields.hpp"

namespace lpc {

/// One named residual comparison. Informational checks are reported but do
/// not gate the aggregate verdict (used when a case's hypotheses are unmet).
struct CheckResult {
  std::string id;
  std::string detail;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool informational = false;
  std::string notes;
};

struct VerificationReport {
  PartnerSpec spec;
  CurveTypeTag donor_type = CurveTypeTag::Timelike;
  int sigma = +1;
  double excised_fraction = 0.0;
  bool hypotheses_met = true;
  std::string hypothesis_note;
  std::vector<CheckResult> checks;

  bool pass() const;
  const CheckResult* find(const std::string& id) const;
};

/// Run the full residual battery for one donor/partner pair: field algebra,
/// Frenet systems on both curves, frame alignment, curvature/torsion transfer
/// and recovery. `inject_frame_swap` deliberately swaps the partner normal
/// and binormal before checking, for exercising failure paths end to end.
VerificationReport verify_partner_relation(const UnitSpeedCurve& donor,
                                           const FrenetApparatus& donor_app,
                                           const PartnerCurve& partner, const PartnerSpec& spec,
                                           const Tolerances& tol = {},
                                           bool inject_frame_swap = false);

/// Standalone frame quality battery: orthonormality plus the three rows of
/// the frame system. Budgets follow the data tier (analytic derivatives or
/// differenced positions).
std::vector<CheckResult> frenet_check_results(const FrenetApparatus& app,
                                              const Tolerances& tol = {},
                                              bool analytic_tier = true);

}  // namespace lpc
