#pragma once

#include <array>
#include <span>

#include "lpc/verify.hpp"

namespace lpc {

struct ConstancyVerdict {
  double mean = 0.0;
  double rel_spread = 1e300;  ///< max deviation over max(1, |mean|)
  std::size_t count = 0;

  bool constant(double tol) const { return count >= 8 && rel_spread < tol; }
};

ConstancyVerdict constancy(std::span<const double> values, std::span<const std::uint8_t> mask);

/// Constancy of tau/kappa over the well-conditioned nodes.
ConstancyVerdict helix_invariant(const FrenetApparatus& app, const Tolerances& tol = {});

/// The slant quantity |kappa^2 (tau/kappa)' / D^(3/2)| admits three choices
/// of D depending on the causal setup; a variant applies only where its D
/// stays positive on every considered node. The magnitude is tracked because
/// frame orientation flips across curvature zeros negate the signed value
/// without disturbing its size.
enum class SlantVariant { TauDominant, Elliptic, KappaDominant };
const char* to_string(SlantVariant v) noexcept;

struct SlantInvariant {
  SlantVariant variant = SlantVariant::Elliptic;
  bool applicable = false;
  ConstancyVerdict verdict;
};

struct SlantAnalysis {
  std::array<SlantInvariant, 3> variants;

  bool is_slant(double tol) const;
  const SlantInvariant* best() const;  ///< applicable variant with least spread
  const SlantInvariant& require(SlantVariant v) const;
};

SlantAnalysis slant_helix_invariants(const FrenetApparatus& app, const Tolerances& tol = {});

double max_interior_abs_tau(const FrenetApparatus& app, const Tolerances& tol = {});
bool is_plane_curve(const FrenetApparatus& app, const Tolerances& tol = {});

struct ClassificationSummary {
  CurveTypeTag type = CurveTypeTag::Timelike;
  bool planar = false;
  bool helix = false;
  bool slant = false;
  ConstancyVerdict helix_verdict;
  SlantAnalysis slant_analysis;
};

ClassificationSummary classify_curve(const FrenetApparatus& app, const Tolerances& tol = {});

/// Construct the partner curves the donor admits and check the invariant
/// correspondences on them: helix donors must yield slant or helix partners
/// with the predicted invariant values, plane donors yield helices, and the
/// converse directions are exercised where a construction realizes them.
std::vector<CheckResult> theorem_suite(const UnitSpeedCurve& donor, const FrenetApparatus& app,
                                       const Tolerances& tol = {});

}  // namespace lpc
