#pragma once

#include <map>
#include <string>

namespace lpc {

/// Tolerance bundle threaded through verification runs. Values are absolute
/// unless a check documents a scale factor. The CLI can override any field
/// through the LPC_TOL_OVERRIDE environment variable (JSON name/value map).
struct Tolerances {
  double tol_null = 1e-9;           ///< null band width, scaled by |v|_inf^2
  double kappa_min = 1e-8;          ///< below this the Frenet frame is undefined
  double tol_unit = 1e-10;          ///< unit-field law residual
  double tol_frame = 1e-8;          ///< frame Lorentz-orthonormality residual
  double tol_frenet = 1e-6;         ///< Frenet system row residuals (analytic tier)
  double tol_frenet_fd = 1e-3;      ///< same, finite-difference fallback tier
  double tol_partner = 1e-5;        ///< partner frame relation residuals
  double tol_transfer_kappa = 1e-5; ///< measured vs predicted partner curvature
  double tol_transfer_tau = 1e-4;   ///< measured vs predicted partner torsion, magnitude
  double tol_recover_tight = 1e-6;  ///< round-trip recovery, algebraic branch
  double tol_recover_loose = 1e-3;  ///< round-trip recovery, derivative-bearing branch
  double tol_const = 1e-4;          ///< constancy verdict relative spread
  double tol_theorem = 1e-3;        ///< correspondence checks on constructed partners
  double tol_planar = 1e-8;         ///< max |tau| for a plane-curve verdict
  double excise_rel = 1e-3;         ///< pointwise excision: kappa_bar below this * max
  double excise_rel_deriv = 2e-2;   ///< excision for derivative-bearing checks
  double min_valid_fraction = 0.8;  ///< partner apparatus must keep this node share

  /// Replace fields named in the map; unknown names throw InvalidArgumentError.
  void apply_overrides(const std::map<std::string, double>& overrides);
};

}  // namespace lpc
