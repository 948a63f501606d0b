#pragma once

#include <cstdint>
#include <vector>

#include "lpc/curve.hpp"
#include "lpc/tolerances.hpp"
#include "lpc/vec.hpp"

namespace lpc {

enum class CurveTypeTag { Timelike, SpacelikeType1, SpacelikeType2 };

const char* to_string(CurveTypeTag t) noexcept;

/// Curve class together with the causal signs of its frame fields.
/// eps_B = -eps_T * eps_N always.
struct CurveType {
  CurveTypeTag tag;
  int eps_T;
  int eps_N;
  int eps_B;

  static CurveType from_signs(int eps_T, int eps_N);
};

struct FrenetOptions {
  double kappa_min = 1e-8;
  double tol_null = kDefaultNullTol;
  double tol_gate = 1e-6;  ///< construction sanity gate on |<T,T>| and <B,B>
  /// With allow_degenerate, nodes whose curvature collapses are masked out
  /// instead of fatal; construction still fails when fewer than
  /// min_valid_fraction of the nodes survive.
  bool allow_degenerate = false;
  double min_valid_fraction = 0.8;
  /// In degenerate-tolerant mode, additionally mask nodes with curvature
  /// below excise_rel times the curve's maximum; reported, and skipped by
  /// residual maxima downstream.
  double excise_rel = 1e-3;
};

/// Frenet data on the arc-length grid of the source curve. Nodes with
/// valid[k] == 0 carry no usable frame (masked by FrenetOptions).
struct FrenetApparatus {
  CurveType type{CurveTypeTag::Timelike, -1, +1, +1};
  double s0 = 0.0;
  double h = 0.0;
  std::vector<Vec3> T, N, B;
  std::vector<double> kappa, tau;
  std::vector<std::uint8_t> valid;
  std::size_t invalid_count = 0;

  std::size_t size() const { return T.size(); }
  double s(std::size_t k) const { return s0 + static_cast<double>(k) * h; }
  /// Mask for derivative-bearing checks: valid nodes whose curvature also
  /// clears rel * max(kappa).
  std::vector<std::uint8_t> strong_mask(double rel) const;
};

/// Build T, N, B, kappa, tau per node from arc-length derivatives:
/// T = d1, kappa = sqrt(|<d2,d2>|), N = d2/kappa, B = eps_T*eps_N*(T x N),
/// tau = eps_B*<d3,B>/kappa. Throws FrameUndefinedError/LightlikeNormalError
/// at the first bad node unless options.allow_degenerate, and MixedTypeError
/// when the causal signs are not uniform across usable nodes.
FrenetApparatus frenet_apparatus(const UnitSpeedCurve& c, const FrenetOptions& options = {});

/// Classification only; runs the strict apparatus path.
CurveType classify_curve_type(const UnitSpeedCurve& c, const FrenetOptions& options = {});

/// Residuals of the frame transport system
///   T' = kappa N,  N' = eps_B kappa T + tau B,  B' = eps_T tau N
/// with the left sides taken by finite differences of the sampled frame.
/// Interior maxima skip edge_skip nodes per end, masked nodes, and any node
/// whose difference stencil touches a masked node; boundary maxima are
/// reported separately and do not gate pass. Frames that were themselves
/// measured by finite differences need edge_skip 4: their end nodes already
/// carry one-sided-stencil error before this check differences them again.
struct FrenetResidualReport {
  double row_interior[3] = {0.0, 0.0, 0.0};
  double row_boundary[3] = {0.0, 0.0, 0.0};
  double tol = 0.0;
  bool pass = false;
  double max_interior() const;
};

FrenetResidualReport check_frenet_equations(const FrenetApparatus& app, double tol,
                                            std::size_t edge_skip = 2);

/// Max deviation of the six pairwise products <T,T>, <N,N>, <B,B>, <T,N>,
/// <T,B>, <N,B> from the type's epsilon-diagonal, over valid interior nodes.
double frame_orthonormality_residual(const FrenetApparatus& app);

}  // namespace lpc
