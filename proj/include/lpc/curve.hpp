#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lpc/vec.hpp"

namespace lpc {

/// Curve given by closed-form position and derivatives in an arbitrary
/// regular parameter t.
struct AnalyticModel {
  std::function<Vec3(double)> position;
  std::function<Vec3(double)> d1;
  std::function<Vec3(double)> d2;
  std::function<Vec3(double)> d3;
};

/// Curve given intrinsically by curvature and torsion of the arc-length
/// parameter; realized by integrating the frame system from initial data.
/// eps_T/eps_N fix the causal signs of the initial tangent and normal.
struct IntrinsicModel {
  std::function<double(double)> kappa;
  std::function<double(double)> kappa_prime;
  std::function<double(double)> tau;
  int eps_T = -1;
  int eps_N = +1;
  Vec3 p0{0.0, 0.0, 0.0};
  Vec3 T0{1.0, 0.0, 0.0};
  Vec3 N0{0.0, 1.0, 0.0};
};

struct CurveSpec {
  std::string name;
  std::map<std::string, double> params;
  double t0 = 0.0;
  double t1 = 1.0;
  std::variant<AnalyticModel, IntrinsicModel> model;
};

/// Raw samples on a uniform t-grid. Derivatives are with respect to t.
struct SampledCurve {
  std::vector<double> t;
  std::vector<Vec3> pos, d1, d2, d3;
  std::size_t size() const { return t.size(); }
};

/// Samples on a uniform arc-length grid s_k = s0 + k*h, tangent normalized to
/// |<d1,d1>| = 1. d2, d3 are arc-length derivatives.
struct UnitSpeedCurve {
  double s0 = 0.0;
  double h = 0.0;
  std::vector<Vec3> pos, d1, d2, d3;
  CausalCharacter tangent_character = CausalCharacter::Spacelike;
  bool analytic_tier = true;  ///< false when derivatives came from differencing

  std::size_t size() const { return pos.size(); }
  double s(std::size_t k) const { return s0 + static_cast<double>(k) * h; }
  std::vector<double> s_grid() const;
};

/// Evaluate spec on a uniform grid of n+1 nodes over [t0, t1]. Every tangent
/// must stay outside the null band (LightlikeTangentError otherwise). For
/// intrinsic specs this integrates the frame system (classical RK4 with
/// substeps) and t is already arc length.
SampledCurve sample_curve(const CurveSpec& spec, std::size_t n, double tol_null = kDefaultNullTol);

/// Rebuild c on a uniform arc-length grid of n_out+1 nodes. Arc length comes
/// from Simpson prefix sums of the speed; the inverse map is evaluated by
/// monotone cubic interpolation with exact endpoint slopes, and derivatives
/// are chain-ruled from the analytic model. A curve that is already unit
/// speed passes through unchanged (n_out must then equal the sample count).
UnitSpeedCurve reparametrize_arclength(const CurveSpec& spec, const SampledCurve& c,
                                       std::size_t n_out, double tol_null = kDefaultNullTol);

/// Integral curve of the per-node unit field X on the grid s_k = s0 + k*h:
/// positions are Simpson prefix sums from base, d1 := X, higher derivatives
/// by finite differences of X. Throws NonUnitFieldError unless
/// |<X,X>| = 1 within tol_unit at every node.
UnitSpeedCurve integral_curve(std::span<const Vec3> X, const Vec3& base, double s0, double h,
                              double tol_unit = 1e-6);

/// Fallback-tier construction from positions alone (uniform t-grid). All
/// derivatives are finite differences and the arc-length resampling uses
/// Hermite position interpolation, so downstream residuals are only good to
/// the finite-difference tier.
UnitSpeedCurve unit_speed_from_positions(std::span<const Vec3> pos, double t0, double h,
                                         std::size_t n_out, double tol_null = kDefaultNullTol);

}  // namespace lpc
