#pragma once

#include <cmath>
#include <string>

#include "lpc/errors.hpp"

namespace lpc {

/// Vector in R^3 carrying the index-1 Lorentzian metric
///
///   <x, y> = -x1*y1 + x2*y2 + x3*y3
///
/// The x1 axis is the timelike direction.
struct Vec3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double a, double b, double c) : x1(a), x2(b), x3(c) {}

  constexpr Vec3 operator+(const Vec3& o) const { return {x1 + o.x1, x2 + o.x2, x3 + o.x3}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x1 - o.x1, x2 - o.x2, x3 - o.x3}; }
  constexpr Vec3 operator-() const { return {-x1, -x2, -x3}; }
  constexpr Vec3 operator*(double c) const { return {x1 * c, x2 * c, x3 * c}; }
  constexpr Vec3 operator/(double c) const { return {x1 / c, x2 / c, x3 / c}; }
  constexpr Vec3& operator+=(const Vec3& o) {
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr bool operator==(const Vec3& o) const = default;
};

constexpr Vec3 operator*(double c, const Vec3& v) { return v * c; }

/// Lorentzian scalar product with signature (-, +, +).
constexpr double minkowski_inner(const Vec3& a, const Vec3& b) {
  return -a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

/// Lorentzian cross product. Satisfies e2 x e3 = e1 and e1 x e2 = -e3,
/// and <x cross y, x> = <x cross y, y> = 0 identically.
constexpr Vec3 minkowski_cross(const Vec3& a, const Vec3& b) {
  return {a.x2 * b.x3 - a.x3 * b.x2,
          a.x1 * b.x3 - a.x3 * b.x1,
          -(a.x1 * b.x2 - a.x2 * b.x1)};
}

inline double sup_norm(const Vec3& v) {
  return std::max({std::fabs(v.x1), std::fabs(v.x2), std::fabs(v.x3)});
}

inline bool all_finite(const Vec3& v) {
  return std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.x3);
}

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

inline const char* to_string(CausalCharacter c) noexcept {
  switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Lightlike: return "lightlike";
  }
  return "unknown";
}

inline constexpr double kDefaultNullTol = 1e-9;

/// Causal character of v with a scale-aware null band. A vector counts as
/// lightlike when |<v,v>| <= tol_null * max(1, |v|_inf^2); the zero vector is
/// spacelike.
inline CausalCharacter causal_character(const Vec3& v, double tol_null = kDefaultNullTol) {
  if (!all_finite(v)) throw InvalidArgumentError("causal_character: non-finite component");
  const double n = sup_norm(v);
  if (n == 0.0) return CausalCharacter::Spacelike;
  const double q = minkowski_inner(v, v);
  const double band = tol_null * std::max(1.0, n * n);
  if (q > band) return CausalCharacter::Spacelike;
  if (q < -band) return CausalCharacter::Timelike;
  return CausalCharacter::Lightlike;
}

struct NormalizeResult {
  Vec3 unit;
  int sigma;  ///< sign of <v,v>: +1 spacelike, -1 timelike
};

/// Scale v to |<v,v>| = 1. Throws NullVectorError inside the null band, where
/// no Lorentzian unit rescaling exists.
inline NormalizeResult lorentz_normalize(const Vec3& v, double tol_null = kDefaultNullTol) {
  if (!all_finite(v)) throw InvalidArgumentError("lorentz_normalize: non-finite component");
  const double q = minkowski_inner(v, v);
  const double n = sup_norm(v);
  if (std::fabs(q) <= tol_null * std::max(1.0, n * n)) {
    throw NullVectorError("lorentz_normalize: vector is lightlike or zero (<v,v> = " +
                          std::to_string(q) + ")");
  }
  const double inv = 1.0 / std::sqrt(std::fabs(q));
  return {v * inv, q < 0.0 ? -1 : +1};
}

}  // namespace lpc
