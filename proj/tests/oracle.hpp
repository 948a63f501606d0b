#pragma once

// Self-contained reference implementation used by the tests. Everything here
// is computed by closed-form algebra per parameter value, independent of the
// library's sampling, quadrature, and differencing pipeline.

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>

namespace oracle {

struct V3 {
  double a = 0.0, b = 0.0, c = 0.0;

  V3 operator+(const V3& o) const { return {a + o.a, b + o.b, c + o.c}; }
  V3 operator-(const V3& o) const { return {a - o.a, b - o.b, c - o.c}; }
  V3 operator*(double k) const { return {a * k, b * k, c * k}; }
  V3 operator/(double k) const { return {a / k, b / k, c / k}; }
};

inline double inner(const V3& x, const V3& y) { return -x.a * y.a + x.b * y.b + x.c * y.c; }

inline V3 cross(const V3& x, const V3& y) {
  return {x.b * y.c - x.c * y.b, x.a * y.c - x.c * y.a, -(x.a * y.b - x.b * y.a)};
}

inline double abs_norm(const V3& x) { return std::sqrt(std::fabs(inner(x, x))); }

inline double euclid_dist(const V3& x, const V3& y) {
  const V3 d = x - y;
  return std::sqrt(d.a * d.a + d.b * d.b + d.c * d.c);
}

struct FrameSample {
  V3 pos, T, N, B;
  double kappa = 0.0, tau = 0.0;
  int eps_T = 0, eps_N = 0, eps_B = 0;
};

/// Exact frame of a regular curve from its first three t-derivatives.
/// Works for any parametrization speed; requires a non-null tangent and
/// normal direction.
inline FrameSample frame_from_derivatives(const V3& pos, const V3& d1, const V3& d2,
                                          const V3& d3) {
  FrameSample f;
  f.pos = pos;
  const double q1 = inner(d1, d1);
  if (std::fabs(q1) < 1e-14) throw std::runtime_error("oracle: null tangent");
  f.eps_T = q1 < 0.0 ? -1 : +1;
  const double v = std::sqrt(std::fabs(q1));
  f.T = d1 / v;
  const V3 n = d2 - f.T * (static_cast<double>(f.eps_T) * inner(d2, f.T));
  const double qn = inner(n, n);
  if (std::fabs(qn) < 1e-14) throw std::runtime_error("oracle: degenerate normal");
  f.eps_N = qn < 0.0 ? -1 : +1;
  const double kn = std::sqrt(std::fabs(qn));
  f.N = n / kn;
  f.B = cross(f.T, f.N) * static_cast<double>(f.eps_T * f.eps_N);
  f.eps_B = -f.eps_T * f.eps_N;
  f.kappa = kn / (v * v);
  f.tau = -inner(cross(d1, d2), d3) / (v * v * v * v * v * v * f.kappa * f.kappa);
  return f;
}

/// Closed-form curve with an exact speed function; frames come from
/// frame_from_derivatives, arc length from high-order quadrature of the
/// speed, and the inverse map from bisection.
struct AnalyticOracle {
  std::function<V3(double)> pos, d1, d2, d3;
  double t0 = 0.0, t1 = 0.0;

  double speed(double t) const { return abs_norm(d1(t)); }

  /// Arc length from t0 via composite Simpson on 4096 subintervals.
  double arc_length(double t) const {
    const std::size_t m = 4096;
    const double h = (t - t0) / static_cast<double>(m);
    if (h == 0.0) return 0.0;
    double acc = speed(t0) + speed(t);
    for (std::size_t k = 1; k < m; ++k)
      acc += speed(t0 + static_cast<double>(k) * h) * (k % 2 == 1 ? 4.0 : 2.0);
    return acc * h / 3.0;
  }

  /// Invert arc length by bisection to ~1e-13 in t.
  double t_of_s(double s) const {
    double lo = t0, hi = t1;
    if (s <= 0.0) return t0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (arc_length(mid) < s)
        lo = mid;
      else
        hi = mid;
      if (hi - lo < 1e-14 * std::max(1.0, std::fabs(hi))) break;
    }
    return 0.5 * (lo + hi);
  }

  FrameSample at_t(double t) const { return frame_from_derivatives(pos(t), d1(t), d2(t), d3(t)); }
  FrameSample at_s(double s) const { return at_t(t_of_s(s)); }
};

inline AnalyticOracle timelike_helix(double a, double b, double t0, double t1) {
  const double w = std::sqrt(b * b - 1.0) / a;
  AnalyticOracle o;
  o.t0 = t0;
  o.t1 = t1;
  o.pos = [=](double t) { return V3{b * t, a * std::cos(w * t), a * std::sin(w * t)}; };
  o.d1 = [=](double t) { return V3{b, -a * w * std::sin(w * t), a * w * std::cos(w * t)}; };
  o.d2 = [=](double t) {
    return V3{0.0, -a * w * w * std::cos(w * t), -a * w * w * std::sin(w * t)};
  };
  o.d3 = [=](double t) {
    return V3{0.0, a * w * w * w * std::sin(w * t), -a * w * w * w * std::cos(w * t)};
  };
  return o;
}

inline AnalyticOracle timelike_planar(double a, double t0, double t1) {
  AnalyticOracle o;
  o.t0 = t0;
  o.t1 = t1;
  o.pos = [=](double t) { return V3{a * std::sinh(t), a * std::cosh(t), 0.0}; };
  o.d1 = [=](double t) { return V3{a * std::cosh(t), a * std::sinh(t), 0.0}; };
  o.d2 = [=](double t) { return V3{a * std::sinh(t), a * std::cosh(t), 0.0}; };
  o.d3 = [=](double t) { return V3{a * std::cosh(t), a * std::sinh(t), 0.0}; };
  return o;
}

inline AnalyticOracle timelike_parabola(double q, double shift, double t0, double t1) {
  AnalyticOracle o;
  o.t0 = t0;
  o.t1 = t1;
  o.pos = [=](double t) {
    const double u = t + shift;
    return V3{u, q * u * u, 0.0};
  };
  o.d1 = [=](double t) { return V3{1.0, 2.0 * q * (t + shift), 0.0}; };
  o.d2 = [=](double) { return V3{0.0, 2.0 * q, 0.0}; };
  o.d3 = [=](double) { return V3{0.0, 0.0, 0.0}; };
  return o;
}

inline AnalyticOracle spacelike_helix_type1(double a, double b, double t0, double t1) {
  AnalyticOracle o;
  o.t0 = t0;
  o.t1 = t1;
  o.pos = [=](double t) { return V3{a * std::cosh(t), a * std::sinh(t), b * t}; };
  o.d1 = [=](double t) { return V3{a * std::sinh(t), a * std::cosh(t), b}; };
  o.d2 = [=](double t) { return V3{a * std::cosh(t), a * std::sinh(t), 0.0}; };
  o.d3 = [=](double t) { return V3{a * std::sinh(t), a * std::cosh(t), 0.0}; };
  return o;
}

inline AnalyticOracle spacelike_helix_type2(double a, double b, double t0, double t1) {
  AnalyticOracle o;
  o.t0 = t0;
  o.t1 = t1;
  o.pos = [=](double t) { return V3{a * std::sinh(t), a * std::cosh(t), b * t}; };
  o.d1 = [=](double t) { return V3{a * std::cosh(t), a * std::sinh(t), b}; };
  o.d2 = [=](double t) { return V3{a * std::sinh(t), a * std::cosh(t), 0.0}; };
  o.d3 = [=](double t) { return V3{a * std::cosh(t), a * std::sinh(t), 0.0}; };
  return o;
}

inline AnalyticOracle spacelike_planar(double a, double t0, double t1) {
  AnalyticOracle o;
  o.t0 = t0;
  o.t1 = t1;
  o.pos = [=](double t) { return V3{0.0, a * std::cos(t), a * std::sin(t)}; };
  o.d1 = [=](double t) { return V3{0.0, -a * std::sin(t), a * std::cos(t)}; };
  o.d2 = [=](double t) { return V3{0.0, -a * std::cos(t), -a * std::sin(t)}; };
  o.d3 = [=](double t) { return V3{0.0, a * std::sin(t), -a * std::cos(t)}; };
  return o;
}

inline AnalyticOracle spacelike_planar_type1(double a, double t0, double t1) {
  AnalyticOracle o;
  o.t0 = t0;
  o.t1 = t1;
  o.pos = [=](double t) { return V3{a * std::cosh(t), a * std::sinh(t), 0.0}; };
  o.d1 = [=](double t) { return V3{a * std::sinh(t), a * std::cosh(t), 0.0}; };
  o.d2 = [=](double t) { return V3{a * std::cosh(t), a * std::sinh(t), 0.0}; };
  o.d3 = [=](double t) { return V3{a * std::sinh(t), a * std::cosh(t), 0.0}; };
  return o;
}

/// Constant curvature/torsion values of the non-planar catalog helices, from
/// hand algebra on the parametrizations above.
struct HelixConstants {
  double kappa, tau;
};

inline HelixConstants timelike_helix_constants(double a, double b) {
  const double w = std::sqrt(b * b - 1.0) / a;
  return {a * w * w, b * w};
}

inline HelixConstants spacelike_helix_type1_constants(double a, double b) {
  return {a / (a * a + b * b), b / (a * a + b * b)};
}

inline HelixConstants spacelike_helix_type2_constants(double a, double b) {
  return {a / (b * b - a * a), -b / (b * b - a * a)};
}

}  // namespace oracle
