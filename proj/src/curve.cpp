#include "lpc/curve.hpp"

#include <array>
#include <cmath>

#include "lpc/numerics.hpp"

namespace lpc {

namespace {

struct FrameState {
  Vec3 p, T, N, B;
};

FrameState frame_rhs(const FrameState& y, double kappa, double tau, int eps_T, int eps_B) {
  FrameState d;
  d.p = y.T;
  d.T = kappa * y.N;
  d.B = (eps_T * tau) * y.N;
  d.N = (eps_B * kappa) * y.T + tau * y.B;
  return d;
}

FrameState axpy(const FrameState& y, double c, const FrameState& d) {
  return {y.p + c * d.p, y.T + c * d.T, y.N + c * d.N, y.B + c * d.B};
}

SampledCurve sample_intrinsic(const CurveSpec& spec, const IntrinsicModel& m, std::size_t n) {
  const double check_T = minkowski_inner(m.T0, m.T0) - m.eps_T;
  const double check_N = minkowski_inner(m.N0, m.N0) - m.eps_N;
  const double check_TN = minkowski_inner(m.T0, m.N0);
  if (std::fabs(check_T) > 1e-12 || std::fabs(check_N) > 1e-12 || std::fabs(check_TN) > 1e-12) {
    throw InvalidArgumentError("intrinsic curve '" + spec.name +
                               "': initial frame is not orthonormal for the declared signs");
  }
  const int eps_B = -m.eps_T * m.eps_N;

  SampledCurve out;
  out.t.resize(n + 1);
  out.pos.resize(n + 1);
  out.d1.resize(n + 1);
  out.d2.resize(n + 1);
  out.d3.resize(n + 1);

  const double h = (spec.t1 - spec.t0) / static_cast<double>(n);
  constexpr int kSubsteps = 8;
  const double hs = h / kSubsteps;

  FrameState y{m.p0, m.T0, m.N0, m.eps_T * m.eps_N * minkowski_cross(m.T0, m.N0)};
  for (std::size_t k = 0; k <= n; ++k) {
    const double t = spec.t0 + static_cast<double>(k) * h;
    const double kap = m.kappa(t);
    const double kap_p = m.kappa_prime(t);
    const double tau = m.tau(t);
    out.t[k] = t;
    out.pos[k] = y.p;
    out.d1[k] = y.T;
    out.d2[k] = kap * y.N;
    out.d3[k] = kap_p * y.N + kap * ((eps_B * kap) * y.T + tau * y.B);
    if (k == n) break;
    for (int j = 0; j < kSubsteps; ++j) {
      const double tj = t + j * hs;
      const auto f = [&](double tt, const FrameState& s) {
        return frame_rhs(s, m.kappa(tt), m.tau(tt), m.eps_T, eps_B);
      };
      const FrameState k1 = f(tj, y);
      const FrameState k2 = f(tj + 0.5 * hs, axpy(y, 0.5 * hs, k1));
      const FrameState k3 = f(tj + 0.5 * hs, axpy(y, 0.5 * hs, k2));
      const FrameState k4 = f(tj + hs, axpy(y, hs, k3));
      y.p = y.p + (hs / 6.0) * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
      y.T = y.T + (hs / 6.0) * (k1.T + 2.0 * k2.T + 2.0 * k3.T + k4.T);
      y.N = y.N + (hs / 6.0) * (k1.N + 2.0 * k2.N + 2.0 * k3.N + k4.N);
      y.B = y.B + (hs / 6.0) * (k1.B + 2.0 * k2.B + 2.0 * k3.B + k4.B);
    }
  }
  return out;
}

double speed_of(const Vec3& d1, double tol_null, const std::string& where, double t) {
  const double q = minkowski_inner(d1, d1);
  const double n = sup_norm(d1);
  if (n == 0.0 || std::fabs(q) <= tol_null * std::max(1.0, n * n)) {
    throw LightlikeTangentError(where + ": tangent in the null band at t = " + std::to_string(t));
  }
  return std::sqrt(std::fabs(q));
}

}  // namespace

std::vector<double> UnitSpeedCurve::s_grid() const {
  std::vector<double> out(size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = s(k);
  return out;
}

SampledCurve sample_curve(const CurveSpec& spec, std::size_t n, double tol_null) {
  if (n < 16) throw GridTooSmallError("sample_curve: need n >= 16 intervals");
  if (!(spec.t1 > spec.t0)) throw ParamOutOfRangeError("sample_curve: empty parameter range");

  SampledCurve out;
  if (const auto* m = std::get_if<IntrinsicModel>(&spec.model)) {
    out = sample_intrinsic(spec, *m, n);
  } else {
    const auto& a = std::get<AnalyticModel>(spec.model);
    out.t.resize(n + 1);
    out.pos.resize(n + 1);
    out.d1.resize(n + 1);
    out.d2.resize(n + 1);
    out.d3.resize(n + 1);
    const double h = (spec.t1 - spec.t0) / static_cast<double>(n);
    for (std::size_t k = 0; k <= n; ++k) {
      const double t = (k == n) ? spec.t1 : spec.t0 + static_cast<double>(k) * h;
      out.t[k] = t;
      out.pos[k] = a.position(t);
      out.d1[k] = a.d1(t);
      out.d2[k] = a.d2(t);
      out.d3[k] = a.d3(t);
      if (!all_finite(out.pos[k]) || !all_finite(out.d1[k]) || !all_finite(out.d2[k]) ||
          !all_finite(out.d3[k])) {
        throw ParamOutOfRangeError("sample_curve: non-finite evaluation at t = " +
                                   std::to_string(t));
      }
    }
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    (void)speed_of(out.d1[k], tol_null, "sample_curve('" + spec.name + "')", out.t[k]);
  }
  return out;
}

UnitSpeedCurve reparametrize_arclength(const CurveSpec& spec, const SampledCurve& c,
                                       std::size_t n_out, double tol_null) {
  const std::size_t n = c.size();
  if (n < 17) throw GridTooSmallError("reparametrize_arclength: need at least 17 samples");
  if (n_out < 16) throw GridTooSmallError("reparametrize_arclength: need n_out >= 16");
  const double ht = c.t[1] - c.t[0];

  std::vector<double> speed(n);
  for (std::size_t k = 0; k < n; ++k) {
    speed[k] = speed_of(c.d1[k], tol_null, "reparametrize_arclength", c.t[k]);
  }
  const std::vector<double> s = cumulative_simpson(speed, ht, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    if (!(s[k] > s[k - 1])) {
      throw NonMonotoneError("reparametrize_arclength: arc length not increasing at index " +
                             std::to_string(k));
    }
  }
  const double total = s.back();

  // Already unit speed: the arc-length grid coincides with the t-grid.
  double unit_dev = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    unit_dev = std::max(unit_dev, std::fabs(s[k] - (c.t[k] - c.t[0])));
  }
  if (unit_dev <= 1e-10 * std::max(1.0, total)) {
    if (n_out + 1 != n) {
      throw InvalidArgumentError(
          "reparametrize_arclength: unit-speed passthrough requires matching node counts");
    }
    UnitSpeedCurve out;
    out.s0 = 0.0;
    out.h = ht;
    out.pos = c.pos;
    out.d1 = c.d1;
    out.d2 = c.d2;
    out.d3 = c.d3;
    out.tangent_character = causal_character(c.d1[0], tol_null);
    out.analytic_tier = true;
    return out;
  }

  const auto* model = std::get_if<AnalyticModel>(&spec.model);
  if (model == nullptr) {
    throw InvalidArgumentError(
        "reparametrize_arclength: intrinsic samples must already be unit speed");
  }

  UnitSpeedCurve out;
  out.s0 = 0.0;
  out.h = total / static_cast<double>(n_out);
  out.pos.resize(n_out + 1);
  out.d1.resize(n_out + 1);
  out.d2.resize(n_out + 1);
  out.d3.resize(n_out + 1);
  out.tangent_character = causal_character(c.d1[0], tol_null);

  std::size_t seg = 0;
  for (std::size_t j = 0; j <= n_out; ++j) {
    const double target = (j == n_out) ? total : out.h * static_cast<double>(j);
    while (seg + 2 < n && s[seg + 1] < target) ++seg;
    double t;
    if (j == 0) {
      t = c.t.front();
    } else if (j == n_out) {
      t = c.t.back();
    } else {
      t = hermite_eval(s[seg], s[seg + 1], c.t[seg], c.t[seg + 1], 1.0 / speed[seg],
                       1.0 / speed[seg + 1], target);
    }

    const Vec3 d1 = model->d1(t);
    const Vec3 d2 = model->d2(t);
    const Vec3 d3 = model->d3(t);
    const double q = minkowski_inner(d1, d1);
    const double V = speed_of(d1, tol_null, "reparametrize_arclength", t);
    const double eps = q < 0.0 ? -1.0 : 1.0;
    const double Vp = eps * minkowski_inner(d1, d2) / V;
    const double Vpp =
        eps * ((minkowski_inner(d2, d2) + minkowski_inner(d1, d3)) * V -
               minkowski_inner(d1, d2) * Vp) /
        (V * V);
    const double ts = 1.0 / V;
    const double tss = -Vp / (V * V * V);
    const double tsss = (3.0 * Vp * Vp - Vpp * V) / std::pow(V, 5);

    out.pos[j] = model->position(t);
    out.d1[j] = ts * d1;
    out.d2[j] = (ts * ts) * d2 + tss * d1;
    out.d3[j] = (ts * ts * ts) * d3 + (3.0 * ts * tss) * d2 + tsss * d1;
  }
  return out;
}

UnitSpeedCurve integral_curve(std::span<const Vec3> X, const Vec3& base, double s0, double h,
                              double tol_unit) {
  if (X.size() < 5) throw GridTooSmallError("integral_curve: need at least 5 field samples");
  if (!(h > 0.0)) throw InvalidArgumentError("integral_curve: spacing must be positive");

  int sigma = 0;
  for (std::size_t k = 0; k < X.size(); ++k) {
    const double q = minkowski_inner(X[k], X[k]);
    if (std::fabs(std::fabs(q) - 1.0) > tol_unit) {
      throw NonUnitFieldError("integral_curve: |<X,X>| deviates from 1 by " +
                              std::to_string(std::fabs(std::fabs(q) - 1.0)) + " at node " +
                              std::to_string(k));
    }
    const int sk = q < 0.0 ? -1 : +1;
    if (sigma == 0) sigma = sk;
    if (sk != sigma) {
      throw NonUnitFieldError("integral_curve: field changes causal character at node " +
                              std::to_string(k));
    }
  }

  UnitSpeedCurve out;
  out.s0 = s0;
  out.h = h;
  out.pos = cumulative_simpson(X, h, Vec3{0.0, 0.0, 0.0});
  for (auto& p : out.pos) p += base;
  out.d1.assign(X.begin(), X.end());
  out.d2 = fd_derivative(X, h);
  out.d3 = fd_derivative(std::span<const Vec3>(out.d2), h);
  out.tangent_character = sigma < 0 ? CausalCharacter::Timelike : CausalCharacter::Spacelike;
  out.analytic_tier = true;
  return out;
}

UnitSpeedCurve unit_speed_from_positions(std::span<const Vec3> pos, double t0, double h,
                                         std::size_t n_out, double tol_null) {
  if (pos.size() < 17) throw GridTooSmallError("unit_speed_from_positions: need >= 17 samples");
  if (n_out < 16) throw GridTooSmallError("unit_speed_from_positions: need n_out >= 16");

  const std::vector<Vec3> d1t = fd_derivative(pos, h);
  std::vector<double> speed(pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k) {
    speed[k] = speed_of(d1t[k], tol_null, "unit_speed_from_positions",
                        t0 + static_cast<double>(k) * h);
  }
  const std::vector<double> s = cumulative_simpson(speed, h, 0.0);
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!(s[k] > s[k - 1])) {
      throw NonMonotoneError("unit_speed_from_positions: arc length not increasing");
    }
  }
  const double total = s.back();

  UnitSpeedCurve out;
  out.s0 = 0.0;
  out.h = total / static_cast<double>(n_out);
  out.pos.resize(n_out + 1);
  out.analytic_tier = false;

  std::size_t seg = 0;
  for (std::size_t j = 0; j <= n_out; ++j) {
    const double target = (j == n_out) ? total : out.h * static_cast<double>(j);
    while (seg + 2 < s.size() && s[seg + 1] < target) ++seg;
    const double w0 = 1.0 / speed[seg];
    const double w1 = 1.0 / speed[seg + 1];
    out.pos[j] = Vec3{
        hermite_eval(s[seg], s[seg + 1], pos[seg].x1, pos[seg + 1].x1, d1t[seg].x1 * w0,
                     d1t[seg + 1].x1 * w1, target),
        hermite_eval(s[seg], s[seg + 1], pos[seg].x2, pos[seg + 1].x2, d1t[seg].x2 * w0,
                     d1t[seg + 1].x2 * w1, target),
        hermite_eval(s[seg], s[seg + 1], pos[seg].x3, pos[seg + 1].x3, d1t[seg].x3 * w0,
                     d1t[seg + 1].x3 * w1, target)};
  }
  out.d1 = fd_derivative(std::span<const Vec3>(out.pos), out.h);
  out.d2 = fd_derivative(std::span<const Vec3>(out.d1), out.h);
  out.d3 = fd_derivative(std::span<const Vec3>(out.d2), out.h);
  out.tangent_character = causal_character(out.d1[out.d1.size() / 2], tol_null);
  return out;
}

}  // namespace lpc
