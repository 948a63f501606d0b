#include "lpc/frenet.hpp"

#include <cmath>

#include "lpc/numerics.hpp"

namespace lpc {

const char* to_string(CurveTypeTag t) noexcept {
  switch (t) {
    case CurveTypeTag::Timelike: return "timelike";
    case CurveTypeTag::SpacelikeType1: return "spacelike_type1";
    case CurveTypeTag::SpacelikeType2: return "spacelike_type2";
  }
  return "unknown";
}

CurveType CurveType::from_signs(int eps_T, int eps_N) {
  const int eps_B = -eps_T * eps_N;
  if (eps_T < 0) return {CurveTypeTag::Timelike, -1, eps_N, eps_B};
  if (eps_N < 0) return {CurveTypeTag::SpacelikeType1, +1, -1, eps_B};
  return {CurveTypeTag::SpacelikeType2, +1, +1, eps_B};
}

std::vector<std::uint8_t> FrenetApparatus::strong_mask(double rel) const {
  double kmax = 0.0;
  for (std::size_t k = 0; k < size(); ++k) {
    if (valid[k]) kmax = std::max(kmax, kappa[k]);
  }
  const double floor = rel * kmax;
  std::vector<std::uint8_t> mask(size(), 0);
  for (std::size_t k = 0; k < size(); ++k) {
    mask[k] = static_cast<std::uint8_t>(valid[k] && kappa[k] >= floor);
  }
  return mask;
}

FrenetApparatus frenet_apparatus(const UnitSpeedCurve& c, const FrenetOptions& options) {
  const std::size_t n = c.size();
  if (n < 5) throw GridTooSmallError("frenet_apparatus: need at least 5 nodes");

  FrenetApparatus app;
  app.s0 = c.s0;
  app.h = c.h;
  app.T.resize(n);
  app.N.resize(n);
  app.B.resize(n);
  app.kappa.assign(n, 0.0);
  app.tau.assign(n, 0.0);
  app.valid.assign(n, 0);

  int eps_T = 0, eps_N = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Vec3& T = c.d1[k];
    const double qT = minkowski_inner(T, T);
    if (std::fabs(std::fabs(qT) - 1.0) > options.tol_gate) {
      throw InvalidArgumentError("frenet_apparatus: tangent not unit at node " +
                                 std::to_string(k));
    }
    const int sT = qT < 0.0 ? -1 : +1;
    if (eps_T == 0) eps_T = sT;
    if (sT != eps_T) {
      throw MixedTypeError("frenet_apparatus: tangent character flips at node " +
                           std::to_string(k));
    }

    const Vec3& d2 = c.d2[k];
    const double qN = minkowski_inner(d2, d2);
    const double nrm = sup_norm(d2);
    const bool degenerate = std::sqrt(std::fabs(qN)) <= options.kappa_min;
    const bool lightlike =
        !degenerate && std::fabs(qN) <= options.tol_null * std::max(1.0, nrm * nrm);
    if (degenerate || lightlike) {
      if (!options.allow_degenerate) {
        if (lightlike) {
          throw LightlikeNormalError("frenet_apparatus: normal in the null band at s = " +
                                     std::to_string(c.s(k)));
        }
        throw FrameUndefinedError("frenet_apparatus: curvature below " +
                                  std::to_string(options.kappa_min) + " at s = " +
                                  std::to_string(c.s(k)));
      }
      app.T[k] = T;
      continue;
    }

    const double kappa = std::sqrt(std::fabs(qN));
    const int sN = qN < 0.0 ? -1 : +1;
    if (eps_N == 0) eps_N = sN;
    if (sN != eps_N) {
      if (!options.allow_degenerate) {
        throw MixedTypeError("frenet_apparatus: normal character flips at node " +
                             std::to_string(k));
      }
      app.T[k] = T;
      continue;
    }

    const Vec3 N = d2 / kappa;
    const Vec3 B = (eps_T * eps_N) * minkowski_cross(T, N);
    const double qB = minkowski_inner(B, B);
    const int eps_B = -eps_T * eps_N;
    if (std::fabs(qB - eps_B) > options.tol_gate) {
      throw InvalidArgumentError("frenet_apparatus: binormal fails its causal sign at node " +
                                 std::to_string(k));
    }
    app.T[k] = T;
    app.N[k] = N;
    app.B[k] = B;
    app.kappa[k] = kappa;
    app.tau[k] = eps_B * minkowski_inner(c.d3[k], B) / kappa;
    app.valid[k] = 1;
  }

  if (eps_N == 0) {
    throw DegenerateKappaBarError("frenet_apparatus: no node carries a usable frame");
  }
  app.type = CurveType::from_signs(eps_T, eps_N);

  // Mask shoulders where the curvature is collapsing toward a zero.
  if (options.allow_degenerate) {
    double kmax = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (app.valid[k]) kmax = std::max(kmax, app.kappa[k]);
    }
    const double floor = options.excise_rel * kmax;
    for (std::size_t k = 0; k < n; ++k) {
      if (app.valid[k] && app.kappa[k] < floor) app.valid[k] = 0;
    }
    // A curvature zero falling between two grid nodes reverses the measured
    // normal without dipping below the floor at either one; mask the
    // bracketing pair so stencil-based checks step over the jump.
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (!app.valid[k] || !app.valid[k + 1]) continue;
      if (eps_N * minkowski_inner(app.N[k], app.N[k + 1]) < 0.0) {
        app.valid[k] = 0;
        app.valid[k + 1] = 0;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!app.valid[k]) ++app.invalid_count;
  }
  const double frac = 1.0 - static_cast<double>(app.invalid_count) / static_cast<double>(n);
  if (frac < options.min_valid_fraction) {
    throw DegenerateKappaBarError("frenet_apparatus: only " + std::to_string(frac * 100.0) +
                                  "% of nodes carry a usable frame");
  }
  return app;
}

CurveType classify_curve_type(const UnitSpeedCurve& c, const FrenetOptions& options) {
  FrenetOptions strict = options;
  strict.allow_degenerate = false;
  return frenet_apparatus(c, strict).type;
}

double FrenetResidualReport::max_interior() const {
  return std::max({row_interior[0], row_interior[1], row_interior[2]});
}

FrenetResidualReport check_frenet_equations(const FrenetApparatus& app, double tol,
                                            std::size_t edge_skip) {
  const std::size_t n = app.size();
  if (n < 5) throw GridTooSmallError("check_frenet_equations: need at least 5 nodes");
  if (n < 2 * edge_skip + 1) throw GridTooSmallError("check_frenet_equations: edge skip eats grid");

  const auto dT = fd_derivative(std::span<const Vec3>(app.T), app.h);
  const auto dN = fd_derivative(std::span<const Vec3>(app.N), app.h);
  const auto dB = fd_derivative(std::span<const Vec3>(app.B), app.h);

  const int eps_T = app.type.eps_T;
  const int eps_B = app.type.eps_B;

  FrenetResidualReport rep;
  rep.tol = tol;
  for (std::size_t k = 0; k < n; ++k) {
    // A stencil that touches a masked node differentiates garbage.
    bool stencil_ok = true;
    const std::size_t lo = k >= 2 ? k - 2 : 0;
    const std::size_t hi = std::min(n - 1, k + 2);
    for (std::size_t j = lo; j <= hi; ++j) {
      if (!app.valid[j]) stencil_ok = false;
    }
    if (!stencil_ok) continue;

    const double r1 = sup_norm(dT[k] - app.kappa[k] * app.N[k]);
    const double r2 =
        sup_norm(dN[k] - ((eps_B * app.kappa[k]) * app.T[k] + app.tau[k] * app.B[k]));
    const double r3 = sup_norm(dB[k] - (eps_T * app.tau[k]) * app.N[k]);
    const bool interior = k >= edge_skip && k + edge_skip < n;
    double* row = interior ? rep.row_interior : rep.row_boundary;
    row[0] = std::max(row[0], r1);
    row[1] = std::max(row[1], r2);
    row[2] = std::max(row[2], r3);
  }
  rep.pass = rep.max_interior() < tol;
  return rep;
}

double frame_orthonormality_residual(const FrenetApparatus& app) {
  double worst = 0.0;
  const auto& t = app.type;
  for (std::size_t k = 2; k + 2 < app.size(); ++k) {
    if (!app.valid[k]) continue;
    worst = std::max(worst, std::fabs(minkowski_inner(app.T[k], app.T[k]) - t.eps_T));
    worst = std::max(worst, std::fabs(minkowski_inner(app.N[k], app.N[k]) - t.eps_N));
    worst = std::max(worst, std::fabs(minkowski_inner(app.B[k], app.B[k]) - t.eps_B));
    worst = std::max(worst, std::fabs(minkowski_inner(app.T[k], app.N[k])));
    worst = std::max(worst, std::fabs(minkowski_inner(app.T[k], app.B[k])));
    worst = std::max(worst, std::fabs(minkowski_inner(app.N[k], app.B[k])));
  }
  return worst;
}

}  // namespace lpc
