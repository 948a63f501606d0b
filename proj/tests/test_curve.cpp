#include <cmath>
#include <vector>

#include "doctest.h"
#include "lpc/catalog.hpp"
#include "lpc/curve.hpp"
#include "lpc/errors.hpp"
#include "oracle.hpp"

using lpc::AnalyticModel;
using lpc::CausalCharacter;
using lpc::CurveSpec;
using lpc::UnitSpeedCurve;
using lpc::Vec3;

namespace {

CurveSpec straight_line_spec(const Vec3& dir, double t0, double t1) {
  AnalyticModel m;
  m.position = [=](double t) { return dir * t; };
  m.d1 = [=](double) { return dir; };
  m.d2 = [](double) { return Vec3{0, 0, 0}; };
  m.d3 = [](double) { return Vec3{0, 0, 0}; };
  CurveSpec spec;
  spec.name = "line";
  spec.t0 = t0;
  spec.t1 = t1;
  spec.model = m;
  return spec;
}

double pos_dist(const Vec3& a, const oracle::V3& b) {
  return oracle::euclid_dist({a.x1, a.x2, a.x3}, b);
}

}  // namespace

TEST_CASE("unit-speed line passes through with exact arc length") {
  const CurveSpec spec = straight_line_spec({0, 1, 0}, 0.0, 2.0);
  const auto sampled = lpc::sample_curve(spec, 32);
  const UnitSpeedCurve c = lpc::reparametrize_arclength(spec, sampled, 32);
  CHECK(c.size() == 33);
  CHECK(c.s0 == 0.0);
  CHECK(std::fabs(c.s(32) - 2.0) < 1e-10);
  CHECK(c.tangent_character == CausalCharacter::Spacelike);
  CHECK(c.analytic_tier);
  for (std::size_t k = 0; k < c.size(); ++k) {
    CHECK(c.pos[k].x2 == doctest::Approx(c.s(k)).epsilon(1e-12));
    CHECK(lpc::sup_norm(c.d1[k] - Vec3{0, 1, 0}) < 1e-12);
  }
}

TEST_CASE("constant-speed line resamples to the exact unit parametrization") {
  const Vec3 dir{1, 2, 2};  // <dir,dir> = 7, spacelike
  const CurveSpec spec = straight_line_spec(dir, 0.0, 2.0);
  const auto sampled = lpc::sample_curve(spec, 64);
  const UnitSpeedCurve c = lpc::reparametrize_arclength(spec, sampled, 48);
  const double root7 = std::sqrt(7.0);
  CHECK(std::fabs(c.h * 48 - 2.0 * root7) < 1e-10);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double t = c.s(k) / root7;
    CHECK(lpc::sup_norm(c.pos[k] - dir * t) < 1e-9);
    CHECK(lpc::sup_norm(c.d1[k] - dir / root7) < 1e-10);
  }
}

TEST_CASE("already unit-speed curves pass through unchanged") {
  const CurveSpec spec = lpc::make_curve_spec("timelike_helix");
  const auto sampled = lpc::sample_curve(spec, 100);
  const UnitSpeedCurve c = lpc::reparametrize_arclength(spec, sampled, 100);
  CHECK(c.tangent_character == CausalCharacter::Timelike);
  for (std::size_t k = 0; k < c.size(); ++k) {
    CHECK(c.pos[k] == sampled.pos[k]);
    CHECK(c.d1[k] == sampled.d1[k]);
  }
  CHECK_THROWS_AS(lpc::reparametrize_arclength(spec, sampled, 99), lpc::InvalidArgumentError);
}

TEST_CASE("parabola arc-length inversion agrees with a bisection reference") {
  const UnitSpeedCurve c = lpc::build_catalog_curve("timelike_parabola", {}, 400);
  const auto ref = oracle::timelike_parabola(0.5, 0.0, -0.6, 0.6);
  for (std::size_t k = 0; k < c.size(); k += 7) {
    const auto f = ref.at_s(c.s(k));
    CHECK(pos_dist(c.pos[k], f.pos) < 1e-8);
    CHECK(pos_dist(c.d1[k], f.T) < 1e-7);
  }
}

TEST_CASE("shifting the parabola parameter leaves the unit-speed samples unchanged") {
  const UnitSpeedCurve a = lpc::build_catalog_curve("timelike_parabola", {}, 400);
  const UnitSpeedCurve b = lpc::build_catalog_curve(
      "timelike_parabola", {{"t_shift", 0.35}, {"t0", -0.95}, {"t1", 0.25}}, 400);
  REQUIRE(a.size() == b.size());
  CHECK(std::fabs(a.h - b.h) < 1e-12);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(lpc::sup_norm(a.pos[k] - b.pos[k]) < 1e-8);
    CHECK(lpc::sup_norm(a.d1[k] - b.d1[k]) < 1e-7);
  }
}

TEST_CASE("integral_curve rebuilds a helix from its tangent field") {
  const auto ref = oracle::timelike_helix(1.0, std::sqrt(2.0), 0.0, 1.5);
  const std::size_t n = 200;
  const double h = 1.5 / static_cast<double>(n);
  std::vector<Vec3> X(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const auto f = ref.at_t(static_cast<double>(k) * h);
    X[k] = {f.T.a, f.T.b, f.T.c};
  }
  const auto base_ref = ref.pos(0.0);
  const UnitSpeedCurve c =
      lpc::integral_curve(X, Vec3{base_ref.a, base_ref.b, base_ref.c}, 0.0, h);
  CHECK(c.tangent_character == CausalCharacter::Timelike);

  double max_all = 0.0, max_even = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    CHECK(c.d1[k] == X[k]);
    const double err = pos_dist(c.pos[k], ref.pos(static_cast<double>(k) * h));
    max_all = std::max(max_all, err);
    if (k % 2 == 0) max_even = std::max(max_even, err);
  }
  CHECK(max_even < 5e-10);
  CHECK(max_all < 1e-6);
}

TEST_CASE("integral_curve rejects non-unit and character-changing fields") {
  const std::size_t n = 32;
  std::vector<Vec3> X(n + 1, Vec3{0, 1, 0});
  CHECK_NOTHROW(lpc::integral_curve(X, {0, 0, 0}, 0.0, 0.1));

  std::vector<Vec3> scaled(n + 1, Vec3{0, 1.01, 0});
  CHECK_THROWS_AS(lpc::integral_curve(scaled, {0, 0, 0}, 0.0, 0.1), lpc::NonUnitFieldError);

  std::vector<Vec3> flip(n + 1, Vec3{0, 1, 0});
  for (std::size_t k = n / 2; k <= n; ++k) flip[k] = Vec3{1, 0, 0};
  CHECK_THROWS_AS(lpc::integral_curve(flip, {0, 0, 0}, 0.0, 0.1), lpc::NonUnitFieldError);
}

TEST_CASE("grid size guards") {
  const CurveSpec spec = straight_line_spec({0, 1, 0}, 0.0, 1.0);
  CHECK_THROWS_AS(lpc::sample_curve(spec, 8), lpc::GridTooSmallError);
  std::vector<Vec3> tiny(4, Vec3{0, 1, 0});
  CHECK_THROWS_AS(lpc::integral_curve(tiny, {0, 0, 0}, 0.0, 0.1), lpc::GridTooSmallError);
}

TEST_CASE("tangents inside the null band are rejected") {
  AnalyticModel m;
  m.position = [](double t) { return Vec3{t, std::sin(t), 0.0}; };
  m.d1 = [](double t) { return Vec3{1.0, std::cos(t), 0.0}; };
  m.d2 = [](double t) { return Vec3{0.0, -std::sin(t), 0.0}; };
  m.d3 = [](double t) { return Vec3{0.0, -std::cos(t), 0.0}; };
  CurveSpec spec;
  spec.name = "null_crossing";
  spec.t0 = -0.5;
  spec.t1 = 0.5;
  spec.model = m;
  CHECK_THROWS_AS(lpc::sample_curve(spec, 16), lpc::LightlikeTangentError);
}

TEST_CASE("position-only construction lands on the differenced tier") {
  const auto ref = oracle::timelike_helix(1.0, std::sqrt(2.0), 0.0, 1.5);
  const std::size_t n = 400;
  const double h = 1.5 / static_cast<double>(n);
  std::vector<Vec3> pos(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const auto p = ref.pos(static_cast<double>(k) * h);
    pos[k] = {p.a, p.b, p.c};
  }
  const UnitSpeedCurve c = lpc::unit_speed_from_positions(pos, 0.0, h, n);
  CHECK_FALSE(c.analytic_tier);
  CHECK(c.tangent_character == CausalCharacter::Timelike);

  double interior = 0.0, everywhere = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const auto f = ref.at_t(static_cast<double>(k) * h);
    const double err = pos_dist(c.d1[k], f.T);
    everywhere = std::max(everywhere, err);
    if (k >= 4 && k + 4 <= n) interior = std::max(interior, err);
  }
  CHECK(interior < 1e-8);
  CHECK(everywhere < 1e-4);
}

TEST_CASE("intrinsic curves come out unit speed on the nose") {
  const UnitSpeedCurve c = lpc::build_catalog_curve("nonhelix_intrinsic", {}, 100);
  CHECK(c.size() == 101);
  CHECK(c.analytic_tier);
  CHECK(c.tangent_character == CausalCharacter::Timelike);
  for (std::size_t k = 0; k < c.size(); ++k) {
    CHECK(std::fabs(lpc::minkowski_inner(c.d1[k], c.d1[k]) + 1.0) < 1e-10);
  }
}
