#include <cmath>
#include <cstddef>

#include "doctest.h"
#include "lpc/catalog.hpp"
#include "lpc/errors.hpp"
#include "lpc/fields.hpp"

using lpc::CaseId;
using lpc::CurveTypeTag;
using lpc::DirectionField;
using lpc::FrenetApparatus;
using lpc::PartnerKind;
using lpc::PartnerSpec;
using lpc::UnitSpeedCurve;
using lpc::Vec3;

namespace {

struct Setup {
  UnitSpeedCurve curve;
  FrenetApparatus app;
};

Setup make(const char* name, std::size_t n = 400) {
  Setup s{lpc::build_catalog_curve(name, {}, n), {}};
  s.app = lpc::frenet_apparatus(s.curve);
  return s;
}

double unit_law_residual(const DirectionField& f, const FrenetApparatus& app, std::size_t k) {
  const double lhs = app.type.eps_T * f.u[k] * f.u[k] + app.type.eps_N * f.v[k] * f.v[k] +
                     app.type.eps_B * f.w[k] * f.w[k];
  return std::fabs(lhs - static_cast<double>(f.sigma));
}

}  // namespace

TEST_CASE("evolute field of a plane curve with zero offset is the reversed normal") {
  const Setup s = make("timelike_planar");
  PartnerSpec spec{PartnerKind::Evolute, CaseId::I, 0.0, 0.0, std::nullopt};
  const DirectionField f = lpc::evolute_direction_field(s.app, spec);
  CHECK(f.sigma == +1);
  for (std::size_t k = 0; k < s.app.size(); k += 17) {
    CHECK(f.u[k] == 0.0);
    CHECK(f.v[k] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::fabs(f.w[k]) < 1e-10);
    CHECK(lpc::sup_norm(f.X[k] + s.app.N[k]) < 1e-10);
  }
}

TEST_CASE("evolute field of the timelike helix follows the integrated torsion phase") {
  const Setup s = make("timelike_helix");
  const double c0 = 0.3;
  PartnerSpec spec{PartnerKind::Evolute, CaseId::I, c0, 0.0, std::nullopt};
  const DirectionField f = lpc::evolute_direction_field(s.app, spec);
  const double rt2 = std::sqrt(2.0);
  for (std::size_t k = 0; k < s.app.size(); k += 13) {
    const double phi = rt2 * s.app.s(k) + c0;
    CHECK(f.u[k] == 0.0);
    CHECK(f.v[k] == doctest::Approx(-std::cos(phi)).epsilon(1e-10));
    CHECK(f.w[k] == doctest::Approx(std::sin(phi)).epsilon(1e-10));
    CHECK(f.phase[k] == doctest::Approx(phi).epsilon(1e-10));
  }
}

TEST_CASE("mannheim field of the timelike helix follows the integrated curvature phase") {
  const Setup s = make("timelike_helix");
  const double c0 = 0.25;
  PartnerSpec spec{PartnerKind::Mannheim, CaseId::I, c0, 0.0, std::nullopt};
  const DirectionField f = lpc::mannheim_direction_field(s.app, spec);
  CHECK(f.sigma == -1);
  for (std::size_t k = 0; k < s.app.size(); k += 13) {
    const double psi = s.app.s(k) + c0;  // kappa is identically 1
    CHECK(f.u[k] == doctest::Approx(-std::cosh(psi)).epsilon(1e-10));
    CHECK(f.v[k] == doctest::Approx(std::sinh(psi)).epsilon(1e-10));
    CHECK(f.w[k] == 0.0);
  }
}

TEST_CASE("bertrand field with zero angle is the donor tangent") {
  const Setup s = make("timelike_helix");
  PartnerSpec spec{PartnerKind::Bertrand, CaseId::I, 0.0, 0.0, std::nullopt};
  const DirectionField f = lpc::bertrand_direction_field(s.app, spec);
  CHECK(f.sigma == -1);
  for (std::size_t k = 0; k < s.app.size(); k += 17) {
    CHECK(f.u[k] == 1.0);
    CHECK(f.w[k] == 0.0);
    CHECK(lpc::sup_norm(f.X[k] - s.app.T[k]) < 1e-12);
  }
}

TEST_CASE("bertrand field coefficients are the constant angle lines") {
  const Setup s1 = make("slant_helix_type1");
  const double theta = 0.7;
  PartnerSpec spec{PartnerKind::Bertrand, CaseId::III, 0.0, theta, std::nullopt};
  const DirectionField f = lpc::bertrand_direction_field(s1.app, spec);
  CHECK(f.sigma == +1);
  for (std::size_t k = 0; k < s1.app.size(); k += 29) {
    CHECK(f.u[k] == doctest::Approx(std::cos(theta)).epsilon(1e-14));
    CHECK(f.v[k] == 0.0);
    CHECK(f.w[k] == doctest::Approx(std::sin(theta)).epsilon(1e-14));
  }

  const Setup s2 = make("spacelike_helix_type2");
  PartnerSpec spec2{PartnerKind::Bertrand, CaseId::II, 0.0, theta, std::nullopt};
  const DirectionField f2 = lpc::bertrand_direction_field(s2.app, spec2);
  CHECK(f2.sigma == -1);
  for (std::size_t k = 0; k < s2.app.size(); k += 29) {
    CHECK(f2.u[k] == doctest::Approx(std::sinh(theta)).epsilon(1e-14));
    CHECK(f2.w[k] == doctest::Approx(std::cosh(theta)).epsilon(1e-14));
  }
}

TEST_CASE("every admissible field satisfies the unit coefficient law") {
  const struct {
    const char* donor;
    PartnerKind kind;
    CaseId case_id;
    double c0, theta;
  } rows[] = {
      {"timelike_helix", PartnerKind::Evolute, CaseId::I, 0.3, 0.0},
      {"spacelike_helix_type1", PartnerKind::Evolute, CaseId::II, 0.3, 0.0},
      {"spacelike_helix_type1", PartnerKind::Evolute, CaseId::III, 1.0, 0.0},
      {"spacelike_helix_type2", PartnerKind::Evolute, CaseId::II, 0.0, 0.0},
      {"spacelike_helix_type2", PartnerKind::Evolute, CaseId::III, 0.3, 0.0},
      {"timelike_helix", PartnerKind::Mannheim, CaseId::I, 0.3, 0.0},
      {"timelike_helix", PartnerKind::Mannheim, CaseId::II, 1.0, 0.0},
      {"spacelike_helix_type1", PartnerKind::Mannheim, CaseId::I, 0.0, 0.0},
      {"spacelike_helix_type1", PartnerKind::Mannheim, CaseId::II, 0.3, 0.0},
      {"spacelike_helix_type2", PartnerKind::Mannheim, CaseId::III, 0.3, 0.0},
      {"timelike_helix", PartnerKind::Bertrand, CaseId::I, 0.0, 0.7},
      {"timelike_helix", PartnerKind::Bertrand, CaseId::II, 0.0, 0.4},
      {"spacelike_helix_type1", PartnerKind::Bertrand, CaseId::III, 0.0, 0.7},
      {"spacelike_helix_type2", PartnerKind::Bertrand, CaseId::I, 0.0, 0.4},
      {"spacelike_helix_type2", PartnerKind::Bertrand, CaseId::II, 0.0, 0.7},
  };
  for (const auto& row : rows) {
    CAPTURE(row.donor);
    CAPTURE(static_cast<int>(row.kind));
    CAPTURE(static_cast<int>(row.case_id));
    const Setup s = make(row.donor, 200);
    PartnerSpec spec{row.kind, row.case_id, row.c0, row.theta, std::nullopt};
    const DirectionField f = lpc::direction_field(s.app, spec);
    CHECK(f.sigma == lpc::field_sigma(row.kind, row.case_id, s.app.type.tag));
    for (std::size_t k = 0; k < s.app.size(); ++k) {
      CHECK(unit_law_residual(f, s.app, k) < 1e-10);
      CHECK(std::fabs(lpc::minkowski_inner(f.X[k], f.X[k]) - f.sigma) < 1e-10);
    }
  }
}

TEST_CASE("admissibility table") {
  using lpc::case_admissible;
  CHECK(case_admissible(PartnerKind::Evolute, CaseId::I, CurveTypeTag::Timelike));
  CHECK_FALSE(case_admissible(PartnerKind::Evolute, CaseId::I, CurveTypeTag::SpacelikeType1));
  CHECK(case_admissible(PartnerKind::Evolute, CaseId::II, CurveTypeTag::SpacelikeType2));
  CHECK_FALSE(case_admissible(PartnerKind::Evolute, CaseId::III, CurveTypeTag::Timelike));

  CHECK(case_admissible(PartnerKind::Mannheim, CaseId::I, CurveTypeTag::Timelike));
  CHECK(case_admissible(PartnerKind::Mannheim, CaseId::II, CurveTypeTag::SpacelikeType1));
  CHECK(case_admissible(PartnerKind::Mannheim, CaseId::III, CurveTypeTag::SpacelikeType2));
  CHECK_FALSE(case_admissible(PartnerKind::Mannheim, CaseId::III, CurveTypeTag::Timelike));
  CHECK_FALSE(case_admissible(PartnerKind::Mannheim, CaseId::I, CurveTypeTag::SpacelikeType2));

  CHECK(case_admissible(PartnerKind::Bertrand, CaseId::I, CurveTypeTag::Timelike));
  CHECK(case_admissible(PartnerKind::Bertrand, CaseId::II, CurveTypeTag::SpacelikeType2));
  CHECK(case_admissible(PartnerKind::Bertrand, CaseId::III, CurveTypeTag::SpacelikeType1));
  CHECK_FALSE(case_admissible(PartnerKind::Bertrand, CaseId::III, CurveTypeTag::Timelike));
  CHECK_FALSE(case_admissible(PartnerKind::Bertrand, CaseId::I, CurveTypeTag::SpacelikeType1));
}

TEST_CASE("inadmissible and malformed requests are rejected") {
  const Setup s1 = make("spacelike_helix_type1", 100);
  PartnerSpec bad{PartnerKind::Evolute, CaseId::I, 0.0, 0.0, std::nullopt};
  CHECK_THROWS_AS(lpc::direction_field(s1.app, bad), lpc::CaseMismatchError);

  const Setup tl = make("timelike_helix", 100);
  PartnerSpec theta_on_evolute{PartnerKind::Evolute, CaseId::I, 0.0, 0.5, std::nullopt};
  CHECK_THROWS_AS(lpc::direction_field(tl.app, theta_on_evolute), lpc::InvalidArgumentError);

  PartnerSpec c0_on_bertrand{PartnerKind::Bertrand, CaseId::I, 0.5, 0.0, std::nullopt};
  CHECK_THROWS_AS(lpc::direction_field(tl.app, c0_on_bertrand), lpc::InvalidArgumentError);
}

TEST_CASE("kind and case parsing accepts the documented spellings") {
  CHECK(lpc::partner_kind_from_string("evolute") == PartnerKind::Evolute);
  CHECK(lpc::partner_kind_from_string("mannheim") == PartnerKind::Mannheim);
  CHECK(lpc::partner_kind_from_string("bertrand") == PartnerKind::Bertrand);
  CHECK_FALSE(lpc::partner_kind_from_string("involute").has_value());

  CHECK(lpc::case_id_from_string("i") == CaseId::I);
  CHECK(lpc::case_id_from_string("2") == CaseId::II);
  CHECK(lpc::case_id_from_string("iii") == CaseId::III);
  CHECK_FALSE(lpc::case_id_from_string("iv").has_value());

  CHECK(std::string(lpc::to_string(PartnerKind::Evolute)) == "evolute");
  CHECK(std::string(lpc::to_string(CaseId::II)) == "ii");
}
