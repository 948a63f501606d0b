#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "lpc/catalog.hpp"
#include "lpc/classify.hpp"
#include "lpc/errors.hpp"

using lpc::ConstancyVerdict;
using lpc::FrenetApparatus;
using lpc::SlantVariant;
using lpc::UnitSpeedCurve;

namespace {

struct Donor {
  UnitSpeedCurve curve;
  FrenetApparatus app;
};

Donor make_donor(const char* name, const std::map<std::string, double>& params = {},
                 std::size_t n = 800) {
  Donor d{lpc::build_catalog_curve(name, params, n), {}};
  d.app = lpc::frenet_apparatus(d.curve);
  return d;
}

}  // namespace

TEST_CASE("constancy statistics respect the mask and the count floor") {
  const std::vector<double> values = {5.0, 2.0, 2.0, 2.0, 2.0, 2.0, 2.0, 2.0, 2.0, 99.0};
  std::vector<std::uint8_t> mask(values.size(), 1);
  mask.front() = 0;
  mask.back() = 0;
  const ConstancyVerdict v = lpc::constancy(values, mask);
  CHECK(v.count == 8);
  CHECK(v.mean == doctest::Approx(2.0));
  CHECK(v.rel_spread == doctest::Approx(0.0));
  CHECK(v.constant(1e-6));

  std::vector<std::uint8_t> sparse(values.size(), 0);
  sparse[3] = sparse[4] = sparse[5] = 1;
  const ConstancyVerdict few = lpc::constancy(values, sparse);
  CHECK(few.count == 3);
  CHECK_FALSE(few.constant(1e-6));
}

TEST_CASE("the tau/kappa ratio is constant exactly for the helices") {
  const Donor helix = make_donor("timelike_helix");
  const ConstancyVerdict hv = lpc::helix_invariant(helix.app);
  CHECK(hv.mean == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(hv.rel_spread < 1e-8);
  CHECK(hv.constant(1e-4));

  const Donor t1 = make_donor("spacelike_helix_type1");
  CHECK(lpc::helix_invariant(t1.app).mean == doctest::Approx(2.0).epsilon(1e-9));

  const Donor t2 = make_donor("spacelike_helix_type2");
  CHECK(lpc::helix_invariant(t2.app).mean == doctest::Approx(-2.0).epsilon(1e-9));

  const Donor non = make_donor("nonhelix_intrinsic");
  const ConstancyVerdict nv = lpc::helix_invariant(non.app);
  CHECK_FALSE(nv.constant(1e-4));
  CHECK(nv.rel_spread > 0.1);
}

TEST_CASE("slant donors carry their constant through the matching variant") {
  const Donor tl = make_donor("slant_helix_timelike");
  const lpc::SlantAnalysis sa = lpc::slant_helix_invariants(tl.app);
  CHECK(sa.is_slant(1e-4));
  const lpc::SlantInvariant& kd = sa.require(SlantVariant::KappaDominant);
  CHECK(kd.applicable);
  CHECK(std::fabs(kd.verdict.mean) == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(kd.verdict.rel_spread < 1e-4);
  CHECK_FALSE(sa.require(SlantVariant::Elliptic).verdict.constant(1e-4));
  CHECK_THROWS_AS(sa.require(SlantVariant::TauDominant), lpc::NoApplicableVariantError);
  REQUIRE(sa.best() != nullptr);
  CHECK(sa.best()->variant == SlantVariant::KappaDominant);

  const Donor t1 = make_donor("slant_helix_type1");
  const lpc::SlantAnalysis sb = lpc::slant_helix_invariants(t1.app);
  CHECK(sb.is_slant(1e-4));
  const lpc::SlantInvariant& el = sb.require(SlantVariant::Elliptic);
  CHECK(std::fabs(el.verdict.mean) == doctest::Approx(0.5).epsilon(1e-5));
  CHECK_THROWS_AS(sb.require(SlantVariant::TauDominant), lpc::NoApplicableVariantError);
}

TEST_CASE("helices are degenerate slant curves, non-helix donors are neither") {
  const Donor helix = make_donor("timelike_helix");
  CHECK(lpc::slant_helix_invariants(helix.app).is_slant(1e-4));

  const Donor non = make_donor("nonhelix_intrinsic");
  const lpc::SlantAnalysis sa = lpc::slant_helix_invariants(non.app);
  CHECK_FALSE(sa.is_slant(1e-4));
}

TEST_CASE("plane curves are detected and helices are not planar") {
  for (const char* name : {"timelike_planar", "spacelike_planar", "spacelike_planar_type1"}) {
    CAPTURE(name);
    const Donor d = make_donor(name);
    CHECK(lpc::max_interior_abs_tau(d.app) < 1e-9);
    CHECK(lpc::is_plane_curve(d.app));
  }
  const Donor helix = make_donor("timelike_helix");
  CHECK_FALSE(lpc::is_plane_curve(helix.app));
}

TEST_CASE("classification summaries tag each donor correctly") {
  const Donor helix = make_donor("timelike_helix");
  const lpc::ClassificationSummary ch = lpc::classify_curve(helix.app);
  CHECK(ch.type == lpc::CurveTypeTag::Timelike);
  CHECK_FALSE(ch.planar);
  CHECK(ch.helix);
  CHECK(ch.slant);

  const Donor plane = make_donor("spacelike_planar");
  const lpc::ClassificationSummary cp = lpc::classify_curve(plane.app);
  CHECK(cp.type == lpc::CurveTypeTag::SpacelikeType2);
  CHECK(cp.planar);
  CHECK(cp.helix);

  const Donor slant = make_donor("slant_helix_timelike");
  const lpc::ClassificationSummary cs = lpc::classify_curve(slant.app);
  CHECK_FALSE(cs.helix);
  CHECK(cs.slant);

  const Donor non = make_donor("nonhelix_intrinsic");
  const lpc::ClassificationSummary cn = lpc::classify_curve(non.app);
  CHECK_FALSE(cn.helix);
  CHECK_FALSE(cn.slant);
  CHECK_FALSE(cn.planar);
}

namespace {

void require_all_pass(const std::vector<lpc::CheckResult>& checks,
                      const std::set<std::string>& expected_ids) {
  std::set<std::string> seen;
  for (const lpc::CheckResult& c : checks) {
    CAPTURE(c.id);
    CAPTURE(c.notes);
    CHECK_MESSAGE(c.pass, c.id, ": residual ", c.max_residual, " tolerance ", c.tolerance);
    seen.insert(c.id);
  }
  CHECK(seen == expected_ids);
}

}  // namespace

TEST_CASE("correspondence suite: helix donors") {
  const Donor tl = make_donor("timelike_helix");
  require_all_pass(lpc::theorem_suite(tl.curve, tl.app),
                   {"evolute_helix_to_slant", "evolute_slant_identity", "mannheim_helix_to_slant",
                    "mannheim_slant_identity", "bertrand_helix_preserved",
                    "bertrand_helix_to_plane"});

  const Donor t1 = make_donor("spacelike_helix_type1");
  require_all_pass(lpc::theorem_suite(t1.curve, t1.app),
                   {"evolute_helix_to_slant", "evolute_slant_identity", "mannheim_helix_to_slant",
                    "mannheim_slant_identity", "bertrand_helix_preserved"});

  const Donor t2 = make_donor("spacelike_helix_type2");
  require_all_pass(lpc::theorem_suite(t2.curve, t2.app),
                   {"evolute_helix_to_slant", "evolute_slant_identity", "mannheim_helix_to_slant",
                    "mannheim_slant_identity", "bertrand_helix_preserved"});
}

TEST_CASE("correspondence suite: plane donors") {
  for (const char* name : {"timelike_planar", "spacelike_planar", "spacelike_planar_type1"}) {
    CAPTURE(name);
    const Donor d = make_donor(name);
    require_all_pass(lpc::theorem_suite(d.curve, d.app),
                     {"evolute_plane_to_helix", "bertrand_plane_to_helix"});
  }
}

TEST_CASE("correspondence suite: slant donors") {
  for (const char* name : {"slant_helix_timelike", "slant_helix_type1"}) {
    CAPTURE(name);
    const Donor d = make_donor(name);
    require_all_pass(lpc::theorem_suite(d.curve, d.app),
                     {"bertrand_slant_preserved", "bertrand_slant_identity"});
  }
}

TEST_CASE("correspondence suite: non-helix donors keep the converse directions honest") {
  const Donor d = make_donor("nonhelix_intrinsic");
  require_all_pass(lpc::theorem_suite(d.curve, d.app),
                   {"evolute_nonhelix_to_nonslant", "mannheim_nonhelix_to_nonslant",
                    "bertrand_nonhelix_preserved"});
}
