#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpc/curve.hpp"
#include "lpc/frenet.hpp"
#include "lpc/tolerances.hpp"

namespace lpc {

struct ParamSchema {
  std::string name;
  double default_value = 0.0;
  std::string doc;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::vector<ParamSchema> params;  ///< includes the domain endpoints t0, t1
  std::optional<CurveTypeTag> expected_type;
  bool degenerate = false;  ///< no Frenet frame anywhere
  std::function<CurveSpec(const std::map<std::string, double>&)> make;
};

const std::vector<CatalogEntry>& curve_catalog();
const CatalogEntry& catalog_entry(const std::string& name);

/// Merge user parameters over the entry defaults and build the spec.
/// Unknown curve names and parameters, and out-of-range values, throw.
CurveSpec make_curve_spec(const std::string& name,
                          const std::map<std::string, double>& params = {});

/// Sample and arc-length parametrize a catalog curve on n intervals.
UnitSpeedCurve build_catalog_curve(const std::string& name,
                                   const std::map<std::string, double>& params, std::size_t n,
                                   const Tolerances& tol = {});

}  // namespace lpc
