#include "lpc/tolerances.hpp"

#include <functional>

#include "lpc/errors.hpp"

namespace lpc {

void Tolerances::apply_overrides(const std::map<std::string, double>& overrides) {
  const std::map<std::string, double Tolerances::*> fields = {
      {"tol_null", &Tolerances::tol_null},
      {"kappa_min", &Tolerances::kappa_min},
      {"tol_unit", &Tolerances::tol_unit},
      {"tol_frame", &Tolerances::tol_frame},
      {"tol_frenet", &Tolerances::tol_frenet},
      {"tol_frenet_fd", &Tolerances::tol_frenet_fd},
      {"tol_partner", &Tolerances::tol_partner},
      {"tol_transfer_kappa", &Tolerances::tol_transfer_kappa},
      {"tol_transfer_tau", &Tolerances::tol_transfer_tau},
      {"tol_recover_tight", &Tolerances::tol_recover_tight},
      {"tol_recover_loose", &Tolerances::tol_recover_loose},
      {"tol_const", &Tolerances::tol_const},
      {"tol_theorem", &Tolerances::tol_theorem},
      {"tol_planar", &Tolerances::tol_planar},
      {"excise_rel", &Tolerances::excise_rel},
      {"excise_rel_deriv", &Tolerances::excise_rel_deriv},
      {"min_valid_fraction", &Tolerances::min_valid_fraction},
  };
  for (const auto& [name, value] : overrides) {
    auto it = fields.find(name);
    if (it == fields.end()) {
      throw InvalidArgumentError("unknown tolerance name: " + name);
    }
    if (!(value > 0.0)) {
      throw InvalidArgumentError("tolerance " + name + " must be positive");
    }
    this->*(it->second) = value;
  }
}

}  // namespace lpc
