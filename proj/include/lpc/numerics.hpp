#pragma once

#include <span>
#include <vector>

#include "lpc/vec.hpp"

namespace lpc {

/// Prefix antiderivative F(s_k) of samples f on a uniform grid of spacing h,
/// with F(s_0) = c0. Composite Simpson over even prefixes; a single trapezoid
/// closes the last interval at odd indices.
std::vector<double> cumulative_simpson(std::span<const double> f, double h, double c0);

/// Componentwise vector version of cumulative_simpson.
std::vector<Vec3> cumulative_simpson(std::span<const Vec3> f, double h, const Vec3& c0);

/// First derivative of samples on a uniform grid: 4th-order central stencils
/// in the interior, 2nd-order one-sided at the two outermost nodes per end.
std::vector<double> fd_derivative(std::span<const double> f, double h);
std::vector<Vec3> fd_derivative(std::span<const Vec3> f, double h);

/// Cubic Hermite evaluation on [x0, x1] with endpoint values/derivatives.
double hermite_eval(double x0, double x1, double f0, double f1, double d0, double d1, double x);

}  // namespace lpc
