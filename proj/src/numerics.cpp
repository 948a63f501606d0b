#include "lpc/numerics.hpp"

#include <cstddef>

namespace lpc {

namespace {

template <typename T>
std::vector<T> cumulative_simpson_impl(std::span<const T> f, double h, const T& c0) {
  if (f.size() < 2) throw GridTooSmallError("cumulative_simpson: need at least 2 samples");
  if (!(h > 0.0)) throw InvalidArgumentError("cumulative_simpson: spacing must be positive");
  std::vector<T> out(f.size());
  out[0] = c0;
  // Even indices extend the Simpson chain two intervals at a time; odd
  // indices close with one trapezoid on top of the previous even prefix.
  for (std::size_t k = 1; k < f.size(); ++k) {
    if (k % 2 == 0) {
      out[k] = out[k - 2] + (f[k - 2] + 4.0 * f[k - 1] + f[k]) * (h / 3.0);
    } else {
      out[k] = out[k - 1] + (f[k - 1] + f[k]) * (h / 2.0);
    }
  }
  return out;
}

template <typename T>
std::vector<T> fd_derivative_impl(std::span<const T> f, double h) {
  const std::size_t n = f.size();
  if (n < 3) throw GridTooSmallError("fd_derivative: need at least 3 samples");
  if (!(h > 0.0)) throw InvalidArgumentError("fd_derivative: spacing must be positive");
  std::vector<T> out(n);
  out[0] = (f[0] * -3.0 + f[1] * 4.0 - f[2]) * (1.0 / (2.0 * h));
  out[n - 1] = (f[n - 1] * 3.0 - f[n - 2] * 4.0 + f[n - 3]) * (1.0 / (2.0 * h));
  if (n >= 5) {
    out[1] = (f[2] - f[0]) * (1.0 / (2.0 * h));
    out[n - 2] = (f[n - 1] - f[n - 3]) * (1.0 / (2.0 * h));
    for (std::size_t i = 2; i + 2 < n; ++i) {
      out[i] = (f[i - 2] - f[i + 2] + (f[i + 1] - f[i - 1]) * 8.0) * (1.0 / (12.0 * h));
    }
  } else {
    for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) * (1.0 / (2.0 * h));
  }
  return out;
}

}  // namespace

std::vector<double> cumulative_simpson(std::span<const double> f, double h, double c0) {
  return cumulative_simpson_impl(f, h, c0);
}

std::vector<Vec3> cumulative_simpson(std::span<const Vec3> f, double h, const Vec3& c0) {
  return cumulative_simpson_impl(f, h, c0);
}

std::vector<double> fd_derivative(std::span<const double> f, double h) {
  return fd_derivative_impl(f, h);
}

std::vector<Vec3> fd_derivative(std::span<const Vec3> f, double h) {
  return fd_derivative_impl(f, h);
}

double hermite_eval(double x0, double x1, double f0, double f1, double d0, double d1, double x) {
  const double w = x1 - x0;
  const double t = (x - x0) / w;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return f0 * (2.0 * t3 - 3.0 * t2 + 1.0) + d0 * w * (t3 - 2.0 * t2 + t) +
         f1 * (-2.0 * t3 + 3.0 * t2) + d1 * w * (t3 - t2);
}

}  // namespace lpc
