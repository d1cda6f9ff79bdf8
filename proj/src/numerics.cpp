// SPDX-License-Identifier: Apache-2.0
#include "numerics.hpp"

#include <algorithm>

namespace nwidth::detail {

std::complex<double> oscillatory_poly_integral(std::span<const double> c, double t0, double t1,
                                               double v) {
  const double len = t1 - t0;
  if (len <= 0.0) return {0.0, 0.0};
  const int degree = poly_degree(c);
  const double omega = std::numbers::pi * v;
  const double theta = std::abs(omega) * len;

  if (v == 0.0) {
    std::complex<double> acc{0.0, 0.0};
    gauss_panel(t0, t1, [&](double t, double w) { acc += w * horner(c, t); });
    return acc;
  }

  const double ibp_threshold = std::max(8.0, 2.0 * (degree + 1) * (degree + 1));
  if (theta >= ibp_threshold) {
    // F(t) = e^{i w t} sum_j (-1)^j p^(j)(t) / (i w)^(j+1)
    auto boundary = [&](double t) {
      std::complex<double> sum{0.0, 0.0};
      const std::complex<double> iw{0.0, omega};
      std::complex<double> denom = iw;
      double sign = 1.0;
      for (int j = 0; j <= degree; ++j) {
        sum += sign * poly_derivative_at(c, j, t) / denom;
        denom *= iw;
        sign = -sign;
      }
      return unit_phase(static_cast<long double>(v) * t) * sum;
    };
    return boundary(t1) - boundary(t0);
  }

  const int panels = std::max(1, static_cast<int>(std::ceil(theta / 3.0)));
  const double step = len / panels;
  std::complex<double> acc{0.0, 0.0};
  for (int p = 0; p < panels; ++p) {
    const double a = t0 + p * step;
    const double b = (p + 1 == panels) ? t1 : a + step;
    gauss_panel(a, b, [&](double t, double w) {
      acc += w * horner(c, t) * std::complex<double>(std::cos(omega * t), std::sin(omega * t));
    });
  }
  return acc;
}

}  // namespace nwidth::detail
