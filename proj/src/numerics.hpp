// SPDX-License-Identifier: Apache-2.0
// Internal numeric helpers shared by the signal and Fourier code.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

namespace nwidth::detail {

using GaussRule = boost::math::quadrature::gauss<double, 20>;

/// Calls f(node, weight) for the 20-point Gauss-Legendre rule mapped to [a, b].
template <class F>
void gauss_panel(double a, double b, F&& f) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const auto& x = GaussRule::abscissa();
  const auto& w = GaussRule::weights();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double wi = w[i] * half;
    if (x[i] == 0.0) {
      f(mid, wi);
    } else {
      f(mid - half * x[i], wi);
      f(mid + half * x[i], wi);
    }
  }
}

/// e^{i pi v}, with v reduced modulo 2 in extended precision first.
inline std::complex<double> unit_phase(long double v) {
  long double r = std::fmod(v, 2.0L);
  if (r < 0) r += 2.0L;
  const long double angle = std::numbers::pi_v<long double> * r;
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

inline double horner(std::span<const double> c, double t) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

/// Coefficients of p(t + shift) given those of p(t).
inline std::vector<double> taylor_shift(std::span<const double> c, double shift) {
  std::vector<double> out(c.begin(), c.end());
  if (shift == 0.0) return out;
  const std::size_t n = out.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) out[j - 1] += shift * out[j];
  }
  return out;
}

inline std::vector<double> poly_derivative(std::span<const double> c) {
  if (c.size() <= 1) return {0.0};
  std::vector<double> d(c.size() - 1);
  for (std::size_t n = 1; n < c.size(); ++n) d[n - 1] = static_cast<double>(n) * c[n];
  return d;
}

/// Antiderivative vanishing at t = 0.
inline std::vector<double> poly_antiderivative(std::span<const double> c) {
  std::vector<double> out(c.size() + 1, 0.0);
  for (std::size_t n = 0; n < c.size(); ++n) out[n + 1] = c[n] / static_cast<double>(n + 1);
  return out;
}

/// j-th derivative of the polynomial at t.
inline double poly_derivative_at(std::span<const double> c, int order, double t) {
  double acc = 0.0;
  for (std::size_t n = c.size(); n-- > static_cast<std::size_t>(order);) {
    double falling = 1.0;
    for (int k = 0; k < order; ++k) falling *= static_cast<double>(n - static_cast<std::size_t>(k));
    acc = acc * t + falling * c[n];
  }
  return acc;
}

inline int poly_degree(std::span<const double> c) {
  int d = static_cast<int>(c.size()) - 1;
  while (d > 0 && c[static_cast<std::size_t>(d)] == 0.0) --d;
  return d;
}

/// Integral of p(t) e^{i pi v t} over [t0, t1].
///
/// Long intervals (measured in radians of phase against the polynomial
/// degree) use repeated integration by parts, which terminates for
/// polynomials; short ones use composite Gauss-Legendre with at most three
/// radians of phase per panel. Both are accurate to rounding.
std::complex<double> oscillatory_poly_integral(std::span<const double> c, double t0, double t1,
                                               double v);

}  // namespace nwidth::detail
