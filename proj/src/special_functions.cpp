// SPDX-License-Identifier: Apache-2.0
#include "nwidth/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "nwidth/errors.hpp"

namespace nwidth {

namespace {
// B_2, B_4, ..., B_16
constexpr std::array<double, 8> kBernoulli{1.0 / 6.0,   -1.0 / 30.0,   1.0 / 42.0, -1.0 / 30.0,
                                           5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0};
}  // namespace

double trigamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw UsageError("trigamma needs a positive finite argument");
  // Extended precision keeps the recurrence and series within one rounding.
  long double y = x;
  int lift = 0;
  while (y + lift < 10.0L) ++lift;
  long double lifted = 0.0L;
  for (int k = lift - 1; k >= 0; --k) lifted += 1.0L / ((y + k) * (y + k));
  y += lift;
  const long double inv = 1.0L / y;
  const long double inv2 = inv * inv;
  long double series = 0.0L;
  long double pw = inv2 * inv;  // y^{-3}
  for (double b : kBernoulli) {
    series += static_cast<long double>(b) * pw;
    pw *= inv2;
  }
  return static_cast<double>(lifted + inv + 0.5L * inv2 + series);
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0)) throw UsageError("hurwitz_zeta needs s > 1");
  if (!(a > 0.0)) throw UsageError("hurwitz_zeta needs a > 0");
  // Direct sum up to a shifted argument where the tail expansion is accurate.
  const int direct = std::max(0, static_cast<int>(std::ceil(12.0 + s - a)));
  double head = 0.0;
  for (int k = direct - 1; k >= 0; --k) head += std::pow(k + a, -s);
  const double x = a + direct;
  // sum_{k>=0} f(x+k) = int_x^inf f + f(x)/2 - sum_j B_2j/(2j)! f^{(2j-1)}(x)
  double tail = std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  // f^{(2j-1)}(x) = -(s)(s+1)...(s+2j-2) x^{-s-2j+1}
  double rising = s;  // s (s+1) ... (s + 2j - 2)
  double fact = 2.0;  // (2j)!
  double pw = std::pow(x, -s - 1.0);
  for (std::size_t j = 1; j <= kBernoulli.size(); ++j) {
    const double term = kBernoulli[j - 1] / fact * rising * pw;
    tail += term;
    if (std::abs(term) < 1e-18 * std::abs(tail)) break;
    const double n = 2.0 * static_cast<double>(j);
    rising *= (s + n - 1.0) * (s + n);
    fact *= (n + 1.0) * (n + 2.0);
    pw /= x * x;
  }
  return head + tail;
}

}  // namespace nwidth
