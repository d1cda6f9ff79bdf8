// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace nwidth {

/// Derivative of the digamma function for x > 0.
///
/// The recurrence psi1(x) = psi1(x + 1) + 1/x^2 lifts the argument to
/// x >= 10, then the asymptotic series 1/x + 1/(2x^2) + sum_j B_{2j}/x^{2j+1}
/// is summed with Bernoulli numbers B_2..B_16 (eight terms). The first
/// omitted term is below 1e-16 relative at x = 10.
double trigamma(double x);

/// Hurwitz zeta sum_{k>=0} (k + a)^{-s} for s > 1, a > 0, via Euler-Maclaurin
/// after summing the first terms directly.
double hurwitz_zeta(double s, double a);

}  // namespace nwidth
