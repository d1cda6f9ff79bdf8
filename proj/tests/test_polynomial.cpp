// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nwidth/errors.hpp"
#include "nwidth/polynomial.hpp"
#include "nwidth/special_functions.hpp"

#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

using nwidth::PiecewisePoly;

namespace {
// x^2 on [-1, 0), 1 - x on [0, 1]
PiecewisePoly sample_poly() { return PiecewisePoly({-1.0, 0.0, 1.0}, {{1.0, -2.0, 1.0}, {1.0, -1.0}}); }
}  // namespace

TEST_CASE("construction rejects malformed breakpoints") {
  CHECK_THROWS_AS(PiecewisePoly({-1.0}, {}), nwidth::UsageError);
  CHECK_THROWS_AS(PiecewisePoly({-0.5, 1.0}, {{1.0}}), nwidth::UsageError);
  CHECK_THROWS_AS(PiecewisePoly({-1.0, 0.3, 0.3, 1.0}, {{1.0}, {1.0}, {1.0}}), nwidth::UsageError);
  CHECK_THROWS_AS(PiecewisePoly({-1.0, 1.0}, {{}}), nwidth::UsageError);
  CHECK_THROWS_AS(PiecewisePoly({-1.0, 0.0, 1.0}, {{1.0}}), nwidth::UsageError);
}

TEST_CASE("evaluation uses local coordinates and periodic extension") {
  const auto p = sample_poly();
  CHECK(p(-0.5) == doctest::Approx(0.25));
  CHECK(p(0.25) == doctest::Approx(0.75));
  CHECK(p(0.25 + 2.0) == p(0.25));
  CHECK(p(-0.5 - 4.0) == p(-0.5));
  // jump at 0: left 0, right 1
  CHECK(p(0.0) == doctest::Approx(0.5));
  CHECK(p.left_limit(0.0) == doctest::Approx(0.0));
  CHECK(p.right_limit(0.0) == doctest::Approx(1.0));
  // at -1 the left limit is the end of the last piece (value 0) and right is 1
  CHECK(p(-1.0) == doctest::Approx(0.5));
  CHECK(p(1.0) == doctest::Approx(0.5));
}

TEST_CASE("reduce_period maps into [-1, 1)") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double r = nwidth::reduce_period(u(rng));
    CHECK(r >= -1.0);
    CHECK(r < 1.0);
  }
  CHECK(nwidth::reduce_period(1.0) == -1.0);
  CHECK(nwidth::reduce_period(3.5) == 1.5 - 2.0);
}

TEST_CASE("calculus on pieces") {
  const auto p = sample_poly();
  CHECK(p.integral() == doctest::Approx(1.0 / 3.0 + 0.5));
  const auto d = p.derivative();
  CHECK(d(-0.5) == doctest::Approx(-1.0));
  CHECK(d(0.5) == doctest::Approx(-1.0));
  const auto a = p.antiderivative();
  CHECK(a.right_limit(-1.0) == doctest::Approx(0.0));
  CHECK(a.left_limit(1.0) == doctest::Approx(p.integral()));
  CHECK(p.integral(-0.5, 0.5) == doctest::Approx(1.0 / 24.0 + (0.5 - 0.125)));
  // Windows crossing period boundaries
  CHECK(p.integral(0.5, 2.5) == doctest::Approx(p.integral()));
  CHECK(p.integral(-3.0, 1.0) == doctest::Approx(2.0 * p.integral()));
}

TEST_CASE("shift and arithmetic agree with pointwise evaluation") {
  const auto p = sample_poly();
  for (double s : {0.3, -0.7, 1.0, 1.9}) {
    const auto q = p.shifted(s);
    for (double x = -0.95; x < 1.0; x += 0.1) CHECK(q(x) == doctest::Approx(p(x + s)).epsilon(1e-12));
  }
  const auto r = p + p.shifted(0.5);
  const auto m = p - p.shifted(0.5);
  for (double x = -0.95; x < 1.0; x += 0.1) {
    CHECK(r(x) == doctest::Approx(p(x) + p(x + 0.5)).epsilon(1e-12));
    CHECK(m(x) == doctest::Approx(p(x) - p(x + 0.5)).epsilon(1e-12));
  }
  const std::vector<double> g{0.0, 1.0};  // multiply by x
  const auto t = p.times_global(g);
  CHECK(t(0.5) == doctest::Approx(0.25));
  CHECK(t(-0.5) == doctest::Approx(-0.125));
}

TEST_CASE("L2 norm against the exact integral") {
  const auto p = sample_poly();
  // int_{-1}^0 x^4 + int_0^1 (1-x)^2 = 1/5 + 1/3
  CHECK(p.l2_norm_sq() == doctest::Approx(0.2 + 1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("Fourier integral against closed forms") {
  // sgn: int sgn(x) e^{i n pi x} = 2i (1 - cos n pi)/(n pi)
  const PiecewisePoly sgn({-1.0, 0.0, 1.0}, {{-1.0}, {1.0}});
  for (int n : {1, 2, 3, 50, 1001}) {
    const auto f = sgn.fourier_integral(static_cast<double>(n));
    const double expect = 2.0 * (1.0 - std::cos(n * std::numbers::pi)) / (n * std::numbers::pi);
    CHECK(std::abs(f.real()) < 1e-15);
    CHECK(f.imag() == doctest::Approx(expect).epsilon(1e-13));
  }
  // x on (-1, 1): int x sin(n pi x) = 2 (-1)^{n+1}/(n pi)
  const PiecewisePoly lin({-1.0, 1.0}, {{-1.0, 1.0}});
  for (int n : {1, 4, 7, 300, 4096}) {
    const double expect = 2.0 * (n % 2 ? 1.0 : -1.0) / (n * std::numbers::pi);
    CHECK(lin.fourier_integral(static_cast<double>(n)).imag() ==
          doctest::Approx(expect).epsilon(1e-12));
  }
  // windowed: int_{0.2}^{0.7} e^{i pi v x}
  const auto one = PiecewisePoly::constant(1.0);
  const double v = 3.0;
  const auto w = one.fourier_integral(0.2, 0.7, v);
  const double om = std::numbers::pi * v;
  CHECK(w.real() == doctest::Approx((std::sin(om * 0.7) - std::sin(om * 0.2)) / om));
  CHECK(w.imag() == doctest::Approx((std::cos(om * 0.2) - std::cos(om * 0.7)) / om));
  // windows wrapping the period boundary equal the sum of the pieces
  const auto p = sample_poly();
  const auto whole = p.fourier_integral(-0.3, 1.7, 2.0);
  const auto full = p.fourier_integral(2.0);
  CHECK(std::abs(whole - full) < 1e-14);
}

TEST_CASE("jumps of derivatives") {
  const auto p = sample_poly();
  CHECK(p.jump(1, 0) == doctest::Approx(1.0));   // at 0: 1 - 0
  CHECK(p.jump(0, 0) == doctest::Approx(1.0));   // at -1: 1 - 0
  CHECK(p.jump(1, 1) == doctest::Approx(-1.0));  // -1 - 0
  CHECK(p.jump(0, 1) == doctest::Approx(-2.0 + 1.0));
  CHECK(p.total_jump(2) == doctest::Approx(4.0));
}

TEST_CASE("simplified merges identical neighbours") {
  const PiecewisePoly p({-1.0, -0.2, 0.4, 1.0}, {{1.0, 2.0}, {2.6, 2.0}, {3.8, 2.0}});
  const auto s = p.simplified(1e-12);
  CHECK(s.pieces() == 1);
  CHECK(s(0.9) == doctest::Approx(p(0.9)));
}

TEST_CASE("merge_breaks deduplicates within tolerance") {
  const std::vector<double> a{-1.0, 0.1, 1.0};
  const std::vector<double> b{-1.0, 0.1 + 1e-14, 0.5, 1.0};
  const auto m = nwidth::merge_breaks(a, b);
  CHECK(m.size() == 4);
}

TEST_CASE("trigamma identities and oracle") {
  using nwidth::trigamma;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  CHECK(trigamma(0.5) == doctest::Approx(pi2 / 2.0).epsilon(1e-15));
  CHECK(trigamma(1.0) == doctest::Approx(pi2 / 6.0).epsilon(1e-15));
  CHECK(trigamma(1.5) == doctest::Approx(pi2 / 2.0 - 4.0).epsilon(1e-14));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.01, 200.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng);
    CHECK(trigamma(x) - trigamma(x + 1.0) == doctest::Approx(1.0 / (x * x)).epsilon(1e-11));
    CHECK(trigamma(x) == doctest::Approx(boost::math::trigamma(x)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(trigamma(0.0), nwidth::UsageError);
  CHECK_THROWS_AS(trigamma(-1.0), nwidth::UsageError);
}

TEST_CASE("Hurwitz zeta against the library oracle") {
  // zeta(s, a) = zeta(s) - sum_{k<a} k^{-s} for integer a
  for (double s : {2.0, 4.0, 6.0, 12.0}) {
    CHECK(nwidth::hurwitz_zeta(s, 1.0) == doctest::Approx(boost::math::zeta(s)).epsilon(1e-14));
    double head = 0.0;
    for (int k = 1; k < 5; ++k) head += std::pow(k, -s);
    CHECK(nwidth::hurwitz_zeta(s, 5.0) ==
          doctest::Approx(boost::math::zeta(s) - head).epsilon(1e-12));
  }
  // zeta(2, a) = psi1(a)
  for (double a : {0.5, 1.5, 100.5, 5000.5})
    CHECK(nwidth::hurwitz_zeta(2.0, a) == doctest::Approx(boost::math::trigamma(a)).epsilon(1e-13));
}
