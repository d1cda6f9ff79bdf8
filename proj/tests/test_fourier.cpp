// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "nwidth/errors.hpp"
#include "nwidth/fourier.hpp"
#include "nwidth/signal_spec.hpp"
#include "nwidth/signals.hpp"

using namespace nwidth;
using std::numbers::pi;

namespace {

// Independent oracle: integrate g(x) against a trig function on (-1, 1) with
// many plain Gauss-Legendre panels, splitting at the signal breakpoints.
double brute_projection(const Signal& g, int k, bool sine) {
  auto breaks = g.breakpoints();
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const int panels = 64;
    const double h = (breaks[i + 1] - breaks[i]) / panels;
    for (int p = 0; p < panels; ++p) {
      const double a = breaks[i] + p * h;
      const double b = a + h;
      sum += boost::math::quadrature::gauss<double, 30>::integrate(
          [&](double x) {
            const double xx = std::min(std::max(x, a + 1e-15), b - 1e-15);
            return g.right_limit(xx) * (sine ? std::sin(k * pi * xx) : std::cos(k * pi * xx));
          },
          a, b);
    }
  }
  return sum;
}

}  // namespace

TEST_CASE("jump coefficients") {
  const auto c = coefficients(jump_signal(), 257);
  CHECK(c.provenance == Provenance::analytic);
  CHECK(std::abs(c.a0) < 1e-15);
  for (int k = 1; k <= 257; ++k) {
    const auto i = static_cast<std::size_t>(k);
    CHECK(std::abs(c.a[i]) < 1e-14);
    if (k % 2) CHECK(c.b[i] == doctest::Approx(4.0 / (k * pi)).epsilon(1e-13));
    else CHECK(std::abs(c.b[i]) < 1e-14);
  }
}

TEST_CASE("constant and pure trig signals") {
  const auto c = coefficients(Signal::constant(0.8), 16);
  CHECK(c.a0 == doctest::Approx(std::sqrt(2.0) * 0.8));
  for (int k = 1; k <= 16; ++k) {
    CHECK(std::abs(c.a[static_cast<std::size_t>(k)]) < 1e-15);
    CHECK(std::abs(c.b[static_cast<std::size_t>(k)]) < 1e-15);
  }
  const auto s = coefficients(Signal::sine(1), 8);
  CHECK(s.b[1] == doctest::Approx(1.0));
  CHECK(std::abs(s.a0) < 1e-15);
  for (int k = 2; k <= 8; ++k) CHECK(std::abs(s.b[static_cast<std::size_t>(k)]) < 1e-15);
  CHECK_THROWS_AS(coefficients(Signal::cosine(9), 8), UsageError);
  CHECK_THROWS_AS(coefficients(jump_signal(), 0), UsageError);
}

TEST_CASE("analytic coefficients against brute quadrature") {
  const std::vector<Signal> sigs{antiderivative_signal(2), hws_assemble(ramp_signal(3, 0.0459)),
                                 random_steps(20, 3), box_convolve(random_steps(20, 3), 0.1, 2)};
  for (const auto& g : sigs) {
    const auto c = coefficients(g, 40);
    for (int k : {1, 2, 7, 19, 40}) {
      CHECK(c.a[static_cast<std::size_t>(k)] ==
            doctest::Approx(brute_projection(g, k, false)).epsilon(1e-10).scale(1e-3));
      CHECK(c.b[static_cast<std::size_t>(k)] ==
            doctest::Approx(brute_projection(g, k, true)).epsilon(1e-10).scale(1e-3));
    }
  }
}

TEST_CASE("analytic and quadrature coefficients agree up to K = 1024") {
  const std::vector<Signal> sigs{jump_signal(), antiderivative_signal(1),
                                 hws_assemble(ramp_signal(2, 0.0371)),
                                 box_convolve(random_steps(20, 11), 0.1, 1)};
  for (const auto& g : sigs) {
    const auto a = coefficients(g, 1024);
    const auto q = quadrature_coefficients(g, 1024);
    CHECK(q.provenance == Provenance::quadrature);
    double worst = std::abs(a.a0 - q.a0);
    for (std::size_t k = 1; k <= 1024; ++k)
      worst = std::max({worst, std::abs(a.a[k] - q.a[k]), std::abs(a.b[k] - q.b[k])});
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("Parseval partial sums are monotone and bounded by the norm") {
  const std::vector<Signal> sigs{jump_signal(), antiderivative_signal(1), antiderivative_signal(4),
                                 hws_assemble(ramp_signal(0, 0.025)),
                                 hws_assemble(ramp_signal(5, 0.0779)), random_steps(20, 7),
                                 box_convolve(random_steps(20, 7), 0.1, 3)};
  for (const auto& g : sigs) {
    const auto c = coefficients(g, 4096);
    const double norm = g.poly().l2_norm_sq();
    double prev = -1.0;
    for (int n : {0, 1, 10, 100, 1000, 4096}) {
      const double s = c.parseval_sum(n);
      CHECK(s >= prev);
      CHECK(s <= norm * (1.0 + 1e-12));
      prev = s;
    }
    const double deficit = norm - c.parseval_sum(4096);
    CHECK(std::abs(deficit - (c.tail.odd_mass + c.tail.even_mass)) <= 1e-12 * norm);
    // the envelope bounds the tail beyond K
    double envelope = 0.0;
    for (int n = 4097; n < 400000; ++n) envelope += std::pow(c.tail.energy_bound(n), 1.0);
    CHECK(deficit <= envelope + 1e-12);
  }
  // jump: the tail mass equals sum_{k > K, odd} 16/(k pi)^2 = (4/pi^2) psi1((K+1)/2 + 1/2) ... check directly
  const auto c = coefficients(jump_signal(), 4096);
  long double tail = 0.0L;
  for (long k = 4097 + 10000000; k > 4096; --k)
    if (k % 2) tail += 16.0L / (static_cast<long double>(k) * k * pi * pi);
  tail += 16.0L / (pi * pi) / (2.0L * (4097 + 10000000));  // integral remainder
  CHECK(c.tail.odd_mass == doctest::Approx(static_cast<double>(tail)).epsilon(1e-6));
  CHECK(c.tail.even_mass <= 1e-14);
}

TEST_CASE("half-wave symmetry classification") {
  CHECK(hws_classify(jump_signal()) == HwsType::odd);
  CHECK(hws_classify(Signal::cosine(2)) == HwsType::even);
  CHECK(hws_classify(parse_signal("jump+const:0.3")) == HwsType::none);
  CHECK(hws_classify(antiderivative_signal(2)) == HwsType::odd);
  CHECK(hws_classify(Signal::constant(1.0)) == HwsType::even);
  CHECK(hws_classify(random_steps(20, 2)) == HwsType::none);
  CHECK(default_hws_tolerance(jump_signal()) == 1e-9);
  CHECK(default_hws_tolerance(hws_assemble(sigmoid_ramp(0.025))) == 1e-6);
  CHECK_THROWS_AS(hws_classify(jump_signal(), 0.0), UsageError);
}

TEST_CASE("hws split and reassemble") {
  const auto jc = coefficients(jump_signal(), 64);
  const auto jp = hws_split(jc);
  CHECK(jp.a0 == 0.0);
  for (double v : jp.even_a) CHECK(std::abs(v) < 1e-14);
  for (double v : jp.even_b) CHECK(std::abs(v) < 1e-14);
  CHECK(jp.odd_b[0] == doctest::Approx(4.0 / pi));
  CHECK(jp.odd_b[1] == doctest::Approx(4.0 / (3.0 * pi)));

  const auto cc = hws_split(coefficients(Signal::cosine(2), 64));
  for (double v : cc.odd_a) CHECK(v == 0.0);
  for (double v : cc.odd_b) CHECK(v == 0.0);
  CHECK(cc.even_a[0] == doctest::Approx(1.0));

  const auto mix = hws_split(coefficients(parse_signal("jump+cos:2"), 64));
  for (std::size_t k = 0; k < mix.odd_b.size(); ++k) {
    CHECK(mix.odd_b[k] == doctest::Approx(jp.odd_b[k]).epsilon(1e-14));
    CHECK(mix.even_a[k] == doctest::Approx(cc.even_a[k]).epsilon(1e-14).scale(1e-14));
  }

  for (const auto& g : {random_steps(20, 4), box_convolve(random_steps(20, 4), 0.1, 2)}) {
    for (int K : {1, 2, 63, 64}) {
      const auto c = coefficients(g, K);
      const auto r = reassemble(hws_split(c));
      CHECK(r.K == c.K);
      CHECK(r.a0 == c.a0);
      CHECK(r.a == c.a);
      CHECK(r.b == c.b);
    }
  }
}

TEST_CASE("Sobolev diagnostics") {
  const auto jc = coefficients(jump_signal(), 4096);
  const auto d0 = sobolev_tail_diagnostic(jc, 0.0);
  CHECK(d0.partial_sums.back() == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(d0.verdict == SobolevVerdict::bounded);
  for (std::size_t i = 1; i < d0.partial_sums.size(); ++i)
    CHECK(d0.partial_sums[i] >= d0.partial_sums[i - 1]);
  const auto dh = sobolev_tail_diagnostic(jc, 0.5);
  CHECK(dh.verdict == SobolevVerdict::unbounded);
  // logarithmic growth: doubling K adds about 8/pi^2 ln 2 (terms ~ 8/(pi^2 k))
  const double inc = dh.partial_sums[4096] - dh.partial_sums[2048];
  CHECK(inc == doctest::Approx(8.0 / (pi * pi) * std::log(2.0)).epsilon(0.01));
  const auto g1 = sobolev_tail_diagnostic(coefficients(antiderivative_signal(1), 4096), 1.0);
  CHECK(g1.verdict == SobolevVerdict::bounded);
  CHECK(to_string(SobolevVerdict::inconclusive) == "inconclusive");
}

TEST_CASE("shifted block energy is shift invariant") {
  // Halton (base 2) samples of mu in (0, 1)
  auto halton = [](int i) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
      f /= 2.0;
      r += f * (i % 2);
      i /= 2;
    }
    return r;
  };
  for (const auto& g : {jump_signal(), antiderivative_signal(1), hws_assemble(ramp_signal(2, 0.0371))}) {
    const auto c = coefficients(g, 16);
    for (int k : {1, 3, 5, 15}) {
      for (int i = 1; i <= 100; ++i) {
        const double e = shifted_block_energy(g, k, halton(i));
        CHECK(e == doctest::Approx(0.5 * c.energy(k)).epsilon(1e-8).scale(1e-12));
      }
    }
  }
  const auto cc = coefficients(Signal::cosine(2), 4);
  CHECK(shifted_block_energy(Signal::cosine(2), 2, 0.37) == doctest::Approx(0.5 * cc.energy(2)));
}
