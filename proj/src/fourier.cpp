// SPDX-License-Identifier: Apache-2.0
#include "nwidth/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nwidth/errors.hpp"
#include "nwidth/parallel.hpp"
#include "numerics.hpp"

namespace nwidth {

std::string to_string(Provenance p) { return p == Provenance::analytic ? "analytic" : "quadrature"; }

std::string to_string(HwsType t) {
  switch (t) {
    case HwsType::even: return "even";
    case HwsType::odd: return "odd";
    default: return "none";
  }
}

std::string to_string(SobolevVerdict v) {
  switch (v) {
    case SobolevVerdict::bounded: return "bounded";
    case SobolevVerdict::unbounded: return "unbounded";
    default: return "inconclusive";
  }
}

double TailEstimate::energy_bound(int n) const {
  if (!has_envelope()) return std::numeric_limits<double>::infinity();
  const double w = std::numbers::pi * n;
  double s = 0.0;
  double pw = w;
  for (double j : jump_sums) {
    s += j / pw;
    pw *= w;
  }
  return s * s;
}

double FourierCoefficients::energy(int k) const {
  if (k == 0) return a0 * a0;
  const auto i = static_cast<std::size_t>(k);
  return a[i] * a[i] + b[i] * b[i];
}

double FourierCoefficients::parseval_sum(int n) const {
  double s = a0 * a0;
  for (int k = 1; k <= std::min(n, K); ++k) s += energy(k);
  return s;
}

namespace {

void check_truncation(const Signal& g, int K) {
  if (K < 1) throw UsageError("truncation frequency must be positive");
  for (const auto& t : g.trig()) {
    if (t.frequency > K)
      throw UsageError("truncation frequency is below a trigonometric term of the signal");
  }
}

void add_trig_terms(const Signal& g, FourierCoefficients& c) {
  for (const auto& t : g.trig()) {
    const auto i = static_cast<std::size_t>(t.frequency);
    c.a[i] += t.cos_amp;
    c.b[i] += t.sin_amp;
  }
}

/// Deficits of the parity energies against the exact parity norms.
void fill_parity_masses(const FourierCoefficients& c, double even_norm_sq, double odd_norm_sq,
                        TailEstimate& tail) {
  double even = c.a0 * c.a0;
  double odd = 0.0;
  for (int k = 1; k <= c.K; ++k) (k % 2 == 0 ? even : odd) += c.energy(k);
  tail.even_mass = std::max(0.0, even_norm_sq - even);
  tail.odd_mass = std::max(0.0, odd_norm_sq - odd);
}

}  // namespace

FourierCoefficients coefficients(const Signal& g, int K) {
  if (!g.is_exact()) return quadrature_coefficients(g, K);
  check_truncation(g, K);
  const PiecewisePoly& p = g.poly();
  FourierCoefficients c;
  c.K = K;
  c.a.assign(static_cast<std::size_t>(K) + 1, 0.0);
  c.b.assign(static_cast<std::size_t>(K) + 1, 0.0);
  c.provenance = Provenance::analytic;
  c.a0 = p.integral() / std::numbers::sqrt2;
  parallel_for(static_cast<std::size_t>(K), [&](std::size_t i) {
    const auto f = p.fourier_integral(static_cast<double>(i + 1));
    c.a[i + 1] = f.real();
    c.b[i + 1] = f.imag();
  });
  const PiecewisePoly partner = p.shifted(1.0);
  const double even_norm = 0.25 * (p + partner).l2_norm_sq();
  const double odd_norm = 0.25 * (p - partner).l2_norm_sq();
  fill_parity_masses(c, even_norm, odd_norm, c.tail);
  for (int j = 0; j <= p.max_degree(); ++j) c.tail.jump_sums.push_back(p.total_jump(j));
  add_trig_terms(g, c);
  return c;
}

namespace {

struct QuadratureResult {
  double a0 = 0.0;
  std::vector<std::complex<double>> f;  // index n = 0..K
};

std::vector<std::pair<double, double>> panels(std::span<const double> breaks, double max_len) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double len = breaks[i + 1] - breaks[i];
    const int n = std::max(1, static_cast<int>(std::ceil(len / max_len)));
    for (int k = 0; k < n; ++k) {
      const double a = breaks[i] + len * k / n;
      const double b = (k + 1 == n) ? breaks[i + 1] : breaks[i] + len * (k + 1) / n;
      out.emplace_back(a, b);
    }
  }
  return out;
}

QuadratureResult quadrature_pass(const Signal& g, int K, std::span<const double> breaks,
                                 double max_len) {
  const auto pan = panels(breaks, max_len);
  constexpr std::size_t kChunks = 64;
  std::vector<std::vector<std::complex<double>>> partial(
      kChunks, std::vector<std::complex<double>>(static_cast<std::size_t>(K) + 1));
  parallel_for(kChunks, [&](std::size_t chunk) {
    auto& acc = partial[chunk];
    const std::size_t lo = pan.size() * chunk / kChunks;
    const std::size_t hi = pan.size() * (chunk + 1) / kChunks;
    for (std::size_t p = lo; p < hi; ++p) {
      detail::gauss_panel(pan[p].first, pan[p].second, [&](double x, double w) {
        const double v = w * g(x);
        acc[0] += v;
        const auto step = detail::unit_phase(x);
        std::complex<double> z{1.0, 0.0};
        for (int n = 1; n <= K; ++n) {
          z = (n % 256 == 0) ? detail::unit_phase(static_cast<long double>(n) * x) : z * step;
          acc[static_cast<std::size_t>(n)] += v * z;
        }
      });
    }
  });
  QuadratureResult r;
  r.f.assign(static_cast<std::size_t>(K) + 1, {0.0, 0.0});
  for (const auto& part : partial)
    for (std::size_t n = 0; n < part.size(); ++n) r.f[n] += part[n];
  r.a0 = r.f[0].real() / std::numbers::sqrt2;
  return r;
}

double quadrature_norm_sq(const std::function<double(double)>& f, std::span<const double> breaks,
                          double max_len) {
  double s = 0.0;
  for (const auto& [a, b] : panels(breaks, max_len)) {
    detail::gauss_panel(a, b, [&](double x, double w) {
      const double v = f(x);
      s += w * v * v;
    });
  }
  return s;
}

}  // namespace

FourierCoefficients quadrature_coefficients(const Signal& g, int K, double tol) {
  check_truncation(g, K);
  const auto breaks = g.breakpoints();
  // Twenty nodes per period of the highest frequency, never coarser than 1/20.
  double max_len = std::min(2.0 / K, 0.05);
  QuadratureResult coarse = quadrature_pass(g, K, breaks, max_len);
  constexpr int kMaxRefinements = 8;
  for (int level = 0;; ++level) {
    max_len *= 0.5;
    QuadratureResult fine = quadrature_pass(g, K, breaks, max_len);
    double diff = std::abs(fine.a0 - coarse.a0);
    for (std::size_t n = 1; n < fine.f.size(); ++n)
      diff = std::max(diff, std::abs(fine.f[n] - coarse.f[n]));
    coarse = std::move(fine);
    if (diff <= tol) break;
    if (level + 1 >= kMaxRefinements)
      throw QuadratureError("Fourier quadrature did not reach tolerance " + std::to_string(tol) +
                            " (last change " + std::to_string(diff) + ")");
  }
  FourierCoefficients c;
  c.K = K;
  c.provenance = Provenance::quadrature;
  c.a0 = coarse.a0;
  c.a.resize(coarse.f.size());
  c.b.resize(coarse.f.size());
  c.a[0] = c.b[0] = 0.0;
  for (std::size_t n = 1; n < coarse.f.size(); ++n) {
    c.a[n] = coarse.f[n].real();
    c.b[n] = coarse.f[n].imag();
  }
  std::vector<double> shifted_breaks;
  for (double b : breaks) shifted_breaks.push_back(reduce_period(b - 1.0));
  const auto all_breaks = merge_breaks(breaks, shifted_breaks);
  const double even_norm = 0.25 * quadrature_norm_sq([&](double x) { return g(x) + g(x + 1.0); },
                                                     all_breaks, max_len);
  const double odd_norm = 0.25 * quadrature_norm_sq([&](double x) { return g(x) - g(x + 1.0); },
                                                    all_breaks, max_len);
  fill_parity_masses(c, even_norm, odd_norm, c.tail);
  return c;
}

double default_hws_tolerance(const Signal& g) { return g.is_exact() ? 1e-9 : 1e-6; }

HwsType hws_classify(const Signal& g) { return hws_classify(g, default_hws_tolerance(g)); }

HwsType hws_classify(const Signal& g, double tol) {
  if (!(tol > 0.0)) throw UsageError("classification tolerance must be positive");
  std::vector<double> xs;
  constexpr int kSamples = 1000;
  for (int k = 0; k < kSamples; ++k) xs.push_back(-1.0 + (k + 0.5) / kSamples);
  for (double b : g.breakpoints()) xs.push_back(b < 0.0 ? b : b - 1.0);
  double odd = 0.0;
  double even = 0.0;
  for (double x : xs) {
    const double u = g(x);
    const double v = g(x + 1.0);
    odd = std::max(odd, std::abs(u + v));
    even = std::max(even, std::abs(u - v));
  }
  if (odd <= tol) return HwsType::odd;
  if (even <= tol) return HwsType::even;
  return HwsType::none;
}

HwsParts hws_split(const FourierCoefficients& c) {
  HwsParts p;
  p.K = c.K;
  p.a0 = c.a0;
  p.provenance = c.provenance;
  p.tail = c.tail;
  for (int k = 1; k <= c.K; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (k % 2 == 0) {
      p.even_a.push_back(c.a[i]);
      p.even_b.push_back(c.b[i]);
    } else {
      p.odd_a.push_back(c.a[i]);
      p.odd_b.push_back(c.b[i]);
    }
  }
  return p;
}

FourierCoefficients reassemble(const HwsParts& p) {
  FourierCoefficients c;
  c.K = p.K;
  c.a0 = p.a0;
  c.provenance = p.provenance;
  c.tail = p.tail;
  c.a.assign(static_cast<std::size_t>(p.K) + 1, 0.0);
  c.b.assign(static_cast<std::size_t>(p.K) + 1, 0.0);
  for (std::size_t k = 0; k < p.even_a.size(); ++k) {
    c.a[2 * (k + 1)] = p.even_a[k];
    c.b[2 * (k + 1)] = p.even_b[k];
  }
  for (std::size_t k = 0; k < p.odd_a.size(); ++k) {
    c.a[2 * k + 1] = p.odd_a[k];
    c.b[2 * k + 1] = p.odd_b[k];
  }
  return c;
}

SobolevDiagnostic sobolev_tail_diagnostic(const FourierCoefficients& c, double r) {
  if (!(r >= 0.0)) throw UsageError("Sobolev index must be nonnegative");
  SobolevDiagnostic d;
  d.r = r;
  d.partial_sums.resize(static_cast<std::size_t>(c.K) + 1);
  double s = c.a0 * c.a0;
  d.partial_sums[0] = s;
  for (int k = 1; k <= c.K; ++k) {
    s += std::pow(1.0 + static_cast<double>(k) * k, r) * c.energy(k);
    d.partial_sums[static_cast<std::size_t>(k)] = s;
  }
  std::vector<std::pair<double, double>> pts;
  bool any_increment = false;
  for (int j = 1; (1 << j) <= c.K; ++j) {
    const double inc = d.partial_sums[static_cast<std::size_t>(1 << j)] -
                       d.partial_sums[static_cast<std::size_t>(1 << (j - 1))];
    if (inc != 0.0) any_increment = true;
    if (inc > 0.0) pts.emplace_back(j, std::log2(inc));
  }
  if (pts.size() > 4) pts.erase(pts.begin(), pts.end() - 4);
  if (pts.size() < 2) {
    d.growth_exponent = any_increment ? 0.0 : -std::numeric_limits<double>::infinity();
    d.verdict = any_increment ? SobolevVerdict::inconclusive : SobolevVerdict::bounded;
    return d;
  }
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0.0, sxx = 0.0;
  for (const auto& [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  d.growth_exponent = sxy / sxx;
  if (d.growth_exponent < -0.2)
    d.verdict = SobolevVerdict::bounded;
  else if (d.growth_exponent > -0.05)
    d.verdict = SobolevVerdict::unbounded;
  else
    d.verdict = SobolevVerdict::inconclusive;
  return d;
}

double shifted_block_energy(const Signal& g, int n, double mu) {
  if (n < 1) throw UsageError("block frequency must be positive");
  const auto integral = g.fourier_integral(-mu, 1.0 - mu, static_cast<double>(n));
  return 2.0 * std::norm(integral);
}

}  // namespace nwidth
