// SPDX-License-Identifier: Apache-2.0
#include "nwidth/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "nwidth/errors.hpp"
#include "nwidth/special_functions.hpp"

namespace nwidth {

std::string to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    default: return "merged";
  }
}

double EigenSpectrum::total() const {
  double s = tail.width_sq;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) s += 2.0 * it->eigenvalue();
  return s + (has_constant ? lambda_const : 0.0);
}

std::vector<double> WidthCurve::deltas() const {
  std::vector<double> d;
  d.reserve(rows.size());
  for (const auto& r : rows) d.push_back(r.delta);
  return d;
}

EigenSpectrum spectrum(const HwsParts& parts, Parity parity) {
  EigenSpectrum s;
  s.parity = parity;
  s.tail.kind = TailModel::Kind::truncated;
  const bool want_even = parity != Parity::odd;
  const bool want_odd = parity != Parity::even;
  if (want_even) {
    s.has_constant = true;
    s.lambda_const = 0.5 * parts.a0 * parts.a0;
  }
  for (int n = 1; n <= parts.K; ++n) {
    const bool even = n % 2 == 0;
    if ((even && !want_even) || (!even && !want_odd)) continue;
    const auto i = static_cast<std::size_t>(even ? n / 2 - 1 : (n - 1) / 2);
    const double a = even ? parts.even_a[i] : parts.odd_a[i];
    const double b = even ? parts.even_b[i] : parts.odd_b[i];
    s.blocks.push_back({n, a * a + b * b});
  }
  double mass = 0.0;
  double envelope = std::numeric_limits<double>::infinity();
  if (want_odd) {
    mass += parts.tail.odd_mass;
    const int next = parts.K % 2 == 0 ? parts.K + 1 : parts.K + 2;
    envelope = std::min(envelope, parts.tail.energy_bound(next));
  }
  if (want_even) {
    mass += parts.tail.even_mass;
    const int next = parts.K % 2 == 0 ? parts.K + 2 : parts.K + 1;
    envelope = std::min(envelope, parts.tail.energy_bound(next));
  }
  if (want_even && want_odd) envelope = parts.tail.energy_bound(parts.K + 1);
  s.tail.width_sq = 0.5 * mass;
  s.tail.max_eigenvalue = 0.25 * std::min(mass, envelope);
  return s;
}

EigenSpectrum closed_form_spectrum(int m, int K) {
  if (m < 0) throw UsageError("smoothness order must be nonnegative");
  if (K < 1) throw UsageError("number of stored blocks must be positive");
  EigenSpectrum s;
  s.parity = Parity::odd;
  s.closed_form_order = m;
  s.tail.kind = TailModel::Kind::closed_form;
  const double p = 2.0 * (m + 1);
  for (int k = 1; k <= K; ++k) {
    const double n = 2.0 * k - 1.0;
    s.blocks.push_back({2 * k - 1, 16.0 * std::pow(n * std::numbers::pi, -p)});
  }
  // sum_{k>K} 2 lambda_k = 8 pi^{-p} sum_{k>K} (2k-1)^{-p} = 8 (2 pi)^{-p} zeta(p, K + 1/2)
  s.tail.width_sq = 8.0 * std::pow(2.0 * std::numbers::pi, -p) * hurwitz_zeta(p, K + 0.5);
  s.tail.max_eigenvalue = 4.0 * std::pow((2.0 * K + 1.0) * std::numbers::pi, -p);
  return s;
}

SortedSpectrum sort_spectrum(const EigenSpectrum& s) {
  SortedSpectrum out;
  out.spectrum = s;
  out.order.resize(s.blocks.size());
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::stable_sort(out.order.begin(), out.order.end(), [&](std::size_t i, std::size_t j) {
    if (s.blocks[i].energy != s.blocks[j].energy) return s.blocks[i].energy > s.blocks[j].energy;
    return s.blocks[i].frequency < s.blocks[j].frequency;
  });
  out.block_boundaries.push_back(0);
  bool const_placed = !s.has_constant;
  auto place_const = [&] {
    out.lambda.push_back(s.lambda_const);
    out.frequency.push_back(0);
    out.block_boundaries.push_back(static_cast<int>(out.lambda.size()));
    const_placed = true;
  };
  for (std::size_t i : out.order) {
    const double lam = s.blocks[i].eigenvalue();
    if (!const_placed && lam < s.lambda_const) place_const();
    out.lambda.push_back(lam);
    out.lambda.push_back(lam);
    out.frequency.push_back(s.blocks[i].frequency);
    out.frequency.push_back(s.blocks[i].frequency);
    out.block_boundaries.push_back(static_cast<int>(out.lambda.size()));
  }
  if (!const_placed) place_const();
  return out;
}

namespace {

std::string tail_method(const SortedSpectrum& s) {
  return s.spectrum.tail.kind == TailModel::Kind::closed_form ? "closed-form" : "truncated";
}

/// suffix[i] = sum_{j>=i} lambda_j + tail, summed from the smallest end.
std::vector<double> suffix_sums(const SortedSpectrum& s) {
  std::vector<double> suffix(s.lambda.size() + 1);
  double acc = s.spectrum.tail.width_sq;
  suffix.back() = acc;
  for (std::size_t i = s.lambda.size(); i-- > 0;) {
    acc += s.lambda[i];
    suffix[i] = acc;
  }
  return suffix;
}

WidthRow row_from(const SortedSpectrum& s, const std::vector<double>& suffix, int N) {
  if (N < 0) throw UsageError("width index must be nonnegative");
  if (s.spectrum.parity == Parity::merged)
    throw DomainError("exact widths need a half-wave symmetric spectrum; use nonhws_bound");
  if (static_cast<std::size_t>(N) > s.lambda.size())
    throw DomainError("width index " + std::to_string(N) +
                      " exceeds the stored spectrum; raise the truncation frequency");
  WidthRow r;
  r.N = N;
  r.method = tail_method(s);
  r.delta = std::sqrt(std::max(0.0, suffix[static_cast<std::size_t>(N)]));
  bool ordered = true;
  if (N > 0 && s.spectrum.tail.kind == TailModel::Kind::truncated)
    ordered = s.lambda[static_cast<std::size_t>(N) - 1] >= s.spectrum.tail.max_eigenvalue;
  const auto& bb = s.block_boundaries;
  auto it = std::upper_bound(bb.begin(), bb.end(), N);
  const int prev = *(it - 1);
  const bool matched = prev == N;
  r.d_lo = r.delta;
  r.d_hi = matched ? r.delta : std::sqrt(std::max(0.0, suffix[static_cast<std::size_t>(prev)]));
  r.exact = matched && ordered;
  if (!ordered) r.method += "-unordered";
  return r;
}

}  // namespace

WidthRow exact_width(const SortedSpectrum& s, int N) { return row_from(s, suffix_sums(s), N); }

WidthCurve width_curve(const SortedSpectrum& s, int n_max) {
  const auto suffix = suffix_sums(s);
  WidthCurve c;
  for (int N = 0; N <= n_max; ++N) c.rows.push_back(row_from(s, suffix, N));
  return c;
}

SortedSpectrum signal_spectrum(const Signal& g, int K) {
  const auto kind = g.info().kind;
  if (kind == SignalKind::jump || kind == SignalKind::antiderivative)
    return sort_spectrum(closed_form_spectrum(g.info().order, K));
  const auto parts = hws_split(coefficients(g, K));
  Parity parity = Parity::merged;
  switch (hws_classify(g)) {
    case HwsType::odd: parity = Parity::odd; break;
    case HwsType::even: parity = Parity::even; break;
    default: break;
  }
  return sort_spectrum(spectrum(parts, parity));
}

double jump_width_trigamma(int N) {
  if (N < 0) throw UsageError("width index must be nonnegative");
  const double a = trigamma(N / 2 + 0.5);
  const double b = trigamma((N + 1) / 2 + 0.5);
  return std::sqrt((a + b) / (std::numbers::pi * std::numbers::pi));
}

Bounds gm_bounds(int m, int N) {
  if (m < 0) throw UsageError("smoothness order must be nonnegative");
  if (N < 1) throw UsageError("gm_bounds needs N >= 1");
  const double e = 0.5 * (2.0 * m + 1.0);
  const double pim = std::pow(std::numbers::pi, -(m + 1.0));
  Bounds b;
  b.lower = 2.0 / std::sqrt(2.0 * m + 1.0) * pim * std::pow(N + 1.0, -e);
  b.upper = std::sqrt(8.0) * pim * std::pow(static_cast<double>(N), -e);
  return b;
}

double nonhws_bound(const SortedSpectrum& merged, int N) {
  if (N < 0) throw UsageError("width index must be nonnegative");
  double tail = merged.spectrum.tail.width_sq;
  for (std::size_t i = merged.lambda.size(); i-- > static_cast<std::size_t>(N);)
    tail += merged.lambda[i];
  if (static_cast<std::size_t>(N) > merged.lambda.size())
    throw DomainError("width index exceeds the stored spectrum; raise the truncation frequency");
  return std::sqrt(2.0 * tail);
}

double nonhws_block_bound(const SortedSpectrum& merged, int N) {
  if (N < 0) throw UsageError("block count must be nonnegative");
  const auto& bb = merged.block_boundaries;
  if (static_cast<std::size_t>(N) >= bb.size())
    throw DomainError("block count exceeds the stored spectrum; raise the truncation frequency");
  // Blocks enter once here, the constant mode with its own eigenvalue.
  double tail = 0.5 * merged.spectrum.tail.width_sq;
  for (std::size_t k = bb.size() - 1; k-- > static_cast<std::size_t>(N);)
    tail += merged.lambda[static_cast<std::size_t>(bb[k])];
  return std::sqrt(2.0 * tail);
}

DecayBound polynomial_decay(double r, double c_r) {
  if (!(r > 0.0)) throw UsageError("decay rate must be positive");
  if (!(c_r >= 0.0)) throw UsageError("decay constant must be nonnegative");
  return {DecayBound::Kind::polynomial, r, c_r};
}

DecayBound exponential_decay(double C) {
  if (!(C >= 0.0)) throw UsageError("decay constant must be nonnegative");
  return {DecayBound::Kind::exponential, 0.0, C};
}

double decay_bound(const DecayBound& b, int N) {
  if (N < 0) throw UsageError("width index must be nonnegative");
  if (b.kind == DecayBound::Kind::exponential)
    return b.constant * kExpDecayFactor * std::pow(kExpDecayBase, -static_cast<double>(N));
  if (N == 0) return b.constant == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return b.constant * std::pow(static_cast<double>(N), -b.rate);
}

std::vector<double> decay_bound_curve(const DecayBound& b, int n_max) {
  std::vector<double> out;
  for (int N = 0; N <= n_max; ++N) out.push_back(decay_bound(b, N));
  return out;
}

}  // namespace nwidth
