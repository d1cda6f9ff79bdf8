// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "nwidth/fourier.hpp"

namespace nwidth {

enum class Parity { even, odd, merged };

std::string to_string(Parity p);

/// One frequency block: energy e = a^2 + b^2, eigenvalue e/4 with multiplicity 2.
struct SpectralBlock {
  int frequency = 0;
  double energy = 0.0;
  double eigenvalue() const { return 0.25 * energy; }
};

/// Eigenvalues beyond the stored blocks.
struct TailModel {
  enum class Kind { closed_form, truncated };
  Kind kind = Kind::truncated;
  /// Contribution of all omitted eigenvalues (with multiplicity) to delta_N^2.
  double width_sq = 0.0;
  /// Upper bound on any single omitted eigenvalue.
  double max_eigenvalue = 0.0;
};

struct EigenSpectrum {
  Parity parity = Parity::odd;
  bool has_constant = false;
  /// (int_0^1 g)^2, the eigenvalue of the constant mode.
  double lambda_const = 0.0;
  /// Ascending frequency.
  std::vector<SpectralBlock> blocks;
  TailModel tail;
  /// Smoothness order of the closed form, when tail.kind is closed_form.
  int closed_form_order = -1;

  /// lambda_const + 2 sum lambda_k + tail, the mean squared snapshot norm.
  double total() const;
};

/// Spectrum of the requested parity part. Merged keeps every frequency and
/// the constant mode.
EigenSpectrum spectrum(const HwsParts& parts, Parity parity);

/// Spectrum of g_m in closed form: lambda at block k is 4((2k-1) pi)^{-2(m+1)},
/// with K stored blocks and the remainder summed through the Hurwitz zeta function.
EigenSpectrum closed_form_spectrum(int m, int K);

struct SortedSpectrum {
  EigenSpectrum spectrum;
  /// order[i] indexes spectrum.blocks; descending energy, ties by frequency.
  std::vector<std::size_t> order;
  /// Flattened nonincreasing eigenvalues, each block twice, the constant once.
  std::vector<double> lambda;
  /// Frequency of each flattened entry (0 for the constant mode).
  std::vector<int> frequency;
  /// Prefix lengths that consist of whole blocks, ascending, starting at 0.
  std::vector<int> block_boundaries;
};

/// The constant mode is placed before the first block whose eigenvalue is
/// strictly smaller than lambda_const.
SortedSpectrum sort_spectrum(const EigenSpectrum& s);

struct WidthRow {
  int N = 0;
  double delta = 0.0;
  double d_lo = 0.0;
  double d_hi = 0.0;
  bool exact = false;
  std::string method;
};

struct WidthCurve {
  std::vector<WidthRow> rows;
  std::vector<double> deltas() const;
};

/// delta_N from the sorted tail; d_N = delta_N when the first N entries are
/// whole blocks, otherwise d_N is bracketed by delta_N and the width at the
/// previous whole-block prefix. Rejects merged spectra.
WidthRow exact_width(const SortedSpectrum& s, int N);
WidthCurve width_curve(const SortedSpectrum& s, int n_max);

/// Spectrum of a signal: closed form for the g_m family, otherwise computed
/// coefficients split according to hws_classify (merged for non-HWS signals).
SortedSpectrum signal_spectrum(const Signal& g, int K);

/// sqrt((psi1(floor(N/2) + 1/2) + psi1(floor((N+1)/2) + 1/2)) / pi^2).
double jump_width_trigamma(int N);

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// lower = 2 (2m+1)^{-1/2} pi^{-(m+1)} (N+1)^{-(2m+1)/2},
/// upper = sqrt8 pi^{-(m+1)} N^{-(2m+1)/2}.
Bounds gm_bounds(int m, int N);

/// sqrt(2 sum_{k>N} lambda_k) over a merged sorted spectrum, tail included.
double nonhws_bound(const SortedSpectrum& merged, int N);
/// Bound on d_{2N}: sqrt(2 sum of the block eigenvalues after the first N
/// blocks), the constant mode counting as a block.
double nonhws_block_bound(const SortedSpectrum& merged, int N);

/// Base and prefactor of the exponential decay bound C K d^{-N}.
inline const double kExpDecayBase = std::numbers::pi * std::numbers::e / 2.0;
inline const double kExpDecayFactor = std::sqrt(32.0 * std::numbers::e / std::numbers::pi);

struct DecayBound {
  enum class Kind { polynomial, exponential };
  Kind kind = Kind::polynomial;
  double rate = 0.0;      // r, polynomial only
  double constant = 0.0;  // c_r or C
};

DecayBound polynomial_decay(double r, double c_r);
DecayBound exponential_decay(double C);
double decay_bound(const DecayBound& b, int N);
std::vector<double> decay_bound_curve(const DecayBound& b, int n_max);

}  // namespace nwidth
