// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "nwidth/signals.hpp"

namespace nwidth {

enum class Provenance { analytic, quadrature };

std::string to_string(Provenance p);

/// What is known about the frequencies above the truncation K.
struct TailEstimate {
  /// Energy sum_{n>K} e_n restricted to odd / even n (Parseval deficit).
  double odd_mass = 0.0;
  double even_mass = 0.0;
  /// J_j = sum of |jumps| of the j-th derivative of the polynomial part.
  /// Empty when no such envelope is available.
  std::vector<double> jump_sums;

  bool has_envelope() const { return !jump_sums.empty(); }
  /// Upper bound on e_n from repeated integration by parts:
  /// sqrt(e_n) <= sum_j J_j / (n pi)^{j+1}. Infinity without an envelope.
  double energy_bound(int n) const;
};

/// Coefficients in the orthonormal basis {1/sqrt2, cos(k pi x), sin(k pi x)}
/// of L2(-1, 1).
struct FourierCoefficients {
  int K = 0;
  double a0 = 0.0;
  /// a[k], b[k] for k = 0..K; a[0] = b[0] = 0 (the mean lives in a0).
  std::vector<double> a;
  std::vector<double> b;
  Provenance provenance = Provenance::analytic;
  TailEstimate tail;

  /// e_k = a_k^2 + b_k^2 for k >= 1 and a0^2 for k = 0.
  double energy(int k) const;
  /// a0^2 + sum_{k=1..n} e_k.
  double parseval_sum(int n) const;
};

/// Closed-form coefficients for exact signals, adaptive quadrature otherwise.
/// K must cover every trigonometric term of the signal.
FourierCoefficients coefficients(const Signal& g, int K);

/// Adaptive composite Gauss-Legendre coefficients, split at breakpoints.
/// Panels are doubled until two successive refinements agree to tol.
FourierCoefficients quadrature_coefficients(const Signal& g, int K, double tol = 1e-12);

enum class HwsType { even, odd, none };

std::string to_string(HwsType t);

/// 1e-9 for exact signals, 1e-6 when a quadrature-only part is present.
double default_hws_tolerance(const Signal& g);

/// Checks g(x) = -g(x+1) (odd) and g(x) = g(x+1) (even) on 1000 midpoint
/// samples of (-1, 0) plus all breakpoints mapped into [-1, 0).
HwsType hws_classify(const Signal& g, double tol);
HwsType hws_classify(const Signal& g);

/// Coefficients split by the parity of their frequency.
struct HwsParts {
  int K = 0;
  double a0 = 0.0;
  /// Index k-1 holds frequency 2k.
  std::vector<double> even_a;
  std::vector<double> even_b;
  /// Index k-1 holds frequency 2k-1.
  std::vector<double> odd_a;
  std::vector<double> odd_b;
  Provenance provenance = Provenance::analytic;
  TailEstimate tail;
};

HwsParts hws_split(const FourierCoefficients& c);
FourierCoefficients reassemble(const HwsParts& parts);

enum class SobolevVerdict { bounded, unbounded, inconclusive };

std::string to_string(SobolevVerdict v);

struct SobolevDiagnostic {
  double r = 0.0;
  /// partial_sums[n] = a0^2 + sum_{k=1..n} (1+k^2)^r e_k, n = 0..K.
  std::vector<double> partial_sums;
  /// Growth exponent alpha of the dyadic increments S_{2^j} - S_{2^{j-1}} ~ 2^{alpha j}.
  double growth_exponent = 0.0;
  SobolevVerdict verdict = SobolevVerdict::inconclusive;
};

/// Partial sums of the weighted sequence norm with a dyadic growth estimate.
/// alpha < -0.2 is reported as bounded, alpha > -0.05 as unbounded.
SobolevDiagnostic sobolev_tail_diagnostic(const FourierCoefficients& c, double r);

/// ||Q_n u_mu||^2 on (0, 1) for u_mu = g(. - mu), where Q_n projects onto
/// span{sqrt2 cos(n pi x), sqrt2 sin(n pi x)}. Exact signals only.
double shifted_block_energy(const Signal& g, int n, double mu);

}  // namespace nwidth
