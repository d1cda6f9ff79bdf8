// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <span>
#include <vector>

namespace nwidth {

/// A 2-periodic piecewise polynomial on [-1, 1].
///
/// Piece i lives on [breaks[i], breaks[i+1]] and stores monomial
/// coefficients in the local variable t = x - breaks[i]. Evaluating at a
/// breakpoint returns the midpoint of the one-sided limits.
class PiecewisePoly {
 public:
  PiecewisePoly(std::vector<double> breaks, std::vector<std::vector<double>> coeffs);

  static PiecewisePoly constant(double c);

  std::size_t pieces() const { return coeffs_.size(); }
  std::span<const double> breaks() const { return breaks_; }
  std::span<const double> piece(std::size_t i) const { return coeffs_[i]; }
  double width(std::size_t i) const { return breaks_[i + 1] - breaks_[i]; }
  int max_degree() const;

  double operator()(double x) const;
  double right_limit(double x) const;
  double left_limit(double x) const;
  /// Right limit of the j-th derivative.
  double derivative_right(double x, int order) const;
  double derivative_left(double x, int order) const;

  PiecewisePoly derivative() const;
  /// Cumulative integral from -1, valid on [-1, 1]. Its periodic extension
  /// is discontinuous at +-1 unless integral() vanishes.
  PiecewisePoly antiderivative() const;
  double integral() const;
  /// Integral over [a, b] for arbitrary real a <= b, periodic extension.
  double integral(double a, double b) const;

  /// x -> p(x + s).
  PiecewisePoly shifted(double s) const;
  PiecewisePoly scaled(double factor) const;
  PiecewisePoly operator+(const PiecewisePoly& other) const;
  PiecewisePoly operator-(const PiecewisePoly& other) const;
  /// Multiplies every piece by a polynomial given in the global variable x.
  PiecewisePoly times_global(std::span<const double> global_coeffs) const;

  /// Integral of p^2 over one period.
  double l2_norm_sq() const;

  /// Integral of p(x) e^{i pi v x} over one period.
  std::complex<double> fourier_integral(double v) const;
  /// Integral of p(x) e^{i pi v x} over [a, b], periodic extension, a <= b.
  std::complex<double> fourier_integral(double a, double b, double v) const;

  /// Jump of the j-th derivative at breaks[i] (right minus left limit);
  /// breaks[0] = -1 is compared with the left limit at +1.
  double jump(std::size_t i, int order) const;
  /// Sum over the period of |jump of the j-th derivative|.
  double total_jump(int order) const;

  /// Drops breakpoints across which the polynomial pieces coincide.
  PiecewisePoly simplified(double tol = 0.0) const;

 private:
  std::size_t locate(double reduced) const;
  PiecewisePoly combine(const PiecewisePoly& other, double sign) const;

  std::vector<double> breaks_;
  std::vector<std::vector<double>> coeffs_;
};

/// Maps x into [-1, 1) by removing multiples of the period 2.
double reduce_period(double x);

/// Sorted union of breakpoint lists, merging values closer than tol.
std::vector<double> merge_breaks(std::span<const double> a, std::span<const double> b,
                                 double tol = 1e-12);

}  // namespace nwidth
