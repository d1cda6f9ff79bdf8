// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nwidth/polynomial.hpp"

namespace nwidth {

enum class SignalKind {
  jump,
  antiderivative,
  ramp_hws,
  sigmoid_hws,
  random_steps,
  convolved,
  custom,
};

/// Constructor parameters, kept for reporting. Unused fields stay zero.
struct SignalInfo {
  SignalKind kind = SignalKind::custom;
  int order = 0;  // m for antiderivative and ramp kinds
  double eps = 0.0;
  int depth = 0;
  int steps = 0;
  std::uint64_t seed = 0;
  double width = 0.0;
  int passes = 0;
  std::string label;
};

/// a cos(n pi x) + b sin(n pi x), n >= 1.
struct TrigTerm {
  int frequency = 1;
  double cos_amp = 0.0;
  double sin_amp = 0.0;
};

/// A 2-periodic real function on Omega_P = (-1, 1).
///
/// The value is the sum of an exact piecewise polynomial, finitely many
/// trigonometric terms and an optional continuous "smooth" part that is only
/// available pointwise (used for the sigmoid ramp). At jumps of the
/// polynomial part the midpoint of the one-sided limits is returned.
class Signal {
 public:
  using Smooth = std::function<double(double)>;

  explicit Signal(PiecewisePoly poly, SignalInfo info = {});
  Signal(PiecewisePoly poly, std::vector<TrigTerm> trig, SignalInfo info);
  /// smooth is evaluated on the reduced argument in [-1, 1); kinks lists the
  /// points where it is not analytic so quadrature can split there.
  Signal(Smooth smooth, std::vector<double> kinks, SignalInfo info);

  static Signal constant(double c);
  static Signal cosine(int n, double amp = 1.0);
  static Signal sine(int n, double amp = 1.0);

  double operator()(double x) const;
  double right_limit(double x) const;

  const PiecewisePoly& poly() const { return poly_; }
  std::span<const TrigTerm> trig() const { return trig_; }
  bool has_smooth_part() const { return static_cast<bool>(smooth_); }
  /// Everything but the smooth part is known in closed form.
  bool is_exact() const { return !has_smooth_part(); }
  double smooth_value(double reduced_x) const;

  /// Integral of g(x) e^{i pi v x} over [a, b]; exact signals only.
  std::complex<double> fourier_integral(double a, double b, double v) const;

  /// Breakpoints of the polynomial part merged with the smooth-part kinks.
  std::vector<double> breakpoints() const;

  const SignalInfo& info() const { return info_; }
  std::string label() const;

  Signal operator+(const Signal& other) const;
  Signal scaled(double factor) const;

 private:
  PiecewisePoly poly_;
  std::vector<TrigTerm> trig_;
  Smooth smooth_;
  std::vector<double> kinks_;
  SignalInfo info_;
};

/// sgn(x) on (-1, 1), value 0 at the jumps.
Signal jump_signal();

/// g_0 = sgn and g_m(x) = int_0^x g_{m-1} - 1/2 int_0^1 g_{m-1}.
Signal antiderivative_signal(int m);

/// Smoothstep coefficients P_m(s) in the monomial basis, m = 0..5.
std::vector<double> smoothstep_coefficients(int m);

/// A ramp q on (-1/2, 1/2) rising from 0 to 1 across [-w/2, w/2].
///
/// Polynomial ramps use q(x) = P_m(x/eps + 1/2) clamped to [0, 1]. The
/// sigmoid ramp iterates Q <- sin(pi/2 Q) depth times starting from a
/// clamped line of half width eps (pi/2)^depth / 2, and q = (Q + 1)/2.
class Ramp {
 public:
  static constexpr int kSigmoid = -1;

  Ramp(int order, double eps, int depth = 0);

  int order() const { return order_; }
  bool is_sigmoid() const { return order_ == kSigmoid; }
  double eps() const { return eps_; }
  int depth() const { return depth_; }
  /// Full width of the transition region.
  double support_width() const;

  double operator()(double x) const;
  /// One-sided derivatives of q.
  double slope_left(double x) const;
  double slope_right(double x) const;

 private:
  double sigmoid_value(double x, double* slope) const;

  int order_;
  double eps_;
  int depth_;
  std::optional<PiecewisePoly> poly_;
};

/// Polynomial ramp, m in 0..5, 0 < eps < 1.
Ramp ramp_signal(int m, double eps);
/// Sigmoid ramp; requires eps (pi/2)^depth < 1.
Ramp sigmoid_ramp(double eps, int depth = 5);

/// Odd half-wave symmetric signal built from a ramp:
/// 1 - 2q(x+1) on (-1, -1/2], 2q(x) - 1 on (-1/2, 1/2], 1 - 2q(x-1) on (1/2, 1).
Signal hws_assemble(const Ramp& q);

/// n equal plateaus on (-1, 1) with heights uniform on [0, 1) drawn from a
/// 64-bit Mersenne twister seeded with seed.
Signal random_steps(int n, std::uint64_t seed);

/// Periodic convolution with the normalized box of the given width, applied
/// passes times. Requires an exact signal.
Signal box_convolve(const Signal& g, double width, int passes);

/// Bivariate datum G(x, s) = sum_j A_j(x) B_j(s), 2-periodic in both x and
/// s = 2y - 1, so y in (0, 1) maps onto (-1, 1).
struct TensorDatum {
  std::vector<PiecewisePoly> x_factors;
  std::vector<PiecewisePoly> y_factors;

  double operator()(double x, double y) const;
  /// Right limits in both coordinates.
  double sample(double x, double y) const;
};

/// bx x by blocks of random heights in [0, 1): block (i, j) covers the i-th
/// of bx plateaus in x over (-1, 1) and the j-th of by plateaus in y over (0, 1).
TensorDatum random_blocks_2d(int bx, int by, std::uint64_t seed);

/// Box convolution applied to every factor, with the y width measured in y.
TensorDatum box_convolve(const TensorDatum& g, double width_x, double width_y, int passes);

/// u_mu(x_i, y_l) = G(x_i - mu, y_l) on midpoint grids, flattened with x fastest.
Eigen::VectorXd transport2d_field(const TensorDatum& g, double mu, int nx, int ny);

}  // namespace nwidth
