// SPDX-License-Identifier: Apache-2.0
#include "nwidth/signals.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "nwidth/errors.hpp"
#include "numerics.hpp"

namespace nwidth {

Signal::Signal(PiecewisePoly poly, SignalInfo info) : poly_(std::move(poly)), info_(std::move(info)) {}

Signal::Signal(PiecewisePoly poly, std::vector<TrigTerm> trig, SignalInfo info)
    : poly_(std::move(poly)), trig_(std::move(trig)), info_(std::move(info)) {
  for (const auto& t : trig_) {
    if (t.frequency < 1) throw UsageError("trigonometric term frequency must be positive");
  }
}

Signal::Signal(Smooth smooth, std::vector<double> kinks, SignalInfo info)
    : poly_(PiecewisePoly::constant(0.0)),
      smooth_(std::move(smooth)),
      kinks_(std::move(kinks)),
      info_(std::move(info)) {}

Signal Signal::constant(double c) {
  SignalInfo info;
  std::ostringstream os;
  os << "const:" << c;
  info.label = os.str();
  return Signal(PiecewisePoly::constant(c), info);
}

Signal Signal::cosine(int n, double amp) {
  SignalInfo info;
  info.label = "cos:" + std::to_string(n);
  return Signal(PiecewisePoly::constant(0.0), {TrigTerm{n, amp, 0.0}}, info);
}

Signal Signal::sine(int n, double amp) {
  SignalInfo info;
  info.label = "sin:" + std::to_string(n);
  return Signal(PiecewisePoly::constant(0.0), {TrigTerm{n, 0.0, amp}}, info);
}

namespace {
double trig_value(std::span<const TrigTerm> trig, double r) {
  double s = 0.0;
  for (const auto& t : trig) {
    const auto e = detail::unit_phase(static_cast<long double>(t.frequency) * r);
    s += t.cos_amp * e.real() + t.sin_amp * e.imag();
  }
  return s;
}
}  // namespace

double Signal::smooth_value(double r) const { return smooth_ ? smooth_(r) : 0.0; }

double Signal::operator()(double x) const {
  const double r = reduce_period(x);
  return poly_(r) + trig_value(trig_, r) + smooth_value(r);
}

double Signal::right_limit(double x) const {
  const double r = reduce_period(x);
  return poly_.right_limit(r) + trig_value(trig_, r) + smooth_value(r);
}

std::complex<double> Signal::fourier_integral(double a, double b, double v) const {
  if (!is_exact()) throw DomainError("windowed Fourier integral needs an exact signal");
  std::complex<double> acc = poly_.fourier_integral(a, b, v);
  // int_a^b e^{i pi w y} dy
  const auto exp_integral = [&](double w) -> std::complex<double> {
    if (w == 0.0) return {b - a, 0.0};
    const auto ea = detail::unit_phase(static_cast<long double>(w) * a);
    const auto eb = detail::unit_phase(static_cast<long double>(w) * b);
    return (eb - ea) / std::complex<double>(0.0, std::numbers::pi * w);
  };
  for (const auto& t : trig_) {
    const double n = t.frequency;
    const auto plus = exp_integral(v + n);
    const auto minus = exp_integral(v - n);
    // cos = (e^{+} + e^{-})/2, sin = (e^{+} - e^{-})/(2i)
    acc += t.cos_amp * 0.5 * (plus + minus);
    acc += t.sin_amp * (plus - minus) / std::complex<double>(0.0, 2.0);
  }
  return acc;
}

std::vector<double> Signal::breakpoints() const { return merge_breaks(poly_.breaks(), kinks_); }

std::string Signal::label() const {
  if (!info_.label.empty()) return info_.label;
  return "custom";
}

Signal Signal::operator+(const Signal& other) const {
  auto trig = trig_;
  trig.insert(trig.end(), other.trig_.begin(), other.trig_.end());
  SignalInfo info;
  info.label = label() + "+" + other.label();
  Signal out(poly_ + other.poly_, std::move(trig), info);
  if (smooth_ || other.smooth_) {
    auto a = smooth_;
    auto b = other.smooth_;
    out.smooth_ = [a, b](double r) { return (a ? a(r) : 0.0) + (b ? b(r) : 0.0); };
    out.kinks_ = merge_breaks(kinks_, other.kinks_);
  }
  return out;
}

Signal Signal::scaled(double factor) const {
  Signal out = *this;
  out.poly_ = poly_.scaled(factor);
  for (auto& t : out.trig_) {
    t.cos_amp *= factor;
    t.sin_amp *= factor;
  }
  if (smooth_) {
    auto a = smooth_;
    out.smooth_ = [a, factor](double r) { return factor * a(r); };
  }
  return out;
}

Signal jump_signal() {
  SignalInfo info;
  info.kind = SignalKind::jump;
  info.label = "jump";
  return Signal(PiecewisePoly({-1.0, 0.0, 1.0}, {{-1.0}, {1.0}}), info);
}

Signal antiderivative_signal(int m) {
  if (m < 0) throw UsageError("antiderivative order must be nonnegative");
  PiecewisePoly g({-1.0, 0.0, 1.0}, {{-1.0}, {1.0}});
  for (int k = 1; k <= m; ++k) {
    PiecewisePoly a = g.antiderivative();
    // a is continuous, so a(0) and a(1) are unambiguous.
    const double shift = 0.5 * (a(0.0) + a.left_limit(1.0));
    g = a - PiecewisePoly::constant(shift);
  }
  SignalInfo info;
  info.kind = m == 0 ? SignalKind::jump : SignalKind::antiderivative;
  info.order = m;
  info.label = m == 0 ? "jump" : "gm:" + std::to_string(m);
  return Signal(std::move(g), info);
}

std::vector<double> smoothstep_coefficients(int m) {
  switch (m) {
    case 0: return {0.0, 1.0};
    case 1: return {0.0, 0.0, 3.0, -2.0};
    case 2: return {0.0, 0.0, 0.0, 10.0, -15.0, 6.0};
    case 3: return {0.0, 0.0, 0.0, 0.0, 35.0, -84.0, 70.0, -20.0};
    case 4: return {0.0, 0.0, 0.0, 0.0, 0.0, 126.0, -420.0, 540.0, -315.0, 70.0};
    case 5:
      return {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 462.0, -1980.0, 3465.0, -3080.0, 1386.0, -252.0};
    default: throw UsageError("ramp order must be in 0..5");
  }
}

namespace {
/// Coefficients in t of P(s0 + t/eps).
std::vector<double> ramp_in_t(int m, double s0, double eps) {
  auto c = detail::taylor_shift(smoothstep_coefficients(m), s0);
  double scale = 1.0;
  for (double& v : c) {
    v *= scale;
    scale /= eps;
  }
  return c;
}

std::vector<double> affine(std::vector<double> c, double a, double b) {
  for (double& v : c) v *= a;
  c[0] += b;
  return c;
}

constexpr double kHalfPi = std::numbers::pi / 2.0;
}  // namespace

Ramp::Ramp(int order, double eps, int depth) : order_(order), eps_(eps), depth_(depth) {
  if (!(eps > 0.0)) throw UsageError("ramp width must be positive");
  if (order == kSigmoid) {
    if (depth < 0) throw UsageError("sigmoid depth must be nonnegative");
    if (!(support_width() < 1.0))
      throw UsageError("sigmoid ramp does not fit: eps (pi/2)^depth must be below 1");
    return;
  }
  if (order < 0 || order > 5) throw UsageError("ramp order must be in 0..5");
  if (!(eps < 1.0)) throw UsageError("ramp width must be below 1");
  poly_.emplace(std::vector<double>{-1.0, -0.5 * eps, 0.5 * eps, 1.0},
                std::vector<std::vector<double>>{{0.0}, ramp_in_t(order, 0.0, eps), {1.0}});
}

double Ramp::support_width() const {
  if (order_ == kSigmoid) return eps_ * std::pow(kHalfPi, depth_);
  return eps_;
}

double Ramp::sigmoid_value(double x, double* slope) const {
  const double half = 0.5 * support_width();
  double q = x / half;
  double d = 1.0 / half;
  if (q >= 1.0) {
    q = 1.0;
    d = 0.0;
  } else if (q <= -1.0) {
    q = -1.0;
    d = 0.0;
  }
  for (int k = 0; k < depth_; ++k) {
    d *= kHalfPi * std::cos(kHalfPi * q);
    q = std::sin(kHalfPi * q);
  }
  if (slope) *slope = 0.5 * d;
  return 0.5 * (q + 1.0);
}

double Ramp::operator()(double x) const {
  if (poly_) return (*poly_)(std::clamp(x, -0.999, 0.999));
  return sigmoid_value(x, nullptr);
}

double Ramp::slope_left(double x) const {
  if (poly_) return poly_->derivative_left(std::clamp(x, -0.999, 0.999), 1);
  double d = 0.0;
  const double half = 0.5 * support_width();
  sigmoid_value(x == half ? std::nextafter(x, 0.0) : x, &d);
  return d;
}

double Ramp::slope_right(double x) const {
  if (poly_) return poly_->derivative_right(std::clamp(x, -0.999, 0.999), 1);
  double d = 0.0;
  const double half = 0.5 * support_width();
  sigmoid_value(x == -half ? std::nextafter(x, 0.0) : x, &d);
  return d;
}

Ramp ramp_signal(int m, double eps) {
  if (m < 0 || m > 5) throw UsageError("ramp order must be in 0..5");
  return Ramp(m, eps);
}

Ramp sigmoid_ramp(double eps, int depth) { return Ramp(Ramp::kSigmoid, eps, depth); }

Signal hws_assemble(const Ramp& q) {
  SignalInfo info;
  info.eps = q.eps();
  if (q.is_sigmoid()) {
    info.kind = SignalKind::sigmoid_hws;
    info.depth = q.depth();
    std::ostringstream os;
    os << "sigmoid:" << q.eps() << ":" << q.depth();
    info.label = os.str();
    const double h = 0.5 * q.support_width();
    auto f = [q](double r) {
      if (r <= -0.5) return 1.0 - 2.0 * q(r + 1.0);
      if (r <= 0.5) return 2.0 * q(r) - 1.0;
      return 1.0 - 2.0 * q(r - 1.0);
    };
    return Signal(f, {-1.0 + h, -h, h, 1.0 - h}, info);
  }
  const int m = q.order();
  const double e = q.eps();
  const double h = 0.5 * e;
  info.kind = SignalKind::ramp_hws;
  info.order = m;
  std::ostringstream os;
  os << "ramp:" << m << ":" << e;
  info.label = os.str();
  PiecewisePoly g({-1.0, -1.0 + h, -h, h, 1.0 - h, 1.0},
                  {affine(ramp_in_t(m, 0.5, e), -2.0, 1.0),
                   {-1.0},
                   affine(ramp_in_t(m, 0.0, e), 2.0, -1.0),
                   {1.0},
                   affine(ramp_in_t(m, 0.0, e), -2.0, 1.0)});
  return Signal(std::move(g), info);
}

namespace {
std::vector<double> uniform_heights(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> h(n);
  for (auto& v : h) v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return h;
}

PiecewisePoly plateaus(std::span<const double> heights) {
  const std::size_t n = heights.size();
  std::vector<double> breaks(n + 1);
  for (std::size_t i = 0; i <= n; ++i) breaks[i] = -1.0 + 2.0 * static_cast<double>(i) / n;
  breaks.back() = 1.0;
  std::vector<std::vector<double>> c;
  for (double v : heights) c.push_back({v});
  return PiecewisePoly(std::move(breaks), std::move(c));
}

PiecewisePoly convolve_once(const PiecewisePoly& p, double w) {
  const double mean = 0.5 * p.integral();
  const PiecewisePoly zero_mean = p - PiecewisePoly::constant(mean);
  const PiecewisePoly a = zero_mean.antiderivative();
  return (a.shifted(0.5 * w) - a.shifted(-0.5 * w)).scaled(1.0 / w) + PiecewisePoly::constant(mean);
}

void check_box(double width, int passes) {
  if (!(width > 0.0) || !(width < 2.0)) throw UsageError("box width must lie in (0, 2)");
  if (passes < 0) throw UsageError("number of convolution passes must be nonnegative");
}
}  // namespace

Signal random_steps(int n, std::uint64_t seed) {
  if (n < 1) throw UsageError("number of steps must be positive");
  SignalInfo info;
  info.kind = SignalKind::random_steps;
  info.steps = n;
  info.seed = seed;
  info.label = "steps:" + std::to_string(n) + ":" + std::to_string(seed);
  return Signal(plateaus(uniform_heights(static_cast<std::size_t>(n), seed)), info);
}

Signal box_convolve(const Signal& g, double width, int passes) {
  check_box(width, passes);
  if (!g.is_exact()) throw UsageError("box convolution needs an exactly representable signal");
  PiecewisePoly p = g.poly();
  std::vector<TrigTerm> trig(g.trig().begin(), g.trig().end());
  for (int k = 0; k < passes; ++k) {
    p = convolve_once(p, width);
    for (auto& t : trig) {
      const double arg = std::numbers::pi * t.frequency * 0.5 * width;
      const double sinc = std::sin(arg) / arg;
      t.cos_amp *= sinc;
      t.sin_amp *= sinc;
    }
  }
  SignalInfo info = g.info();
  info.kind = SignalKind::convolved;
  info.width = width;
  info.passes = passes;
  std::ostringstream os;
  os << g.label() << ":conv:" << width << ":" << passes;
  info.label = os.str();
  return Signal(std::move(p), std::move(trig), info);
}

double TensorDatum::operator()(double x, double y) const {
  const double s = 2.0 * y - 1.0;
  double v = 0.0;
  for (std::size_t j = 0; j < x_factors.size(); ++j) v += x_factors[j](x) * y_factors[j](s);
  return v;
}

double TensorDatum::sample(double x, double y) const {
  const double s = 2.0 * y - 1.0;
  double v = 0.0;
  for (std::size_t j = 0; j < x_factors.size(); ++j)
    v += x_factors[j].right_limit(x) * y_factors[j].right_limit(s);
  return v;
}

TensorDatum random_blocks_2d(int bx, int by, std::uint64_t seed) {
  if (bx < 1 || by < 1) throw UsageError("block counts must be positive");
  const auto heights =
      uniform_heights(static_cast<std::size_t>(bx) * static_cast<std::size_t>(by), seed);
  TensorDatum g;
  for (int j = 0; j < by; ++j) {
    const auto row = std::span<const double>(heights).subspan(
        static_cast<std::size_t>(j) * static_cast<std::size_t>(bx), static_cast<std::size_t>(bx));
    g.x_factors.push_back(plateaus(row));
    std::vector<double> indicator(static_cast<std::size_t>(by), 0.0);
    indicator[static_cast<std::size_t>(j)] = 1.0;
    g.y_factors.push_back(plateaus(indicator));
  }
  return g;
}

TensorDatum box_convolve(const TensorDatum& g, double width_x, double width_y, int passes) {
  check_box(width_x, passes);
  check_box(2.0 * width_y, passes);
  TensorDatum out = g;
  for (int k = 0; k < passes; ++k) {
    for (auto& a : out.x_factors) a = convolve_once(a, width_x);
    for (auto& b : out.y_factors) b = convolve_once(b, 2.0 * width_y);
  }
  return out;
}

Eigen::VectorXd transport2d_field(const TensorDatum& g, double mu, int nx, int ny) {
  if (nx < 1 || ny < 1) throw UsageError("grid sizes must be positive");
  Eigen::VectorXd out(static_cast<Eigen::Index>(nx) * ny);
  for (int l = 0; l < ny; ++l) {
    const double y = (2.0 * l + 1.0) / (2.0 * ny);
    for (int i = 0; i < nx; ++i) {
      const double x = (2.0 * i + 1.0) / (2.0 * nx) - mu;
      out[static_cast<Eigen::Index>(l) * nx + i] = g.sample(x, y);
    }
  }
  return out;
}

}  // namespace nwidth
