// SPDX-License-Identifier: Apache-2.0
#include "nwidth/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "nwidth/errors.hpp"
#include "numerics.hpp"

namespace nwidth {

double reduce_period(double x) {
  double r = x - 2.0 * std::floor((x + 1.0) / 2.0);
  if (r >= 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  return r;
}

std::vector<double> merge_breaks(std::span<const double> a, std::span<const double> b,
                                 double tol) {
  std::vector<double> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (double v : all) {
    if (out.empty() || v - out.back() > tol) out.push_back(v);
  }
  // The period endpoints are exact; snap neighbours onto them.
  if (!out.empty()) {
    out.front() = std::min(out.front(), -1.0);
    out.back() = std::max(out.back(), 1.0);
  }
  return out;
}

PiecewisePoly::PiecewisePoly(std::vector<double> breaks, std::vector<std::vector<double>> coeffs)
    : breaks_(std::move(breaks)), coeffs_(std::move(coeffs)) {
  if (breaks_.size() < 2) throw UsageError("piecewise polynomial needs at least two breakpoints");
  if (breaks_.front() != -1.0 || breaks_.back() != 1.0)
    throw UsageError("piecewise polynomial breakpoints must start at -1 and end at 1");
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
    if (!(breaks_[i] < breaks_[i + 1]))
      throw UsageError("piecewise polynomial breakpoints must be strictly increasing");
  }
  if (coeffs_.size() != breaks_.size() - 1)
    throw UsageError("piecewise polynomial needs one coefficient list per interval");
  for (const auto& c : coeffs_) {
    if (c.empty()) throw UsageError("piecewise polynomial coefficient list is empty");
  }
}

PiecewisePoly PiecewisePoly::constant(double c) { return PiecewisePoly({-1.0, 1.0}, {{c}}); }

int PiecewisePoly::max_degree() const {
  int d = 0;
  for (const auto& c : coeffs_) d = std::max(d, detail::poly_degree(c));
  return d;
}

std::size_t PiecewisePoly::locate(double r) const {
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), r);
  std::size_t i = (it == breaks_.begin()) ? 0 : static_cast<std::size_t>(it - breaks_.begin()) - 1;
  return std::min(i, pieces() - 1);
}

double PiecewisePoly::derivative_right(double x, int order) const {
  const double r = reduce_period(x);
  const std::size_t i = locate(r);
  return detail::poly_derivative_at(coeffs_[i], order, r - breaks_[i]);
}

double PiecewisePoly::derivative_left(double x, int order) const {
  double r = reduce_period(x);
  std::size_t i = locate(r);
  if (r == breaks_[i]) {
    if (i == 0) return detail::poly_derivative_at(coeffs_.back(), order, width(pieces() - 1));
    --i;
  }
  return detail::poly_derivative_at(coeffs_[i], order, r - breaks_[i]);
}

double PiecewisePoly::right_limit(double x) const { return derivative_right(x, 0); }
double PiecewisePoly::left_limit(double x) const { return derivative_left(x, 0); }

double PiecewisePoly::operator()(double x) const {
  const double r = reduce_period(x);
  const std::size_t i = locate(r);
  const double right = detail::horner(coeffs_[i], r - breaks_[i]);
  if (r != breaks_[i]) return right;
  const double left = left_limit(r);
  return left == right ? right : 0.5 * (left + right);
}

PiecewisePoly PiecewisePoly::derivative() const {
  std::vector<std::vector<double>> c;
  c.reserve(pieces());
  for (const auto& p : coeffs_) c.push_back(detail::poly_derivative(p));
  return PiecewisePoly(breaks_, std::move(c));
}

PiecewisePoly PiecewisePoly::antiderivative() const {
  std::vector<std::vector<double>> c;
  c.reserve(pieces());
  double offset = 0.0;
  for (std::size_t i = 0; i < pieces(); ++i) {
    auto a = detail::poly_antiderivative(coeffs_[i]);
    a[0] = offset;
    offset = detail::horner(a, width(i));
    c.push_back(std::move(a));
  }
  return PiecewisePoly(breaks_, std::move(c));
}

double PiecewisePoly::integral() const {
  double s = 0.0;
  for (std::size_t i = 0; i < pieces(); ++i)
    s += detail::horner(detail::poly_antiderivative(coeffs_[i]), width(i));
  return s;
}

double PiecewisePoly::integral(double a, double b) const {
  const double total = integral();
  const auto cumulative = [&](double x) {
    double periods = std::floor((x + 1.0) / 2.0);
    double r = x - 2.0 * periods;
    if (r >= 1.0) {
      r -= 2.0;
      periods += 1.0;
    }
    const std::size_t i = locate(r);
    double s = periods * total;
    for (std::size_t j = 0; j < i; ++j)
      s += detail::horner(detail::poly_antiderivative(coeffs_[j]), width(j));
    s += detail::horner(detail::poly_antiderivative(coeffs_[i]), r - breaks_[i]);
    return s;
  };
  return cumulative(b) - cumulative(a);
}

PiecewisePoly PiecewisePoly::shifted(double s) const {
  std::vector<double> moved;
  moved.reserve(breaks_.size());
  for (double b : breaks_) moved.push_back(reduce_period(b - s));
  const std::vector<double> ends{-1.0, 1.0};
  auto nb = merge_breaks(moved, ends);
  std::vector<std::vector<double>> c;
  c.reserve(nb.size() - 1);
  for (std::size_t k = 0; k + 1 < nb.size(); ++k) {
    const double mid = 0.5 * (nb[k] + nb[k + 1]);
    const double src = reduce_period(mid + s);
    const std::size_t j = locate(src);
    const double start = src - 0.5 * (nb[k + 1] - nb[k]) - breaks_[j];
    c.push_back(detail::taylor_shift(coeffs_[j], start));
  }
  return PiecewisePoly(std::move(nb), std::move(c));
}

PiecewisePoly PiecewisePoly::scaled(double factor) const {
  auto c = coeffs_;
  for (auto& p : c)
    for (double& v : p) v *= factor;
  return PiecewisePoly(breaks_, std::move(c));
}

PiecewisePoly PiecewisePoly::combine(const PiecewisePoly& other, double sign) const {
  auto nb = merge_breaks(breaks_, other.breaks_);
  std::vector<std::vector<double>> c;
  c.reserve(nb.size() - 1);
  for (std::size_t k = 0; k + 1 < nb.size(); ++k) {
    const double mid = 0.5 * (nb[k] + nb[k + 1]);
    const std::size_t i = locate(mid);
    const std::size_t j = other.locate(mid);
    auto p = detail::taylor_shift(coeffs_[i], nb[k] - breaks_[i]);
    auto q = detail::taylor_shift(other.coeffs_[j], nb[k] - other.breaks_[j]);
    if (q.size() > p.size()) p.resize(q.size(), 0.0);
    for (std::size_t n = 0; n < q.size(); ++n) p[n] += sign * q[n];
    c.push_back(std::move(p));
  }
  return PiecewisePoly(std::move(nb), std::move(c));
}

PiecewisePoly PiecewisePoly::operator+(const PiecewisePoly& other) const {
  return combine(other, 1.0);
}
PiecewisePoly PiecewisePoly::operator-(const PiecewisePoly& other) const {
  return combine(other, -1.0);
}

PiecewisePoly PiecewisePoly::times_global(std::span<const double> g) const {
  std::vector<std::vector<double>> c;
  c.reserve(pieces());
  for (std::size_t i = 0; i < pieces(); ++i) {
    const auto local = detail::taylor_shift(g, breaks_[i]);
    std::vector<double> prod(coeffs_[i].size() + local.size() - 1, 0.0);
    for (std::size_t a = 0; a < coeffs_[i].size(); ++a)
      for (std::size_t b = 0; b < local.size(); ++b) prod[a + b] += coeffs_[i][a] * local[b];
    c.push_back(std::move(prod));
  }
  return PiecewisePoly(breaks_, std::move(c));
}

double PiecewisePoly::l2_norm_sq() const {
  double s = 0.0;
  for (std::size_t i = 0; i < pieces(); ++i) {
    const auto& c = coeffs_[i];
    // Gauss-Legendre with 20 nodes is exact up to degree 39.
    const int panels = std::max(1, (2 * detail::poly_degree(c) + 39) / 40);
    const double h = width(i) / panels;
    for (int p = 0; p < panels; ++p) {
      detail::gauss_panel(p * h, (p + 1) * h, [&](double t, double w) {
        const double v = detail::horner(c, t);
        s += w * v * v;
      });
    }
  }
  return s;
}

std::complex<double> PiecewisePoly::fourier_integral(double v) const {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < pieces(); ++i) {
    const auto local = detail::oscillatory_poly_integral(coeffs_[i], 0.0, width(i), v);
    acc += detail::unit_phase(static_cast<long double>(v) * breaks_[i]) * local;
  }
  return acc;
}

std::complex<double> PiecewisePoly::fourier_integral(double a, double b, double v) const {
  std::complex<double> acc{0.0, 0.0};
  if (!(a < b)) return acc;
  const long first = static_cast<long>(std::floor((a + 1.0) / 2.0));
  const long last = static_cast<long>(std::floor((b + 1.0) / 2.0));
  for (long k = first; k <= last; ++k) {
    const double shift = 2.0 * static_cast<double>(k);
    for (std::size_t i = 0; i < pieces(); ++i) {
      const double start = breaks_[i] + shift;
      const double t0 = std::max(a, start) - start;
      const double t1 = std::min(b, breaks_[i + 1] + shift) - start;
      if (!(t1 > t0)) continue;
      acc += detail::unit_phase(static_cast<long double>(v) * start) *
             detail::oscillatory_poly_integral(coeffs_[i], t0, t1, v);
    }
  }
  return acc;
}

double PiecewisePoly::jump(std::size_t i, int order) const {
  const double right = detail::poly_derivative_at(coeffs_[i], order, 0.0);
  const double left = (i == 0)
                          ? detail::poly_derivative_at(coeffs_.back(), order, width(pieces() - 1))
                          : detail::poly_derivative_at(coeffs_[i - 1], order, width(i - 1));
  return right - left;
}

double PiecewisePoly::total_jump(int order) const {
  double s = 0.0;
  for (std::size_t i = 0; i < pieces(); ++i) s += std::abs(jump(i, order));
  return s;
}

PiecewisePoly PiecewisePoly::simplified(double tol) const {
  std::vector<double> nb{breaks_.front()};
  std::vector<std::vector<double>> c{coeffs_.front()};
  for (std::size_t i = 1; i < pieces(); ++i) {
    // Continuation of the previous kept piece, re-expanded at breaks_[i].
    auto cont = detail::taylor_shift(c.back(), breaks_[i] - nb.back());
    const auto& next = coeffs_[i];
    const std::size_t n = std::max(cont.size(), next.size());
    bool same = true;
    for (std::size_t k = 0; k < n && same; ++k) {
      const double a = k < cont.size() ? cont[k] : 0.0;
      const double b = k < next.size() ? next[k] : 0.0;
      same = std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
    }
    if (!same) {
      nb.push_back(breaks_[i]);
      c.push_back(next);
    }
  }
  nb.push_back(breaks_.back());
  return PiecewisePoly(std::move(nb), std::move(c));
}

}  // namespace nwidth
