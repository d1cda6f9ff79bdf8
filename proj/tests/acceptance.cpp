// SPDX-License-Identifier: Apache-2.0
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "nwidth/experiments.hpp"
#include "nwidth/signal_spec.hpp"
#include "nwidth/snapshots.hpp"
#include "nwidth/spectrum.hpp"

using namespace nwidth;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double halton2(int i) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= 2.0;
    r += f * (i % 2);
    i /= 2;
  }
  return r;
}

constexpr int kGrid = 2500;

Outcome jump_trigamma_oracle() {
  Stopwatch sw;
  // single-copy block suffix sums of 4/(pi^2 (2k-1)^2) to K = 10^7 plus the
  // midpoint-rule remainder (4/pi^2)/(4K)
  const long K = 10000000;
  std::vector<long double> suffix(502);
  long double acc = 4.0L / (pi * pi) / (4.0L * K);
  for (long k = K; k >= 1; --k) {
    const long double n = 2.0L * k - 1.0L;
    acc += 4.0L / (pi * pi * n * n);
    if (k <= 501) suffix[static_cast<std::size_t>(k)] = acc;
  }
  double worst = 0.0;
  for (int N = 0; N <= 1000; ++N) {
    const int b = N / 2;
    long double tail = 2.0L * suffix[static_cast<std::size_t>(b + 1)];
    if (N % 2) {
      const long double n = 2.0L * b + 1.0L;
      tail -= 4.0L / (pi * pi * n * n);
    }
    const double t = jump_width_trigamma(N);
    worst = std::max(worst, std::abs(t * t / static_cast<double>(tail) - 1.0));
  }
  const double secs = sw.seconds();
  return {worst <= 1e-10 && secs < 5.0,
          "max rel err " + fmt("%.3e", worst) + " (tol 1e-10), " + fmt("%.2f", secs) + " s (limit 5 s)"};
}

Outcome parseval_anchors() {
  const double j = exact_width(signal_spectrum(jump_signal(), 4096), 0).delta;
  const double g = exact_width(signal_spectrum(antiderivative_signal(1), 4096), 0).delta;
  const double ej = std::abs(j - 1.0);
  const double eg = std::abs(g - 1.0 / std::sqrt(12.0));
  return {ej <= 1e-12 && eg <= 1e-12,
          "|delta_0(jump) - 1| = " + fmt("%.3e", ej) + ", |delta_0(g_1) - 1/sqrt12| = " + fmt("%.3e", eg)};
}

double pod_vs_trigamma(int n) {
  const auto pod = pod_curve(jump_signal(), n, n, 100);
  double worst = 0.0;
  for (int N = 0; N <= 100; ++N)
    worst = std::max(worst, std::abs(pod.rows[static_cast<std::size_t>(N)].delta / jump_width_trigamma(N) - 1.0));
  return worst;
}

Outcome pod_jump() {
  Stopwatch sw;
  const double big = pod_vs_trigamma(kGrid);
  const double small = pod_vs_trigamma(1000);
  const double secs = sw.seconds();
  return {big <= 0.01 && small <= 0.02 && secs <= 300.0,
          "2500x2500 max rel err " + fmt("%.3e", big) + " (tol 1e-2), 1000x1000 " + fmt("%.3e", small) +
              " (tol 2e-2), " + fmt("%.1f", secs) + " s"};
}

Outcome ratio_limit() {
  const int N = 2000;
  const double ratio = std::pow(N, -0.5) / jump_width_trigamma(N);
  const double err = std::abs(ratio / (pi / 2.0) - 1.0);
  return {err <= 0.005, "ratio " + fmt("%.6f", ratio) + ", rel dev from pi/2 " + fmt("%.3e", err) + " (tol 5e-3)"};
}

Outcome sandwich() {
  bool ok = true;
  std::ostringstream os;
  for (int m = 0; m <= 4; ++m) {
    const auto c = width_curve(sort_spectrum(closed_form_spectrum(m, 1024)), 1024);
    int outside = 0;
    for (int N = 2; N <= 1024; N += 2) {
      const auto b = gm_bounds(m, N);
      const double d = c.rows[static_cast<std::size_t>(N)].delta;
      if (d < b.lower || d > b.upper) ++outside;
    }
    const double rate = fit_rate(c, 32, 512).value;
    const bool good = outside == 0 && std::abs(rate - (m + 0.5)) <= 0.05;
    ok = ok && good;
    os << "m=" << m << " rate " << fmt("%.4f", rate) << " outside " << outside << "; ";
  }
  return {ok, os.str()};
}

Outcome linf_equals_l2() {
  bool ok = true;
  std::ostringstream os;
  const auto grid = midpoint_grid(kGrid);
  const auto psi = basis_matrix(Parity::odd, 50, grid);
  for (const auto& spec : {"jump", "gm:1"}) {
    const auto X = snapshot_matrix(parse_signal(spec), kGrid, kGrid);
    const auto curve = projection_distance_curve(X, psi);
    for (int N : {2, 10, 50}) {
      const auto& d = curve[static_cast<std::size_t>(N)];
      const double rel = std::abs(d.linf / d.l2 - 1.0);
      ok = ok && rel <= 0.005;
      os << spec << " N=" << N << " " << fmt("%.2e", rel) << "; ";
    }
  }
  return {ok, "rel |Linf/L2 - 1| (tol 5e-3): " + os.str()};
}

Outcome shift_isometry() {
  double worst = 0.0;
  const std::vector<Signal> sigs{jump_signal(), antiderivative_signal(1),
                                 hws_assemble(ramp_signal(2, reference_ramp_eps(2)))};
  for (const auto& g : sigs) {
    for (int k = 1; k <= 31; k += 2) {
      double lo = INFINITY, hi = -INFINITY;
      for (int i = 1; i <= 100; ++i) {
        const double e = shifted_block_energy(g, k, halton2(i));
        lo = std::min(lo, e);
        hi = std::max(hi, e);
      }
      worst = std::max(worst, hi - lo);
    }
  }
  return {worst <= 1e-6, "max spread over 100 shifts, odd k <= 31: " + fmt("%.3e", worst) + " (tol 1e-6)"};
}

Outcome ramp_eps_table() {
  bool ok = true;
  std::ostringstream os;
  for (int m = 1; m <= 5; ++m) {
    const double e = fit_epsilon(m).value;
    ok = ok && std::abs(e - reference_ramp_eps(m)) <= 2e-3;
    os << "m=" << m << " " << fmt("%.5f", e) << " (ref " << fmt("%.5f", reference_ramp_eps(m)) << "); ";
  }
  return {ok, os.str()};
}

Outcome ramp_rates() {
  bool ok = true;
  std::ostringstream os;
  for (int m = 0; m <= 3; ++m) {
    const auto g = hws_assemble(ramp_signal(m, reference_ramp_eps(m)));
    const auto pod = pod_curve(g, kGrid, kGrid, 512);
    const double r = m + 0.5;
    const auto rate = fit_rate(pod, 32, 512);
    const auto c = fit_constant(pod, r, 32, 512);
    const bool good = std::abs(rate.value - r) <= 0.15 && c.residual < 0.15;
    ok = ok && good;
    os << "m=" << m << " rate " << fmt("%.3f", rate.value) << " (target " << fmt("%.1f", r)
       << ", m+3/2 gap " << fmt("%+.3f", rate.value - (m + 1.5)) << ") residual " << fmt("%.3f", c.residual)
       << "; ";
  }
  return {ok, os.str()};
}

Outcome steepness() {
  const std::vector<double> eps{0.2, 0.1, 0.05, 0.025};
  std::vector<WidthCurve> curves;
  std::vector<double> rates;
  for (double e : eps) {
    curves.push_back(width_curve(signal_spectrum(hws_assemble(ramp_signal(0, e)), 4096), 512));
    rates.push_back(fit_rate(curves.back(), 32, 512).value);
  }
  double mean = 0.0;
  for (double r : rates) mean += r / static_cast<double>(rates.size());
  bool ok = true;
  std::ostringstream os;
  std::vector<double> consts;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    ok = ok && std::abs(rates[i] - mean) <= 0.05;
    consts.push_back(fit_constant(curves[i], mean, 32, 512).value);
    os << "eps=" << eps[i] << " rate " << fmt("%.4f", rates[i]) << " c " << fmt("%.4f", consts.back()) << "; ";
  }
  // constants strictly decreasing in eps: eps is listed in decreasing order
  for (std::size_t i = 1; i < consts.size(); ++i) ok = ok && consts[i] > consts[i - 1];
  return {ok, os.str()};
}

Outcome random_rates() {
  const int seed = 7;
  std::vector<double> r1, r2;
  for (int p = 0; p <= 3; ++p)
    r1.push_back(fit_rate(pod_curve(random1d_signal(seed, p), kGrid, kGrid, 512), 32, 512).value);
  for (int p = 0; p <= 3; ++p) {
    const auto X = snapshot_matrix(random2d_datum(seed, p), 1000, 20, 1000);
    r2.push_back(fit_rate(pod_width_curve(singular_values(X), X.rows(), X.nmu, 512), 32, 512).value);
  }
  bool ok = true;
  for (std::size_t i = 1; i < 4; ++i) ok = ok && r1[i] > r1[i - 1] && r2[i] > r2[i - 1];
  std::ostringstream os;
  os << "1D rates";
  for (double r : r1) os << " " << fmt("%.3f", r);
  os << "; 2D rates";
  for (double r : r2) os << " " << fmt("%.3f", r);
  return {ok, os.str()};
}

Outcome nonhws() {
  const auto g = parse_signal("jump+cos:2");
  const auto merged = signal_spectrum(g, 4096);
  const auto pod = pod_curve(g, kGrid, kGrid, 200);
  double worst = -INFINITY;
  int at = 0;
  for (int N = 0; N <= 200; ++N) {
    const double gap = pod.rows[static_cast<std::size_t>(N)].delta - nonhws_bound(merged, N);
    if (gap > worst) {
      worst = gap;
      at = N;
    }
  }
  return {worst <= 1e-8, "max (delta_pod - bound) = " + fmt("%.3e", worst) + " at N=" + std::to_string(at) +
                             " (slack 1e-8)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"jump trigamma width vs sorted-tail oracle", jump_trigamma_oracle},
      {"Parseval anchors delta_0", parseval_anchors},
      {"POD of the jump vs trigamma curve", pod_jump},
      {"ratio N^-1/2 / delta_N tends to pi/2", ratio_limit},
      {"g_m bounds sandwich and rates", sandwich},
      {"Linf and L2 projection distances coincide", linf_equals_l2},
      {"shift isometry of block energies", shift_isometry},
      {"ramp width fits", ramp_eps_table},
      {"ramp POD rates m + 1/2", ramp_rates},
      {"steepness: equal rates, constants decreasing in eps", steepness},
      {"random data: rates increase with smoothing", random_rates},
      {"non-HWS bound dominates POD widths", nonhws},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    Stopwatch sw;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), sw.seconds());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
