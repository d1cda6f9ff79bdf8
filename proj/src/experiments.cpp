// SPDX-License-Identifier: Apache-2.0
#include "nwidth/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "nwidth/csv.hpp"
#include "nwidth/errors.hpp"
#include "nwidth/snapshots.hpp"
#include "nwidth/svg_plot.hpp"

namespace nwidth {

namespace {

void check_window(const WidthCurve& curve, int lo, int hi) {
  if (lo < 1 || hi <= lo) throw UsageError("fit window must satisfy 1 <= lo < hi");
  if (curve.rows.empty() || curve.rows.front().N > lo || curve.rows.back().N < hi)
    throw UsageError("fit window lies outside the curve");
}

template <class F>
void for_window(const WidthCurve& curve, int lo, int hi, F&& f) {
  for (const auto& r : curve.rows) {
    if (r.N < lo || r.N > hi) continue;
    if (!(r.delta > 0.0))
      throw DomainError("nonpositive width at N = " + std::to_string(r.N) + " inside fit window");
    f(r);
  }
}

}  // namespace

FitResult fit_rate(const WidthCurve& curve, int lo, int hi) {
  check_window(curve, lo, hi);
  std::vector<double> xs, ys;
  for_window(curve, lo, hi, [&](const WidthRow& r) {
    xs.push_back(std::log(static_cast<double>(r.N)));
    ys.push_back(std::log(r.delta));
  });
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (my + slope * (xs[i] - mx));
    rss += e * e;
  }
  return {-slope, std::sqrt(rss / n), lo, hi, false};
}

FitResult fit_constant(const WidthCurve& curve, double r, int lo, int hi) {
  if (!(r > 0.0)) throw UsageError("rate must be positive");
  check_window(curve, lo, hi);
  std::vector<double> comp;
  for_window(curve, lo, hi, [&](const WidthRow& row) {
    comp.push_back(row.delta * std::pow(static_cast<double>(row.N), r));
  });
  double logsum = 0.0;
  for (double v : comp) logsum += std::log(v);
  const double c = std::exp(logsum / static_cast<double>(comp.size()));
  double dev = 0.0;
  for (double v : comp) dev = std::max(dev, std::abs(v / c - 1.0));
  return {c, dev, lo, hi, false};
}

double reference_ramp_eps(int m) {
  switch (m) {
    case 0: return 0.025;
    case 1: return 0.03316;
    case 2: return 0.04002;
    case 3: return 0.04592;
    case 4: return 0.05116;
    case 5: return 0.05592;
    default: throw UsageError("ramp order must be in 0..5");
  }
}

double ramp_misfit(int m, double eps, int ref_m, double ref_eps) {
  const Signal a = hws_assemble(ramp_signal(m, eps));
  const Signal b = hws_assemble(ramp_signal(ref_m, ref_eps));
  constexpr int kNodes = 10000;
  const double h = 2.0 / kNodes;
  double s = 0.0;
  for (int k = 0; k < kNodes; ++k) {
    const double x = -1.0 + (k + 0.5) * h;
    const double d = a(x) - b(x);
    s += d * d;
  }
  return std::sqrt(s * h);
}

FitResult fit_epsilon(int m, int ref_m, double ref_eps, double lo, double hi) {
  if (m < 0 || m > 5 || ref_m < 0 || ref_m > 5) throw UsageError("ramp order must be in 0..5");
  if (!(lo > 0.0) || !(hi > lo) || !(hi < 1.0)) throw UsageError("invalid eps search window");
  constexpr double kTol = 1e-6;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = ramp_misfit(m, c, ref_m, ref_eps);
  double fd = ramp_misfit(m, d, ref_m, ref_eps);
  while (b - a > kTol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = ramp_misfit(m, c, ref_m, ref_eps);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = ramp_misfit(m, d, ref_m, ref_eps);
    }
  }
  const double eps = 0.5 * (a + b);
  FitResult r;
  r.value = eps;
  r.residual = ramp_misfit(m, eps, ref_m, ref_eps);
  r.window_exhausted = eps - lo < 10.0 * kTol || hi - eps < 10.0 * kTol;
  return r;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"heaviside", "ramps", "steepness", "random1d",
                                              "random2d"};
  return names;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T config_value(const std::string& key, const std::string& s) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw UsageError("invalid value '" + s + "' for config key " + key);
  return v;
}

template <class T>
std::vector<T> config_list(const std::string& key, const std::string& s) {
  std::vector<T> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(config_value<T>(key, trim(item)));
  return out;
}

}  // namespace

void apply_config_text(ExperimentConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(lineno) + " is not key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "nx") cfg.nx = config_value<int>(key, val);
    else if (key == "nmu") cfg.nmu = config_value<int>(key, val);
    else if (key == "ny") cfg.ny = config_value<int>(key, val);
    else if (key == "nmax") cfg.n_max = config_value<int>(key, val);
    else if (key == "seed") cfg.seed = config_value<std::uint64_t>(key, val);
    else if (key == "window_lo") cfg.window_lo = config_value<int>(key, val);
    else if (key == "window_hi") cfg.window_hi = config_value<int>(key, val);
    else if (key == "eps_list") cfg.eps_list = config_list<double>(key, val);
    else if (key == "m_list") cfg.m_list = config_list<int>(key, val);
    else if (key == "passes") cfg.passes = config_value<int>(key, val);
    else if (key == "plots") cfg.plots = config_value<int>(key, val) != 0;
    else throw UsageError("unknown config key '" + key + "'");
  }
}

void apply_config_file(ExperimentConfig& cfg, const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  apply_config_text(cfg, ss.str());
}

namespace {

struct Grid {
  int nx;
  int nmu;
};

Grid grid_for(const ExperimentConfig& cfg) {
  const int def = cfg.name == "random2d" ? 1000 : 2500;
  return {cfg.nx > 0 ? cfg.nx : def, cfg.nmu > 0 ? cfg.nmu : def};
}

int n_max_for(const ExperimentConfig& cfg) {
  if (cfg.n_max > 0) return cfg.n_max;
  if (cfg.name == "heaviside") return 100;
  return cfg.window_hi;
}

std::vector<int> m_list_for(const ExperimentConfig& cfg) {
  if (!cfg.m_list.empty()) return cfg.m_list;
  return {0, 1, 2, 3};
}

std::vector<double> steepness_eps_for(const ExperimentConfig& cfg) {
  if (!cfg.eps_list.empty()) return cfg.eps_list;
  return {0.2, 0.1, 0.05, 0.025};
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), cfg.name) == names.end())
    throw UsageError("unknown experiment '" + cfg.name + "'");
  if (cfg.nx < 0 || cfg.nmu < 0 || cfg.ny < 1) throw UsageError("grid sizes must be positive");
  if (cfg.n_max < 0) throw UsageError("nmax must be nonnegative");
  if (cfg.window_lo < 1 || cfg.window_hi <= cfg.window_lo)
    throw UsageError("fit window must satisfy 1 <= window_lo < window_hi");
  if (cfg.passes < 0 || cfg.passes > 8) throw UsageError("passes must be in 0..8");
  for (int m : cfg.m_list)
    if (m < 0 || m > 5) throw UsageError("m_list entries must be in 0..5");
  for (double e : cfg.eps_list)
    if (!(e > 0.0) || !(e < 1.0)) throw UsageError("eps_list entries must lie in (0, 1)");
  if (cfg.name == "ramps" && !cfg.eps_list.empty() && cfg.eps_list.size() != m_list_for(cfg).size())
    throw UsageError("ramps: eps_list must have one entry per m_list entry");
  const Grid g = grid_for(cfg);
  const int rank = std::min(cfg.name == "random2d" ? g.nx * cfg.ny : g.nx, g.nmu);
  const int need = std::max(n_max_for(cfg), cfg.name == "heaviside" ? 0 : cfg.window_hi);
  const int smallest = cfg.name == "heaviside" ? std::max(1, rank / 4) : rank;
  if (cfg.name != "steepness" && need >= smallest)
    throw UsageError("N range exceeds the snapshot rank for experiment " + cfg.name);
}

WidthCurve pod_curve(const Signal& g, int nx, int nmu, int n_max) {
  const auto X = snapshot_matrix(g, nx, nmu);
  return pod_width_curve(singular_values(X), X.rows(), X.nmu, n_max);
}

Signal random1d_signal(std::uint64_t seed, int passes) {
  constexpr int kSteps = 20;
  return box_convolve(random_steps(kSteps, seed), 2.0 / kSteps, passes);
}

TensorDatum random2d_datum(std::uint64_t seed, int passes) {
  constexpr int kBx = 20;
  constexpr int kBy = 10;
  return box_convolve(random_blocks_2d(kBx, kBy, seed), 2.0 / kBx, 1.0 / kBy, passes);
}

namespace {

std::string eps_tag(double e) { return format_number(e); }

class Recorder {
 public:
  Recorder(const ExperimentConfig& cfg, ExperimentReport& rep) : cfg_(cfg), rep_(rep) {}

  void table(const std::string& stem, const CsvTable& t, bool loglog) {
    const auto csv = cfg_.outdir / (stem + ".csv");
    write_csv(csv, t);
    rep_.files.push_back(csv);
    if (cfg_.plots) {
      const auto svg = cfg_.outdir / (stem + ".svg");
      PlotOptions o;
      o.loglog = loglog;
      o.title = stem;
      std::ofstream f(svg, std::ios::binary);
      f << render_svg(t, o);
      rep_.files.push_back(svg);
    }
  }

  void fit(const std::string& parameter, double value, double residual) {
    rep_.summary.push_back({cfg_.name, parameter, value, residual});
  }

 private:
  const ExperimentConfig& cfg_;
  ExperimentReport& rep_;
};

/// Table with column N = first..last and one column per curve.
CsvTable curve_table(int first, int last, const std::vector<std::string>& names,
                     const std::vector<std::vector<double>>& cols) {
  CsvTable t;
  t.header.push_back("N");
  t.header.insert(t.header.end(), names.begin(), names.end());
  for (int N = first; N <= last; ++N) {
    std::vector<std::string> row{std::to_string(N)};
    for (const auto& c : cols) row.push_back(format_number(c[static_cast<std::size_t>(N)]));
    t.add_row(std::move(row));
  }
  return t;
}

void run_heaviside(const ExperimentConfig& cfg, Recorder& rec) {
  const Grid g = grid_for(cfg);
  const int n_max = n_max_for(cfg);
  const Signal jump = jump_signal();
  std::vector<std::string> names;
  std::vector<std::vector<double>> cols;
  std::vector<double> tri(static_cast<std::size_t>(n_max) + 1);
  for (int N = 0; N <= n_max; ++N) tri[static_cast<std::size_t>(N)] = jump_width_trigamma(N);
  for (int n : {g.nx / 4, g.nx / 2, g.nx}) {
    const auto curve = pod_curve(jump, n, n, n_max).deltas();
    double worst = 0.0;
    for (int N = 0; N <= n_max; ++N) {
      const auto i = static_cast<std::size_t>(N);
      worst = std::max(worst, std::abs(curve[i] / tri[i] - 1.0));
    }
    names.push_back("delta_pod_n" + std::to_string(n));
    cols.push_back(curve);
    rec.fit("pod_max_rel_err_n" + std::to_string(n), worst, 0.0);
  }
  std::vector<double> pw(tri.size()), ratio(tri.size());
  for (std::size_t N = 1; N < tri.size(); ++N) {
    pw[N] = 1.0 / std::sqrt(static_cast<double>(N));
    ratio[N] = pw[N] / tri[N];
  }
  names.insert(names.end(), {"delta_trigamma", "n_pow_minus_half", "ratio"});
  cols.insert(cols.end(), {tri, pw, ratio});
  rec.table("heaviside", curve_table(1, n_max, names, cols), true);

  constexpr int kRatioN = 2000;
  std::vector<double> t2(kRatioN + 1), r2(kRatioN + 1);
  for (int N = 1; N <= kRatioN; ++N) {
    t2[static_cast<std::size_t>(N)] = jump_width_trigamma(N);
    r2[static_cast<std::size_t>(N)] = 1.0 / std::sqrt(static_cast<double>(N)) / t2[static_cast<std::size_t>(N)];
  }
  rec.table("heaviside_ratio", curve_table(1, kRatioN, {"delta_trigamma", "ratio"}, {t2, r2}), false);
  const double half_pi = std::numbers::pi / 2.0;
  rec.fit("ratio_N2000", r2.back(), std::abs(r2.back() / half_pi - 1.0));
}

void run_ramps(const ExperimentConfig& cfg, Recorder& rec) {
  const Grid g = grid_for(cfg);
  const int n_max = n_max_for(cfg);
  const auto ms = m_list_for(cfg);
  std::vector<std::string> names;
  std::vector<std::vector<double>> cols;
  std::vector<std::vector<double>> comps;
  std::vector<std::string> comp_names;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const int m = ms[i];
    double eps = 0.025;
    double misfit = 0.0;
    if (!cfg.eps_list.empty()) {
      eps = cfg.eps_list[i];
      misfit = ramp_misfit(m, eps, 0, 0.025);
    } else if (m > 0) {
      const auto f = fit_epsilon(m);
      eps = f.value;
      misfit = f.residual;
    }
    rec.fit("eps_m" + std::to_string(m), eps, misfit);
    const auto curve = pod_curve(hws_assemble(ramp_signal(m, eps)), g.nx, g.nmu, n_max);
    const auto rate = fit_rate(curve, cfg.window_lo, cfg.window_hi);
    const double r = m + 0.5;
    const auto c = fit_constant(curve, r, cfg.window_lo, cfg.window_hi);
    rec.fit("rate_m" + std::to_string(m), rate.value, rate.residual);
    rec.fit("const_m" + std::to_string(m), c.value, c.residual);
    auto d = curve.deltas();
    std::vector<double> comp(d.size());
    for (std::size_t N = 0; N < d.size(); ++N) comp[N] = d[N] * std::pow(static_cast<double>(N), r);
    names.push_back("delta_m" + std::to_string(m));
    cols.push_back(std::move(d));
    comp_names.push_back("comp_m" + std::to_string(m));
    comps.push_back(std::move(comp));
  }
  rec.table("ramps", curve_table(1, n_max, names, cols), true);
  rec.table("ramps_compensated", curve_table(1, n_max, comp_names, comps), true);
}

void run_steepness(const ExperimentConfig& cfg, Recorder& rec) {
  const int n_max = n_max_for(cfg);
  const auto eps_list = steepness_eps_for(cfg);
  const int K = std::max(4096, 8 * n_max);
  std::vector<std::string> names;
  std::vector<std::vector<double>> cols;
  std::vector<WidthCurve> curves;
  double mean_rate = 0.0;
  for (double e : eps_list) {
    const auto spec = signal_spectrum(hws_assemble(ramp_signal(0, e)), K);
    curves.push_back(width_curve(spec, n_max));
    const auto rate = fit_rate(curves.back(), cfg.window_lo, cfg.window_hi);
    rec.fit("rate_eps" + eps_tag(e), rate.value, rate.residual);
    mean_rate += rate.value;
    names.push_back("delta_eps" + eps_tag(e));
    cols.push_back(curves.back().deltas());
  }
  mean_rate /= static_cast<double>(eps_list.size());
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    const auto c = fit_constant(curves[i], mean_rate, cfg.window_lo, cfg.window_hi);
    rec.fit("const_eps" + eps_tag(eps_list[i]), c.value, c.residual);
  }
  rec.fit("mean_rate", mean_rate, 0.0);
  rec.table("steepness", curve_table(1, n_max, names, cols), true);
}

void run_random1d(const ExperimentConfig& cfg, Recorder& rec) {
  const Grid g = grid_for(cfg);
  const int n_max = n_max_for(cfg);
  std::vector<std::string> names;
  std::vector<std::vector<double>> cols;
  for (int p = 0; p <= cfg.passes; ++p) {
    const auto curve = pod_curve(random1d_signal(cfg.seed, p), g.nx, g.nmu, n_max);
    const auto rate = fit_rate(curve, cfg.window_lo, cfg.window_hi);
    rec.fit("rate_p" + std::to_string(p), rate.value, rate.residual);
    names.push_back("delta_p" + std::to_string(p));
    cols.push_back(curve.deltas());
  }
  rec.table("random1d", curve_table(1, n_max, names, cols), true);
}

void run_random2d(const ExperimentConfig& cfg, Recorder& rec) {
  const Grid g = grid_for(cfg);
  const int n_max = n_max_for(cfg);
  std::vector<std::string> names;
  std::vector<std::vector<double>> cols;
  for (int p = 0; p <= cfg.passes; ++p) {
    const auto X = snapshot_matrix(random2d_datum(cfg.seed, p), g.nx, cfg.ny, g.nmu);
    const auto curve = pod_width_curve(singular_values(X), X.rows(), X.nmu, n_max);
    const auto rate = fit_rate(curve, cfg.window_lo, cfg.window_hi);
    rec.fit("rate_p" + std::to_string(p), rate.value, rate.residual);
    names.push_back("delta_p" + std::to_string(p));
    cols.push_back(curve.deltas());
  }
  rec.table("random2d", curve_table(1, n_max, names, cols), true);
}

}  // namespace

void write_summary(const std::filesystem::path& path, const std::vector<SummaryRow>& rows) {
  CsvTable t;
  t.header = {"experiment", "parameter", "value", "residual"};
  for (const auto& r : rows)
    t.add_row({r.experiment, r.parameter, format_number(r.value), format_number(r.residual)});
  write_csv(path, t);
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  std::filesystem::create_directories(cfg.outdir);
  ExperimentReport rep;
  Recorder rec(cfg, rep);
  if (cfg.name == "heaviside") run_heaviside(cfg, rec);
  else if (cfg.name == "ramps") run_ramps(cfg, rec);
  else if (cfg.name == "steepness") run_steepness(cfg, rec);
  else if (cfg.name == "random1d") run_random1d(cfg, rec);
  else run_random2d(cfg, rec);
  const auto summary = cfg.outdir / "summary.csv";
  write_summary(summary, rep.summary);
  rep.files.push_back(summary);
  return rep;
}

BatchResult run_experiments(const ExperimentConfig& cfg, const std::vector<std::string>& names) {
  BatchResult out;
  for (const auto& name : names) {
    ExperimentConfig c = cfg;
    c.name = name;
    try {
      auto rep = run_experiment(c);
      out.report.summary.insert(out.report.summary.end(), rep.summary.begin(), rep.summary.end());
      out.report.files.insert(out.report.files.end(), rep.files.begin(), rep.files.end());
    } catch (const std::exception& e) {
      out.failures.push_back(name + ": " + e.what());
    }
  }
  const auto summary = cfg.outdir / "summary.csv";
  std::filesystem::create_directories(cfg.outdir);
  write_summary(summary, out.report.summary);
  return out;
}

}  // namespace nwidth
