// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nwidth/spectrum.hpp"

namespace nwidth {

struct FitResult {
  double value = 0.0;
  double residual = 0.0;
  int window_lo = 0;
  int window_hi = 0;
  /// Set by fit_epsilon when the minimizer sits on the search boundary.
  bool window_exhausted = false;
};

/// Least-squares slope of log delta_N against log N over [lo, hi]; value is
/// the negated slope, residual the RMS of the log residuals.
FitResult fit_rate(const WidthCurve& curve, int lo, int hi);

/// c = geometric mean of delta_N N^r over [lo, hi]; residual is
/// max |delta_N N^r / c - 1|.
FitResult fit_constant(const WidthCurve& curve, double r, int lo, int hi);

/// Tabulated ramp widths for m = 1..5 matching the m = 0 ramp of width 0.025
/// (m = 0 returns 0.025 itself).
double reference_ramp_eps(int m);

/// L2(-1, 1) distance between the ramp signals (m, eps) and (ref_m, ref_eps),
/// midpoint rule with 10^4 nodes.
double ramp_misfit(int m, double eps, int ref_m, double ref_eps);

/// Golden-section search for eps in [lo, hi] (tolerance 1e-6) minimizing the
/// misfit of the degree-m ramp against the reference ramp.
FitResult fit_epsilon(int m, int ref_m = 0, double ref_eps = 0.025, double lo = 0.02,
                      double hi = 0.10);

struct ExperimentConfig {
  std::string name;
  /// Grid sizes; 0 selects the experiment default (2500 in 1D, 1000 for
  /// random2d, whose snapshots stack ny copies of the x grid).
  int nx = 0;
  int nmu = 0;
  int ny = 20;
  int n_max = 0;  // 0 picks a per-experiment default
  std::uint64_t seed = 7;
  int window_lo = 32;
  int window_hi = 512;
  std::vector<double> eps_list;  // empty: experiment default (ramps fit eps)
  std::vector<int> m_list;       // empty: experiment default
  int passes = 3;
  std::filesystem::path outdir = ".";
  bool plots = true;
};

const std::vector<std::string>& experiment_names();

/// Applies key=value lines (keys nx, nmu, ny, nmax, seed, window_lo,
/// window_hi, eps_list, m_list, passes, plots); lists are comma separated.
/// '#' starts a comment.
void apply_config_text(ExperimentConfig& cfg, const std::string& text);
void apply_config_file(ExperimentConfig& cfg, const std::filesystem::path& path);
void validate(const ExperimentConfig& cfg);

struct SummaryRow {
  std::string experiment;
  std::string parameter;
  double value = 0.0;
  double residual = 0.0;
};

struct ExperimentReport {
  std::vector<SummaryRow> summary;
  std::vector<std::filesystem::path> files;
};

/// Runs one experiment, writing its CSVs (and SVGs when enabled) plus
/// summary.csv into cfg.outdir.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Runs several experiments; a failure is recorded and the rest still run.
/// summary.csv collects the rows of every successful experiment.
struct BatchResult {
  ExperimentReport report;
  std::vector<std::string> failures;  // "name: message"
};
BatchResult run_experiments(const ExperimentConfig& cfg, const std::vector<std::string>& names);

void write_summary(const std::filesystem::path& path, const std::vector<SummaryRow>& rows);

// Building blocks shared with the acceptance suite.

/// POD width curve of a 1D signal on an nx x nmu grid.
WidthCurve pod_curve(const Signal& g, int nx, int nmu, int n_max);

/// Default smoothing for the random data: box width equal to one plateau.
Signal random1d_signal(std::uint64_t seed, int passes);
TensorDatum random2d_datum(std::uint64_t seed, int passes);

}  // namespace nwidth
