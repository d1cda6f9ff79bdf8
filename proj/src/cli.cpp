// SPDX-License-Identifier: Apache-2.0
#include "nwidth/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>

#include "nwidth/csv.hpp"
#include "nwidth/errors.hpp"
#include "nwidth/experiments.hpp"
#include "nwidth/fourier.hpp"
#include "nwidth/signal_spec.hpp"
#include "nwidth/snapshots.hpp"
#include "nwidth/special_functions.hpp"
#include "nwidth/spectrum.hpp"
#include "nwidth/svg_plot.hpp"

namespace nwidth {

namespace {

void emit(const CsvTable& t, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-")
    out << to_csv_string(t);
  else
    write_csv(out_path, t);
}

struct BasisSpec {
  Parity parity;
  int count;
};

BasisSpec parse_basis(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("basis must be odd:K or even:K");
  const std::string p = s.substr(0, colon);
  const std::string k = s.substr(colon + 1);
  BasisSpec b{};
  if (p == "odd") b.parity = Parity::odd;
  else if (p == "even") b.parity = Parity::even;
  else throw UsageError("basis parity must be odd or even");
  const auto res = std::from_chars(k.data(), k.data() + k.size(), b.count);
  if (k.empty() || res.ec != std::errc() || res.ptr != k.data() + k.size() || b.count < 1)
    throw UsageError("basis size must be a positive integer");
  return b;
}

double parse_positive(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw UsageError("not a number: '" + s + "'");
  return v;
}

}  // namespace

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kolmogorov and L2-average N-widths of linear transport", "nwidth"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string signal_spec, out_path;
  int k_max = 1024;
  auto* coeffs = app.add_subcommand("coeffs", "Fourier coefficients of a signal");
  coeffs->add_option("--signal", signal_spec, "signal spec")->required();
  coeffs->add_option("--k-max", k_max, "truncation frequency")->check(CLI::PositiveNumber);
  coeffs->add_option("--out", out_path, "output CSV (stdout if omitted)");

  int n_max = 100;
  std::optional<int> exact_k;
  auto* exact = app.add_subcommand("exact", "exact widths from the eigenvalue spectrum");
  exact->add_option("--signal", signal_spec, "signal spec")->required();
  exact->add_option("--n-max", n_max, "largest N")->check(CLI::NonNegativeNumber);
  exact->add_option("--k-max", exact_k, "truncation frequency (default max(4096, 8 n-max))");
  exact->add_option("--out", out_path, "output CSV (stdout if omitted)");

  int nx = 1000, nmu = 1000;
  std::string basis;
  auto* pod = app.add_subcommand("pod", "POD widths of the snapshot matrix");
  pod->add_option("--signal", signal_spec, "signal spec")->required();
  pod->add_option("--nx", nx, "spatial grid size")->check(CLI::PositiveNumber);
  pod->add_option("--nmu", nmu, "parameter grid size")->check(CLI::PositiveNumber);
  pod->add_option("--n-max", n_max, "largest N")->check(CLI::NonNegativeNumber);
  pod->add_option("--basis", basis, "odd:K or even:K, adds projection distances");
  pod->add_option("--out", out_path, "output CSV (stdout if omitted)");

  std::string tri_arg;
  auto* tri = app.add_subcommand("trigamma", "evaluate the trigamma function");
  tri->add_option("x", tri_arg, "positive argument")->required();

  std::string exp_name, config_path, outdir = ".";
  std::optional<std::uint64_t> seed;
  bool no_plots = false;
  auto* experiment = app.add_subcommand("experiment", "run a scripted experiment");
  experiment->add_option("name", exp_name, "heaviside|ramps|steepness|random1d|random2d|all")
      ->required();
  experiment->add_option("--config", config_path, "key=value config file");
  experiment->add_option("--outdir", outdir, "output directory");
  experiment->add_option("--seed", seed, "overrides the config seed");
  experiment->add_flag("--no-plots", no_plots, "skip SVG output");

  std::string csv_path, x_column;
  std::vector<std::string> columns;
  bool loglog = false;
  auto* plot = app.add_subcommand("plot", "render a CSV as an SVG line chart");
  plot->add_option("--csv", csv_path, "input CSV")->required();
  plot->add_option("--out", out_path, "output SVG")->required();
  plot->add_option("--x", x_column, "abscissa column (default: first)");
  plot->add_option("--columns", columns, "ordinate columns")->delimiter(',');
  plot->add_flag("--loglog", loglog, "logarithmic axes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "nwidth: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*coeffs) {
      const Signal g = parse_signal(signal_spec);
      const auto c = coefficients(g, k_max);
      CsvTable t;
      t.header = {"k", "a_k", "b_k", "provenance"};
      const std::string prov = to_string(c.provenance);
      t.add_row({"0", format_number(c.a0), "0", prov});
      for (int k = 1; k <= c.K; ++k) {
        const auto i = static_cast<std::size_t>(k);
        t.add_row({std::to_string(k), format_number(c.a[i]), format_number(c.b[i]), prov});
      }
      emit(t, out_path, out);
    } else if (*exact) {
      const Signal g = parse_signal(signal_spec);
      const int K = exact_k ? *exact_k : std::max(4096, 8 * n_max);
      if (K < 1) throw UsageError("--k-max must be positive");
      const auto spec = signal_spectrum(g, K);
      const auto curve = width_curve(spec, n_max);
      CsvTable t;
      t.header = {"N", "delta_N", "d_N_lo", "d_N_hi", "exact", "method"};
      for (const auto& r : curve.rows)
        t.add_row({std::to_string(r.N), format_number(r.delta), format_number(r.d_lo),
                   format_number(r.d_hi), r.exact ? "1" : "0", r.method});
      emit(t, out_path, out);
    } else if (*pod) {
      const Signal g = parse_signal(signal_spec);
      if (n_max >= std::min(nx, nmu)) throw UsageError("--n-max must be below min(nx, nmu)");
      std::optional<BasisSpec> b;
      if (!basis.empty()) b = parse_basis(basis);
      const auto X = snapshot_matrix(g, nx, nmu);
      const auto curve = pod_width_curve(singular_values(X), X.rows(), X.nmu, n_max);
      CsvTable t;
      t.header = {"N", "delta_pod"};
      std::vector<ProjectionDistance> dist;
      if (b) {
        t.header.insert(t.header.end(), {"dist_L2_basis", "dist_Linf_basis"});
        dist = projection_distance_curve(X, basis_matrix(b->parity, b->count, midpoint_grid(nx)));
      }
      for (const auto& r : curve.rows) {
        std::vector<std::string> row{std::to_string(r.N), format_number(r.delta)};
        if (b) {
          const auto i = static_cast<std::size_t>(r.N);
          const bool have = i < dist.size();
          row.push_back(have ? format_number(dist[i].l2) : "nan");
          row.push_back(have ? format_number(dist[i].linf) : "nan");
        }
        t.add_row(std::move(row));
      }
      emit(t, out_path, out);
    } else if (*tri) {
      out << format_number(trigamma(parse_positive(tri_arg))) << "\n";
    } else if (*experiment) {
      ExperimentConfig cfg;
      if (!config_path.empty()) apply_config_file(cfg, config_path);
      if (seed) cfg.seed = *seed;
      cfg.outdir = outdir;
      cfg.plots = !no_plots;
      std::vector<std::string> names;
      if (exp_name == "all") {
        names = experiment_names();
      } else {
        cfg.name = exp_name;
        validate(cfg);
        names = {exp_name};
      }
      const auto result = run_experiments(cfg, names);
      for (const auto& r : result.report.summary)
        out << r.experiment << "," << r.parameter << "," << format_number(r.value) << ","
            << format_number(r.residual) << "\n";
      for (const auto& f : result.failures) err << "nwidth: experiment failed: " << f << "\n";
      if (!result.failures.empty()) return 1;
    } else if (*plot) {
      PlotOptions o;
      o.x_column = x_column;
      o.y_columns = columns;
      o.loglog = loglog;
      plot_svg(csv_path, out_path, o);
    }
  } catch (const UsageError& e) {
    err << "nwidth: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "nwidth: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace nwidth
