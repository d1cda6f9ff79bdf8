// SPDX-License-Identifier: Apache-2.0
#include "nwidth/snapshots.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>

#include "nwidth/errors.hpp"
#include "nwidth/parallel.hpp"

namespace nwidth {

std::vector<double> midpoint_grid(int n) {
  if (n < 1) throw UsageError("grid size must be positive");
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (2.0 * i + 1.0) / (2.0 * n);
  return x;
}

namespace {

void check_sizes(int nx, int nmu) {
  if (nx < 1 || nmu < 1) throw UsageError("grid sizes must be positive");
}

/// x_i - mu_j = ((2i+1) nmu - (2j+1) nx) / (2 nx nmu), zero-based i and j.
double grid_difference(int i, int j, int nx, int nmu) {
  const std::int64_t num = (2 * static_cast<std::int64_t>(i) + 1) * nmu -
                           (2 * static_cast<std::int64_t>(j) + 1) * nx;
  return static_cast<double>(num) / (2.0 * static_cast<double>(nx) * nmu);
}

}  // namespace

SnapshotMatrix snapshot_matrix(const Signal& g, int nx, int nmu) {
  check_sizes(nx, nmu);
  SnapshotMatrix X;
  X.nx = nx;
  X.nmu = nmu;
  X.values.resize(nx, nmu);
  parallel_for(static_cast<std::size_t>(nmu), [&](std::size_t jj) {
    const int j = static_cast<int>(jj);
    for (int i = 0; i < nx; ++i) X.values(i, j) = g.right_limit(grid_difference(i, j, nx, nmu));
  });
  return X;
}

SnapshotMatrix snapshot_matrix(const TensorDatum& g, int nx, int ny, int nmu) {
  check_sizes(nx, nmu);
  if (ny < 1) throw UsageError("grid sizes must be positive");
  SnapshotMatrix X;
  X.nx = nx;
  X.ny = ny;
  X.nmu = nmu;
  X.values.resize(static_cast<Eigen::Index>(nx) * ny, nmu);
  const auto ys = midpoint_grid(ny);
  parallel_for(static_cast<std::size_t>(nmu), [&](std::size_t jj) {
    const int j = static_cast<int>(jj);
    for (int l = 0; l < ny; ++l) {
      for (int i = 0; i < nx; ++i) {
        X.values(static_cast<Eigen::Index>(l) * nx + i, j) =
            g.sample(grid_difference(i, j, nx, nmu), ys[static_cast<std::size_t>(l)]);
      }
    }
  });
  return X;
}

std::vector<double> singular_values(const Eigen::MatrixXd& X) {
  if (X.rows() == 0 || X.cols() == 0) return {};
  // Tall matrices are reduced to their triangular QR factor first, which has
  // the same singular values. Then divide and conquer on the bidiagonal form.
  Eigen::BDCSVD<Eigen::MatrixXd> svd;
  if (X.rows() > 2 * X.cols()) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(X);
    svd.compute(qr.matrixQR().topRows(X.cols()).triangularView<Eigen::Upper>().toDenseMatrix());
  } else {
    svd.compute(X);
  }
  if (svd.info() != Eigen::Success) {
    std::ostringstream os;
    os << "SVD failed on a " << X.rows() << "x" << X.cols() << " matrix";
    throw SvdError(os.str());
  }
  const Eigen::VectorXd& sv = svd.singularValues();
  std::vector<double> s(sv.data(), sv.data() + sv.size());
  double frob = 0.0;
  for (Eigen::Index j = 0; j < X.cols(); ++j) frob += X.col(j).squaredNorm();
  double sum = 0.0;
  for (auto it = s.rbegin(); it != s.rend(); ++it) sum += *it * *it;
  if (std::abs(sum - frob) > 1e-10 * std::max(frob, 1e-300)) {
    std::ostringstream os;
    os.precision(17);
    os << "singular values fail the Frobenius check: sum sigma^2 = " << sum
       << ", ||X||_F^2 = " << frob;
    throw SvdError(os.str());
  }
  return s;
}

std::vector<double> singular_values(const SnapshotMatrix& X) { return singular_values(X.values); }

WidthCurve pod_width_curve(const std::vector<double>& sigma, int rows, int nmu, int n_max) {
  if (rows < 1 || nmu < 1) throw UsageError("grid sizes must be positive");
  if (n_max < 0) throw UsageError("n_max must be nonnegative");
  if (static_cast<std::size_t>(n_max) > sigma.size())
    throw UsageError("n_max exceeds the number of singular values");
  const double scale = 1.0 / (static_cast<double>(rows) * nmu);
  std::vector<double> suffix(sigma.size() + 1, 0.0);
  for (std::size_t k = sigma.size(); k-- > 0;) suffix[k] = suffix[k + 1] + sigma[k] * sigma[k];
  WidthCurve c;
  for (int N = 0; N <= n_max; ++N) {
    WidthRow r;
    r.N = N;
    const std::size_t idx = std::min(static_cast<std::size_t>(N), sigma.size());
    r.delta = std::sqrt(suffix[idx] * scale);
    r.d_lo = r.delta;
    r.d_hi = std::numeric_limits<double>::quiet_NaN();
    r.exact = false;
    r.method = "pod";
    c.rows.push_back(r);
  }
  return c;
}

Eigen::MatrixXd basis_matrix(Parity parity, int N, const std::vector<double>& grid) {
  if (N < 1) throw UsageError("basis size must be positive");
  if (parity == Parity::merged) throw UsageError("basis parity must be even or odd");
  const auto n = static_cast<Eigen::Index>(grid.size());
  int top = 0;
  std::vector<std::pair<int, bool>> cols;  // (frequency, is_sine)
  if (parity == Parity::even) cols.emplace_back(0, false);
  for (int k = 1; static_cast<int>(cols.size()) < N; ++k) {
    const int f = parity == Parity::odd ? 2 * k - 1 : 2 * k;
    cols.emplace_back(f, false);
    if (static_cast<int>(cols.size()) < N) cols.emplace_back(f, true);
    top = f;
  }
  // A period 2/f on (0, 1) holds 2 n / f nodes.
  if (top > 0 && 2.0 * static_cast<double>(n) / top < 4.0)
    throw UsageError("grid too coarse for the requested basis: fewer than four nodes per period");
  Eigen::MatrixXd psi(n, N);
  for (int c = 0; c < N; ++c) {
    const auto [f, sine] = cols[static_cast<std::size_t>(c)];
    for (Eigen::Index i = 0; i < n; ++i) {
      const double x = grid[static_cast<std::size_t>(i)];
      if (f == 0) {
        psi(i, c) = 1.0;
      } else {
        const double arg = std::numbers::pi * f * x;
        psi(i, c) = std::numbers::sqrt2 * (sine ? std::sin(arg) : std::cos(arg));
      }
    }
  }
  return psi;
}

namespace {

ProjectionDistance distances_of(const Eigen::MatrixXd& R, double inv_rows) {
  ProjectionDistance d;
  double sum = 0.0;
  for (Eigen::Index j = 0; j < R.cols(); ++j) {
    const double e = R.col(j).squaredNorm() * inv_rows;
    sum += e;
    d.linf = std::max(d.linf, std::sqrt(e));
  }
  d.l2 = std::sqrt(sum / static_cast<double>(R.cols()));
  return d;
}

}  // namespace

std::vector<ProjectionDistance> projection_distance_curve(const SnapshotMatrix& X,
                                                          const Eigen::MatrixXd& psi) {
  if (psi.rows() != X.nx) throw UsageError("basis rows must match the spatial grid");
  const double inv_nx = 1.0 / X.nx;
  const double inv_rows = 1.0 / X.rows();
  Eigen::MatrixXd R = X.values;
  std::vector<ProjectionDistance> out{distances_of(R, inv_rows)};
  for (Eigen::Index c = 0; c < psi.cols(); ++c) {
    const auto col = psi.col(c);
    for (int l = 0; l < X.ny; ++l) {
      auto block = R.middleRows(static_cast<Eigen::Index>(l) * X.nx, X.nx);
      const Eigen::RowVectorXd coeff = (col.transpose() * block) * inv_nx;
      block.noalias() -= col * coeff;
    }
    out.push_back(distances_of(R, inv_rows));
  }
  return out;
}

ProjectionDistance projection_distances(const SnapshotMatrix& X, const Eigen::MatrixXd& psi) {
  return projection_distance_curve(X, psi).back();
}

}  // namespace nwidth
