// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "nwidth/signals.hpp"
#include "nwidth/spectrum.hpp"

namespace nwidth {

/// Nodes (2i - 1)/(2n), i = 1..n.
std::vector<double> midpoint_grid(int n);

/// Samples of u_mu on space x parameter midpoint grids.
///
/// Column j holds u_{mu_j} at the spatial nodes; for a bivariate datum each
/// column stacks n_y copies of the x grid (x fastest). Quadrature weights are
/// 1/rows() in space and 1/n_mu in the parameter.
struct SnapshotMatrix {
  int nx = 0;
  int ny = 1;
  int nmu = 0;
  Eigen::MatrixXd values;

  int rows() const { return nx * ny; }
};

/// X_ij = g(x_i - mu_j), sampled as the right limit so that grid points
/// landing exactly on a jump take the value of the piece to their right.
/// x_i - mu_j is formed with a single rounding from the integer numerator.
SnapshotMatrix snapshot_matrix(const Signal& g, int nx, int nmu);
SnapshotMatrix snapshot_matrix(const TensorDatum& g, int nx, int ny, int nmu);

/// Nonincreasing singular values (bidiagonal divide and conquer, values
/// only), checked against the squared Frobenius norm.
std::vector<double> singular_values(const Eigen::MatrixXd& X);
std::vector<double> singular_values(const SnapshotMatrix& X);

/// delta_N^2 = sum_{k>N} sigma_k^2 / (rows n_mu), N = 0..n_max <= sigma.size().
WidthCurve pod_width_curve(const std::vector<double>& sigma, int rows, int nmu, int n_max);

/// Grid values of the first N functions of the trigonometric basis of the
/// given parity, orthonormal on (0, 1): for odd parity sqrt2 cos((2k-1) pi x),
/// sqrt2 sin((2k-1) pi x), k = 1, 2, ...; for even parity the constant 1 then
/// sqrt2 cos(2k pi x), sqrt2 sin(2k pi x). Requires at least four nodes per
/// period of the highest frequency.
Eigen::MatrixXd basis_matrix(Parity parity, int N, const std::vector<double>& grid);

struct ProjectionDistance {
  double l2 = 0.0;
  double linf = 0.0;
};

/// With r_j the residual of column j after the discrete projection
/// (1/n_x) Psi Psi^T: L2 = sqrt(mean_j |r_j|^2), Linf = max_j |r_j|, where
/// |r|^2 = (1/rows) sum_i r_i^2.
ProjectionDistance projection_distances(const SnapshotMatrix& X, const Eigen::MatrixXd& psi);

/// Distances for the leading 0..psi.cols() columns, computed incrementally.
std::vector<ProjectionDistance> projection_distance_curve(const SnapshotMatrix& X,
                                                          const Eigen::MatrixXd& psi);

}  // namespace nwidth
