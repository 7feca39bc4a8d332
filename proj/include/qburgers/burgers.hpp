// Copyright 2026 The qburgers Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

#include "qburgers/types.hpp"

namespace qburgers {

/// Discretization and physics parameters for the periodic 1D viscous
/// Burgers' equation and its Carleman lift.
///
/// Constraints: n_x = 2^s (s >= 2), n_t = 2^m (m >= 1), alpha = 2^r (r >= 0).
/// The grid is x_j = j*dx with dx = L_x/(n_x - 1) when derived from a domain
/// length.
struct GridConfig {
  int nx = 4;
  int nt = 4;
  int alpha = 2;
  double dx = 1.0;
  double dt = 0.25;
  double nu = 1.0;
  double domain_length = 0.0;  // informational; dx is authoritative

  static GridConfig from_domain(int nx, int nt, double length, double dt,
                                double nu, int alpha);

  /// Throws std::invalid_argument on any constraint violation.
  void validate() const;

  int s() const;  // log2 nx
  int m() const;  // log2 nt
  int r() const;  // log2 alpha

  /// Carleman dimension: sum_{j=1..alpha} nx^j.
  std::int64_t carleman_dim() const;
  /// Width of one embedded grade block: nx^alpha.
  std::int64_t embedded_block_dim() const;
  /// Full embedded system dimension: alpha * nt * nx^alpha.
  std::int64_t embedded_dim() const;
  int embedded_qubits() const;
};

/// Diffusion operator: circulant tridiagonal with diagonal -2 nu/dx^2 and
/// neighbor entries nu/dx^2 (periodic wrap in the corners).
SparseMatrix build_f1(const GridConfig& grid);

/// Advection operator on the tensor square: (F2 (u (x) u))_j =
/// -u_j (u_{j+1} - u_{j-1}) / (2 dx), indices mod n_x. Shape nx x nx^2.
SparseMatrix build_f2(const GridConfig& grid);

/// Block upper-bidiagonal Carleman matrix on the graded space of dimension
/// sum_j nx^j. Grade blocks combine shifted copies of F1 (diagonal) and F2
/// (superdiagonal).
SparseMatrix build_carleman_A(const GridConfig& grid);

/// Gaussian profile evaluated at the grid nodes:
/// u0_j = (sqrt(2 pi) sigma^2)^{-1} exp(-(x_j - mu)^2 / (2 sigma^2)).
DenseVector initial_state(const GridConfig& grid, double sigma, double mu);

/// Stacked tensor powers (u, u^(x)2, ..., u^(x)alpha).
DenseVector carleman_initial_vector(const GridConfig& grid, const DenseVector& u0);

struct CarlemanSystem {
  SparseMatrix A;  // Carleman matrix, Delta x Delta
  SparseMatrix L;  // backward-Euler system, (nt Delta) x (nt Delta)
  DenseVector B;   // right-hand side (y0, 0, ..., 0)
  DenseVector y0;
};

/// Backward-Euler time system: identity in the first block row, then
/// -I subdiagonal and M = I - dt*A diagonal blocks.
CarlemanSystem build_time_system(const SparseMatrix& A, const GridConfig& grid,
                                 const DenseVector& y0);

/// Direct solve of L y = B; dense LU at small dimension, sparse LU above.
/// Throws std::runtime_error when L is singular or the residual check fails.
DenseVector classical_solve(const SparseMatrix& L, const DenseVector& B);

}  // namespace qburgers
