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

#include "qburgers/burgers.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/SparseLU>

namespace qburgers {

GridConfig GridConfig::from_domain(int nx, int nt, double length, double dt,
                                   double nu, int alpha) {
  GridConfig g;
  g.nx = nx;
  g.nt = nt;
  g.alpha = alpha;
  g.dt = dt;
  g.nu = nu;
  g.domain_length = length;
  g.dx = length / (nx - 1);
  g.validate();
  return g;
}

void GridConfig::validate() const {
  if (!is_pow2(nx) || nx < 4) {
    throw std::invalid_argument("nx must be a power of two >= 4, got " + std::to_string(nx));
  }
  if (!is_pow2(nt) || nt < 2) {
    throw std::invalid_argument("nt must be a power of two >= 2, got " + std::to_string(nt));
  }
  if (!is_pow2(alpha) || alpha < 1) {
    throw std::invalid_argument("alpha must be a power of two >= 1, got " + std::to_string(alpha));
  }
  if (!(dx > 0.0)) throw std::invalid_argument("dx must be positive");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(nu > 0.0)) throw std::invalid_argument("nu must be positive");
}

int GridConfig::s() const { return log2_exact(nx); }
int GridConfig::m() const { return log2_exact(nt); }
int GridConfig::r() const { return log2_exact(alpha); }

std::int64_t GridConfig::carleman_dim() const {
  std::int64_t total = 0;
  for (int j = 1; j <= alpha; ++j) total += ipow(nx, j);
  return total;
}

std::int64_t GridConfig::embedded_block_dim() const { return ipow(nx, alpha); }

std::int64_t GridConfig::embedded_dim() const {
  return static_cast<std::int64_t>(alpha) * nt * embedded_block_dim();
}

int GridConfig::embedded_qubits() const { return log2_exact(embedded_dim()); }

SparseMatrix build_f1(const GridConfig& grid) {
  grid.validate();
  const int n = grid.nx;
  const double w = grid.nu / (grid.dx * grid.dx);
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(3 * n));
  for (int j = 0; j < n; ++j) {
    trips.emplace_back(j, j, Complex(-2.0 * w, 0.0));
    trips.emplace_back(j, (j + 1) % n, Complex(w, 0.0));
    trips.emplace_back(j, (j + n - 1) % n, Complex(w, 0.0));
  }
  SparseMatrix f1(n, n);
  f1.setFromTriplets(trips.begin(), trips.end());
  return f1;
}

SparseMatrix build_f2(const GridConfig& grid) {
  grid.validate();
  const int n = grid.nx;
  const double w = 1.0 / (2.0 * grid.dx);
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    // column n*j + k addresses the u_j u_k component of u (x) u
    trips.emplace_back(j, n * j + (j + 1) % n, Complex(-w, 0.0));
    trips.emplace_back(j, n * j + (j + n - 1) % n, Complex(w, 0.0));
  }
  SparseMatrix f2(n, static_cast<std::int64_t>(n) * n);
  f2.setFromTriplets(trips.begin(), trips.end());
  return f2;
}

namespace {

// sum_{l=0}^{j-1} I^(x)l (x) op (x) I^(x)(j-l-1), with op of shape nx x (nx*cols_per_row)
SparseMatrix graded_shift_sum(const SparseMatrix& op, int j, int nx) {
  SparseMatrix total;
  for (int l = 0; l < j; ++l) {
    SparseMatrix piece = kron(sparse_identity(ipow(nx, l)),
                              kron(op, sparse_identity(ipow(nx, j - l - 1))));
    total = (total.size() == 0) ? piece : SparseMatrix(total + piece);
  }
  return total;
}

}  // namespace

SparseMatrix build_carleman_A(const GridConfig& grid) {
  grid.validate();
  const int nx = grid.nx;
  const int alpha = grid.alpha;
  const SparseMatrix f1 = build_f1(grid);
  const SparseMatrix f2 = build_f2(grid);
  const std::int64_t delta = grid.carleman_dim();

  std::vector<std::int64_t> offset(static_cast<std::size_t>(alpha) + 1, 0);
  for (int j = 1; j <= alpha; ++j) {
    offset[static_cast<std::size_t>(j)] = offset[static_cast<std::size_t>(j - 1)] + ipow(nx, j);
  }
  // offset[j-1] is the start of grade block j (1-based grades)

  std::vector<Triplet> trips;
  auto place = [&trips](const SparseMatrix& block, std::int64_t row0, std::int64_t col0) {
    for (int k = 0; k < block.outerSize(); ++k) {
      for (SparseMatrix::InnerIterator it(block, k); it; ++it) {
        trips.emplace_back(row0 + it.row(), col0 + it.col(), it.value());
      }
    }
  };

  for (int j = 1; j <= alpha; ++j) {
    place(graded_shift_sum(f1, j, nx), offset[static_cast<std::size_t>(j - 1)],
          offset[static_cast<std::size_t>(j - 1)]);
    if (j < alpha) {
      place(graded_shift_sum(f2, j, nx), offset[static_cast<std::size_t>(j - 1)],
            offset[static_cast<std::size_t>(j)]);
    }
  }

  SparseMatrix a(delta, delta);
  a.setFromTriplets(trips.begin(), trips.end());
  return a;
}

DenseVector initial_state(const GridConfig& grid, double sigma, double mu) {
  grid.validate();
  if (sigma == 0.0) throw std::invalid_argument("initial_state: sigma must be nonzero");
  const double norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * sigma * sigma);
  DenseVector u0(grid.nx);
  for (int j = 0; j < grid.nx; ++j) {
    const double x = j * grid.dx;
    u0(j) = Complex(norm * std::exp(-(x - mu) * (x - mu) / (2.0 * sigma * sigma)), 0.0);
  }
  return u0;
}

DenseVector carleman_initial_vector(const GridConfig& grid, const DenseVector& u0) {
  if (u0.size() != grid.nx) {
    throw std::invalid_argument("carleman_initial_vector: u0 has wrong length");
  }
  DenseVector y0(grid.carleman_dim());
  DenseVector power = u0;
  std::int64_t off = 0;
  for (int j = 1; j <= grid.alpha; ++j) {
    y0.segment(off, power.size()) = power;
    off += power.size();
    if (j < grid.alpha) power = kron(power, u0);
  }
  return y0;
}

CarlemanSystem build_time_system(const SparseMatrix& A, const GridConfig& grid,
                                 const DenseVector& y0) {
  if (A.rows() != A.cols()) throw std::invalid_argument("build_time_system: A not square");
  if (y0.size() != A.rows()) throw std::invalid_argument("build_time_system: y0 length mismatch");
  const std::int64_t d = A.rows();
  const int nt = grid.nt;

  std::vector<Triplet> trips;
  for (std::int64_t i = 0; i < d; ++i) trips.emplace_back(i, i, Complex(1.0, 0.0));
  for (int mstep = 1; mstep < nt; ++mstep) {
    const std::int64_t r0 = static_cast<std::int64_t>(mstep) * d;
    for (std::int64_t i = 0; i < d; ++i) {
      trips.emplace_back(r0 + i, r0 - d + i, Complex(-1.0, 0.0));
      trips.emplace_back(r0 + i, r0 + i, Complex(1.0, 0.0));
    }
    for (int k = 0; k < A.outerSize(); ++k) {
      for (SparseMatrix::InnerIterator it(A, k); it; ++it) {
        trips.emplace_back(r0 + it.row(), r0 + it.col(), -grid.dt * it.value());
      }
    }
  }

  CarlemanSystem sys;
  sys.A = A;
  sys.L = SparseMatrix(static_cast<std::int64_t>(nt) * d, static_cast<std::int64_t>(nt) * d);
  sys.L.setFromTriplets(trips.begin(), trips.end());
  sys.B = DenseVector::Zero(static_cast<std::int64_t>(nt) * d);
  sys.B.head(d) = y0;
  sys.y0 = y0;
  return sys;
}

DenseVector classical_solve(const SparseMatrix& L, const DenseVector& B) {
  if (L.rows() != L.cols()) throw std::invalid_argument("classical_solve: L not square");
  if (L.rows() != B.size()) throw std::invalid_argument("classical_solve: size mismatch");

  DenseVector y;
  if (L.rows() <= 512) {
    DenseMatrix dense(L);
    Eigen::PartialPivLU<DenseMatrix> lu(dense);
    y = lu.solve(B);
  } else {
    Eigen::SparseLU<SparseMatrix> lu;
    lu.compute(L);
    if (lu.info() != Eigen::Success) {
      throw std::runtime_error("classical_solve: factorization failed (singular matrix?)");
    }
    y = lu.solve(B);
  }

  const double bnorm = B.lpNorm<Eigen::Infinity>();
  const double resid = (L * y - B).lpNorm<Eigen::Infinity>();
  if (!(resid <= 1e-10 * std::max(bnorm, 1e-300)) || !y.allFinite()) {
    throw std::runtime_error("classical_solve: residual check failed (singular matrix?)");
  }
  return y;
}

}  // namespace qburgers
