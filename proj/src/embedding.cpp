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

#include "qburgers/embedding.hpp"

#include <stdexcept>

#include "qburgers/basis.hpp"

namespace qburgers {

namespace {

// |0...0><0...0| of the given dimension (1x1 scalar one for dim 1)
SparseMatrix zero_projector(std::int64_t dim) {
  SparseMatrix p(dim, dim);
  p.insert(0, 0) = Complex(1.0, 0.0);
  return p;
}

SparseMatrix graded_sum(const SparseMatrix& op, int j, int nx) {
  SparseMatrix total;
  for (int l = 0; l < j; ++l) {
    SparseMatrix piece = kron(sparse_identity(ipow(nx, l)),
                              kron(op, sparse_identity(ipow(nx, j - l - 1))));
    total = (total.size() == 0) ? piece : SparseMatrix(total + piece);
  }
  return total;
}

}  // namespace

SparseMatrix commutation_matrix(std::int64_t a, std::int64_t b) {
  if (!is_pow2(a) || !is_pow2(b)) {
    throw std::invalid_argument("commutation_matrix: dimensions must be powers of two");
  }
  SparseMatrix k(a * b, a * b);
  k.reserve(Eigen::VectorXi::Constant(static_cast<int>(a * b), 1));
  for (std::int64_t x = 0; x < a; ++x) {
    for (std::int64_t y = 0; y < b; ++y) {
      k.insert(y * a + x, x * b + y) = Complex(1.0, 0.0);
    }
  }
  k.makeCompressed();
  return k;
}

SparseMatrix embed_diag_block(int j, const GridConfig& grid) {
  if (j < 1 || j > grid.alpha) throw std::invalid_argument("embed_diag_block: j out of range");
  return kron(zero_projector(ipow(grid.nx, grid.alpha - j)),
              graded_sum(build_f1(grid), j, grid.nx));
}

SparseMatrix padded_f2(const GridConfig& grid) {
  const SparseMatrix f2 = build_f2(grid);
  const std::int64_t n2 = static_cast<std::int64_t>(grid.nx) * grid.nx;
  std::vector<Triplet> trips;
  for (int k = 0; k < f2.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(f2, k); it; ++it) {
      trips.emplace_back(it.row(), it.col(), it.value());
    }
  }
  SparseMatrix out(n2, n2);
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

SparseMatrix embed_superdiag_block_direct(int j, const GridConfig& grid) {
  if (j < 1 || j > grid.alpha - 1) {
    throw std::invalid_argument("embed_superdiag_block: j out of range");
  }
  const std::int64_t dim = grid.embedded_block_dim();
  const SparseMatrix block = graded_sum(build_f2(grid), j, grid.nx);
  std::vector<Triplet> trips;
  for (int k = 0; k < block.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(block, k); it; ++it) {
      trips.emplace_back(it.row(), it.col(), it.value());
    }
  }
  SparseMatrix out(dim, dim);
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

SparseMatrix embed_superdiag_block(int j, const GridConfig& grid) {
  if (j < 1 || j > grid.alpha - 1) {
    throw std::invalid_argument("embed_superdiag_block: j out of range");
  }
  const int nx = grid.nx;
  const SparseMatrix pf2 = padded_f2(grid);

  // I^(x)l (x) F2 = K^(nx, nx^l) . (F2 (x) I^(x)l) . K^(nx^l, nx^2); note the
  // orientation follows K^(a,b)(x (x) y) = y (x) x with x of dimension a.
  SparseMatrix inner;
  for (int l = 0; l < j; ++l) {
    const std::int64_t nl = ipow(nx, l);
    SparseMatrix left = kron(zero_projector(nx), commutation_matrix(nx, nl));
    SparseMatrix mid = kron(pf2, sparse_identity(nl));
    SparseMatrix piece = SparseMatrix(SparseMatrix(left * mid) * commutation_matrix(nl, nx * nx));
    piece = kron(piece, sparse_identity(ipow(nx, j - l - 1)));
    inner = (inner.size() == 0) ? piece : SparseMatrix(inner + piece);
  }
  return kron(zero_projector(ipow(nx, grid.alpha - j - 1)), inner);
}

SparseMatrix build_embedded_A(const GridConfig& grid) {
  grid.validate();
  const int r = grid.r();
  SparseMatrix total;
  auto add = [&total](const SparseMatrix& piece) {
    total = (total.size() == 0) ? piece : SparseMatrix(total + piece);
  };
  for (int j = 1; j <= grid.alpha; ++j) {
    auto sel = block_selector(static_cast<std::uint64_t>(j - 1),
                              static_cast<std::uint64_t>(j - 1), r);
    add(kron(realize(sel), embed_diag_block(j, grid)));
  }
  for (int j = 1; j <= grid.alpha - 1; ++j) {
    auto sel = block_selector(static_cast<std::uint64_t>(j - 1),
                              static_cast<std::uint64_t>(j), r);
    add(kron(realize(sel), embed_superdiag_block(j, grid)));
  }
  return total;
}

DenseVector embed_initial_vector(const GridConfig& grid, const DenseVector& y0) {
  if (y0.size() != grid.carleman_dim()) {
    throw std::invalid_argument("embed_initial_vector: y0 length mismatch");
  }
  const std::int64_t block = grid.embedded_block_dim();
  DenseVector out = DenseVector::Zero(static_cast<std::int64_t>(grid.alpha) * block);
  std::int64_t src = 0;
  for (int j = 1; j <= grid.alpha; ++j) {
    const std::int64_t len = ipow(grid.nx, j);
    out.segment(static_cast<std::int64_t>(j - 1) * block, len) = y0.segment(src, len);
    src += len;
  }
  return out;
}

EmbeddedSystem build_embedded_system(const GridConfig& grid, const DenseVector& y0) {
  EmbeddedSystem sys;
  sys.A_e = build_embedded_A(grid);
  const DenseVector ye0 = embed_initial_vector(grid, y0);
  CarlemanSystem time = build_time_system(sys.A_e, grid, ye0);
  sys.L_e = std::move(time.L);
  sys.B_e = std::move(time.B);
  sys.qubit_count = grid.embedded_qubits();
  return sys;
}

Trajectory extract_solution(const DenseVector& Y_e, const GridConfig& grid) {
  const std::int64_t block = grid.embedded_block_dim();
  const std::int64_t step = static_cast<std::int64_t>(grid.alpha) * block;
  if (Y_e.size() != static_cast<std::int64_t>(grid.nt) * step) {
    throw std::invalid_argument("extract_solution: length mismatch");
  }
  Trajectory traj;
  for (int t = 0; t < grid.nt; ++t) {
    const std::int64_t t0 = static_cast<std::int64_t>(t) * step;
    traj.u.push_back(Y_e.segment(t0, grid.nx));
    for (int j = 1; j <= grid.alpha; ++j) {
      const std::int64_t len = ipow(grid.nx, j);
      const std::int64_t pad0 = t0 + static_cast<std::int64_t>(j - 1) * block + len;
      const std::int64_t pad_len = block - len;
      if (pad_len > 0) {
        traj.max_pad_abs = std::max(
            traj.max_pad_abs, Y_e.segment(pad0, pad_len).cwiseAbs().maxCoeff());
      }
    }
  }
  return traj;
}

Trajectory extract_solution_unembedded(const DenseVector& Y, const GridConfig& grid) {
  const std::int64_t step = grid.carleman_dim();
  if (Y.size() != static_cast<std::int64_t>(grid.nt) * step) {
    throw std::invalid_argument("extract_solution_unembedded: length mismatch");
  }
  Trajectory traj;
  for (int t = 0; t < grid.nt; ++t) {
    traj.u.push_back(Y.segment(static_cast<std::int64_t>(t) * step, grid.nx));
  }
  return traj;
}

}  // namespace qburgers
