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
#include <vector>

#include "qburgers/burgers.hpp"
#include "qburgers/types.hpp"

namespace qburgers {

/// Commutation (tensor-swap) permutation: K^(a,b) (x (x) y) = y (x) x for
/// x of dimension a and y of dimension b. Both dimensions must be powers of
/// two.
SparseMatrix commutation_matrix(std::int64_t a, std::int64_t b);

/// Grade-j diagonal block padded into the nx^alpha square: the graded F1 sum
/// sits in the top-left nx^j corner, everything else is zero.
SparseMatrix embed_diag_block(int j, const GridConfig& grid);

/// Grade-j superdiagonal block in factored commutation/F2 form. Equal to
/// embed_superdiag_block_direct entrywise; the equality is exercised in
/// tests.
SparseMatrix embed_superdiag_block(int j, const GridConfig& grid);

/// Same block by direct zero padding of the graded F2 sum.
SparseMatrix embed_superdiag_block_direct(int j, const GridConfig& grid);

/// Full embedded matrix: quaternary block addressing places the padded
/// diagonal blocks at (j-1, j-1) and the padded superdiagonal blocks at
/// (j-1, j) on the alpha x alpha block grid.
SparseMatrix build_embedded_A(const GridConfig& grid);

/// F2 padded into the nx^2 square (top nx rows hold F2, the rest is zero).
SparseMatrix padded_f2(const GridConfig& grid);

struct EmbeddedSystem {
  SparseMatrix A_e;
  SparseMatrix L_e;
  DenseVector B_e;
  int qubit_count = 0;
};

/// Zero-pad the stacked Carleman vector (grade j occupies the first nx^j
/// entries of its nx^alpha block; the trailing pad slots are zero).
DenseVector embed_initial_vector(const GridConfig& grid, const DenseVector& y0);

/// Backward-Euler system over the embedded matrix; B_e holds the padded
/// initial vector in time block 0.
EmbeddedSystem build_embedded_system(const GridConfig& grid, const DenseVector& y0);

struct Trajectory {
  std::vector<DenseVector> u;  // one velocity profile per time step
  double max_pad_abs = 0.0;    // largest |entry| seen in any pad slot
};

/// Velocity component (first nx entries of each time block) of an embedded
/// solution, plus diagnostics on the pad-slot magnitudes.
Trajectory extract_solution(const DenseVector& Y_e, const GridConfig& grid);

/// Same extraction from a solution of the unembedded system.
Trajectory extract_solution_unembedded(const DenseVector& Y, const GridConfig& grid);

}  // namespace qburgers
