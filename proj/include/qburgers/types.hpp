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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace qburgers {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;
using Triplet = Eigen::Triplet<Complex>;

/// Matrices larger than this are refused by the dense realization helpers.
inline constexpr std::int64_t kRealizationCap = std::int64_t{1} << 16;

bool is_pow2(std::int64_t n);

/// log2 of an exact power of two; throws std::invalid_argument otherwise.
int log2_exact(std::int64_t n);

std::int64_t ipow(std::int64_t base, int exp);

SparseMatrix sparse_identity(std::int64_t n);

/// Kronecker product in coordinate form; never densifies.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

DenseVector kron(const DenseVector& a, const DenseVector& b);

double max_abs(const SparseMatrix& m);
double max_abs_diff(const SparseMatrix& a, const SparseMatrix& b);

/// max |(U U^dagger - I)_{ij}|, the unitarity defect.
double unitarity_error(const SparseMatrix& u);

}  // namespace qburgers
