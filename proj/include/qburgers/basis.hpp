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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qburgers/types.hpp"

namespace qburgers {

/// Single-qubit operator alphabet.
///
/// The rho set is the mixed tau/identity set used by the decomposition:
///   rho0 = |0><0|, rho1 = |0><1|, rho2 = |1><0|, rho3 = |1><1|, rho4 = I.
/// The sigma set is indexed sigma0 = X, sigma1 = Y, sigma2 = Z, sigma3 = I.
/// Note that this sigma ordering is deliberate and differs from the common
/// (I, X, Y, Z) convention; consumers of exported Pauli strings should read
/// the index key in the README.
enum class BasisFactor : std::uint8_t {
  rho0,
  rho1,
  rho2,
  rho3,
  rho4,
  sigma0,  // Pauli X
  sigma1,  // Pauli Y
  sigma2,  // Pauli Z
  sigma3,  // identity
};

// tau_k and rho_k coincide for k = 0..3.
inline constexpr BasisFactor tau0 = BasisFactor::rho0;
inline constexpr BasisFactor tau1 = BasisFactor::rho1;
inline constexpr BasisFactor tau2 = BasisFactor::rho2;
inline constexpr BasisFactor tau3 = BasisFactor::rho3;

/// True for rho0..rho4 (the mixed set used in decompositions).
bool in_mixed_set(BasisFactor f);

Eigen::Matrix2cd factor_matrix(BasisFactor f);

std::string factor_name(BasisFactor f);

/// Unitary completion rule for a single factor: rho1, rho2 -> sigma0 (X);
/// rho0, rho3, rho4 -> sigma3 (I). Throws for factors outside the mixed set.
BasisFactor rho_bar(BasisFactor f);

/// rho * rho^T for a mixed-set factor; always one of {rho0, rho3, rho4}.
BasisFactor rho_rho_t(BasisFactor f);

/// Digit-wise quaternary index f_k = 2*i_k + j_k over the low `bits` bits of
/// i and j, most significant digit first. Paired with rho_for_digit this
/// addresses block (i, j) of a 2^bits-block matrix.
std::vector<int> quaternary_index(std::uint64_t i, std::uint64_t j, int bits);

/// Bitstring form; both strings must have equal length (throws otherwise).
/// quaternary_index("110", "111") == "331".
std::string quaternary_index(std::string_view i_bits, std::string_view j_bits);

BasisFactor rho_for_digit(int digit);

/// Factors for the block selector |i><j| on `bits` qubits.
std::vector<BasisFactor> block_selector(std::uint64_t i, std::uint64_t j, int bits);

/// Kronecker product of the per-factor matrices, leftmost factor most
/// significant. Throws std::length_error above `dim_cap`.
SparseMatrix realize(std::span<const BasisFactor> factors,
                     std::int64_t dim_cap = kRealizationCap);

SparseMatrix realize(std::initializer_list<BasisFactor> factors);

}  // namespace qburgers
