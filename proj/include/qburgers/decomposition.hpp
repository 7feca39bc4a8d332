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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qburgers/basis.hpp"
#include "qburgers/burgers.hpp"
#include "qburgers/circuits.hpp"
#include "qburgers/types.hpp"

namespace qburgers {

enum class TermClass { L1, L2a, L2b };

std::string term_class_name(TermClass c);

/// Structured factor for the superdiagonal terms. It denotes the matrix
///   (P0 (x) K^(nx, nx^l)) . ((D.P) (x) I_{nx}^(x)l) . K^(nx^l, nx^2)
/// on (l+2)s qubits, followed by an identity suffix, where P0 projects the
/// leading s qubits onto |0...0>, D = P0 (x) I_{nx}, P is the plus or minus
/// neighbor permutation, and K^(a,b)(x (x) y) = y (x) x for x of dimension a.
/// The product is kept structured because the block encoding consumes
/// exactly this shape.
struct SuperdiagFactors {
  int s = 0;      // log2 nx
  int j = 0;      // grade index, 1..alpha-1
  int l = 0;      // inner shift index, 0..j-1
  bool plus = true;
  bool with_d = true;  // false drops D (used by completions and synthetic terms)
  int suffix_qubits = 0;

  int bracket_qubits() const { return (l + 2) * s; }
};

/// One term of the linear combination. L1/L2a terms are pure tensor products
/// of mixed-set factors (rho_prefix covers the whole register); L2b terms
/// append a SuperdiagFactors block and an identity suffix. All scaling lives
/// in the coefficient; the realized factor matrix is 0/1-valued.
struct DecompositionTerm {
  Complex coefficient{0.0, 0.0};
  TermClass term_class = TermClass::L1;
  std::vector<BasisFactor> rho_prefix;
  std::optional<SuperdiagFactors> superdiag;
  int total_qubits = 0;

  // enumeration provenance
  int j = 0;
  int l = 0;
  int sub = 0;
  int time_index = 0;  // 0: identity-like time factor, 1: projector time factor
};

/// F1 as 2*log2(nx)+3 mixed-set tensor terms with coefficients
/// nu/dx^2 * {-2, +1}.
struct RhoTerm {
  double coefficient = 0.0;
  std::vector<BasisFactor> factors;
};
std::vector<RhoTerm> decompose_F1(const GridConfig& grid);

/// Bidiagonal time-difference part: exactly log2(nt)+1 terms with
/// coefficients +-1.
std::vector<DecompositionTerm> decompose_L1(const GridConfig& grid);

/// Diagonal-block part: alpha(alpha+1)(2 log2 nx + 3) terms, each a pure
/// tensor product of mixed-set factors.
std::vector<DecompositionTerm> decompose_L2a(const GridConfig& grid);

/// Superdiagonal part: 2 alpha (alpha-1) structured terms (empty for
/// alpha = 1).
std::vector<DecompositionTerm> decompose_L2b(const GridConfig& grid);

/// Full decomposition; the coefficient-weighted realizations sum to the
/// embedded backward-Euler matrix exactly.
std::vector<DecompositionTerm> decompose_full(const GridConfig& grid);

struct TermCountBreakdown {
  std::int64_t l1 = 0;
  std::int64_t l2a = 0;
  std::int64_t l2b = 0;
  std::int64_t total = 0;
};
TermCountBreakdown term_count_breakdown(const GridConfig& grid);

/// Closed form log2(nt) + 2a(a+1)log2(nx) + a(5a+1) + 1; always equals the
/// enumerated term count.
std::int64_t term_count(const GridConfig& grid);

/// D / P+ / P- factorization of the padded advection matrix, with circuits.
struct F2Factorization {
  int s = 0;
  SparseMatrix D;
  SparseMatrix P_plus;
  SparseMatrix P_minus;
  Circuit p_plus;
  Circuit p_minus;
};
F2Factorization factor_F2(const GridConfig& grid);

/// Realization of the 0/1 factor matrix (coefficient not applied).
SparseMatrix realize_term(const DecompositionTerm& term);

/// Realization of a structured superdiagonal factor alone (bracket plus
/// identity suffix).
SparseMatrix realize_superdiag(const SuperdiagFactors& sd);

/// Sum of coefficient-weighted term realizations.
SparseMatrix reconstruct(const std::vector<DecompositionTerm>& terms);

// ---------------------------------------------------------------------------
// Pauli-basis oracle
// ---------------------------------------------------------------------------

/// One Pauli string: digits[k] indexes the factor on qubit k using the
/// project convention sigma0 = X, sigma1 = Y, sigma2 = Z, sigma3 = I.
struct PauliTerm {
  Complex coefficient{0.0, 0.0};
  std::vector<int> digits;
  std::string label() const;  // e.g. "XZI" (I for sigma3)
};

/// Trace-inner-product scan over all 4^Q strings, keeping |c| > tol.
/// Parallelized over strings; capped at Q <= 10.
std::vector<PauliTerm> pauli_decompose(const SparseMatrix& M, double tol = 1e-12);

/// Single-threaded reference implementation kept for testing.
std::vector<PauliTerm> pauli_decompose_serial(const SparseMatrix& M, double tol = 1e-12);

SparseMatrix pauli_reconstruct(const std::vector<PauliTerm>& terms, int qubits);

// ---------------------------------------------------------------------------
// JSON export (schema documented in the README)
// ---------------------------------------------------------------------------

nlohmann::ordered_json grid_to_json(const GridConfig& grid);
nlohmann::ordered_json terms_to_json(const GridConfig& grid,
                                     const std::vector<DecompositionTerm>& terms);

}  // namespace qburgers
