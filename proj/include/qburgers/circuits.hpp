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

#include "qburgers/types.hpp"

namespace qburgers {

/// Gate set for the circuit IR.
///
/// Conventions, fixed once for the whole project:
///  - qubit index 0 is the leftmost tensor slot (most significant bit of a
///    basis-state index);
///  - gates listed in a Circuit are applied to the state in list order, so
///    the realized matrix is the product of gate matrices in reverse list
///    order.
enum class GateKind {
  X,
  Z,
  CX,    // qubits = {control, target}
  CZ,    // qubits = {a, b}
  SWAP,  // qubits = {a, b}
  CqX,   // qubits = {controls..., target}; all controls on |1>
  RY,    // qubits = {target}, param = angle
  CRY,   // qubits = {control, target}, param = angle
};

struct Gate {
  GateKind kind;
  std::vector<int> qubits;
  double param = 0.0;
};

struct Circuit {
  int width = 0;
  std::vector<Gate> gates;
};

Gate make_x(int q);
Gate make_cx(int control, int target);
Gate make_swap(int a, int b);
Gate make_cqx(std::vector<int> controls, int target);

/// The x(n_x+1) mod n_x^2 modular-multiplication permutation on 2s qubits:
/// basis states |j> with j < n_x map to |(n_x+1) j|; the remaining columns
/// form a unitary complement realized by plain CNOT copies.
Circuit p1_circuit(int s);

/// Decrementer on the low-order s qubits (wraps mod n_x). Together with
/// p1_circuit this realizes the permutation whose top n_x rows pick out the
/// forward-neighbor products u_j u_{j+1}.
Circuit p2_plus_circuit(int s);

/// Incrementer on the low-order s qubits; backward-neighbor analog.
Circuit p2_minus_circuit(int s);

/// Composite permutations: the p2 stage applied first, then p1.
Circuit p_plus_circuit(int s);
Circuit p_minus_circuit(int s);

/// SWAP network realizing the commutation matrix K^(a,b) with exactly
/// log2(a)*log2(b) adjacent swaps.
Circuit commutation_circuit(std::int64_t a, std::int64_t b);

/// Append `inner`'s gates shifted by `offset` qubits.
void append(Circuit& c, const Circuit& inner, int offset);

/// Realized matrix; width is capped at 16 qubits.
SparseMatrix circuit_to_matrix(const Circuit& c);

/// In-place statevector application, parallelized over amplitude chunks.
void apply(const Circuit& c, DenseVector& psi);

/// Single-threaded reference implementation kept for testing.
void apply_serial(const Circuit& c, DenseVector& psi);

void apply_gate(const Gate& g, int width, DenseVector& psi, bool parallel);

}  // namespace qburgers
