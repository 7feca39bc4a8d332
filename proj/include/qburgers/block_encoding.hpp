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
#include <string>
#include <vector>

#include <json.hpp>

#include "qburgers/circuits.hpp"
#include "qburgers/decomposition.hpp"
#include "qburgers/types.hpp"

namespace qburgers {

/// Slot-wise unitary completion of a term: rho factors map through the
/// rho-bar rule; for superdiagonal terms the D projector is dropped and the
/// permutation/commutation product is kept verbatim.
DecompositionTerm completion(const DecompositionTerm& term);

SparseMatrix realize_completion(const DecompositionTerm& term);

/// Unitary complement: completion minus the term itself.
SparseMatrix realize_complement(const DecompositionTerm& term);

/// Slot-wise factors of L L^T over the full register; every slot is one of
/// rho0, rho3, rho4.
std::vector<BasisFactor> gram_factors(const DecompositionTerm& term);

/// The reflection part of the encoding: a single multi-controlled X onto the
/// ancilla, with one control per non-identity slot of L L^T (rho0 slots
/// control on |0>, rho3 slots on |1>).
struct U1Descriptor {
  std::vector<int> controls;        // qubit indices in the enlarged register
  std::vector<bool> control_on_one; // polarity per control
  int target = 0;                   // ancilla, the new most significant qubit
  int q() const { return static_cast<int>(controls.size()); }
};

struct BlockEncoding {
  U1Descriptor u1;
  Circuit u2;      // identity on the ancilla tensor the completion circuit
  int width = 0;   // register qubits excluding the ancilla
};

/// Theorem-style two-factor encoding U = U1 U2 with the term in the
/// top-right block.
BlockEncoding block_encode(const DecompositionTerm& term);

SparseMatrix realize_u1(const U1Descriptor& u1, int total_width);
SparseMatrix realize_u2(const BlockEncoding& enc);

struct VerifyReport {
  bool ok = false;
  double u1_unitarity = 0.0;
  double u2_unitarity = 0.0;
  double u_unitarity = 0.0;
  double block_error = 0.0;        // top-right block vs term realization
  double gram_idempotency = 0.0;   // || (LL^T)^2 - LL^T ||_max
  std::string detail;
};

/// Dense verification of one encoding (width <= 12 including the ancilla).
VerifyReport verify_encoding(const BlockEncoding& enc, const DecompositionTerm& term);

/// Gate-count rules. Multi-controlled X gates with q > 2 cost a linear
/// number of Clifford and T gates (dirty-ancilla construction); Toffolis a
/// fixed amount; everything else is Clifford only.
struct CostingConfig {
  std::int64_t clifford_per_control = 16;
  std::int64_t t_per_control = 8;
  std::int64_t toffoli_clifford = 9;
  std::int64_t toffoli_t = 7;
};

struct ResourceCount {
  std::int64_t clifford = 0;
  std::int64_t t = 0;
  int cqx_q = 0;
  TermClass term_class = TermClass::L1;
};

ResourceCount resource_estimate(const DecompositionTerm& term,
                                const CostingConfig& costing = {});

struct ResourceRow {
  std::size_t term_id = 0;
  TermClass term_class = TermClass::L1;
  int j = 0;
  int l = 0;
  int q = 0;
  std::int64_t clifford = 0;
  std::int64_t t = 0;
};

struct ClassAggregate {
  std::int64_t count = 0;
  std::int64_t clifford_min = 0, clifford_max = 0;
  std::int64_t t_min = 0, t_max = 0;
};

struct ResourceTable {
  std::vector<ResourceRow> rows;
  ClassAggregate l1, l2a, l2b;
  int qubit_count = 0;  // log2(alpha nt nx^alpha) + 1
};

ResourceTable resource_table(const GridConfig& grid, const CostingConfig& costing = {});

std::string resource_table_csv(const ResourceTable& table);
nlohmann::ordered_json resource_table_json(const GridConfig& grid, const ResourceTable& table);

nlohmann::ordered_json circuit_to_json(const Circuit& c);
nlohmann::ordered_json encoding_to_json(std::size_t term_id, const DecompositionTerm& term,
                                        const BlockEncoding& enc);

}  // namespace qburgers
