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

#include "qburgers/block_encoding.hpp"

#include <sstream>
#include <stdexcept>

#include "qburgers/embedding.hpp"

namespace qburgers {

DecompositionTerm completion(const DecompositionTerm& term) {
  DecompositionTerm bar = term;
  for (BasisFactor& f : bar.rho_prefix) f = rho_bar(f);
  if (bar.superdiag) bar.superdiag->with_d = false;
  return bar;
}

SparseMatrix realize_completion(const DecompositionTerm& term) {
  return realize_term(completion(term));
}

SparseMatrix realize_complement(const DecompositionTerm& term) {
  return SparseMatrix(realize_completion(term) - realize_term(term));
}

std::vector<BasisFactor> gram_factors(const DecompositionTerm& term) {
  std::vector<BasisFactor> out;
  out.reserve(static_cast<std::size_t>(term.total_qubits));
  for (BasisFactor f : term.rho_prefix) out.push_back(rho_rho_t(f));
  if (term.superdiag) {
    const SuperdiagFactors& sd = *term.superdiag;
    // bracket x bracket^T collapses to D (x) I; without D it is the identity
    for (int k = 0; k < sd.s; ++k) {
      out.push_back(sd.with_d ? BasisFactor::rho0 : BasisFactor::rho4);
    }
    const int rest = sd.bracket_qubits() - sd.s + sd.suffix_qubits;
    out.insert(out.end(), static_cast<std::size_t>(rest), BasisFactor::rho4);
  }
  return out;
}

BlockEncoding block_encode(const DecompositionTerm& term) {
  BlockEncoding enc;
  enc.width = term.total_qubits;

  const std::vector<BasisFactor> gram = gram_factors(term);
  for (std::size_t slot = 0; slot < gram.size(); ++slot) {
    if (gram[slot] == BasisFactor::rho4) continue;
    enc.u1.controls.push_back(static_cast<int>(slot) + 1);
    enc.u1.control_on_one.push_back(gram[slot] == BasisFactor::rho3);
  }
  enc.u1.target = 0;

  // U2 = I (x) completion; the ancilla (qubit 0) is untouched.
  const DecompositionTerm bar = completion(term);
  Circuit u2;
  u2.width = term.total_qubits + 1;
  for (std::size_t slot = 0; slot < bar.rho_prefix.size(); ++slot) {
    if (bar.rho_prefix[slot] == BasisFactor::sigma0) {
      u2.gates.push_back(make_x(static_cast<int>(slot) + 1));
    }
  }
  if (bar.superdiag) {
    const SuperdiagFactors& sd = *bar.superdiag;
    const std::int64_t nx = std::int64_t{1} << sd.s;
    const std::int64_t nl = ipow(nx, sd.l);
    const int bracket0 = 1 + static_cast<int>(bar.rho_prefix.size());
    // application order: trailing commutation, then P, then leading commutation
    append(u2, commutation_circuit(nl, nx * nx), bracket0);
    append(u2, sd.plus ? p_plus_circuit(sd.s) : p_minus_circuit(sd.s), bracket0);
    append(u2, commutation_circuit(nx, nl), bracket0 + sd.s);
  }
  enc.u2 = std::move(u2);
  return enc;
}

SparseMatrix realize_u1(const U1Descriptor& u1, int total_width) {
  const std::int64_t dim = std::int64_t{1} << total_width;
  std::int64_t mask0 = 0, mask1 = 0;
  for (std::size_t i = 0; i < u1.controls.size(); ++i) {
    const std::int64_t bit = std::int64_t{1} << (total_width - 1 - u1.controls[i]);
    if (u1.control_on_one[i]) {
      mask1 |= bit;
    } else {
      mask0 |= bit;
    }
  }
  const std::int64_t anc = std::int64_t{1} << (total_width - 1 - u1.target);
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(dim));
  for (std::int64_t v = 0; v < dim; ++v) {
    const bool fires = ((v & mask1) == mask1) && ((v & mask0) == 0);
    trips.emplace_back(fires ? (v ^ anc) : v, v, Complex(1.0, 0.0));
  }
  SparseMatrix out(dim, dim);
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

SparseMatrix realize_u2(const BlockEncoding& enc) { return circuit_to_matrix(enc.u2); }

VerifyReport verify_encoding(const BlockEncoding& enc, const DecompositionTerm& term) {
  VerifyReport rep;
  if (enc.width + 1 > 12) {
    throw std::length_error("verify_encoding: width exceeds the dense-check cap");
  }
  const SparseMatrix l = realize_term(term);
  const std::int64_t n = l.rows();

  const SparseMatrix u1 = realize_u1(enc.u1, enc.width + 1);
  const SparseMatrix u2 = realize_u2(enc);
  const SparseMatrix u = SparseMatrix(u1 * u2);

  rep.u1_unitarity = unitarity_error(u1);
  rep.u2_unitarity = unitarity_error(u2);
  rep.u_unitarity = unitarity_error(u);

  const DenseMatrix ud(u);
  const DenseMatrix ld(l);
  rep.block_error = (ud.topRightCorner(n, n) - ld).cwiseAbs().maxCoeff();

  const SparseMatrix gram = SparseMatrix(l * SparseMatrix(l.adjoint()));
  rep.gram_idempotency = max_abs_diff(SparseMatrix(gram * gram), gram);

  const double tol = 1e-12;
  rep.ok = rep.u1_unitarity <= tol && rep.u2_unitarity <= tol && rep.u_unitarity <= tol &&
           rep.block_error <= tol && rep.gram_idempotency <= tol;
  if (!rep.ok) {
    std::ostringstream oss;
    oss << "verification failed: u1=" << rep.u1_unitarity << " u2=" << rep.u2_unitarity
        << " u=" << rep.u_unitarity << " block=" << rep.block_error
        << " idem=" << rep.gram_idempotency;
    rep.detail = oss.str();
  }
  return rep;
}

namespace {

void add_cqx_cost(int q, const CostingConfig& costing, std::int64_t& clifford, std::int64_t& t) {
  if (q <= 1) {
    clifford += 1;  // X or CX
  } else if (q == 2) {
    clifford += costing.toffoli_clifford;
    t += costing.toffoli_t;
  } else {
    clifford += costing.clifford_per_control * q;
    t += costing.t_per_control * q;
  }
}

}  // namespace

ResourceCount resource_estimate(const DecompositionTerm& term, const CostingConfig& costing) {
  ResourceCount rc;
  rc.term_class = term.term_class;

  // U1: one multi-controlled X
  int q = 0;
  for (BasisFactor f : gram_factors(term)) {
    if (f != BasisFactor::rho4) ++q;
  }
  rc.cqx_q = q;
  add_cqx_cost(q, costing, rc.clifford, rc.t);

  // U2: one X per sigma0 slot of the completion
  for (BasisFactor f : term.rho_prefix) {
    if (rho_bar(f) == BasisFactor::sigma0) rc.clifford += 1;
  }
  if (term.superdiag) {
    const SuperdiagFactors& sd = *term.superdiag;
    const std::int64_t s = sd.s;
    const std::int64_t l = sd.l;
    // commutation networks: 3 CNOTs per adjacent swap
    rc.clifford += 3 * s * (l * s);        // K^(nx, nx^l)
    rc.clifford += 3 * (l * s) * (2 * s);  // K^(nx^l, nx^2)
    // p1: s CNOT copies
    rc.clifford += s;
    // p2 stage: X, CNOT, then the multi-controlled chain
    rc.clifford += 2;
    for (int chain_q = 2; chain_q <= sd.s - 1; ++chain_q) {
      add_cqx_cost(chain_q, costing, rc.clifford, rc.t);
    }
  }
  return rc;
}

ResourceTable resource_table(const GridConfig& grid, const CostingConfig& costing) {
  const std::vector<DecompositionTerm> terms = decompose_full(grid);
  ResourceTable table;
  table.qubit_count = grid.embedded_qubits() + 1;

  auto update = [](ClassAggregate& agg, const ResourceCount& rc) {
    if (agg.count == 0) {
      agg.clifford_min = agg.clifford_max = rc.clifford;
      agg.t_min = agg.t_max = rc.t;
    } else {
      agg.clifford_min = std::min(agg.clifford_min, rc.clifford);
      agg.clifford_max = std::max(agg.clifford_max, rc.clifford);
      agg.t_min = std::min(agg.t_min, rc.t);
      agg.t_max = std::max(agg.t_max, rc.t);
    }
    agg.count += 1;
  };

  for (std::size_t id = 0; id < terms.size(); ++id) {
    const ResourceCount rc = resource_estimate(terms[id], costing);
    ResourceRow row;
    row.term_id = id;
    row.term_class = rc.term_class;
    row.j = terms[id].j;
    row.l = terms[id].l;
    row.q = rc.cqx_q;
    row.clifford = rc.clifford;
    row.t = rc.t;
    table.rows.push_back(row);
    switch (rc.term_class) {
      case TermClass::L1: update(table.l1, rc); break;
      case TermClass::L2a: update(table.l2a, rc); break;
      case TermClass::L2b: update(table.l2b, rc); break;
    }
  }
  return table;
}

std::string resource_table_csv(const ResourceTable& table) {
  std::ostringstream oss;
  oss << "term_id,class,j,l,q,clifford,t\n";
  for (const ResourceRow& row : table.rows) {
    oss << row.term_id << ',' << term_class_name(row.term_class) << ',' << row.j << ','
        << row.l << ',' << row.q << ',' << row.clifford << ',' << row.t << '\n';
  }
  return oss.str();
}

namespace {

nlohmann::ordered_json aggregate_json(const ClassAggregate& agg) {
  return nlohmann::ordered_json{{"count", agg.count},
                                {"clifford_min", agg.clifford_min},
                                {"clifford_max", agg.clifford_max},
                                {"t_min", agg.t_min},
                                {"t_max", agg.t_max}};
}

}  // namespace

nlohmann::ordered_json resource_table_json(const GridConfig& grid, const ResourceTable& table) {
  nlohmann::ordered_json root;
  root["schema_version"] = 1;
  root["config"] = grid_to_json(grid);
  root["qubit_count"] = table.qubit_count;
  root["classes"] = nlohmann::ordered_json{{"L1", aggregate_json(table.l1)},
                                           {"L2a", aggregate_json(table.l2a)},
                                           {"L2b", aggregate_json(table.l2b)}};
  return root;
}

nlohmann::ordered_json circuit_to_json(const Circuit& c) {
  nlohmann::ordered_json root;
  root["width"] = c.width;
  nlohmann::ordered_json gates = nlohmann::ordered_json::array();
  for (const Gate& g : c.gates) {
    nlohmann::ordered_json jg;
    switch (g.kind) {
      case GateKind::X: jg["kind"] = "x"; break;
      case GateKind::Z: jg["kind"] = "z"; break;
      case GateKind::CX: jg["kind"] = "cx"; break;
      case GateKind::CZ: jg["kind"] = "cz"; break;
      case GateKind::SWAP: jg["kind"] = "swap"; break;
      case GateKind::CqX: jg["kind"] = "cqx"; break;
      case GateKind::RY: jg["kind"] = "ry"; break;
      case GateKind::CRY: jg["kind"] = "cry"; break;
    }
    jg["qubits"] = g.qubits;
    if (g.kind == GateKind::RY || g.kind == GateKind::CRY) jg["param"] = g.param;
    gates.push_back(std::move(jg));
  }
  root["gates"] = std::move(gates);
  return root;
}

nlohmann::ordered_json encoding_to_json(std::size_t term_id, const DecompositionTerm& term,
                                        const BlockEncoding& enc) {
  nlohmann::ordered_json root;
  root["term_id"] = term_id;
  root["class"] = term_class_name(term.term_class);
  nlohmann::ordered_json controls = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < enc.u1.controls.size(); ++i) {
    controls.push_back({{"qubit", enc.u1.controls[i]},
                        {"on", enc.u1.control_on_one[i] ? 1 : 0}});
  }
  root["u1"] = nlohmann::ordered_json{{"controls", std::move(controls)},
                                      {"target", enc.u1.target}};
  root["u2"] = circuit_to_json(enc.u2);
  return root;
}

}  // namespace qburgers
