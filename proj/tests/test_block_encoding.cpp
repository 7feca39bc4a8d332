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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "qburgers/block_encoding.hpp"

using namespace qburgers;

namespace {

GridConfig reference_grid() {
  return GridConfig::from_domain(4, 4, 2.0 * std::numbers::pi, 0.25, 1.0, 2);
}

DecompositionTerm pure_term(std::vector<BasisFactor> factors) {
  DecompositionTerm t;
  t.term_class = TermClass::L2a;
  t.total_qubits = static_cast<int>(factors.size());
  t.rho_prefix = std::move(factors);
  t.coefficient = Complex(1.0, 0.0);
  return t;
}

// the worked example: rho0 (x) rho1 (x) rho2 (x) rho3 (x) rho4 (x) P for a
// bare permutation P on 2s qubits
DecompositionTerm worked_example_term() {
  DecompositionTerm t;
  t.term_class = TermClass::L2b;
  t.rho_prefix = {BasisFactor::rho0, BasisFactor::rho1, BasisFactor::rho2,
                  BasisFactor::rho3, BasisFactor::rho4};
  SuperdiagFactors sd;
  sd.s = 2;
  sd.j = 1;
  sd.l = 0;
  sd.plus = true;
  sd.with_d = false;  // a plain permutation slot
  sd.suffix_qubits = 0;
  t.superdiag = sd;
  t.total_qubits = 5 + 4;
  t.coefficient = Complex(1.0, 0.0);
  return t;
}

}  // namespace

TEST_CASE("completion of pure tensors applies the bar rule slotwise") {
  const DecompositionTerm t = pure_term({BasisFactor::rho2, BasisFactor::rho1});
  const DecompositionTerm bar = completion(t);
  CHECK(bar.rho_prefix ==
        std::vector<BasisFactor>{BasisFactor::sigma0, BasisFactor::sigma0});

  const DecompositionTerm id_term =
      pure_term({BasisFactor::rho4, BasisFactor::rho4, BasisFactor::rho4});
  CHECK(max_abs_diff(realize_completion(id_term), realize_term(id_term)) ==
        doctest::Approx(0.0));
}

TEST_CASE("simple complements") {
  const DecompositionTerm t = pure_term({BasisFactor::rho0});
  const DenseMatrix comp = DenseMatrix(realize_complement(t));
  DenseMatrix rho3 = DenseMatrix::Zero(2, 2);
  rho3(1, 1) = Complex(1.0, 0.0);
  CHECK((comp - rho3).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("gram factors stay in the diagonal set") {
  const GridConfig g = reference_grid();
  for (const auto& t : decompose_full(g)) {
    for (BasisFactor f : gram_factors(t)) {
      CHECK((f == BasisFactor::rho0 || f == BasisFactor::rho3 || f == BasisFactor::rho4));
    }
  }
}

TEST_CASE("completion and complement identities on every reference-config term") {
  const GridConfig g = reference_grid();
  const auto terms = decompose_full(g);
  for (const auto& t : terms) {
    const SparseMatrix l = realize_term(t);
    const SparseMatrix lbar = realize_completion(t);
    const SparseMatrix lc = SparseMatrix(lbar - l);
    const SparseMatrix lt = SparseMatrix(l.adjoint());

    // completion is unitary
    CHECK(unitarity_error(lbar) <= 1e-12);
    // bar L^T = L bar^T = L L^T
    const SparseMatrix gram = SparseMatrix(l * lt);
    CHECK(max_abs_diff(SparseMatrix(lbar * lt), gram) <= 1e-12);
    CHECK(max_abs_diff(SparseMatrix(l * SparseMatrix(lbar.adjoint())), gram) <= 1e-12);
    // gram idempotency
    CHECK(max_abs_diff(SparseMatrix(gram * gram), gram) <= 1e-12);
    // complement annihilates the term
    CHECK(max_abs(SparseMatrix(lc * lt)) <= 1e-12);
    // complement gram is the orthogonal projector
    CHECK(max_abs_diff(SparseMatrix(lc * SparseMatrix(lc.adjoint())),
                       SparseMatrix(sparse_identity(l.rows()) - gram)) <= 1e-12);
  }
}

TEST_CASE("gram structure matches the realized slot pattern") {
  const GridConfig g = reference_grid();
  for (const auto& t : decompose_L2b(g)) {
    const std::vector<BasisFactor> gram = gram_factors(t);
    const SparseMatrix expected = realize(gram);
    const SparseMatrix l = realize_term(t);
    CHECK(max_abs_diff(SparseMatrix(l * SparseMatrix(l.adjoint())), expected) <= 1e-12);
  }
}

TEST_CASE("every reference-config term block encodes soundly") {
  const GridConfig g = reference_grid();
  const auto terms = decompose_full(g);
  const int width = g.embedded_qubits();
  for (std::size_t id = 0; id < terms.size(); ++id) {
    CAPTURE(id);
    const BlockEncoding enc = block_encode(terms[id]);
    CHECK(enc.width == width);
    CHECK(enc.u1.q() <= width);
    const VerifyReport rep = verify_encoding(enc, terms[id]);
    if (!rep.ok) {
      FAIL_CHECK(rep.detail);
    }
  }
}

TEST_CASE("control count equals the non-identity gram slots") {
  const GridConfig g = reference_grid();
  for (const auto& t : decompose_full(g)) {
    int expected = 0;
    for (BasisFactor f : gram_factors(t)) {
      if (f != BasisFactor::rho4) ++expected;
    }
    CHECK(block_encode(t).u1.q() == expected);
  }
}

TEST_CASE("worked example reproduces the published structure") {
  const DecompositionTerm t = worked_example_term();

  // L L^T = rho0 (x) rho0 (x) rho3 (x) rho3 (x) rho4 (x) I
  const std::vector<BasisFactor> gram = gram_factors(t);
  CHECK(gram[0] == BasisFactor::rho0);
  CHECK(gram[1] == BasisFactor::rho0);
  CHECK(gram[2] == BasisFactor::rho3);
  CHECK(gram[3] == BasisFactor::rho3);
  for (std::size_t i = 4; i < gram.size(); ++i) CHECK(gram[i] == BasisFactor::rho4);

  const BlockEncoding enc = block_encode(t);
  // one C^4X
  CHECK(enc.u1.q() == 4);
  CHECK(enc.u1.controls == std::vector<int>{1, 2, 3, 4});
  CHECK(enc.u1.control_on_one == std::vector<bool>{false, false, true, true});

  // two NOT gates plus the circuit for P
  int x_gates = 0;
  for (const Gate& gate : enc.u2.gates) {
    if (gate.kind == GateKind::X && gate.qubits[0] <= 5) ++x_gates;
  }
  CHECK(x_gates == 2);
  const std::size_t p_gates = p_plus_circuit(2).gates.size();
  CHECK(enc.u2.gates.size() == 2 + p_gates);  // trivial commutations add nothing

  const VerifyReport rep = verify_encoding(enc, t);
  CHECK(rep.ok);
}

TEST_CASE("published circuit boxes for the time-difference terms") {
  // L = I (x) rho2 (x) I...: completion flips exactly one slot
  const GridConfig g = reference_grid();
  const auto l1 = decompose_L1(g);
  // sub == 1 is the rho4^(m-1) (x) rho2 term
  const DecompositionTerm& t = l1[1];
  const BlockEncoding enc = block_encode(t);
  CHECK(enc.u1.q() == 1);
  REQUIRE(enc.u2.gates.size() == 1);
  CHECK(enc.u2.gates[0].kind == GateKind::X);

  // identity term: U1 degenerates to a bare X on the ancilla, U2 is empty
  const BlockEncoding id_enc = block_encode(l1[0]);
  CHECK(id_enc.u1.q() == 0);
  CHECK(id_enc.u2.gates.empty());
}

TEST_CASE("negative control: damaged encodings are reported") {
  const GridConfig g = reference_grid();
  const auto terms = decompose_full(g);
  DecompositionTerm t = terms[1];  // a term with a nontrivial completion
  BlockEncoding enc = block_encode(t);
  REQUIRE(!enc.u2.gates.empty());
  enc.u2.gates.pop_back();
  const VerifyReport rep = verify_encoding(enc, t);
  CHECK(!rep.ok);
  CHECK(rep.block_error > 1e-12);
}

TEST_CASE("theorem bounds on the reference configuration") {
  const GridConfig g = reference_grid();
  const int n = g.embedded_qubits();
  for (const auto& t : decompose_full(g)) {
    const BlockEncoding enc = block_encode(t);
    CHECK(enc.u1.q() <= n);
    if (t.term_class == TermClass::L2b) {
      // at most log(alpha nt nx^(alpha-2)) bar-rule X gates
      int x_gates = 0;
      for (const Gate& gate : enc.u2.gates) {
        if (gate.kind == GateKind::X &&
            gate.qubits[0] <= static_cast<int>(t.rho_prefix.size())) {
          ++x_gates;
        }
      }
      const int bound = g.m() + g.r() + (g.alpha - 2) * g.s();
      CHECK(x_gates <= bound);
    }
  }
}

TEST_CASE("resource estimates") {
  const GridConfig g = reference_grid();

  SUBCASE("identity term costs a single clifford") {
    const auto l1 = decompose_L1(g);
    const ResourceCount rc = resource_estimate(l1[0]);
    CHECK(rc.clifford == 1);
    CHECK(rc.t == 0);
    CHECK(rc.cqx_q == 0);
  }

  SUBCASE("counts are deterministic") {
    const auto terms = decompose_full(g);
    for (const auto& t : terms) {
      const ResourceCount a = resource_estimate(t);
      const ResourceCount b = resource_estimate(t);
      CHECK(a.clifford == b.clifford);
      CHECK(a.t == b.t);
      CHECK(a.cqx_q == b.cqx_q);
    }
  }

  SUBCASE("table aggregates") {
    const ResourceTable table = resource_table(g);
    CHECK(table.rows.size() == 49);
    CHECK(table.l1.count == 3);
    CHECK(table.l2a.count == 42);
    CHECK(table.l2b.count == 4);
    CHECK(table.qubit_count == 8);  // log2(128) + 1
    CHECK(table.l1.clifford_min == 1);
    CHECK(table.l1.t_min == 0);

    // once the control chains are deep the superdiagonal class dominates
    GridConfig wide = g;
    wide.nx = 64;
    const ResourceTable wide_table = resource_table(wide);
    CHECK(wide_table.l2b.clifford_max >= wide_table.l2a.clifford_max);
    CHECK(wide_table.l2b.t_max >= wide_table.l2a.t_max);

    const std::string csv = resource_table_csv(table);
    CHECK(csv.rfind("term_id,class,j,l,q,clifford,t\n", 0) == 0);

    const auto doc = resource_table_json(g, table);
    CHECK(doc["classes"]["L2b"]["count"] == 4);
    CHECK(doc["qubit_count"] == 8);
  }

  SUBCASE("alpha sweep grows the diagonal class as alpha(alpha+1)") {
    GridConfig g2 = g;
    const TermCountBreakdown b2 = term_count_breakdown(g2);
    GridConfig g4 = g;
    g4.alpha = 4;
    const TermCountBreakdown b4 = term_count_breakdown(g4);
    CHECK(b2.l2a * (4 * 5) == b4.l2a * (2 * 3));
  }
}

TEST_CASE("encoding json export") {
  const GridConfig g = reference_grid();
  const auto terms = decompose_full(g);
  const BlockEncoding enc = block_encode(terms.back());
  const auto doc = encoding_to_json(terms.size() - 1, terms.back(), enc);
  CHECK(doc["class"] == "L2b");
  CHECK(doc["u1"]["target"] == 0);
  CHECK(doc["u2"]["width"] == 8);
  CHECK(!doc["u2"]["gates"].empty());
}
