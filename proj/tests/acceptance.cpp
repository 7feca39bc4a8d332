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

// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "qburgers/block_encoding.hpp"
#include "qburgers/burgers.hpp"
#include "qburgers/decomposition.hpp"
#include "qburgers/embedding.hpp"
#include "qburgers/vqls.hpp"

using namespace qburgers;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what, double seconds) {
  std::printf("[%s] criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double now_seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GridConfig make_grid(int nx, int nt, int alpha) {
  return GridConfig::from_domain(nx, nt, 2.0 * std::numbers::pi, 0.25, 1.0, alpha);
}

GridConfig reference_grid() { return make_grid(4, 4, 2); }

SparseMatrix reference_L_e(const GridConfig& g, double sigma = 0.5,
                           double mu = std::numbers::pi) {
  const DenseVector u0 = initial_state(g, sigma, mu);
  return build_embedded_system(g, carleman_initial_vector(g, u0)).L_e;
}

// --------------------------------------------------------------------------

void criterion1_exact_reconstruction() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (auto [nx, nt, alpha] :
       std::vector<std::tuple<int, int, int>>{{4, 4, 2}, {8, 8, 2}, {4, 4, 4}}) {
    const auto tc = std::chrono::steady_clock::now();
    const GridConfig g = make_grid(nx, nt, alpha);
    const double err = max_abs_diff(reconstruct(decompose_full(g)), reference_L_e(g));
    const double secs = now_seconds(tc);
    ok = ok && err <= 1e-12 && secs < 60.0;
    detail += "(" + std::to_string(nx) + "," + std::to_string(nt) + "," +
              std::to_string(alpha) + ") err=" + std::to_string(err) + " ";
  }
  report(1, ok, "exact term reconstruction of the embedded matrix: " + detail,
         now_seconds(t0));
}

void criterion2_pauli_count() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto terms = pauli_decompose(reference_L_e(reference_grid()), 1e-12);
  const double secs = now_seconds(t0);
  const bool ok = terms.size() == 1142 && secs < 300.0;
  report(2, ok,
         "Pauli-basis scan of the 128-dim system yields " +
             std::to_string(terms.size()) + " strings (expect 1142)",
         secs);
}

void criterion3_term_count_formula() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (auto [nx, nt, alpha] :
       std::vector<std::tuple<int, int, int>>{{4, 2, 1}, {8, 4, 1}, {4, 4, 2},
                                              {8, 8, 2}, {4, 4, 4}, {8, 4, 4}}) {
    const GridConfig g = make_grid(nx, nt, alpha);
    ok = ok &&
         static_cast<std::int64_t>(decompose_full(g).size()) == term_count(g);
  }
  // the originally reported 73 for (4,4,2) is a documented discrepancy, not a
  // target: enumeration and the closed form both give 49
  ok = ok && term_count(reference_grid()) == 49;
  report(3, ok,
         "enumerated term count equals the closed form for 6 configs "
         "(alpha in {1,2,4}); (4,4,2) gives 49 with the reported 73 noted",
         now_seconds(t0));
}

void criterion4_block_encoding_soundness() {
  const auto t0 = std::chrono::steady_clock::now();
  const GridConfig g = reference_grid();
  const auto terms = decompose_full(g);
  bool ok = true;
  for (const auto& term : terms) {
    const VerifyReport rep = verify_encoding(block_encode(term), term);
    ok = ok && rep.ok;
  }

  // the worked example: rho0 x rho1 x rho2 x rho3 x rho4 x P needs one C^4X,
  // two NOT gates, and the circuit for P
  DecompositionTerm example;
  example.term_class = TermClass::L2b;
  example.rho_prefix = {BasisFactor::rho0, BasisFactor::rho1, BasisFactor::rho2,
                        BasisFactor::rho3, BasisFactor::rho4};
  SuperdiagFactors sd;
  sd.s = 2;
  sd.j = 1;
  sd.l = 0;
  sd.plus = true;
  sd.with_d = false;
  example.superdiag = sd;
  example.total_qubits = 9;
  example.coefficient = Complex(1.0, 0.0);
  const BlockEncoding enc = block_encode(example);
  int bar_not_gates = 0;  // bar-rule NOTs act on the prefix qubits 1..5
  for (const Gate& gate : enc.u2.gates) {
    if (gate.kind == GateKind::X && gate.qubits[0] <= 5) ++bar_not_gates;
  }
  const bool example_ok = enc.u1.q() == 4 && bar_not_gates == 2 &&
                          enc.u2.gates.size() == 2 + p_plus_circuit(2).gates.size() &&
                          verify_encoding(enc, example).ok;
  ok = ok && example_ok;

  report(4, ok,
         "all " + std::to_string(terms.size()) +
             " encodings unitary with the term in the top-right block; worked "
             "example uses one C^4X, two NOTs, and the P circuit",
         now_seconds(t0));
}

void criterion5_circuit_oracles() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  // explicit 4-point neighbor selectors
  const DenseMatrix plus = DenseMatrix(circuit_to_matrix(p_plus_circuit(2)));
  const DenseMatrix minus = DenseMatrix(circuit_to_matrix(p_minus_circuit(2)));
  const int fwd[4] = {1, 6, 11, 12};
  const int bwd[4] = {3, 4, 9, 14};
  for (int j = 0; j < 4; ++j) {
    for (int c = 0; c < 16; ++c) {
      ok = ok && std::abs(plus(j, c).real() - (c == fwd[j] ? 1.0 : 0.0)) < 1e-15;
      ok = ok && std::abs(minus(j, c).real() - (c == bwd[j] ? 1.0 : 0.0)) < 1e-15;
    }
  }

  // D P+- rebuilds the padded advection matrix
  for (int nx : {4, 8}) {
    const GridConfig g = make_grid(nx, 2, 2);
    const F2Factorization f = factor_F2(g);
    const SparseMatrix recon = SparseMatrix(
        (SparseMatrix(f.D * f.P_plus) - SparseMatrix(f.D * f.P_minus)) *
        Complex(-1.0 / (2.0 * g.dx), 0.0));
    ok = ok && max_abs_diff(recon, padded_f2(g)) <= 1e-12;
  }

  // swap networks equal the definitional permutation
  for (std::int64_t a : {2, 4, 8, 16}) {
    for (std::int64_t b : {2, 4, 8, 16}) {
      ok = ok && max_abs_diff(circuit_to_matrix(commutation_circuit(a, b)),
                              commutation_matrix(a, b)) == 0.0;
    }
  }

  report(5, ok,
         "P2+-P1 rows match the explicit neighbor selectors, D*P rebuilds the "
         "padded advection matrix, swap networks equal the commutation "
         "permutations up to 16x16",
         now_seconds(t0));
}

void criterion6_completion_identities() {
  const auto t0 = std::chrono::steady_clock::now();
  const GridConfig g = reference_grid();
  bool ok = true;
  for (const auto& term : decompose_full(g)) {
    const SparseMatrix l = realize_term(term);
    const SparseMatrix lbar = realize_completion(term);
    const SparseMatrix lc = SparseMatrix(lbar - l);
    const SparseMatrix lt = SparseMatrix(l.adjoint());
    const SparseMatrix gram = SparseMatrix(l * lt);
    ok = ok && unitarity_error(lbar) <= 1e-12;
    ok = ok && max_abs_diff(SparseMatrix(lbar * lt), gram) <= 1e-12;
    ok = ok && max_abs_diff(SparseMatrix(l * SparseMatrix(lbar.adjoint())), gram) <= 1e-12;
    ok = ok && max_abs_diff(SparseMatrix(gram * gram), gram) <= 1e-12;
    ok = ok && max_abs(SparseMatrix(lc * lt)) <= 1e-12;
  }
  report(6, ok,
         "completion/complement identities hold for every term at (4,4,2) to 1e-12",
         now_seconds(t0));
}

void criterion7_resource_scaling() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<double> cliff_model, cliff_val, t_model, t_val;
  bool qubits_ok = true;
  for (int nx : {4, 8, 16, 32, 64}) {
    GridConfig g = make_grid(nx, nx, 2);  // the cost model assumes nt = nx
    const ResourceTable table = resource_table(g);
    const double s = g.s();
    cliff_model.push_back(g.alpha * s * s);
    cliff_val.push_back(static_cast<double>(table.l2b.clifford_max));
    t_model.push_back(s * s);
    t_val.push_back(static_cast<double>(table.l2b.t_max));
    qubits_ok = qubits_ok && table.qubit_count == g.embedded_qubits() + 1;
  }
  auto fit_residual = [](const std::vector<double>& xs, const std::vector<double>& ys) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      num += xs[i] * ys[i];
      den += xs[i] * xs[i];
    }
    const double c = num / den;
    double rss = 0.0, yss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double r = ys[i] - c * xs[i];
      rss += r * r;
      yss += ys[i] * ys[i];
    }
    return std::sqrt(rss / yss);
  };
  const double cliff_res = fit_residual(cliff_model, cliff_val);
  const double t_res = fit_residual(t_model, t_val);
  const bool ok = cliff_res <= 0.10 && t_res <= 0.10 && qubits_ok;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "worst superdiagonal-term counts fit c*alpha*log2(nx)^2 "
                "(clifford residual %.3f) and c'*log2(nx)^2 (t residual %.3f); "
                "qubit count exact",
                cliff_res, t_res);
  report(7, ok, buf, now_seconds(t0));
}

void criterion8_vqls() {
  const auto t0 = std::chrono::steady_clock::now();
  const GridConfig g = reference_grid();
  const DenseVector u0 = initial_state(g, 0.5, std::numbers::pi);
  const EmbeddedSystem sys = build_embedded_system(g, carleman_initial_vector(g, u0));
  const DenseVector solution = classical_solve(sys.L_e, sys.B_e);
  const CostWorkspace ws = make_cost_workspace(decompose_full(g), prepare_b(sys.B_e));

  AnsatzConfig ansatz;
  ansatz.qubits = sys.qubit_count;
  ansatz.layers = 3;

  int passing = 0;
  std::string detail;
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    OptimizerConfig opt;
    opt.seed = seed;
    opt.tolerance = 1e-3;
    opt.max_iterations = 40000;
    const VqlsResult res = optimize(ws, ansatz, opt);
    const ComparisonReport rep = compare_solutions(res.state, solution, g);
    double worst = 0.0;
    for (double e : rep.per_step_rel_l2) worst = std::max(worst, e);
    const bool seed_ok = rep.fidelity >= 0.99 && worst <= 0.05;
    passing += seed_ok;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "seed%llu(fid=%.4f,l2=%.3f%s) ",
                  static_cast<unsigned long long>(seed), rep.fidelity, worst,
                  seed_ok ? "" : ",stalled");
    detail += buf;
  }
  const double secs = now_seconds(t0);
  const bool ok = passing >= 3 && secs <= 600.0;
  report(8, ok,
         "variational solve with 21 parameters: " + std::to_string(passing) +
             "/5 seeds reach fidelity >= 0.99 and per-step error <= 5%: " + detail,
         secs);
}

void criterion9_embedding_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  const GridConfig g = reference_grid();
  const DenseVector u0 = initial_state(g, 0.5, std::numbers::pi);
  const DenseVector y0 = carleman_initial_vector(g, u0);

  const EmbeddedSystem sys = build_embedded_system(g, y0);
  const Trajectory embedded = extract_solution(classical_solve(sys.L_e, sys.B_e), g);

  const CarlemanSystem plain = build_time_system(build_carleman_A(g), g, y0);
  const Trajectory reference =
      extract_solution_unembedded(classical_solve(plain.L, plain.B), g);

  double max_err = 0.0;
  for (std::size_t t = 0; t < embedded.u.size(); ++t) {
    const double scale = std::max(1.0, reference.u[t].cwiseAbs().maxCoeff());
    max_err = std::max(
        max_err, (embedded.u[t] - reference.u[t]).cwiseAbs().maxCoeff() / scale);
  }
  const bool ok = max_err <= 1e-10 && embedded.max_pad_abs <= 1e-12;
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "embedded and plain solves agree (max err %.2e); pad slots stay "
                "below 1e-12 (max %.2e)",
                max_err, embedded.max_pad_abs);
  report(9, ok, buf, now_seconds(t0));
}

}  // namespace

int main() {
  criterion1_exact_reconstruction();
  criterion2_pauli_count();
  criterion3_term_count_formula();
  criterion4_block_encoding_soundness();
  criterion5_circuit_oracles();
  criterion6_completion_identities();
  criterion7_resource_scaling();
  criterion8_vqls();
  criterion9_embedding_equivalence();

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", g_failures);
  return 1;
}
