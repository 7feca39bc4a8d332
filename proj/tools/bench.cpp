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

// Timing harness for the kernels that carry dual serial/parallel paths:
// the Pauli-basis scan, statevector gate application, and the VQLS cost
// double sum. The serial variants are the reference implementations the
// tests compare against; this binary reports their relative speed.

#include <chrono>
#include <cstdio>
#include <numbers>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qburgers/circuits.hpp"
#include "qburgers/decomposition.hpp"
#include "qburgers/embedding.hpp"
#include "qburgers/vqls.hpp"

using namespace qburgers;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename F>
double time_best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, seconds(t0));
  }
  return best;
}

void report(const char* name, double serial, double parallel, double max_diff) {
  std::printf("%-22s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   max|diff| %.2e\n",
              name, serial * 1e3, parallel * 1e3,
              parallel > 0 ? serial / parallel : 0.0, max_diff);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp not enabled; parallel paths run serially\n");
#endif

  const GridConfig grid =
      GridConfig::from_domain(4, 4, 2.0 * std::numbers::pi, 0.25, 1.0, 2);
  const DenseVector u0 = initial_state(grid, 0.5, std::numbers::pi);
  const EmbeddedSystem sys = build_embedded_system(grid, carleman_initial_vector(grid, u0));

  // Pauli-basis scan over 4^7 strings
  {
    std::vector<PauliTerm> a, b;
    const double ts = time_best_of(3, [&] { a = pauli_decompose_serial(sys.L_e); });
    const double tp = time_best_of(3, [&] { b = pauli_decompose(sys.L_e); });
    double diff = std::abs(static_cast<double>(a.size()) - static_cast<double>(b.size()));
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      diff = std::max(diff, std::abs(a[i].coefficient - b[i].coefficient));
    }
    report("pauli_decompose", ts, tp, diff);
  }

  // statevector application on a 16-qubit register
  {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> dist(0.0, 1.0);
    const int width = 16;
    DenseVector psi(std::int64_t{1} << width);
    for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) = Complex(dist(rng), dist(rng));
    psi /= psi.norm();

    Circuit c;
    c.width = width;
    std::uniform_int_distribution<int> qubit(0, width - 1);
    std::uniform_real_distribution<double> angle(0.0, 6.28);
    while (c.gates.size() < 160) {
      const int a = qubit(rng), b = qubit(rng);
      if (a == b) continue;
      switch (c.gates.size() % 4) {
        case 0: c.gates.push_back(make_x(a)); break;
        case 1: c.gates.push_back(make_cx(a, b)); break;
        case 2: c.gates.push_back(Gate{GateKind::RY, {a}, angle(rng)}); break;
        default: c.gates.push_back(make_swap(a, b)); break;
      }
    }

    DenseVector serial_out, parallel_out;
    const double ts = time_best_of(3, [&] {
      serial_out = psi;
      apply_serial(c, serial_out);
    });
    const double tp = time_best_of(3, [&] {
      parallel_out = psi;
      qburgers::apply(c, parallel_out);
    });
    report("statevector apply", ts, tp,
           (serial_out - parallel_out).cwiseAbs().maxCoeff());
  }

  // VQLS local cost double sum over (l, l', k)
  {
    const auto terms = decompose_full(grid);
    const CostWorkspace ws = make_cost_workspace(terms, prepare_b(sys.B_e));
    AnsatzConfig cfg;
    cfg.qubits = sys.qubit_count;
    cfg.layers = 3;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
    std::vector<double> theta(static_cast<std::size_t>(cfg.param_count()));
    for (double& t : theta) t = dist(rng);
    const DenseVector psi = ansatz_state(cfg, theta);

    double cs = 0.0, cp = 0.0;
    const double ts = time_best_of(5, [&] { cs = local_cost_serial(ws, psi); });
    const double tp = time_best_of(5, [&] { cp = local_cost(ws, psi); });
    report("local_cost", ts, tp, std::abs(cs - cp));
  }

  return 0;
}
