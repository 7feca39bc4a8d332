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

#include "qburgers/circuits.hpp"

#include <cmath>
#include <stdexcept>

namespace qburgers {

namespace {

void check_gate(const Gate& g, int width) {
  std::uint64_t seen = 0;
  for (int q : g.qubits) {
    if (q < 0 || q >= width) throw std::invalid_argument("gate qubit out of range");
    if (seen & (std::uint64_t{1} << q)) throw std::invalid_argument("duplicate gate qubit");
    seen |= std::uint64_t{1} << q;
  }
}

inline std::int64_t bit_mask(int width, int qubit) {
  return std::int64_t{1} << (width - 1 - qubit);
}

}  // namespace

Gate make_x(int q) { return Gate{GateKind::X, {q}, 0.0}; }
Gate make_cx(int control, int target) { return Gate{GateKind::CX, {control, target}, 0.0}; }
Gate make_swap(int a, int b) { return Gate{GateKind::SWAP, {a, b}, 0.0}; }

Gate make_cqx(std::vector<int> controls, int target) {
  if (controls.empty()) return make_x(target);
  if (controls.size() == 1) return make_cx(controls[0], target);
  controls.push_back(target);
  return Gate{GateKind::CqX, std::move(controls), 0.0};
}

// The permutation equations index qubits from the least significant end; our
// registers put qubit 0 at the most significant slot, so their index k maps
// to slot width-1-k here.
Circuit p1_circuit(int s) {
  if (s < 2) throw std::invalid_argument("p1_circuit: s must be >= 2");
  Circuit c;
  c.width = 2 * s;
  for (int q = 0; q < s; ++q) {
    c.gates.push_back(make_cx(s + q, q));
  }
  return c;
}

Circuit p2_plus_circuit(int s) {
  if (s < 2) throw std::invalid_argument("p2_plus_circuit: s must be >= 2");
  Circuit c;
  c.width = 2 * s;
  const int last = 2 * s - 1;
  c.gates.push_back(make_x(last));
  c.gates.push_back(make_cx(last, last - 1));
  for (int q = 0; q <= s - 3; ++q) {
    std::vector<int> controls;
    for (int k = 0; k <= q + 1; ++k) controls.push_back(last - k);
    c.gates.push_back(make_cqx(std::move(controls), last - q - 2));
  }
  return c;
}

Circuit p2_minus_circuit(int s) {
  if (s < 2) throw std::invalid_argument("p2_minus_circuit: s must be >= 2");
  Circuit c;
  c.width = 2 * s;
  const int last = 2 * s - 1;
  for (int q = 0; q <= s - 3; ++q) {
    const int a = s - q - 1;
    std::vector<int> controls;
    for (int k = 0; k < a; ++k) controls.push_back(last - k);
    c.gates.push_back(make_cqx(std::move(controls), last - a));
  }
  c.gates.push_back(make_cx(last, last - 1));
  c.gates.push_back(make_x(last));
  return c;
}

Circuit p_plus_circuit(int s) {
  Circuit c = p2_plus_circuit(s);
  append(c, p1_circuit(s), 0);
  return c;
}

Circuit p_minus_circuit(int s) {
  Circuit c = p2_minus_circuit(s);
  append(c, p1_circuit(s), 0);
  return c;
}

Circuit commutation_circuit(std::int64_t a, std::int64_t b) {
  const int m = log2_exact(a);
  const int n = log2_exact(b);
  Circuit c;
  c.width = m + n;
  for (int r = 0; r < n; ++r) {
    for (int q = 0; q < m; ++q) {
      c.gates.push_back(make_swap(r + m - q - 1, r + m - q));
    }
  }
  return c;
}

void append(Circuit& c, const Circuit& inner, int offset) {
  if (offset < 0 || offset + inner.width > c.width) {
    throw std::invalid_argument("append: inner circuit does not fit");
  }
  for (const Gate& g : inner.gates) {
    Gate shifted = g;
    for (int& q : shifted.qubits) q += offset;
    c.gates.push_back(std::move(shifted));
  }
}

namespace {

SparseMatrix gate_matrix(const Gate& g, int width) {
  check_gate(g, width);
  const std::int64_t dim = std::int64_t{1} << width;
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(dim));
  auto mask = [width](int q) { return bit_mask(width, q); };

  switch (g.kind) {
    case GateKind::X: {
      const std::int64_t t = mask(g.qubits[0]);
      for (std::int64_t v = 0; v < dim; ++v) trips.emplace_back(v ^ t, v, Complex(1.0, 0.0));
      break;
    }
    case GateKind::Z: {
      const std::int64_t t = mask(g.qubits[0]);
      for (std::int64_t v = 0; v < dim; ++v) {
        trips.emplace_back(v, v, Complex((v & t) ? -1.0 : 1.0, 0.0));
      }
      break;
    }
    case GateKind::CX: {
      const std::int64_t cm = mask(g.qubits[0]);
      const std::int64_t tm = mask(g.qubits[1]);
      for (std::int64_t v = 0; v < dim; ++v) {
        trips.emplace_back((v & cm) ? (v ^ tm) : v, v, Complex(1.0, 0.0));
      }
      break;
    }
    case GateKind::CZ: {
      const std::int64_t am = mask(g.qubits[0]);
      const std::int64_t bm = mask(g.qubits[1]);
      for (std::int64_t v = 0; v < dim; ++v) {
        const bool both = (v & am) && (v & bm);
        trips.emplace_back(v, v, Complex(both ? -1.0 : 1.0, 0.0));
      }
      break;
    }
    case GateKind::SWAP: {
      const std::int64_t am = mask(g.qubits[0]);
      const std::int64_t bm = mask(g.qubits[1]);
      for (std::int64_t v = 0; v < dim; ++v) {
        const bool ba = v & am, bb = v & bm;
        std::int64_t w = v;
        if (ba != bb) w = v ^ am ^ bm;
        trips.emplace_back(w, v, Complex(1.0, 0.0));
      }
      break;
    }
    case GateKind::CqX: {
      std::int64_t cm = 0;
      for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i) cm |= mask(g.qubits[i]);
      const std::int64_t tm = mask(g.qubits.back());
      for (std::int64_t v = 0; v < dim; ++v) {
        trips.emplace_back(((v & cm) == cm) ? (v ^ tm) : v, v, Complex(1.0, 0.0));
      }
      break;
    }
    case GateKind::RY: {
      const std::int64_t tm = mask(g.qubits[0]);
      const double ch = std::cos(g.param / 2.0), sh = std::sin(g.param / 2.0);
      for (std::int64_t v = 0; v < dim; ++v) {
        if (v & tm) continue;
        trips.emplace_back(v, v, Complex(ch, 0.0));
        trips.emplace_back(v | tm, v, Complex(sh, 0.0));
        trips.emplace_back(v, v | tm, Complex(-sh, 0.0));
        trips.emplace_back(v | tm, v | tm, Complex(ch, 0.0));
      }
      break;
    }
    case GateKind::CRY: {
      const std::int64_t cm = mask(g.qubits[0]);
      const std::int64_t tm = mask(g.qubits[1]);
      const double ch = std::cos(g.param / 2.0), sh = std::sin(g.param / 2.0);
      for (std::int64_t v = 0; v < dim; ++v) {
        if (!(v & cm)) {
          trips.emplace_back(v, v, Complex(1.0, 0.0));
          continue;
        }
        if (v & tm) continue;
        trips.emplace_back(v, v, Complex(ch, 0.0));
        trips.emplace_back(v | tm, v, Complex(sh, 0.0));
        trips.emplace_back(v, v | tm, Complex(-sh, 0.0));
        trips.emplace_back(v | tm, v | tm, Complex(ch, 0.0));
      }
      break;
    }
  }

  SparseMatrix out(dim, dim);
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

}  // namespace

SparseMatrix circuit_to_matrix(const Circuit& c) {
  if (c.width < 0 || c.width > 16) {
    throw std::length_error("circuit_to_matrix: width exceeds 16-qubit cap");
  }
  SparseMatrix m = sparse_identity(std::int64_t{1} << c.width);
  for (const Gate& g : c.gates) {
    m = SparseMatrix(gate_matrix(g, c.width) * m);
  }
  return m;
}

void apply_gate(const Gate& g, int width, DenseVector& psi, bool parallel) {
  check_gate(g, width);
  const std::int64_t dim = std::int64_t{1} << width;
  if (psi.size() != dim) throw std::invalid_argument("apply_gate: dimension mismatch");
  Complex* amp = psi.data();
  auto mask = [width](int q) { return bit_mask(width, q); };

  switch (g.kind) {
    case GateKind::X: {
      const std::int64_t tm = mask(g.qubits[0]);
#pragma omp parallel for if (parallel && dim >= 4096)
      for (std::int64_t v = 0; v < dim; ++v) {
        if (!(v & tm)) std::swap(amp[v], amp[v | tm]);
      }
      break;
    }
    case GateKind::Z: {
      const std::int64_t tm = mask(g.qubits[0]);
#pragma omp parallel for if (parallel && dim >= 4096)
      for (std::int64_t v = 0; v < dim; ++v) {
        if (v & tm) amp[v] = -amp[v];
      }
      break;
    }
    case GateKind::CX: {
      const std::int64_t cm = mask(g.qubits[0]);
      const std::int64_t tm = mask(g.qubits[1]);
#pragma omp parallel for if (parallel && dim >= 4096)
      for (std::int64_t v = 0; v < dim; ++v) {
        if ((v & cm) && !(v & tm)) std::swap(amp[v], amp[v | tm]);
      }
      break;
    }
    case GateKind::CZ: {
      const std::int64_t am = mask(g.qubits[0]);
      const std::int64_t bm = mask(g.qubits[1]);
#pragma omp parallel for if (parallel && dim >= 4096)
      for (std::int64_t v = 0; v < dim; ++v) {
        if ((v & am) && (v & bm)) amp[v] = -amp[v];
      }
      break;
    }
    case GateKind::SWAP: {
      const std::int64_t am = mask(g.qubits[0]);
      const std::int64_t bm = mask(g.qubits[1]);
#pragma omp parallel for if (parallel && dim >= 4096)
      for (std::int64_t v = 0; v < dim; ++v) {
        if ((v & am) && !(v & bm)) std::swap(amp[v], amp[v ^ am ^ bm]);
      }
      break;
    }
    case GateKind::CqX: {
      std::int64_t cm = 0;
      for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i) cm |= mask(g.qubits[i]);
      const std::int64_t tm = mask(g.qubits.back());
#pragma omp parallel for if (parallel && dim >= 4096)
      for (std::int64_t v = 0; v < dim; ++v) {
        if (((v & cm) == cm) && !(v & tm)) std::swap(amp[v], amp[v | tm]);
      }
      break;
    }
    case GateKind::RY: {
      const std::int64_t tm = mask(g.qubits[0]);
      const double ch = std::cos(g.param / 2.0), sh = std::sin(g.param / 2.0);
#pragma omp parallel for if (parallel && dim >= 4096)
      for (std::int64_t v = 0; v < dim; ++v) {
        if (v & tm) continue;
        const Complex lo = amp[v], hi = amp[v | tm];
        amp[v] = ch * lo - sh * hi;
        amp[v | tm] = sh * lo + ch * hi;
      }
      break;
    }
    case GateKind::CRY: {
      const std::int64_t cm = mask(g.qubits[0]);
      const std::int64_t tm = mask(g.qubits[1]);
      const double ch = std::cos(g.param / 2.0), sh = std::sin(g.param / 2.0);
#pragma omp parallel for if (parallel && dim >= 4096)
      for (std::int64_t v = 0; v < dim; ++v) {
        if (!(v & cm) || (v & tm)) continue;
        const Complex lo = amp[v], hi = amp[v | tm];
        amp[v] = ch * lo - sh * hi;
        amp[v | tm] = sh * lo + ch * hi;
      }
      break;
    }
  }
}

void apply(const Circuit& c, DenseVector& psi) {
  for (const Gate& g : c.gates) apply_gate(g, c.width, psi, true);
}

void apply_serial(const Circuit& c, DenseVector& psi) {
  for (const Gate& g : c.gates) apply_gate(g, c.width, psi, false);
}

}  // namespace qburgers
