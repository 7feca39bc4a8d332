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

#include "qburgers/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

#include "qburgers/embedding.hpp"

namespace qburgers {

std::string term_class_name(TermClass c) {
  switch (c) {
    case TermClass::L1: return "L1";
    case TermClass::L2a: return "L2a";
    case TermClass::L2b: return "L2b";
  }
  return "?";
}

namespace {

void append_repeated(std::vector<BasisFactor>& v, BasisFactor f, int count) {
  v.insert(v.end(), static_cast<std::size_t>(count), f);
}

}  // namespace

std::vector<RhoTerm> decompose_F1(const GridConfig& grid) {
  grid.validate();
  const int s = grid.s();
  const double w = grid.nu / (grid.dx * grid.dx);
  std::vector<RhoTerm> terms;
  terms.reserve(static_cast<std::size_t>(2 * s + 3));

  // diagonal
  {
    RhoTerm t;
    t.coefficient = -2.0 * w;
    append_repeated(t.factors, BasisFactor::rho4, s);
    terms.push_back(std::move(t));
  }
  // nearest neighbors inside the innermost pair
  for (BasisFactor f : {BasisFactor::rho1, BasisFactor::rho2}) {
    RhoTerm t;
    t.coefficient = w;
    append_repeated(t.factors, BasisFactor::rho4, s - 1);
    t.factors.push_back(f);
    terms.push_back(std::move(t));
  }
  // periodic corners
  for (BasisFactor f : {BasisFactor::rho1, BasisFactor::rho2}) {
    RhoTerm t;
    t.coefficient = w;
    append_repeated(t.factors, f, s);
    terms.push_back(std::move(t));
  }
  // neighbor couplings across the 2^i block boundaries
  for (int i = 2; i <= s; ++i) {
    {
      RhoTerm t;
      t.coefficient = w;
      append_repeated(t.factors, BasisFactor::rho4, i - 2);
      t.factors.push_back(BasisFactor::rho2);
      append_repeated(t.factors, BasisFactor::rho1, s - i + 1);
      terms.push_back(std::move(t));
    }
    {
      RhoTerm t;
      t.coefficient = w;
      append_repeated(t.factors, BasisFactor::rho4, i - 2);
      t.factors.push_back(BasisFactor::rho1);
      append_repeated(t.factors, BasisFactor::rho2, s - i + 1);
      terms.push_back(std::move(t));
    }
  }
  return terms;
}

std::vector<DecompositionTerm> decompose_L1(const GridConfig& grid) {
  grid.validate();
  const int m = grid.m();
  const int tail = grid.r() + grid.alpha * grid.s();
  const int width = m + tail;
  std::vector<DecompositionTerm> terms;
  terms.reserve(static_cast<std::size_t>(m) + 1);

  auto make = [&](double coeff, std::vector<BasisFactor> time_part, int sub) {
    DecompositionTerm t;
    t.coefficient = Complex(coeff, 0.0);
    t.term_class = TermClass::L1;
    t.rho_prefix = std::move(time_part);
    append_repeated(t.rho_prefix, BasisFactor::rho4, tail);
    t.total_qubits = width;
    t.sub = sub;
    terms.push_back(std::move(t));
  };

  {
    std::vector<BasisFactor> tp;
    append_repeated(tp, BasisFactor::rho4, m);
    make(1.0, std::move(tp), 0);
  }
  {
    std::vector<BasisFactor> tp;
    append_repeated(tp, BasisFactor::rho4, m - 1);
    tp.push_back(BasisFactor::rho2);
    make(-1.0, std::move(tp), 1);
  }
  for (int j = 2; j <= m; ++j) {
    std::vector<BasisFactor> tp;
    append_repeated(tp, BasisFactor::rho4, j - 2);
    tp.push_back(BasisFactor::rho2);
    append_repeated(tp, BasisFactor::rho1, m - j + 1);
    make(-1.0, std::move(tp), j);
  }
  return terms;
}

std::vector<DecompositionTerm> decompose_L2a(const GridConfig& grid) {
  grid.validate();
  const int s = grid.s();
  const int m = grid.m();
  const int r = grid.r();
  const int width = m + r + grid.alpha * s;
  const std::vector<RhoTerm> f1_terms = decompose_F1(grid);

  std::vector<DecompositionTerm> terms;
  for (int j = 1; j <= grid.alpha; ++j) {
    const auto grade = block_selector(static_cast<std::uint64_t>(j - 1),
                                      static_cast<std::uint64_t>(j - 1), r);
    for (int l = 0; l <= j - 1; ++l) {
      for (std::size_t sub = 0; sub < f1_terms.size(); ++sub) {
        for (int time_index = 0; time_index < 2; ++time_index) {
          DecompositionTerm t;
          t.term_class = TermClass::L2a;
          t.j = j;
          t.l = l;
          t.sub = static_cast<int>(sub);
          t.time_index = time_index;
          // L = L1 - dt*(time+)*A part; the projector time factor flips sign
          const double time_sign = (time_index == 0) ? 1.0 : -1.0;
          t.coefficient =
              Complex(-grid.dt * time_sign * f1_terms[sub].coefficient, 0.0);
          append_repeated(t.rho_prefix,
                          time_index == 0 ? BasisFactor::rho4 : BasisFactor::rho0, m);
          t.rho_prefix.insert(t.rho_prefix.end(), grade.begin(), grade.end());
          append_repeated(t.rho_prefix, BasisFactor::rho0, (grid.alpha - j) * s);
          append_repeated(t.rho_prefix, BasisFactor::rho4, l * s);
          t.rho_prefix.insert(t.rho_prefix.end(), f1_terms[sub].factors.begin(),
                              f1_terms[sub].factors.end());
          append_repeated(t.rho_prefix, BasisFactor::rho4, (j - l - 1) * s);
          t.total_qubits = width;
          terms.push_back(std::move(t));
        }
      }
    }
  }
  return terms;
}

std::vector<DecompositionTerm> decompose_L2b(const GridConfig& grid) {
  grid.validate();
  const int s = grid.s();
  const int m = grid.m();
  const int r = grid.r();
  const int width = m + r + grid.alpha * s;

  std::vector<DecompositionTerm> terms;
  for (int j = 1; j <= grid.alpha - 1; ++j) {
    const auto grade = block_selector(static_cast<std::uint64_t>(j - 1),
                                      static_cast<std::uint64_t>(j), r);
    for (int l = 0; l <= j - 1; ++l) {
      for (int sub = 0; sub < 2; ++sub) {  // 0: P+, 1: P-
        for (int time_index = 0; time_index < 2; ++time_index) {
          DecompositionTerm t;
          t.term_class = TermClass::L2b;
          t.j = j;
          t.l = l;
          t.sub = sub;
          t.time_index = time_index;
          const double time_sign = (time_index == 0) ? 1.0 : -1.0;
          const double f2_sign = (sub == 0) ? -1.0 : 1.0;  // from -(F+ - F-)/(2 dx)
          t.coefficient =
              Complex(-grid.dt * time_sign * f2_sign / (2.0 * grid.dx), 0.0);
          append_repeated(t.rho_prefix,
                          time_index == 0 ? BasisFactor::rho4 : BasisFactor::rho0, m);
          t.rho_prefix.insert(t.rho_prefix.end(), grade.begin(), grade.end());
          append_repeated(t.rho_prefix, BasisFactor::rho0, (grid.alpha - j - 1) * s);
          SuperdiagFactors sd;
          sd.s = s;
          sd.j = j;
          sd.l = l;
          sd.plus = (sub == 0);
          sd.with_d = true;
          sd.suffix_qubits = (j - l - 1) * s;
          t.superdiag = sd;
          t.total_qubits = width;
          terms.push_back(std::move(t));
        }
      }
    }
  }
  return terms;
}

std::vector<DecompositionTerm> decompose_full(const GridConfig& grid) {
  std::vector<DecompositionTerm> terms = decompose_L1(grid);
  std::vector<DecompositionTerm> l2a = decompose_L2a(grid);
  std::vector<DecompositionTerm> l2b = decompose_L2b(grid);
  terms.insert(terms.end(), std::make_move_iterator(l2a.begin()),
               std::make_move_iterator(l2a.end()));
  terms.insert(terms.end(), std::make_move_iterator(l2b.begin()),
               std::make_move_iterator(l2b.end()));
  return terms;
}

TermCountBreakdown term_count_breakdown(const GridConfig& grid) {
  TermCountBreakdown b;
  const std::int64_t a = grid.alpha;
  b.l1 = grid.m() + 1;
  b.l2a = a * (a + 1) * (2 * grid.s() + 3);
  b.l2b = 2 * a * (a - 1);
  b.total = b.l1 + b.l2a + b.l2b;
  return b;
}

std::int64_t term_count(const GridConfig& grid) {
  const std::int64_t a = grid.alpha;
  return grid.m() + 2 * a * (a + 1) * grid.s() + a * (5 * a + 1) + 1;
}

F2Factorization factor_F2(const GridConfig& grid) {
  grid.validate();
  F2Factorization f;
  f.s = grid.s();
  const std::int64_t n = grid.nx;
  // D = rho0^(x)s (x) rho4^(x)s, i.e. the top-left identity block
  SparseMatrix d(n * n, n * n);
  d.reserve(Eigen::VectorXi::Constant(static_cast<int>(n * n), 1));
  for (std::int64_t i = 0; i < n; ++i) d.insert(i, i) = Complex(1.0, 0.0);
  d.makeCompressed();
  f.D = std::move(d);
  f.p_plus = p_plus_circuit(f.s);
  f.p_minus = p_minus_circuit(f.s);
  f.P_plus = circuit_to_matrix(f.p_plus);
  f.P_minus = circuit_to_matrix(f.p_minus);
  return f;
}

namespace {

SparseMatrix zero_projector(std::int64_t dim) {
  SparseMatrix p(dim, dim);
  p.insert(0, 0) = Complex(1.0, 0.0);
  return p;
}

}  // namespace

SparseMatrix realize_superdiag(const SuperdiagFactors& sd) {
  const std::int64_t nx = std::int64_t{1} << sd.s;
  const std::int64_t nl = ipow(nx, sd.l);
  SparseMatrix p = circuit_to_matrix(sd.plus ? p_plus_circuit(sd.s) : p_minus_circuit(sd.s));
  if (sd.with_d) {
    SparseMatrix d(nx * nx, nx * nx);
    for (std::int64_t i = 0; i < nx; ++i) d.insert(i, i) = Complex(1.0, 0.0);
    p = SparseMatrix(d * p);
  }
  SparseMatrix left = kron(sd.with_d ? zero_projector(nx) : sparse_identity(nx),
                           commutation_matrix(nx, nl));
  SparseMatrix mid = kron(p, sparse_identity(nl));
  SparseMatrix bracket =
      SparseMatrix(SparseMatrix(left * mid) * commutation_matrix(nl, nx * nx));
  if (sd.suffix_qubits > 0) {
    bracket = kron(bracket, sparse_identity(std::int64_t{1} << sd.suffix_qubits));
  }
  return bracket;
}

SparseMatrix realize_term(const DecompositionTerm& term) {
  SparseMatrix prefix = realize(term.rho_prefix);
  if (!term.superdiag) return prefix;
  return kron(prefix, realize_superdiag(*term.superdiag));
}

SparseMatrix reconstruct(const std::vector<DecompositionTerm>& terms) {
  if (terms.empty()) throw std::invalid_argument("reconstruct: empty term list");
  SparseMatrix total;
  for (const DecompositionTerm& t : terms) {
    SparseMatrix piece = realize_term(t) * t.coefficient;
    total = (total.size() == 0) ? piece : SparseMatrix(total + piece);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Pauli-basis oracle
// ---------------------------------------------------------------------------

std::string PauliTerm::label() const {
  static constexpr char kNames[] = {'X', 'Y', 'Z', 'I'};
  std::string out;
  out.reserve(digits.size());
  for (int d : digits) out.push_back(kNames[d]);
  return out;
}

namespace {

// entry (r, c) of the 2x2 sigma factor with the project index convention
inline Complex sigma_entry(int digit, int r, int c) {
  switch (digit) {
    case 0: return (r != c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);            // X
    case 1: return (r == c) ? Complex(0.0, 0.0)
                            : (r == 1 ? Complex(0.0, 1.0) : Complex(0.0, -1.0));  // Y
    case 2: return (r != c) ? Complex(0.0, 0.0)
                            : (r == 0 ? Complex(1.0, 0.0) : Complex(-1.0, 0.0));  // Z
    default: return (r == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);            // I
  }
}

struct MatrixEntry {
  std::int64_t row;
  std::int64_t col;
  Complex value;
};

std::vector<PauliTerm> pauli_scan(const SparseMatrix& M, double tol, bool parallel) {
  if (M.rows() != M.cols()) throw std::invalid_argument("pauli_decompose: matrix not square");
  const int q = log2_exact(M.rows());
  if (q > 10) throw std::length_error("pauli_decompose: capped at 10 qubits");
  const std::int64_t dim = M.rows();
  const std::int64_t num_strings = std::int64_t{1} << (2 * q);

  std::vector<MatrixEntry> entries;
  entries.reserve(static_cast<std::size_t>(M.nonZeros()));
  for (int k = 0; k < M.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(M, k); it; ++it) {
      entries.push_back({it.row(), it.col(), it.value()});
    }
  }

  std::vector<Complex> coeffs(static_cast<std::size_t>(num_strings));
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t sidx = 0; sidx < num_strings; ++sidx) {
    Complex acc(0.0, 0.0);
    for (const MatrixEntry& e : entries) {
      Complex p(1.0, 0.0);
      for (int k = 0; k < q; ++k) {
        const int digit = static_cast<int>((sidx >> (2 * (q - 1 - k))) & 3);
        const int rb = static_cast<int>((e.row >> (q - 1 - k)) & 1);
        const int cb = static_cast<int>((e.col >> (q - 1 - k)) & 1);
        p *= sigma_entry(digit, rb, cb);
        if (p == Complex(0.0, 0.0)) break;
      }
      // Tr(P^dagger M) accumulates conj(P[r, c]) * M[r, c]
      acc += std::conj(p) * e.value;
    }
    coeffs[static_cast<std::size_t>(sidx)] = acc / static_cast<double>(dim);
  }

  std::vector<PauliTerm> out;
  for (std::int64_t sidx = 0; sidx < num_strings; ++sidx) {
    const Complex c = coeffs[static_cast<std::size_t>(sidx)];
    if (std::abs(c) <= tol) continue;
    PauliTerm t;
    t.coefficient = c;
    t.digits.resize(static_cast<std::size_t>(q));
    for (int k = 0; k < q; ++k) {
      t.digits[static_cast<std::size_t>(k)] =
          static_cast<int>((sidx >> (2 * (q - 1 - k))) & 3);
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<PauliTerm> pauli_decompose(const SparseMatrix& M, double tol) {
  return pauli_scan(M, tol, true);
}

std::vector<PauliTerm> pauli_decompose_serial(const SparseMatrix& M, double tol) {
  return pauli_scan(M, tol, false);
}

SparseMatrix pauli_reconstruct(const std::vector<PauliTerm>& terms, int qubits) {
  const std::int64_t dim = std::int64_t{1} << qubits;
  SparseMatrix total(dim, dim);
  for (const PauliTerm& t : terms) {
    if (static_cast<int>(t.digits.size()) != qubits) {
      throw std::invalid_argument("pauli_reconstruct: digit count mismatch");
    }
    std::vector<Triplet> trips;
    trips.reserve(static_cast<std::size_t>(dim));
    for (std::int64_t r = 0; r < dim; ++r) {
      // every Pauli string has exactly one nonzero per row
      std::int64_t c = 0;
      Complex v(1.0, 0.0);
      for (int k = 0; k < qubits; ++k) {
        const int digit = t.digits[static_cast<std::size_t>(k)];
        const int rb = static_cast<int>((r >> (qubits - 1 - k)) & 1);
        const int cb = (digit <= 1) ? 1 - rb : rb;  // X and Y flip the bit
        c |= static_cast<std::int64_t>(cb) << (qubits - 1 - k);
        v *= sigma_entry(digit, rb, cb);
      }
      trips.emplace_back(r, c, v * t.coefficient);
    }
    SparseMatrix piece(dim, dim);
    piece.setFromTriplets(trips.begin(), trips.end());
    total = SparseMatrix(total + piece);
  }
  return total;
}

// ---------------------------------------------------------------------------
// JSON export
// ---------------------------------------------------------------------------

nlohmann::ordered_json grid_to_json(const GridConfig& grid) {
  return nlohmann::ordered_json{{"nx", grid.nx},   {"nt", grid.nt}, {"alpha", grid.alpha},
                                {"dx", grid.dx},   {"dt", grid.dt}, {"nu", grid.nu}};
}

nlohmann::ordered_json terms_to_json(const GridConfig& grid,
                                     const std::vector<DecompositionTerm>& terms) {
  nlohmann::ordered_json root;
  root["schema_version"] = 1;
  root["config"] = grid_to_json(grid);
  nlohmann::ordered_json jterms = nlohmann::ordered_json::array();
  for (std::size_t id = 0; id < terms.size(); ++id) {
    const DecompositionTerm& t = terms[id];
    nlohmann::ordered_json jt;
    jt["id"] = id;
    jt["coeff"] = {t.coefficient.real(), t.coefficient.imag()};
    jt["class"] = term_class_name(t.term_class);
    if (t.term_class != TermClass::L1) {
      jt["j"] = t.j;
      jt["l"] = t.l;
    }
    nlohmann::ordered_json factors = nlohmann::ordered_json::array();
    for (BasisFactor f : t.rho_prefix) {
      factors.push_back({{"kind", factor_name(f)}});
    }
    if (t.superdiag) {
      const SuperdiagFactors& sd = *t.superdiag;
      factors.push_back({{"kind", "k_swap"},
                         {"a_qubits", sd.s},
                         {"b_qubits", sd.l * sd.s}});
      factors.push_back({{"kind", "d_projector"}, {"qubits", 2 * sd.s}});
      factors.push_back({{"kind", sd.plus ? "p_plus" : "p_minus"}, {"qubits", 2 * sd.s}});
      factors.push_back({{"kind", "k_swap"},
                         {"a_qubits", sd.l * sd.s},
                         {"b_qubits", 2 * sd.s}});
      if (sd.suffix_qubits > 0) {
        factors.push_back({{"kind", "identity"}, {"qubits", sd.suffix_qubits}});
      }
    }
    jt["factors"] = std::move(factors);
    jterms.push_back(std::move(jt));
  }
  root["terms"] = std::move(jterms);
  return root;
}

}  // namespace qburgers
