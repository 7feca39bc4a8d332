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

#include "qburgers/embedding.hpp"

using namespace qburgers;

namespace {

GridConfig make_grid(int nx, int nt, int alpha) {
  GridConfig g;
  g.nx = nx;
  g.nt = nt;
  g.alpha = alpha;
  g.dx = 1.0;
  g.dt = 0.25;
  g.nu = 1.0;
  return g;
}

GridConfig reference_grid() {
  return GridConfig::from_domain(4, 4, 2.0 * std::numbers::pi, 0.25, 1.0, 2);
}

// indices of the embedded space that carry unembedded Carleman content
std::vector<std::int64_t> content_indices(const GridConfig& g) {
  std::vector<std::int64_t> idx;
  for (int j = 1; j <= g.alpha; ++j) {
    const std::int64_t base = static_cast<std::int64_t>(j - 1) * g.embedded_block_dim();
    for (std::int64_t i = 0; i < ipow(g.nx, j); ++i) idx.push_back(base + i);
  }
  return idx;
}

}  // namespace

TEST_CASE("commutation matrix basics") {
  const DenseMatrix k22 = DenseMatrix(commutation_matrix(2, 2));
  DenseMatrix swap = DenseMatrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = Complex(1.0, 0.0);
  CHECK((k22 - swap).cwiseAbs().maxCoeff() == doctest::Approx(0.0));

  CHECK_THROWS_AS(commutation_matrix(3, 2), std::invalid_argument);
}

TEST_CASE("commutation matrix swaps tensor factors exhaustively") {
  const SparseMatrix k = commutation_matrix(4, 2);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 2; ++j) {
      DenseVector x = DenseVector::Zero(4);
      DenseVector y = DenseVector::Zero(2);
      x(i) = Complex(1.0, 0.0);
      y(j) = Complex(1.0, 0.0);
      CHECK((DenseVector(k * kron(x, y)) - kron(y, x)).cwiseAbs().maxCoeff() ==
            doctest::Approx(0.0));
    }
  }
}

TEST_CASE("commutation inverse pairs") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{4, 4}, {16, 4}}) {
    const SparseMatrix prod =
        SparseMatrix(commutation_matrix(a, b) * commutation_matrix(b, a));
    CHECK(max_abs_diff(prod, sparse_identity(static_cast<std::int64_t>(a) * b)) ==
          doctest::Approx(0.0));
  }
}

TEST_CASE("embedded diagonal blocks") {
  const GridConfig g = make_grid(4, 2, 2);

  SUBCASE("j = alpha is unpadded") {
    const SparseMatrix block = embed_diag_block(2, g);
    REQUIRE(block.rows() == 16);
    const DenseMatrix f1 = DenseMatrix(build_f1(g));
    DenseMatrix expect = DenseMatrix::Zero(16, 16);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) expect.block(4 * i, 4 * j, 4, 4) = f1(i, j) * DenseMatrix::Identity(4, 4);
    }
    for (int b = 0; b < 4; ++b) expect.block(4 * b, 4 * b, 4, 4) += f1;
    CHECK((DenseMatrix(block) - expect).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
  }

  SUBCASE("j = 1 pads F1 into the corner") {
    const DenseMatrix block = DenseMatrix(embed_diag_block(1, g));
    REQUIRE(block.rows() == 16);
    CHECK((block.topLeftCorner(4, 4) - DenseMatrix(build_f1(g))).cwiseAbs().maxCoeff() ==
          doctest::Approx(0.0));
    CHECK(block.bottomRows(12).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    CHECK(block.rightCols(12).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
  }

  CHECK_THROWS_AS(embed_diag_block(0, g), std::invalid_argument);
  CHECK_THROWS_AS(embed_diag_block(3, g), std::invalid_argument);
}

TEST_CASE("superdiagonal factored form equals direct padding") {
  for (auto [nx, alpha] : std::vector<std::pair<int, int>>{{4, 2}, {4, 4}}) {
    const GridConfig g = make_grid(nx, 2, alpha);
    for (int j = 1; j <= alpha - 1; ++j) {
      CAPTURE(nx);
      CAPTURE(alpha);
      CAPTURE(j);
      CHECK(max_abs_diff(embed_superdiag_block(j, g),
                         embed_superdiag_block_direct(j, g)) < 1e-14);
    }
  }
}

TEST_CASE("superdiagonal block content") {
  const GridConfig g = make_grid(4, 2, 2);
  const DenseMatrix block = DenseMatrix(embed_superdiag_block(1, g));
  REQUIRE(block.rows() == 16);
  CHECK((block.topRows(4) - DenseMatrix(build_f2(g))).cwiseAbs().maxCoeff() ==
        doctest::Approx(0.0));
  CHECK(block.bottomRows(12).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("embedded matrix") {
  SUBCASE("alpha 1 is the bare diffusion operator") {
    const GridConfig g = make_grid(4, 2, 1);
    CHECK(max_abs_diff(build_embedded_A(g), build_f1(g)) == doctest::Approx(0.0));
  }

  SUBCASE("alpha 2 block support") {
    const GridConfig g = make_grid(4, 2, 2);
    const DenseMatrix a = DenseMatrix(build_embedded_A(g));
    REQUIRE(a.rows() == 32);
    CHECK(a.block(16, 0, 16, 16).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    CHECK(a.block(0, 0, 16, 16).cwiseAbs().maxCoeff() > 0.0);
    CHECK(a.block(0, 16, 16, 16).cwiseAbs().maxCoeff() > 0.0);
    CHECK(a.block(16, 16, 16, 16).cwiseAbs().maxCoeff() > 0.0);
  }

  SUBCASE("restriction to content indices recovers the Carleman matrix") {
    for (auto [nx, alpha] : std::vector<std::pair<int, int>>{{4, 2}, {8, 2}, {4, 4}}) {
      const GridConfig g = make_grid(nx, 2, alpha);
      const DenseMatrix a_e = DenseMatrix(build_embedded_A(g));
      const DenseMatrix a = DenseMatrix(build_carleman_A(g));
      const auto idx = content_indices(g);
      REQUIRE(static_cast<std::int64_t>(idx.size()) == g.carleman_dim());
      double max_err = 0.0;
      for (std::size_t r = 0; r < idx.size(); ++r) {
        for (std::size_t c = 0; c < idx.size(); ++c) {
          max_err = std::max(max_err, std::abs(a_e(idx[r], idx[c]) - a(r, c)));
        }
      }
      CHECK(max_err == doctest::Approx(0.0));

      // pad rows and columns vanish
      std::vector<bool> is_content(a_e.rows(), false);
      for (std::int64_t i : idx) is_content[static_cast<std::size_t>(i)] = true;
      for (std::int64_t i = 0; i < a_e.rows(); ++i) {
        if (is_content[static_cast<std::size_t>(i)]) continue;
        CHECK(a_e.row(i).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
        CHECK(a_e.col(i).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
      }
    }
  }
}

TEST_CASE("embedded system and solution equivalence") {
  const GridConfig g = reference_grid();
  const DenseVector u0 = initial_state(g, 0.5, std::numbers::pi);
  const DenseVector y0 = carleman_initial_vector(g, u0);

  const EmbeddedSystem sys = build_embedded_system(g, y0);
  REQUIRE(sys.L_e.rows() == 128);
  CHECK(sys.qubit_count == 7);

  // right-hand side holds the padded initial vector in time block 0
  CHECK((sys.B_e.head(32) - embed_initial_vector(g, y0)).cwiseAbs().maxCoeff() ==
        doctest::Approx(0.0));
  CHECK(sys.B_e.tail(96).cwiseAbs().maxCoeff() == doctest::Approx(0.0));

  const DenseVector y_e = classical_solve(sys.L_e, sys.B_e);
  const Trajectory embedded = extract_solution(y_e, g);

  // pad slots stay numerically zero
  CHECK(embedded.max_pad_abs <= 1e-12);

  // velocity trajectories agree with the unembedded solve
  const CarlemanSystem plain = build_time_system(build_carleman_A(g), g, y0);
  const DenseVector y = classical_solve(plain.L, plain.B);
  const Trajectory reference = extract_solution_unembedded(y, g);
  REQUIRE(embedded.u.size() == reference.u.size());
  for (std::size_t t = 0; t < embedded.u.size(); ++t) {
    const double scale = std::max(1.0, reference.u[t].cwiseAbs().maxCoeff());
    CHECK((embedded.u[t] - reference.u[t]).cwiseAbs().maxCoeff() / scale < 1e-10);
  }
}

TEST_CASE("extract at zero evolution returns the initial profile") {
  const GridConfig g = make_grid(4, 4, 2);
  const DenseVector u0 = initial_state(g, 0.5, 1.5);
  const DenseVector y0 = carleman_initial_vector(g, u0);
  SparseMatrix zero(static_cast<std::int64_t>(g.alpha) * g.embedded_block_dim(),
                    static_cast<std::int64_t>(g.alpha) * g.embedded_block_dim());
  const CarlemanSystem sys = build_time_system(zero, g, embed_initial_vector(g, y0));
  const DenseVector y = classical_solve(sys.L, sys.B);
  const Trajectory traj = extract_solution(y, g);
  for (const DenseVector& u : traj.u) {
    CHECK((u - u0).cwiseAbs().maxCoeff() < 1e-12);
  }
}
