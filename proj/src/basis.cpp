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

#include "qburgers/basis.hpp"

#include <stdexcept>

namespace qburgers {

namespace {
constexpr Complex kOne{1.0, 0.0};
constexpr Complex kI{0.0, 1.0};
}  // namespace

bool in_mixed_set(BasisFactor f) {
  switch (f) {
    case BasisFactor::rho0:
    case BasisFactor::rho1:
    case BasisFactor::rho2:
    case BasisFactor::rho3:
    case BasisFactor::rho4:
      return true;
    default:
      return false;
  }
}

Eigen::Matrix2cd factor_matrix(BasisFactor f) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (f) {
    case BasisFactor::rho0: m(0, 0) = kOne; break;
    case BasisFactor::rho1: m(0, 1) = kOne; break;
    case BasisFactor::rho2: m(1, 0) = kOne; break;
    case BasisFactor::rho3: m(1, 1) = kOne; break;
    case BasisFactor::rho4:
    case BasisFactor::sigma3:
      m(0, 0) = kOne;
      m(1, 1) = kOne;
      break;
    case BasisFactor::sigma0:
      m(0, 1) = kOne;
      m(1, 0) = kOne;
      break;
    case BasisFactor::sigma1:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case BasisFactor::sigma2:
      m(0, 0) = kOne;
      m(1, 1) = -kOne;
      break;
  }
  return m;
}

std::string factor_name(BasisFactor f) {
  switch (f) {
    case BasisFactor::rho0: return "rho0";
    case BasisFactor::rho1: return "rho1";
    case BasisFactor::rho2: return "rho2";
    case BasisFactor::rho3: return "rho3";
    case BasisFactor::rho4: return "rho4";
    case BasisFactor::sigma0: return "sigma0";
    case BasisFactor::sigma1: return "sigma1";
    case BasisFactor::sigma2: return "sigma2";
    case BasisFactor::sigma3: return "sigma3";
  }
  return "?";
}

BasisFactor rho_bar(BasisFactor f) {
  switch (f) {
    case BasisFactor::rho1:
    case BasisFactor::rho2:
      return BasisFactor::sigma0;
    case BasisFactor::rho0:
    case BasisFactor::rho3:
    case BasisFactor::rho4:
      return BasisFactor::sigma3;
    default:
      throw std::invalid_argument("rho_bar: factor outside the mixed set");
  }
}

BasisFactor rho_rho_t(BasisFactor f) {
  switch (f) {
    case BasisFactor::rho0:
    case BasisFactor::rho1:
      return BasisFactor::rho0;
    case BasisFactor::rho2:
    case BasisFactor::rho3:
      return BasisFactor::rho3;
    case BasisFactor::rho4:
      return BasisFactor::rho4;
    default:
      throw std::invalid_argument("rho_rho_t: factor outside the mixed set");
  }
}

std::vector<int> quaternary_index(std::uint64_t i, std::uint64_t j, int bits) {
  if (bits < 0 || bits > 62) {
    throw std::invalid_argument("quaternary_index: bad bit count");
  }
  std::vector<int> digits(static_cast<std::size_t>(bits));
  for (int k = 0; k < bits; ++k) {
    const int ik = static_cast<int>((i >> (bits - 1 - k)) & 1u);
    const int jk = static_cast<int>((j >> (bits - 1 - k)) & 1u);
    digits[static_cast<std::size_t>(k)] = 2 * ik + jk;
  }
  return digits;
}

std::string quaternary_index(std::string_view i_bits, std::string_view j_bits) {
  if (i_bits.size() != j_bits.size()) {
    throw std::invalid_argument("quaternary_index: bitstrings of unequal length");
  }
  std::string out;
  out.reserve(i_bits.size());
  for (std::size_t k = 0; k < i_bits.size(); ++k) {
    const char ic = i_bits[k];
    const char jc = j_bits[k];
    if ((ic != '0' && ic != '1') || (jc != '0' && jc != '1')) {
      throw std::invalid_argument("quaternary_index: non-binary character");
    }
    out.push_back(static_cast<char>('0' + 2 * (ic - '0') + (jc - '0')));
  }
  return out;
}

BasisFactor rho_for_digit(int digit) {
  switch (digit) {
    case 0: return BasisFactor::rho0;
    case 1: return BasisFactor::rho1;
    case 2: return BasisFactor::rho2;
    case 3: return BasisFactor::rho3;
    case 4: return BasisFactor::rho4;
    default:
      throw std::invalid_argument("rho_for_digit: digit out of range");
  }
}

std::vector<BasisFactor> block_selector(std::uint64_t i, std::uint64_t j, int bits) {
  std::vector<BasisFactor> out;
  out.reserve(static_cast<std::size_t>(bits));
  for (int d : quaternary_index(i, j, bits)) out.push_back(rho_for_digit(d));
  return out;
}

SparseMatrix realize(std::span<const BasisFactor> factors, std::int64_t dim_cap) {
  if (factors.size() > 40) {
    throw std::length_error("realize: too many factors");
  }
  const std::int64_t dim = std::int64_t{1} << factors.size();
  if (dim > dim_cap) {
    throw std::length_error("realize: dimension " + std::to_string(dim) +
                            " exceeds cap " + std::to_string(dim_cap));
  }
  SparseMatrix out(1, 1);
  out.insert(0, 0) = kOne;
  for (BasisFactor f : factors) {
    out = kron(out, factor_matrix(f).sparseView());
  }
  return out;
}

SparseMatrix realize(std::initializer_list<BasisFactor> factors) {
  return realize(std::span<const BasisFactor>(factors.begin(), factors.size()));
}

}  // namespace qburgers
