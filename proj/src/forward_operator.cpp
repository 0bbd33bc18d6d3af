// Copyright 2026 The Calderon Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "calderon/forward_operator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "calderon/special.hpp"

namespace calderon {
namespace {

void require_mode(int m, const char* what) {
  if (m == 0) throw std::domain_error(std::string(what) + ": Fourier mode index must be nonzero");
}

const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);

}  // namespace

BandedBoundaryOperator::BandedBoundaryOperator(int M) : M_(M) {
  if (M < 1) throw std::domain_error("BandedBoundaryOperator: M must be >= 1");
}

bool BandedBoundaryOperator::contains_index(int m, int n) const {
  return m != 0 && n != 0 && std::abs(m) <= M_ && std::abs(n) <= M_;
}

Complex BandedBoundaryOperator::entry(int m, int n) const {
  auto it = entries_.find({m, n});
  return it == entries_.end() ? Complex{} : it->second;
}

void BandedBoundaryOperator::set(int m, int n, Complex value) {
  if (!contains_index(m, n)) {
    throw std::out_of_range("BandedBoundaryOperator: index (" + std::to_string(m) + ", " +
                            std::to_string(n) + ") outside 1 <= |m|,|n| <= " +
                            std::to_string(M_));
  }
  entries_[{m, n}] = value;
}

double BandedBoundaryOperator::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& [key, v] : entries_) sum += std::norm(v);
  return std::sqrt(sum);
}

Complex hs_inner(const BandedBoundaryOperator& a, const BandedBoundaryOperator& b) {
  Complex sum{};
  for (const auto& [key, v] : a.entries()) sum += v * std::conj(b.entry(key.first, key.second));
  return sum;
}

double pochhammer_ratio(int m, int j, int k) {
  const long long prod = static_cast<long long>(m) * (m + j);
  if (prod <= 0) {
    throw std::domain_error("pochhammer_ratio: requires m(m+j) > 0, got m=" + std::to_string(m) +
                            " j=" + std::to_string(j));
  }
  if (k < 0) throw std::domain_error("pochhammer_ratio: negative k");
  const int v = min_mode_offset(m, m + j);
  if (k > v) return 0.0;
  const int aj = std::abs(j);
  double p = 1.0;
  for (int s = 1; s <= k; ++s) p *= static_cast<double>(v + 1 - s) / (aj + v + k + 1 - s);
  return p;
}

Complex entry_closed_form(const ZernikeCoeffs& coeffs, int m, int n) {
  require_mode(m, "entry_closed_form");
  require_mode(n, "entry_closed_form");
  if ((m < 0) != (n < 0)) return {};
  const int j = n - m;
  const int aj = std::abs(j);
  const int v = min_mode_offset(m, n);
  const int kmax = std::min(coeffs.K(), v);
  Complex sum{};
  for (int k = 0; k <= kmax; ++k) {
    const Complex c = coeffs.get(j, k);
    if (c == Complex{}) continue;
    sum += c * (std::sqrt(aj + 2.0 * k + 1.0) / (aj + v + k + 1.0) * pochhammer_ratio(m, j, k));
  }
  return -kInvSqrtPi * sum;
}

Complex single_basis_entry(BasisIndex idx, int m) {
  require_mode(m, "single_basis_entry");
  if (idx.k < 0) throw std::domain_error("single_basis_entry: negative k");
  const int n = m + idx.j;
  const bool in_index_set = static_cast<long long>(m) * n > 0 && std::abs(m) > idx.k &&
                            std::abs(n) > idx.k;
  if (!in_index_set) return {};
  const int aj = std::abs(idx.j);
  const double denom = aj + std::abs(m) + std::abs(n) + 2.0 * idx.k;
  return -2.0 * kInvSqrtPi * std::sqrt(aj + 2.0 * idx.k + 1.0) / denom *
         pochhammer_ratio(m, idx.j, idx.k);
}

BandedBoundaryOperator assemble(const ZernikeCoeffs& coeffs, int M, int threads) {
  BandedBoundaryOperator op(M);

  std::vector<BandedBoundaryOperator::Key> cells;
  for (int j : coeffs.frequencies()) {
    for (int m = -M; m <= M; ++m) {
      const int n = m + j;
      if (m == 0 || n == 0 || std::abs(n) > M || (m < 0) != (n < 0)) continue;
      cells.emplace_back(m, n);
    }
  }

  std::vector<Complex> values(cells.size());
  const auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      values[i] = entry_closed_form(coeffs, cells[i].first, cells[i].second);
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(threads < 1 ? 1 : static_cast<std::size_t>(threads), 1,
                              std::max<std::size_t>(1, cells.size() / 256));
  if (workers <= 1) {
    fill(0, cells.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (cells.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(cells.size(), begin + chunk);
      if (begin < end) pool.emplace_back(fill, begin, end);
    }
  }

  for (std::size_t i = 0; i < cells.size(); ++i) op.set(cells[i].first, cells[i].second, values[i]);
  return op;
}

Complex gradient_product(int m, int n, double r, double theta) {
  require_mode(m, "gradient_product");
  require_mode(n, "gradient_product");
  if ((m < 0) != (n < 0)) return {};
  return std::pow(r, std::abs(m) + std::abs(n) - 2) / std::numbers::pi *
         std::polar(1.0, (m - n) * theta);
}

QuadratureOracle::QuadratureOracle(const ZernikeCoeffs& coeffs, const QuadratureGrid& grid)
    : grid_(grid), eta_(sample_on_grid(coeffs, grid)) {}

Complex QuadratureOracle::entry(int m, int n) const {
  require_mode(m, "entry_quadrature_oracle");
  require_mode(n, "entry_quadrature_oracle");
  if ((m < 0) != (n < 0)) return {};
  // The gradient product separates into r^{|m|+|n|-2} / pi times e^{i(m-n) theta}.
  const int nt = grid_.n_theta();
  std::vector<Complex> phase(nt);
  for (int l = 0; l < nt; ++l) phase[l] = std::polar(1.0, (m - n) * grid_.theta()[l]);
  const int power = std::abs(m) + std::abs(n) - 2;
  Complex total{};
  for (int i = 0; i < grid_.n_r(); ++i) {
    const Complex* row = eta_.data() + static_cast<std::size_t>(i) * nt;
    Complex ring{};
    for (int l = 0; l < nt; ++l) ring += row[l] * phase[l];
    total += grid_.radial_weights()[i] * std::pow(grid_.r()[i], power) * ring;
  }
  return -total * (grid_.angular_weight() / std::numbers::pi);
}

Complex entry_quadrature_oracle(const ZernikeCoeffs& coeffs, int m, int n,
                                const QuadratureGrid& grid) {
  return QuadratureOracle(coeffs, grid).entry(m, n);
}

double HsNormResult::upper() const {
  return std::sqrt(truncated_norm * truncated_norm + tail_bound * tail_bound);
}

double hs_tail_bound(const ZernikeCoeffs& coeffs, int M) {
  // Per entry with t = max(|m|, |n|), Cauchy-Schwarz over k gives
  //   |entry|^2 <= (1/pi) S_j sum_k (|j|+2k+1) / (t+k)^2,
  // with S_j = sum_k |c_{j,k}|^2, and each diagonal holds at most two entries
  // per value of t. The sum over t > M is bounded by the trigamma majorant.
  std::map<int, double> mass;
  std::map<int, double> profile;
  for (const auto& [idx, c] : coeffs.entries()) {
    if (c == Complex{}) continue;
    mass[idx.j] += std::norm(c);
    const double b = std::abs(idx.j) + 2.0 * idx.k + 1.0;
    profile[idx.j] += b * trigamma_upper_bound(M + 1.0 + idx.k);
  }
  double tail_sq = 0.0;
  for (const auto& [j, s] : mass) tail_sq += 2.0 * s * profile[j] / std::numbers::pi;
  return std::sqrt(tail_sq);
}

HsNormResult hs_norm(const BandedBoundaryOperator& op, const ZernikeCoeffs& coeffs) {
  return {op.frobenius_norm(), hs_tail_bound(coeffs, op.M())};
}

ZernikeCoeffs adjoint_apply(const BandedBoundaryOperator& G, int K, int J) {
  if (K < 0 || J < 0) throw std::domain_error("adjoint_apply: negative bound");
  ZernikeCoeffs out(K, J);
  for (const auto& [key, g] : G.entries()) {
    const auto [m, n] = key;
    if ((m < 0) != (n < 0) || g == Complex{}) continue;
    const int j = n - m;
    const int aj = std::abs(j);
    if (aj > J) continue;
    // conj(grad u_m) . grad u_n = (1/pi) r^{|j| + 2v} e^{i j theta}
    //   = sum_s d_{|j|,s,v} / sqrt(pi (|j|+2s+1)) psi_{j,s}.
    const int v = min_mode_offset(m, n);
    for (int s = 0; s <= std::min(K, v); ++s) {
      const double weight = monomial_coefficient(aj, s, v) /
                            std::sqrt(std::numbers::pi * (aj + 2.0 * s + 1.0));
      out.add(j, s, -g * weight);
    }
  }
  return out;
}

}  // namespace calderon
