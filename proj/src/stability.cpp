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

#include "calderon/stability.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "calderon/special.hpp"

namespace calderon {

double upper_bound_constant(int K) {
  if (K < 0) throw std::domain_error("upper_bound_constant: negative K");
  return 2.0 / std::sqrt(std::numbers::pi) * std::sqrt(2.0 * K + harmonic_number(K) + 4.0);
}

double lipschitz_constant(int K) {
  if (K < 0) throw std::domain_error("lipschitz_constant: negative K");
  if (K == 0) return std::sqrt(std::numbers::pi);
  return std::sqrt(2.0 * std::numbers::pi) * binomial_f(2 * K, K);
}

PsiLowerBound psi_lower_bound(int k) {
  if (k < 0) throw std::domain_error("psi_lower_bound: negative k");
  const double b = binomial_f(2 * k, k);
  PsiLowerBound out{1.0 / (2.0 * std::numbers::pi * b * b), std::nullopt};
  if (k == 0) out.improved = 1.0 / std::numbers::pi;
  return out;
}

bool is_in_A_K(const ZernikeCoeffs& coeffs, double tol) {
  if (tol < 0.0) throw std::domain_error("is_in_A_K: negative tolerance");
  std::map<int, std::vector<Complex>> columns;
  for (const auto& [idx, c] : coeffs.entries()) columns[idx.j].push_back(c);
  for (const auto& [j, col] : columns) {
    for (std::size_t a = 0; a < col.size(); ++a) {
      for (std::size_t b = a + 1; b < col.size(); ++b) {
        if ((col[a] * std::conj(col[b])).real() < -tol) return false;
      }
    }
  }
  return true;
}

bool is_in_A_K(const ZernikeCoeffs& coeffs) {
  double scale = 0.0;
  for (const auto& [idx, c] : coeffs.entries()) scale = std::max(scale, std::norm(c));
  return is_in_A_K(coeffs, 1e-12 * scale);
}

StabilityReport verify(const ZernikeCoeffs& coeffs, int M, int threads) {
  StabilityReport rep;
  rep.K = std::max(0, coeffs.max_stored_k());
  rep.M = M;
  rep.l2_norm = l2_norm(coeffs);
  rep.hs = hs_norm(assemble(coeffs, M, threads), coeffs);
  rep.upper_constant = upper_bound_constant(rep.K);
  rep.lipschitz_constant = lipschitz_constant(rep.K);
  rep.in_A_K = is_in_A_K(coeffs);
  rep.upper_satisfied = rep.hs.upper() <= rep.upper_constant * rep.l2_norm;
  rep.lower_satisfied = rep.l2_norm <= rep.lipschitz_constant * rep.hs.upper();
  rep.lower_satisfied_truncated = rep.l2_norm <= rep.lipschitz_constant * rep.hs.lower();
  return rep;
}

ZernikeCoeffs sample_w_k(std::mt19937_64& rng, int K, int J) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  ZernikeCoeffs out(K, J);
  for (int k = 0; k <= K; ++k) {
    for (int j = -J; j <= J; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      out.set(j, k, {re, im});
    }
  }
  return out;
}

ZernikeCoeffs sample_a_k(std::mt19937_64& rng, int K, int J) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ZernikeCoeffs out(K, J);
  for (int j = -J; j <= J; ++j) {
    const Complex phase = std::polar(1.0, angle(rng));
    for (int k = 0; k <= K; ++k) out.set(j, k, std::abs(gauss(rng)) * phase);
  }
  return out;
}

}  // namespace calderon
