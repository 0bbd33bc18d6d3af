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

#ifndef CALDERON_STABILITY_HPP_
#define CALDERON_STABILITY_HPP_

#include <optional>
#include <random>

#include "calderon/forward_operator.hpp"
#include "calderon/zernike.hpp"

namespace calderon {

// (2 / sqrt(pi)) sqrt(2K + H_K + 4): ||F eta||_HS <= C ||eta|| on W_K.
double upper_bound_constant(int K);

// sqrt(2 pi) binom(2K, K) for K >= 1 and sqrt(pi) for K = 0:
// ||eta|| <= C ||F eta||_HS on A_K.
double lipschitz_constant(int K);

// Lower bounds on ||F psi_{j,k}||_HS^2, uniform in j.
struct PsiLowerBound {
  double bound = 0.0;              // binom(2k, k)^{-2} / (2 pi)
  std::optional<double> improved;  // 1 / pi, only for k = 0
};

PsiLowerBound psi_lower_bound(int k);

// Re(c_{j,k} conj(c_{j,k'})) >= -tol for all j and k, k'.
bool is_in_A_K(const ZernikeCoeffs& coeffs, double tol);
// Same with tol = 1e-12 * max |c|^2.
bool is_in_A_K(const ZernikeCoeffs& coeffs);

struct StabilityReport {
  int K = 0;
  int M = 0;
  double l2_norm = 0.0;
  HsNormResult hs;
  double upper_constant = 0.0;
  double lipschitz_constant = 0.0;
  bool in_A_K = false;
  // hs.upper() <= upper_constant * l2_norm.
  bool upper_satisfied = false;
  // l2_norm <= lipschitz_constant * hs.upper(); meaningful when in_A_K.
  bool lower_satisfied = false;
  // l2_norm <= lipschitz_constant * hs.lower(), the stricter form.
  bool lower_satisfied_truncated = false;
};

// Assembles the operator at truncation M and checks both bounds against the
// certified HS interval. K defaults to the largest stored layer.
StabilityReport verify(const ZernikeCoeffs& coeffs, int M, int threads = 1);

// Standard complex Gaussian coefficients for every |j| <= J, k <= K.
ZernikeCoeffs sample_w_k(std::mt19937_64& rng, int K, int J);

// One unit phase per j times nonnegative magnitudes, so every pair in a
// column is sign-coherent.
ZernikeCoeffs sample_a_k(std::mt19937_64& rng, int K, int J);

}  // namespace calderon

#endif  // CALDERON_STABILITY_HPP_
