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

#ifndef CALDERON_RECONSTRUCTION_HPP_
#define CALDERON_RECONSTRUCTION_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "calderon/forward_operator.hpp"
#include "calderon/quadrature.hpp"
#include "calderon/zernike.hpp"

namespace calderon {

// A data entry needed by the layer recursion lies outside the truncation.
class InsufficientTruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A nonzero perturbation produced no nonzero witness entry.
class NoWitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReconstructionRequest {
  BandedBoundaryOperator data;
  int K = 0;
  int J = 0;
};

// Fourier modes whose data determine layers 0..K: +-1, ..., +-(K+1), ascending.
std::vector<int> required_modes(int K);

// Data cell (m, n) = (sgn(j)(k+1), sgn(j)(|j|+k+1)) read for c_{j,k}.
std::pair<int, int> layer_data_index(int j, int k);

// sqrt(pi (|j|+2k+1)) binom(|j|+2k, k): how a perturbation of the data cell
// for c_{j,k} scales into c_{j,k} before propagation to later layers.
double amplification_factor(int j, int k);

// Layer-k coefficients {c_{j,k}}_{|j| <= J}, keyed by j. `prior` must hold
// layers 0..k-1.
std::map<int, Complex> recover_layer(const BandedBoundaryOperator& data,
                                     const ZernikeCoeffs& prior, int k, int J);

// Layers 0..K in order. Layers must be processed sequentially; frequencies
// within a layer are independent.
ZernikeCoeffs reconstruct(const ReconstructionRequest& req);

struct WitnessResult {
  int m = 0;
  int n = 0;
  Complex value;
  int n0 = 0;
  // Angular frequency n - m of the probed radial component.
  int frequency = 0;
  // Same entry from the radial moment by Gauss quadrature.
  Complex quadrature_value;
};

// Data entry certifying F eta != 0. Throws NoWitnessError for a zero input
// or when no moment up to n0 = 200 is nonzero.
WitnessResult injectivity_witness(const ZernikeCoeffs& coeffs, const QuadratureGrid& grid);

struct DensityCheck {
  bool approximable = false;
  // L^2((0,1)) distance from f to span{x^{n+2m} : m <= max_power}.
  double residual = 0.0;
  // Condition estimate of the least-squares system.
  double condition = 0.0;
};

// Least-squares approximation of the polynomial sum_i f[i] x^i from
// span{x^{n+2m} : m = 0..max_power} in L^2((0,1)).
DensityCheck dense_monomial_check(int n, const std::vector<double>& f, double tol,
                                  int max_power = 40);

}  // namespace calderon

#endif  // CALDERON_RECONSTRUCTION_HPP_
