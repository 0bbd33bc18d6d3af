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

#include "calderon/special.hpp"

#include <stdexcept>
#include <string>

namespace calderon {

namespace {
__extension__ using Uint128 = unsigned __int128;
}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0) throw std::domain_error("binomial: negative n " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // result * (n - k + i) / i stays integral at every step.
  Uint128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > UINT64_MAX) {
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " +
                                std::to_string(k) + ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

double binomial_f(int n, int k) { return static_cast<double>(binomial(n, k)); }

double falling_factorial(int p, int s) {
  if (s < 0) throw std::domain_error("falling_factorial: negative s");
  if (s > p) return 0.0;
  double result = 1.0;
  for (int i = 0; i < s; ++i) result *= static_cast<double>(p - i);
  return result;
}

double harmonic_number(int K) {
  if (K < 0) throw std::domain_error("harmonic_number: negative K");
  double h = 0.0;
  for (int k = K; k >= 1; --k) h += 1.0 / k;
  return h;
}

double trigamma_partial_sum(double x, long terms) {
  if (!(x > 0.0)) throw std::domain_error("trigamma_partial_sum: x must be positive");
  double sum = 0.0;
  for (long q = terms - 1; q >= 0; --q) {
    const double t = static_cast<double>(q) + x;
    sum += 1.0 / (t * t);
  }
  return sum;
}

double trigamma_lower_bound(double x) { return (2.0 * x + 1.0) / (2.0 * x * x); }

double trigamma_upper_bound(double x) { return (x + 1.0) / (x * x); }

double jacobi_p0(int n, double beta, double x) {
  if (n < 0) throw std::domain_error("jacobi_p0: negative degree");
  if (!(beta > -1.0)) throw std::domain_error("jacobi_p0: beta must exceed -1");
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = 1.0 + (beta + 2.0) * (x - 1.0) / 2.0;
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + beta;
    const double a1 = 2.0 * k * (k + beta) * (s - 2.0);
    const double a2 = (s - 1.0) * (s * (s - 2.0) * x - beta * beta);
    const double a3 = 2.0 * (k - 1.0) * (k + beta - 1.0) * s;
    const double p2 = (a2 * p1 - a3 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace calderon
