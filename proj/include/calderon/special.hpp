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

#ifndef CALDERON_SPECIAL_HPP_
#define CALDERON_SPECIAL_HPP_

#include <cstdint>

namespace calderon {

// Sign with sgn(0) = 1.
constexpr int sgn(int x) { return x < 0 ? -1 : 1; }

// Exact binomial coefficient. Throws std::overflow_error if the value does
// not fit in 64 bits, std::domain_error for n < 0.
std::uint64_t binomial(int n, int k);

// binomial(n, k) as a double; exact whenever the value is below 2^53.
double binomial_f(int n, int k);

// Falling factorial (p)_s = p! / (p - s)!, zero when s > p.
double falling_factorial(int p, int s);

// H_K = 1 + 1/2 + ... + 1/K, H_0 = 0.
double harmonic_number(int K);

// Partial sum of the trigamma series sum_{q=0}^{terms-1} 1 / (q + x)^2,
// accumulated from the smallest term upwards.
double trigamma_partial_sum(double x, long terms);

// Closed-form sandwich (2x+1)/(2x^2) < psi'(x) < (x+1)/x^2, x > 0.
double trigamma_lower_bound(double x);
double trigamma_upper_bound(double x);

// Jacobi polynomial P_n^{(0, beta)}(x) by the three-term recurrence, beta > -1.
double jacobi_p0(int n, double beta, double x);

}  // namespace calderon

#endif  // CALDERON_SPECIAL_HPP_
