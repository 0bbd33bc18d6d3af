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

#ifndef CALDERON_FORWARD_OPERATOR_HPP_
#define CALDERON_FORWARD_OPERATOR_HPP_

#include <map>
#include <utility>
#include <vector>

#include "calderon/quadrature.hpp"
#include "calderon/zernike.hpp"

namespace calderon {

// Truncated matrix <(F eta) f_m, f_n> of the linearised Neumann-to-Dirichlet
// data in the boundary Fourier basis f_m = e^{i m theta} / sqrt(2 pi), m != 0.
// Only indices with 1 <= |m|, |n| <= M can be stored; absent entries are zero.
class BandedBoundaryOperator {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, Complex>;

  explicit BandedBoundaryOperator(int M = 1);

  int M() const { return M_; }
  bool contains_index(int m, int n) const;
  Complex entry(int m, int n) const;
  void set(int m, int n, Complex value);
  const Map& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  double frobenius_norm() const;

 private:
  int M_;
  Map entries_;
};

// Hilbert-Schmidt inner product sum_{m,n} a_{mn} conj(b_{mn}).
Complex hs_inner(const BandedBoundaryOperator& a, const BandedBoundaryOperator& b);

// v_{m,n} = min(|m|, |n|) - 1.
constexpr int min_mode_offset(int m, int n) {
  const int am = m < 0 ? -m : m;
  const int an = n < 0 ? -n : n;
  return (am < an ? am : an) - 1;
}

// p_{m,j,k} = (v)_k / (|j| + v + k)_k with v = v_{m,m+j}. Requires m(m+j) > 0.
double pochhammer_ratio(int m, int j, int k);

// Closed-form <(F eta) f_m, f_n>; zero when mn < 0 or no coefficient has
// j = n - m.
Complex entry_closed_form(const ZernikeCoeffs& coeffs, int m, int n);

// <(F psi_{j,k}) f_m, f_{m+j}>.
Complex single_basis_entry(BasisIndex idx, int m);

// Fills every (m, n) with mn > 0, |m|, |n| <= M and n - m a stored frequency.
// Diagonals are split across up to `threads` workers.
BandedBoundaryOperator assemble(const ZernikeCoeffs& coeffs, int M, int threads = 1);

// grad u_m . conj(grad u_n) at r e^{i theta} for the harmonic extensions of
// f_m and f_n.
Complex gradient_product(int m, int n, double r, double theta);

// Direct quadrature of -int_D eta grad u_m . conj(grad u_n) dx, with eta
// synthesised once on the grid.
class QuadratureOracle {
 public:
  QuadratureOracle(const ZernikeCoeffs& coeffs, const QuadratureGrid& grid);
  Complex entry(int m, int n) const;

 private:
  const QuadratureGrid& grid_;
  std::vector<Complex> eta_;
};

Complex entry_quadrature_oracle(const ZernikeCoeffs& coeffs, int m, int n,
                                const QuadratureGrid& grid);

struct HsNormResult {
  double truncated_norm = 0.0;
  double tail_bound = 0.0;

  double lower() const { return truncated_norm; }
  double upper() const;
};

// Majorant on the Hilbert-Schmidt mass of all entries with max(|m|, |n|) > M.
double hs_tail_bound(const ZernikeCoeffs& coeffs, int M);

// Truncated HS norm of `op` and the certified tail for the coefficients it was
// assembled from.
HsNormResult hs_norm(const BandedBoundaryOperator& op, const ZernikeCoeffs& coeffs);

// F* G = -sum_{m,n} <G f_m, f_n> P_K(conj(grad u_m) . grad u_n), expanded in the
// Zernike basis for k <= K, |j| <= J.
ZernikeCoeffs adjoint_apply(const BandedBoundaryOperator& G, int K, int J);

}  // namespace calderon

#endif  // CALDERON_FORWARD_OPERATOR_HPP_
