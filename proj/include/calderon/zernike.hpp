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

#ifndef CALDERON_ZERNIKE_HPP_
#define CALDERON_ZERNIKE_HPP_

#include <complex>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "calderon/quadrature.hpp"

namespace calderon {

using Complex = std::complex<double>;

// Index (j, k) of the disk Zernike function
//   psi_{j,k}(r e^{i theta}) = sqrt((|j| + 2k + 1) / pi) R^{|j|}_{|j|+2k}(r) e^{i j theta}.
struct BasisIndex {
  int j = 0;
  int k = 0;

  // k-major, then j ascending.
  friend bool operator<(const BasisIndex& a, const BasisIndex& b) {
    return a.k != b.k ? a.k < b.k : a.j < b.j;
  }
  friend bool operator==(const BasisIndex& a, const BasisIndex& b) = default;
};

// Sparse coefficient table of a perturbation in the Zernike basis of L^2(D).
//
// K and J bound the stored indices (k <= K, |j| <= J). They grow when an entry
// outside the current bounds is set, so the invariant always holds; a caller
// may also declare larger bounds up front to describe the truncation space.
class ZernikeCoeffs {
 public:
  using Map = std::map<BasisIndex, Complex>;

  ZernikeCoeffs() = default;
  ZernikeCoeffs(int K, int J);

  int K() const { return K_; }
  int J() const { return J_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const Map& entries() const { return entries_; }

  Complex get(int j, int k) const;
  void set(int j, int k, Complex value);
  void add(int j, int k, Complex value);
  void erase(int j, int k);

  // Angular frequencies that have at least one stored entry.
  std::set<int> frequencies() const;
  // Largest stored k, or -1 when empty.
  int max_stored_k() const;

  ZernikeCoeffs& operator+=(const ZernikeCoeffs& other);
  ZernikeCoeffs& operator*=(Complex scale);
  friend ZernikeCoeffs operator+(ZernikeCoeffs a, const ZernikeCoeffs& b) { return a += b; }
  friend ZernikeCoeffs operator*(Complex s, ZernikeCoeffs a) { return a *= s; }

 private:
  void check_index(int j, int k) const;

  int K_ = 0;
  int J_ = 0;
  Map entries_;
};

// r^{|j|+2p} = sum_{s=0}^{p} d[s] R^{|j|}_{|j|+2s}(r).
struct MonomialExpansion {
  int j_abs = 0;
  int p = 0;
  std::vector<double> d;
};

// Radial Zernike polynomial R^{|j|}_{|j|+2k}(r). Throws std::domain_error for
// r outside [0, 1] or k < 0.
double radial_eval(int j, int k, double r);

Complex basis_eval(BasisIndex idx, double r, double theta);

// Quadrature value of int_0^1 R^{|j|}_{|j|+2k} R^{|j|}_{|j|+2k2} r dr.
double radial_inner(int j, int k, int k2, const QuadratureGrid& grid);

double monomial_coefficient(int j_abs, int s, int p);
MonomialExpansion monomial_coeffs(int j_abs, int p);

// Parseval norm.
double l2_norm(const ZernikeCoeffs& coeffs);

// Sum of c_{j,k} psi_{j,k} at a point.
Complex evaluate(const ZernikeCoeffs& coeffs, double r, double theta);

// Values of the represented function on the grid nodes, row-major in
// (radial node, angular node).
std::vector<Complex> sample_on_grid(const ZernikeCoeffs& coeffs, const QuadratureGrid& grid);

using DiskFunction = std::function<Complex(double r, double theta)>;

// c_{j,k} = <f, psi_{j,k}> by quadrature for |j| <= J, k <= K. The grid must
// resolve f; this is not checked.
ZernikeCoeffs project_function(const DiskFunction& f, int K, int J,
                               const QuadratureGrid& grid);

// L^2(D) norm of f by quadrature.
double quadrature_l2_norm(const DiskFunction& f, const QuadratureGrid& grid);

}  // namespace calderon

#endif  // CALDERON_ZERNIKE_HPP_
