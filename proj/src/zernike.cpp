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

#include "calderon/zernike.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

#include "calderon/special.hpp"

namespace calderon {
namespace {

// R^m_{m+2k}(r) = r^m P_k^{(0,m)}(2r^2 - 1).
double radial_by_recurrence(int m, int k, double r) {
  return std::pow(r, m) * jacobi_p0(k, m, 2.0 * r * r - 1.0);
}

}  // namespace

ZernikeCoeffs::ZernikeCoeffs(int K, int J) : K_(K), J_(J) {
  if (K < 0 || J < 0) throw std::domain_error("ZernikeCoeffs: negative bound");
}

void ZernikeCoeffs::check_index(int /*j*/, int k) const {
  if (k < 0) throw std::domain_error("ZernikeCoeffs: negative k " + std::to_string(k));
}

Complex ZernikeCoeffs::get(int j, int k) const {
  auto it = entries_.find({j, k});
  return it == entries_.end() ? Complex{} : it->second;
}

void ZernikeCoeffs::set(int j, int k, Complex value) {
  check_index(j, k);
  K_ = std::max(K_, k);
  J_ = std::max(J_, std::abs(j));
  entries_[{j, k}] = value;
}

void ZernikeCoeffs::add(int j, int k, Complex value) {
  check_index(j, k);
  K_ = std::max(K_, k);
  J_ = std::max(J_, std::abs(j));
  entries_[{j, k}] += value;
}

void ZernikeCoeffs::erase(int j, int k) { entries_.erase({j, k}); }

std::set<int> ZernikeCoeffs::frequencies() const {
  std::set<int> js;
  for (const auto& [idx, c] : entries_) js.insert(idx.j);
  return js;
}

int ZernikeCoeffs::max_stored_k() const {
  return entries_.empty() ? -1 : entries_.rbegin()->first.k;
}

ZernikeCoeffs& ZernikeCoeffs::operator+=(const ZernikeCoeffs& other) {
  K_ = std::max(K_, other.K_);
  J_ = std::max(J_, other.J_);
  for (const auto& [idx, c] : other.entries_) entries_[idx] += c;
  return *this;
}

ZernikeCoeffs& ZernikeCoeffs::operator*=(Complex scale) {
  for (auto& [idx, c] : entries_) c *= scale;
  return *this;
}

double radial_eval(int j, int k, double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw std::domain_error("radial_eval: r = " + std::to_string(r) + " outside [0, 1]");
  }
  if (k < 0) throw std::domain_error("radial_eval: negative k " + std::to_string(k));
  return radial_by_recurrence(std::abs(j), k, r);
}

Complex basis_eval(BasisIndex idx, double r, double theta) {
  const int m = std::abs(idx.j);
  const double norm = std::sqrt((m + 2.0 * idx.k + 1.0) / std::numbers::pi);
  return norm * radial_eval(idx.j, idx.k, r) * std::polar(1.0, idx.j * theta);
}

double radial_inner(int j, int k, int k2, const QuadratureGrid& grid) {
  const auto& r = grid.r();
  const auto& w = grid.radial_weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    sum += w[i] * radial_eval(j, k, r[i]) * radial_eval(j, k2, r[i]);
  }
  return sum;
}

double monomial_coefficient(int j_abs, int s, int p) {
  if (j_abs < 0 || p < 0) throw std::domain_error("monomial_coefficient: negative index");
  if (s < 0 || s > p) return 0.0;
  // (|j|+2s+1)/(|j|+p+s+1) * prod_{i<s} (p-i)/(|j|+p+s-i)
  double d = (j_abs + 2.0 * s + 1.0) / (j_abs + p + s + 1.0);
  for (int i = 0; i < s; ++i) d *= static_cast<double>(p - i) / (j_abs + p + s - i);
  return d;
}

MonomialExpansion monomial_coeffs(int j_abs, int p) {
  MonomialExpansion e{j_abs, p, {}};
  e.d.reserve(p + 1);
  for (int s = 0; s <= p; ++s) e.d.push_back(monomial_coefficient(j_abs, s, p));
  return e;
}

double l2_norm(const ZernikeCoeffs& coeffs) {
  double sum = 0.0;
  for (const auto& [idx, c] : coeffs.entries()) sum += std::norm(c);
  return std::sqrt(sum);
}

Complex evaluate(const ZernikeCoeffs& coeffs, double r, double theta) {
  Complex sum{};
  for (const auto& [idx, c] : coeffs.entries()) sum += c * basis_eval(idx, r, theta);
  return sum;
}

ZernikeCoeffs project_function(const DiskFunction& f, int K, int J,
                               const QuadratureGrid& grid) {
  if (K < 0 || J < 0) throw std::domain_error("project_function: negative bound");
  const auto& r = grid.r();
  const auto& rw = grid.radial_weights();
  const auto& theta = grid.theta();
  const int nr = grid.n_r();
  const int nt = grid.n_theta();
  const int nj = 2 * J + 1;

  // fourier[i * nj + (j + J)] = int_0^{2pi} f(r_i, theta) e^{-i j theta} dtheta
  std::vector<Complex> fourier(static_cast<std::size_t>(nr) * nj);
  std::vector<Complex> samples(nt);
  for (int i = 0; i < nr; ++i) {
    for (int l = 0; l < nt; ++l) samples[l] = f(r[i], theta[l]);
    for (int j = -J; j <= J; ++j) {
      Complex acc{};
      for (int l = 0; l < nt; ++l) acc += samples[l] * std::polar(1.0, -j * theta[l]);
      fourier[static_cast<std::size_t>(i) * nj + (j + J)] = acc * grid.angular_weight();
    }
  }

  ZernikeCoeffs out(K, J);
  for (int k = 0; k <= K; ++k) {
    for (int j = -J; j <= J; ++j) {
      const double norm = std::sqrt((std::abs(j) + 2.0 * k + 1.0) / std::numbers::pi);
      Complex acc{};
      for (int i = 0; i < nr; ++i) {
        acc += rw[i] * radial_eval(j, k, r[i]) * fourier[static_cast<std::size_t>(i) * nj + (j + J)];
      }
      acc *= norm;
      if (acc != Complex{}) out.set(j, k, acc);
    }
  }
  return out;
}

std::vector<Complex> sample_on_grid(const ZernikeCoeffs& coeffs, const QuadratureGrid& grid) {
  const int nr = grid.n_r();
  const int nt = grid.n_theta();
  std::vector<Complex> out(static_cast<std::size_t>(nr) * nt);
  std::vector<double> radial(nr);
  std::vector<Complex> phase(nt);
  for (const auto& [idx, c] : coeffs.entries()) {
    const double norm = std::sqrt((std::abs(idx.j) + 2.0 * idx.k + 1.0) / std::numbers::pi);
    for (int i = 0; i < nr; ++i) radial[i] = norm * radial_eval(idx.j, idx.k, grid.r()[i]);
    for (int l = 0; l < nt; ++l) phase[l] = c * std::polar(1.0, idx.j * grid.theta()[l]);
    for (int i = 0; i < nr; ++i) {
      Complex* row = out.data() + static_cast<std::size_t>(i) * nt;
      for (int l = 0; l < nt; ++l) row[l] += radial[i] * phase[l];
    }
  }
  return out;
}

double quadrature_l2_norm(const DiskFunction& f, const QuadratureGrid& grid) {
  double sum = 0.0;
  for (int i = 0; i < grid.n_r(); ++i) {
    double ring = 0.0;
    for (int l = 0; l < grid.n_theta(); ++l) ring += std::norm(f(grid.r()[i], grid.theta()[l]));
    sum += grid.radial_weights()[i] * ring;
  }
  return std::sqrt(sum * grid.angular_weight());
}

}  // namespace calderon
