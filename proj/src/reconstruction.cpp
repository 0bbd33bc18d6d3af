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

#include "calderon/reconstruction.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>

#include "calderon/special.hpp"

namespace calderon {

std::vector<int> required_modes(int K) {
  if (K < 0) throw std::domain_error("required_modes: negative K");
  std::vector<int> modes;
  modes.reserve(2 * K + 2);
  for (int m = -(K + 1); m <= K + 1; ++m) {
    if (m != 0) modes.push_back(m);
  }
  return modes;
}

std::pair<int, int> layer_data_index(int j, int k) {
  return {sgn(j) * (k + 1), sgn(j) * (std::abs(j) + k + 1)};
}

double amplification_factor(int j, int k) {
  const int aj = std::abs(j);
  return std::sqrt(std::numbers::pi * (aj + 2.0 * k + 1.0)) * binomial_f(aj + 2 * k, k);
}

std::map<int, Complex> recover_layer(const BandedBoundaryOperator& data,
                                     const ZernikeCoeffs& prior, int k, int J) {
  if (k < 0 || J < 0) throw std::domain_error("recover_layer: negative index");
  if (data.M() < J + k + 1) {
    throw InsufficientTruncationError("recover_layer: layer " + std::to_string(k) +
                                      " with J=" + std::to_string(J) + " needs M >= " +
                                      std::to_string(J + k + 1) + ", data has M=" +
                                      std::to_string(data.M()));
  }
  std::map<int, Complex> layer;
  for (int j = -J; j <= J; ++j) {
    const int aj = std::abs(j);
    const auto [m, n] = layer_data_index(j, k);
    Complex c = -amplification_factor(j, k) * data.entry(m, n);
    for (int q = 0; q < k; ++q) {
      const Complex cq = prior.get(j, q);
      if (cq == Complex{}) continue;
      const double w = std::sqrt((aj + 2.0 * k + 1.0) * (aj + 2.0 * q + 1.0)) /
                       (aj + k + q + 1.0) * binomial_f(aj + 2 * k, k - q);
      c -= cq * w;
    }
    layer[j] = c;
  }
  return layer;
}

ZernikeCoeffs reconstruct(const ReconstructionRequest& req) {
  if (req.K < 0 || req.J < 0) throw std::domain_error("reconstruct: negative K or J");
  if (req.data.M() < req.J + req.K + 1) {
    throw InsufficientTruncationError("reconstruct: K=" + std::to_string(req.K) + " J=" +
                                      std::to_string(req.J) + " needs M >= " +
                                      std::to_string(req.J + req.K + 1) + ", data has M=" +
                                      std::to_string(req.data.M()));
  }
  ZernikeCoeffs out(req.K, req.J);
  for (int k = 0; k <= req.K; ++k) {
    for (const auto& [j, c] : recover_layer(req.data, out, k, req.J)) {
      if (c != Complex{}) out.set(j, k, c);
    }
  }
  return out;
}

namespace {

constexpr int kMaxProbeExponent = 200;

// int_0^1 rho(r) r^{n0+1} dr for the radial profile rho of frequency j, where
// n0 = |j| + 2p. Uses r^{n0} = sum_s d_{|j|,s,p} R_s and radial orthogonality.
Complex radial_moment(const ZernikeCoeffs& coeffs, int j, int p) {
  const int aj = std::abs(j);
  Complex sum{};
  for (int s = 0; s <= std::min(p, coeffs.K()); ++s) {
    const Complex c = coeffs.get(j, s);
    if (c == Complex{}) continue;
    // rho = sqrt(2 pi) sum_s c_s sqrt((|j|+2s+1)/pi) R_s
    const double scale = std::sqrt(2.0 * (aj + 2.0 * s + 1.0));
    sum += c * scale * monomial_coefficient(aj, s, p) / (2.0 * aj + 4.0 * s + 2.0);
  }
  return sum;
}

Complex radial_moment_quadrature(const ZernikeCoeffs& coeffs, int j, int n0,
                                 const QuadratureGrid& grid) {
  Complex sum{};
  for (int i = 0; i < grid.n_r(); ++i) {
    const double r = grid.r()[i];
    Complex rho{};
    for (const auto& [idx, c] : coeffs.entries()) {
      if (idx.j != j) continue;
      rho += c * std::sqrt(2.0 * (std::abs(j) + 2.0 * idx.k + 1.0)) * radial_eval(j, idx.k, r);
    }
    sum += grid.gauss_weights()[i] * rho * std::pow(r, n0 + 1);
  }
  return sum;
}

}  // namespace

WitnessResult injectivity_witness(const ZernikeCoeffs& coeffs, const QuadratureGrid& grid) {
  // Radial profile with the largest L^2_r norm; ||rho_j||^2 = sum_k |c_{j,k}|^2.
  std::map<int, double> profile_mass;
  for (const auto& [idx, c] : coeffs.entries()) profile_mass[idx.j] += std::norm(c);
  int freq = 0;
  double best = 0.0;
  for (const auto& [j, mass] : profile_mass) {
    if (mass > best) {
      best = mass;
      freq = j;
    }
  }
  if (best == 0.0) throw NoWitnessError("injectivity_witness: perturbation is zero");

  const double rho_norm = std::sqrt(best);
  const int aj = std::abs(freq);
  for (int n0 = aj; n0 <= kMaxProbeExponent; n0 += 2) {
    const Complex moment = radial_moment(coeffs, freq, (n0 - aj) / 2);
    if (std::abs(moment) <= 1e-12 * rho_norm) continue;
    WitnessResult w;
    w.n0 = n0;
    w.frequency = freq;
    w.n = (freq + n0 + 2) / 2;
    w.m = (-freq + n0 + 2) / 2;
    const double scale = -std::sqrt(2.0 / std::numbers::pi);
    w.value = scale * moment;
    w.quadrature_value = scale * radial_moment_quadrature(coeffs, freq, n0, grid);
    return w;
  }
  std::ostringstream msg;
  msg << "injectivity_witness: no nonzero moment for frequency " << freq << " with n0 <= "
      << kMaxProbeExponent << " (profile norm " << rho_norm << ")";
  throw NoWitnessError(msg.str());
}

DensityCheck dense_monomial_check(int n, const std::vector<double>& f, double tol,
                                  int max_power) {
  if (n < 0 || max_power < 0) throw std::domain_error("dense_monomial_check: negative index");
  const int deg_f = f.empty() ? 0 : static_cast<int>(f.size()) - 1;
  const int deg_span = n + 2 * max_power;
  // Exact for every product that enters the residual.
  const int nodes = std::max(deg_span, deg_f) + 2;
  const GaussRule rule = gauss_legendre(nodes, 0.0, 1.0);

  // Columns x^n P_a^{(0, n-1/2)}(2x^2 - 1) span the same space as x^{n+2a},
  // a = 0..max_power, and are orthogonal in L^2((0,1)).
  const double beta = n - 0.5;
  Eigen::MatrixXd basis(nodes, max_power + 1);
  Eigen::VectorXd rhs(nodes);
  for (int i = 0; i < nodes; ++i) {
    const double x = rule.nodes[i];
    const double sw = std::sqrt(rule.weights[i]);
    double fx = 0.0;
    for (int d = deg_f; d >= 0 && !f.empty(); --d) fx = fx * x + f[d];
    rhs(i) = sw * fx;
    const double xn = std::pow(x, n);
    for (int a = 0; a <= max_power; ++a) basis(i, a) = sw * xn * jacobi_p0(a, beta, 2.0 * x * x - 1.0);
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis);
  const Eigen::VectorXd coef = qr.solve(rhs);
  DensityCheck out;
  out.residual = (basis * coef - rhs).norm();
  const auto diag = qr.matrixR().diagonal().cwiseAbs();
  out.condition = diag.minCoeff() > 0.0 ? diag.maxCoeff() / diag.minCoeff()
                                        : std::numeric_limits<double>::infinity();
  out.approximable = out.residual <= tol;
  return out;
}

}  // namespace calderon
