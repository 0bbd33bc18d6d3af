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

#include "calderon/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace calderon {

GaussRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

QuadratureGrid::QuadratureGrid(int n_r, int n_theta) {
  if (n_r < 2 || n_theta < 4) {
    throw std::invalid_argument("QuadratureGrid: need n_r >= 2 and n_theta >= 4");
  }
  GaussRule rule = gauss_legendre(n_r, 0.0, 1.0);
  r_ = std::move(rule.nodes);
  gauss_weights_ = std::move(rule.weights);
  radial_weights_.resize(r_.size());
  for (std::size_t i = 0; i < r_.size(); ++i) radial_weights_[i] = gauss_weights_[i] * r_[i];
  theta_.resize(n_theta);
  for (int l = 0; l < n_theta; ++l) theta_[l] = 2.0 * std::numbers::pi * l / n_theta;
  angular_weight_ = 2.0 * std::numbers::pi / n_theta;
}

}  // namespace calderon
