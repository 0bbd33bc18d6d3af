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

#ifndef CALDERON_QUADRATURE_HPP_
#define CALDERON_QUADRATURE_HPP_

#include <vector>

namespace calderon {

// Gauss-Legendre nodes and weights on [a, b].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n, double a = 0.0, double b = 1.0);

// Tensor polar rule on the unit disk: Gauss-Legendre in r on [0, 1] with the
// Jacobian r folded into radial_weights, and the equispaced trapezoidal rule
// in theta on [0, 2pi). The angular rule integrates e^{i l theta} exactly for
// |l| < n_theta.
class QuadratureGrid {
 public:
  static constexpr int kDefaultRadial = 128;
  static constexpr int kDefaultAngular = 256;

  QuadratureGrid() : QuadratureGrid(kDefaultRadial, kDefaultAngular) {}
  QuadratureGrid(int n_r, int n_theta);

  int n_r() const { return static_cast<int>(r_.size()); }
  int n_theta() const { return static_cast<int>(theta_.size()); }

  const std::vector<double>& r() const { return r_; }
  // Gauss weight times r, so sum_i radial_weights[i] g(r_i) ~ int_0^1 g r dr.
  const std::vector<double>& radial_weights() const { return radial_weights_; }
  // Plain Gauss weights on [0, 1].
  const std::vector<double>& gauss_weights() const { return gauss_weights_; }
  const std::vector<double>& theta() const { return theta_; }
  double angular_weight() const { return angular_weight_; }

 private:
  std::vector<double> r_;
  std::vector<double> gauss_weights_;
  std::vector<double> radial_weights_;
  std::vector<double> theta_;
  double angular_weight_ = 0.0;
};

}  // namespace calderon

#endif  // CALDERON_QUADRATURE_HPP_
