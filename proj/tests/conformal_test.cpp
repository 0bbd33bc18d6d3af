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

#include "calderon/conformal.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "calderon/forward_operator.hpp"
#include "calderon/quadrature.hpp"
#include "calderon/stability.hpp"

namespace calderon {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

ZernikeCoeffs single(int j, int k, Complex v = 1.0) {
  ZernikeCoeffs c(k, std::abs(j));
  c.set(j, k, v);
  return c;
}

const ConformalMapSpec kQuadratic = ConformalMapSpec::quadratic(1.0, 0.2);

TEST(MapSpec, Identity) {
  const ConformalMapSpec id = ConformalMapSpec::identity();
  const Complex w{0.3, 0.4};
  EXPECT_EQ(map_eval(id, w), w);
  EXPECT_EQ(map_derivative(id, w), Complex(1.0));
  EXPECT_EQ(id.inverse(w), w);
}

TEST(MapSpec, QuadraticDerivativeOnBoundary) {
  EXPECT_NEAR(std::abs(map_derivative(kQuadratic, 1.0) - 1.4), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(map_derivative(kQuadratic, -1.0) - 0.6), 0.0, 1e-15);
}

TEST(MapSpec, DegenerateMoebiusIsIdentity) {
  const ConformalMapSpec m = ConformalMapSpec::moebius(0.0, 0.0);
  for (const Complex w : {Complex(0.3, 0.4), Complex(-0.9, 0.1), Complex(0.0, 1.0)}) {
    EXPECT_NEAR(std::abs(m.map(w) - w), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m.derivative(w) - 1.0), 0.0, 1e-15);
  }
}

TEST(MapSpec, InverseRoundTrip) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const ConformalMapSpec specs[] = {kQuadratic, ConformalMapSpec::quadratic({0.8, 0.3}, {-0.1, 0.25}),
                                    ConformalMapSpec::moebius({0.5, -0.2}, 1.1)};
  for (const auto& spec : specs) {
    for (int i = 0; i < 200; ++i) {
      const Complex w = std::polar(std::sqrt(u(rng)), 2.0 * kPi * u(rng));
      EXPECT_NEAR(std::abs(spec.inverse(spec.map(w)) - w), 0.0, 1e-13);
    }
  }
}

TEST(MapSpec, DerivativeMatchesDifferenceQuotient) {
  const ConformalMapSpec specs[] = {kQuadratic, ConformalMapSpec::moebius({0.3, 0.4}, -0.7)};
  const Complex w{0.2, -0.5};
  const double h = 1e-6;
  for (const auto& spec : specs) {
    const Complex fd = (spec.map(w + h) - spec.map(w - h)) / (2.0 * h);
    EXPECT_NEAR(std::abs(fd - spec.derivative(w)), 0.0, 1e-9);
  }
}

TEST(MapSpec, RejectsInvalidParameters) {
  EXPECT_THROW(ConformalMapSpec::moebius(1.0, 0.0), std::domain_error);
  EXPECT_THROW(ConformalMapSpec::quadratic(0.0, 0.1), std::domain_error);
  EXPECT_THROW(ConformalMapSpec::quadratic(1.0, 0.5), std::domain_error);
}

TEST(BoundaryConstants, Identity) {
  const TransferConstants tc = boundary_constants(ConformalMapSpec::identity());
  EXPECT_DOUBLE_EQ(tc.min_boundary_deriv, 1.0);
  EXPECT_DOUBLE_EQ(tc.max_boundary_deriv, 1.0);
  EXPECT_NEAR(tc.corollary_constant, kSqrtPi, 1e-15);
}

TEST(BoundaryConstants, Quadratic) {
  const TransferConstants tc = boundary_constants(kQuadratic);
  EXPECT_NEAR(tc.min_boundary_deriv, 0.6, 1e-9);
  EXPECT_NEAR(tc.max_boundary_deriv, 1.4, 1e-9);
  EXPECT_NEAR(tc.corollary_constant, kSqrtPi * 7.0 / 3.0, 1e-8);
}

TEST(BoundaryConstants, QuadraticFamily) {
  for (const auto& [c1, c2] : {std::pair{Complex(1.0), Complex(0.2)},
                               std::pair{Complex(0.5, 0.5), Complex(0.0, 0.3)},
                               std::pair{Complex(-2.0), Complex(0.7, 0.1)}}) {
    const TransferConstants tc = boundary_constants(ConformalMapSpec::quadratic(c1, c2));
    const double ratio = 2.0 * std::abs(c2 / c1);
    EXPECT_NEAR(tc.min_boundary_deriv, std::abs(c1) * (1.0 - ratio), 1e-9);
    EXPECT_NEAR(tc.max_boundary_deriv, std::abs(c1) * (1.0 + ratio), 1e-9);
  }
}

TEST(BoundaryConstants, Moebius) {
  const TransferConstants tc = boundary_constants(ConformalMapSpec::moebius(0.5, 0.3));
  EXPECT_NEAR(tc.max_boundary_deriv, 3.0, 1e-9);
  EXPECT_NEAR(tc.min_boundary_deriv, 1.0 / 3.0, 1e-9);
  EXPECT_GE(tc.corollary_constant, kSqrtPi);
}

TEST(TransformNeumann, IdentityAndQuadratic) {
  const BoundarySamples id = transform_neumann(1, ConformalMapSpec::identity(), 64);
  const BoundarySamples q = transform_neumann(1, kQuadratic, 64);
  for (std::size_t l = 0; l < id.theta.size(); ++l) {
    const Complex e = std::polar(1.0, id.theta[l]) / std::sqrt(2.0 * kPi);
    EXPECT_NEAR(std::abs(id.value[l] - e), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(q.value[l] - e / std::abs(1.0 + 0.4 * std::polar(1.0, q.theta[l]))), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(q.point[l] - kQuadratic.map(std::polar(1.0, q.theta[l]))), 0.0, 1e-15);
  }
}

TEST(TransformNeumann, OppositeModesConjugate) {
  const ConformalMapSpec spec = ConformalMapSpec::moebius({0.2, 0.1}, 0.4);
  const BoundarySamples a = transform_neumann(3, spec, 32);
  const BoundarySamples b = transform_neumann(-3, spec, 32);
  for (std::size_t l = 0; l < a.value.size(); ++l) {
    EXPECT_NEAR(std::abs(a.value[l] - std::conj(b.value[l])), 0.0, 1e-15);
  }
}

TEST(PullBack, RoundTrips) {
  const QuadratureGrid grid;
  std::mt19937_64 rng(12);
  const ZernikeCoeffs eta = sample_w_k(rng, 3, 4);
  const PushForwardResult id =
      push_forward(pull_back(eta, ConformalMapSpec::identity()), ConformalMapSpec::identity(), 3, 4, grid);
  for (const auto& [idx, c] : eta.entries()) EXPECT_NEAR(std::abs(id.coeffs.get(idx.j, idx.k) - c), 0.0, 1e-10);

  const PushForwardResult q = push_forward(pull_back(single(1, 0), kQuadratic), kQuadratic, 2, 2, grid);
  EXPECT_NEAR(std::abs(q.coeffs.get(1, 0) - 1.0), 0.0, 1e-10);
  EXPECT_LT(q.residual, 1e-10);
}

TEST(PullBack, ConstantsAreInvariant) {
  const DomainFunction f = pull_back(single(0, 0), kQuadratic);
  for (const Complex w : {Complex(0.1, 0.2), Complex(-0.7, 0.3), Complex(0.99, 0.0)}) {
    EXPECT_NEAR(std::abs(f(kQuadratic.map(w)) - 1.0 / kSqrtPi), 0.0, 1e-15);
  }
}

TEST(Invariance, IdentityIsExact) {
  const QuadratureGrid grid;
  std::mt19937_64 rng(4);
  const ZernikeCoeffs eta = sample_w_k(rng, 2, 3);
  for (auto [m, n] : {std::pair{1, 1}, std::pair{-2, -1}, std::pair{2, 4}}) {
    const auto [disk, domain] = invariance_check(eta, ConformalMapSpec::identity(), m, n, grid);
    EXPECT_NEAR(std::abs(disk - domain), 0.0, 1e-14);
  }
}

TEST(Invariance, QuadraticMap) {
  const QuadratureGrid grid;
  const auto [disk, domain] = invariance_check(single(0, 0), kQuadratic, 1, 1, grid);
  EXPECT_NEAR(std::abs(disk - domain), 0.0, 1e-6);
  EXPECT_NEAR(disk.real(), -1.0 / kSqrtPi, 1e-12);
  std::mt19937_64 rng(6);
  const ZernikeCoeffs eta = sample_w_k(rng, 3, 4);
  const DomainSideIntegrator side(eta, kQuadratic, grid);
  for (int m = -4; m <= 4; ++m) {
    for (int n = -4; n <= 4; ++n) {
      if (m == 0 || n == 0) continue;
      EXPECT_NEAR(std::abs(side.entry(m, n) - entry_closed_form(eta, m, n)), 0.0, 1e-6);
    }
  }
}

TEST(Invariance, OppositeSignsVanish) {
  const QuadratureGrid grid;
  const auto [disk, domain] = invariance_check(single(2, 1), kQuadratic, 1, -1, grid);
  EXPECT_EQ(disk, Complex{});
  EXPECT_NEAR(std::abs(domain), 0.0, 1e-14);
}

TEST(NormEquivalence, PerturbationNorms) {
  const QuadratureGrid grid;
  const TransferConstants tc = boundary_constants(kQuadratic);
  // 1/sqrt(pi) on an image of area pi (1 + 2 |c2|^2).
  const NormEquivalence c = perturbation_norms(single(0, 0), kQuadratic, tc, grid);
  EXPECT_NEAR(c.domain, 1.0392304845413263761, 1e-12);
  EXPECT_NEAR(c.disk, 1.0, 1e-13);
  EXPECT_TRUE(c.holds(1e-6));
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    EXPECT_TRUE(perturbation_norms(sample_w_k(rng, 3, 5), kQuadratic, tc, grid).holds(1e-6));
  }
}

TEST(NormEquivalence, NeumannNorms) {
  const TransferConstants tc = boundary_constants(kQuadratic);
  const NormEquivalence first = neumann_norms(1, kQuadratic, tc);
  EXPECT_NEAR(first.domain, 1.0217907522039573934, 1e-12);
  EXPECT_NEAR(first.disk, 1.0, 1e-14);
  for (int m = -8; m <= 8; ++m) {
    if (m != 0) EXPECT_TRUE(neumann_norms(m, kQuadratic, tc).holds(1e-4)) << m;
  }
}

TEST(NormEquivalence, HilbertSchmidtNorms) {
  const QuadratureGrid grid;
  const TransferConstants tc = boundary_constants(kQuadratic);
  const NormEquivalence c = hs_norms(single(0, 0), kQuadratic, tc, 12, grid);
  EXPECT_TRUE(c.holds(1e-4));
  EXPECT_NEAR(c.disk, assemble(single(0, 0), 12).frobenius_norm(), 1e-14);
  // Identity map: the compression is the disk matrix itself.
  const TransferConstants one = boundary_constants(ConformalMapSpec::identity());
  const NormEquivalence id = hs_norms(single(0, 0), ConformalMapSpec::identity(), one, 6, grid);
  EXPECT_NEAR(id.domain, id.disk, 1e-12);
}

TEST(NormEquivalence, CorollaryConstantChain) {
  const QuadratureGrid grid;
  for (const auto& spec : {kQuadratic, ConformalMapSpec::moebius({0.3, 0.1}, 0.5)}) {
    const TransferConstants tc = boundary_constants(spec);
    const ZernikeCoeffs eta = single(0, 0, 2.5);
    const double domain_eta = perturbation_norms(eta, spec, tc, grid).domain;
    const double domain_hs = hs_norms(eta, spec, tc, 12, grid).domain;
    EXPECT_LE(domain_eta, tc.corollary_constant * domain_hs + 1e-4);
  }
}

}  // namespace
}  // namespace calderon
