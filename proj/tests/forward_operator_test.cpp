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

#include "calderon/forward_operator.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "calderon/quadrature.hpp"
#include "calderon/special.hpp"
#include "calderon/stability.hpp"

namespace calderon {
namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

ZernikeCoeffs single(int j, int k, Complex v = 1.0) {
  ZernikeCoeffs c(k, std::abs(j));
  c.set(j, k, v);
  return c;
}

// 0.5 psi_{2,1} + (0.25 - i) psi_{-1,0} + 2 psi_{0,2}.
ZernikeCoeffs mixed() {
  ZernikeCoeffs c(2, 2);
  c.set(2, 1, 0.5);
  c.set(-1, 0, {0.25, -1.0});
  c.set(0, 2, 2.0);
  return c;
}

ZernikeCoeffs random_coeffs(std::mt19937_64& rng, int K, int J) { return sample_w_k(rng, K, J); }

TEST(PochhammerRatio, Examples) {
  EXPECT_DOUBLE_EQ(pochhammer_ratio(7, -3, 0), 1.0);
  EXPECT_DOUBLE_EQ(pochhammer_ratio(2, 0, 1), 0.5);
  EXPECT_DOUBLE_EQ(pochhammer_ratio(2, 0, 2), 0.0);
  EXPECT_THROW(pochhammer_ratio(-1, 3, 0), std::domain_error);
}

TEST(PochhammerRatio, LowerBoundOnSpecialIndices) {
  for (int q = 0; q <= 10; ++q) {
    for (int j = -8; j <= 8; ++j) {
      for (int k = 0; k <= 5; ++k) {
        const int m = sgn(j) * (std::abs(j) + q + k + 1);
        EXPECT_GE(pochhammer_ratio(m, j, k), 1.0 / binomial_f(2 * k, k)) << q << "," << j << "," << k;
      }
    }
  }
}

TEST(EntryClosedForm, Examples) {
  EXPECT_NEAR(entry_closed_form(single(0, 0), 1, 1).real(), -1.0 / kSqrtPi, 1e-15);
  EXPECT_EQ(entry_closed_form(single(0, 1), 1, 1), Complex{});
  EXPECT_EQ(entry_closed_form(mixed(), -1, 2), Complex{});
}

TEST(EntryClosedForm, MatchesExactIntegrals) {
  struct Case {
    int m, n;
    double re, im;
  };
  // Exact rational moments of the radial polynomials.
  const Case cases[] = {
      {1, 3, 0.0, 0.0},
      {2, 4, -0.031539156525252000603, 0.0},
      {-3, -1, 0.0, 0.0},
      {-4, -2, -0.031539156525252000603, 0.0},
      {2, 1, -0.099735570100358169485, 0.39894228040143267794},
      {-2, -3, -0.066490380066905446323, 0.26596152026762178529},
      {3, 3, -0.084104417400672001608, 0.0},
      {1, 1, 0.0, 0.0},
      {5, 5, -0.1441790012582948599, 0.0},
      {-1, 1, 0.0, 0.0},
  };
  const ZernikeCoeffs eta = mixed();
  for (const auto& c : cases) {
    const Complex v = entry_closed_form(eta, c.m, c.n);
    EXPECT_NEAR(v.real(), c.re, 1e-15) << c.m << "," << c.n;
    EXPECT_NEAR(v.imag(), c.im, 1e-15) << c.m << "," << c.n;
  }
}

TEST(EntryClosedForm, Linearity) {
  std::mt19937_64 rng(5);
  const ZernikeCoeffs a = random_coeffs(rng, 3, 5);
  const ZernikeCoeffs b = random_coeffs(rng, 4, 4);
  const Complex s{0.7, -1.3}, t{-2.1, 0.4};
  const ZernikeCoeffs comb = s * a + t * b;
  for (int m = -8; m <= 8; ++m) {
    for (int n = -8; n <= 8; ++n) {
      if (m == 0 || n == 0) continue;
      const Complex lhs = entry_closed_form(comb, m, n);
      const Complex rhs = s * entry_closed_form(a, m, n) + t * entry_closed_form(b, m, n);
      EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
    }
  }
}

TEST(SingleBasisEntry, Examples) {
  EXPECT_NEAR(single_basis_entry({0, 0}, 1).real(), -1.0 / kSqrtPi, 1e-15);
  EXPECT_NEAR(single_basis_entry({1, 0}, 1).real(), -std::sqrt(2.0) / (2.0 * kSqrtPi), 1e-15);
  EXPECT_EQ(single_basis_entry({0, 1}, 1), Complex{});
}

TEST(SingleBasisEntry, AgreesWithClosedForm) {
  for (int j = -5; j <= 5; ++j) {
    for (int k = 0; k <= 4; ++k) {
      for (int m = -12; m <= 12; ++m) {
        if (m == 0 || m + j == 0 || m * (m + j) < 0) continue;
        EXPECT_NEAR(std::abs(single_basis_entry({j, k}, m) - entry_closed_form(single(j, k), m, m + j)),
                    0.0, 1e-15);
      }
    }
  }
}

TEST(Assemble, EmptyCoefficients) {
  const BandedBoundaryOperator op = assemble(ZernikeCoeffs(2, 2), 10);
  EXPECT_EQ(op.size(), 0u);
  EXPECT_DOUBLE_EQ(op.frobenius_norm(), 0.0);
}

TEST(Assemble, ConstantPerturbation) {
  const BandedBoundaryOperator op = assemble(single(0, 0), 2);
  EXPECT_EQ(op.size(), 4u);
  EXPECT_NEAR(op.entry(1, 1).real(), -1.0 / kSqrtPi, 1e-15);
  EXPECT_NEAR(op.entry(2, 2).real(), -1.0 / (2.0 * kSqrtPi), 1e-15);
  EXPECT_NEAR(op.entry(-1, -1).real(), -1.0 / kSqrtPi, 1e-15);
  EXPECT_NEAR(op.entry(-2, -2).real(), -1.0 / (2.0 * kSqrtPi), 1e-15);
}

TEST(Assemble, SingleDiagonal) {
  const BandedBoundaryOperator op = assemble(single(3, 0), 4);
  ASSERT_EQ(op.size(), 2u);
  EXPECT_NE(op.entry(1, 4), Complex{});
  EXPECT_NE(op.entry(-4, -1), Complex{});
}

TEST(Assemble, BandAndSignStructure) {
  std::mt19937_64 rng(9);
  ZernikeCoeffs c(3, 0);
  c.set(2, 1, 1.0);
  c.set(-3, 0, {0.0, 2.0});
  c.set(0, 3, -1.0);
  const BandedBoundaryOperator op = assemble(c, 20, 4);
  for (const auto& [key, v] : op.entries()) {
    const auto [m, n] = key;
    EXPECT_GT(m * n, 0);
    EXPECT_TRUE(n - m == 2 || n - m == -3 || n - m == 0);
    EXPECT_EQ(v, entry_closed_form(c, m, n));
  }
  for (int m = -20; m <= 20; ++m) {
    for (int n = -20; n <= 20; ++n) {
      if (m == 0 || n == 0) continue;
      if (m * n < 0 || (n - m != 2 && n - m != -3 && n - m != 0)) EXPECT_EQ(op.entry(m, n), Complex{});
    }
  }
}

TEST(Assemble, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(21);
  const ZernikeCoeffs c = random_coeffs(rng, 4, 12);
  const BandedBoundaryOperator a = assemble(c, 64, 1);
  const BandedBoundaryOperator b = assemble(c, 64, 7);
  ASSERT_EQ(a.size(), b.size());
  for (const auto& [key, v] : a.entries()) EXPECT_EQ(v, b.entry(key.first, key.second));
}

TEST(Assemble, RejectsOutOfRange) {
  BandedBoundaryOperator op(3);
  EXPECT_THROW(op.set(4, 1, 1.0), std::out_of_range);
  EXPECT_THROW(op.set(0, 1, 1.0), std::out_of_range);
  EXPECT_FALSE(op.contains_index(0, 1));
  EXPECT_TRUE(op.contains_index(-3, 3));
}

TEST(QuadratureOracle, Examples) {
  const QuadratureGrid grid;
  EXPECT_NEAR(std::abs(entry_quadrature_oracle(single(0, 0), 1, 1, grid) - entry_closed_form(single(0, 0), 1, 1)),
              0.0, 1e-10);
  EXPECT_EQ(entry_quadrature_oracle(single(2, 1), 1, -1, grid), Complex{});
  EXPECT_NEAR(entry_quadrature_oracle(single(0, 1), 2, 2, grid).real(),
              -std::sqrt(3.0) / (6.0 * kSqrtPi), 1e-12);
}

TEST(QuadratureOracle, AgreesWithClosedForm) {
  const QuadratureGrid grid;
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const ZernikeCoeffs c = random_coeffs(rng, 4, 8);
    const QuadratureOracle oracle(c, grid);
    for (int m = -8; m <= 8; ++m) {
      for (int n = -8; n <= 8; ++n) {
        if (m == 0 || n == 0) continue;
        EXPECT_NEAR(std::abs(oracle.entry(m, n) - entry_closed_form(c, m, n)), 0.0, 1e-8);
      }
    }
  }
}

TEST(GradientProduct, MatchesDefinition) {
  // grad u_m . conj(grad u_n) with u_m = r^{|m|} e^{i m theta} / (|m| sqrt(2 pi)).
  const double r = 0.6, t = 0.9, h = 1e-6;
  for (auto [m, n] : {std::pair{2, 3}, std::pair{-1, -4}, std::pair{3, 3}}) {
    auto u = [](int q, double x, double y) {
      const Complex z(x, y);
      const Complex w = q > 0 ? z : std::conj(z);
      return std::pow(w, std::abs(q)) / (std::abs(q) * std::sqrt(2.0 * std::numbers::pi));
    };
    const double x = r * std::cos(t), y = r * std::sin(t);
    const Complex umx = (u(m, x + h, y) - u(m, x - h, y)) / (2 * h);
    const Complex umy = (u(m, x, y + h) - u(m, x, y - h)) / (2 * h);
    const Complex unx = (u(n, x + h, y) - u(n, x - h, y)) / (2 * h);
    const Complex uny = (u(n, x, y + h) - u(n, x, y - h)) / (2 * h);
    const Complex fd = umx * std::conj(unx) + umy * std::conj(uny);
    EXPECT_NEAR(std::abs(gradient_product(m, n, r, t) - fd), 0.0, 1e-8);
  }
  EXPECT_EQ(gradient_product(1, -1, 0.5, 0.2), Complex{});
}

TEST(HsNorm, ConstantPerturbationSeries) {
  const double target = std::sqrt(std::numbers::pi / 3.0);
  const struct {
    int M;
    double truncated;
  } cases[] = {{10, 0.99328383669415769488}, {100, 1.0202269739427432094}, {1000, 1.0230157621601013604}};
  for (const auto& c : cases) {
    const ZernikeCoeffs eta = single(0, 0);
    const HsNormResult hs = hs_norm(assemble(eta, c.M), eta);
    EXPECT_NEAR(hs.truncated_norm, c.truncated, 1e-13);
    EXPECT_LE(hs.lower(), target);
    EXPECT_GE(hs.upper(), target);
  }
  const ZernikeCoeffs eta = single(0, 0);
  const HsNormResult hs = hs_norm(assemble(eta, 100), eta);
  EXPECT_GE(hs.truncated_norm, 1.0202);
  EXPECT_LT(hs.truncated_norm, 1.0234);
}

TEST(HsNorm, EmptyIsZero) {
  const ZernikeCoeffs eta(3, 3);
  const HsNormResult hs = hs_norm(assemble(eta, 50), eta);
  EXPECT_DOUBLE_EQ(hs.truncated_norm, 0.0);
  EXPECT_DOUBLE_EQ(hs.tail_bound, 0.0);
}

TEST(HsNorm, TailCoversLargerTruncation) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const ZernikeCoeffs eta = random_coeffs(rng, 4, 6);
    const HsNormResult small = hs_norm(assemble(eta, 20), eta);
    const double big = assemble(eta, 800).frobenius_norm();
    EXPECT_LE(small.lower(), big);
    EXPECT_GE(small.upper(), big);
  }
}

TEST(HsNorm, TruncatedBasisNorms) {
  // Squared truncated norms at M = 200 from exact rational entries.
  const struct {
    int j, k;
    double expected;
  } cases[] = {{2, 1, 0.28865896210127920627},
               {0, 4, 0.11558918787508129511},
               {-6, 4, 0.062580308437555900188},
               {1, 0, 0.81480524890297496036}};
  for (const auto& c : cases) {
    const double n = assemble(single(c.j, c.k), 200).frobenius_norm();
    EXPECT_NEAR(n * n, c.expected, 1e-13) << c.j << "," << c.k;
  }
}

TEST(Adjoint, UnitEntry) {
  BandedBoundaryOperator g(1);
  g.set(1, 1, 1.0);
  const ZernikeCoeffs c = adjoint_apply(g, 0, 0);
  EXPECT_EQ(c.size(), 1u);
  EXPECT_NEAR(c.get(0, 0).real(), -1.0 / kSqrtPi, 1e-15);
}

TEST(Adjoint, OffDiagonalUnitEntry) {
  BandedBoundaryOperator g(3);
  g.set(2, 3, 1.0);
  const ZernikeCoeffs c = adjoint_apply(g, 3, 1);
  EXPECT_NEAR(c.get(1, 0).real(), -0.26596152026762178529, 1e-15);
  EXPECT_NEAR(c.get(1, 1).real(), -0.094031597257959381158, 1e-15);
  EXPECT_EQ(c.get(1, 2), Complex{});
  EXPECT_EQ(c.get(1, 3), Complex{});
}

TEST(Adjoint, ZeroMapsToZero) { EXPECT_TRUE(adjoint_apply(BandedBoundaryOperator(5), 3, 3).empty()); }

TEST(Adjoint, InnerProductIdentity) {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int K = trial % 4;
    const int M = 10 + trial;
    const ZernikeCoeffs eta = random_coeffs(rng, K, 6);
    BandedBoundaryOperator G(M);
    for (int m = -M; m <= M; ++m) {
      for (int n = -M; n <= M; ++n) {
        if (m != 0 && n != 0) G.set(m, n, {g(rng), g(rng)});
      }
    }
    const Complex lhs = hs_inner(assemble(eta, M), G);
    const ZernikeCoeffs adj = adjoint_apply(G, K, 2 * M);
    Complex rhs{};
    for (const auto& [idx, c] : eta.entries()) rhs += c * std::conj(adj.get(idx.j, idx.k));
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-8 * std::max(1.0, std::abs(lhs)));
  }
}

}  // namespace
}  // namespace calderon
