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

#ifndef CALDERON_CONFORMAL_HPP_
#define CALDERON_CONFORMAL_HPP_

#include <functional>
#include <utility>
#include <vector>

#include "calderon/quadrature.hpp"
#include "calderon/zernike.hpp"

namespace calderon {

enum class MapKind { kIdentity, kMoebius, kQuadratic };

// Disk-to-domain map Phi from one of the closed-form families:
//   identity    Phi(w) = w
//   moebius     Phi(w) = e^{i phase} (w - a) / (1 - conj(a) w),  |a| < 1
//   quadratic   Phi(w) = c1 w + c2 w^2,  c1 != 0, |c2 / c1| < 1/2
// The constraints make Phi univalent on the closed disk with Phi' != 0.
class ConformalMapSpec {
 public:
  static ConformalMapSpec identity();
  static ConformalMapSpec moebius(Complex a, double phase);
  static ConformalMapSpec quadratic(Complex c1, Complex c2);

  MapKind kind() const { return kind_; }
  Complex a() const { return a_; }
  double phase() const { return phase_; }
  Complex c1() const { return c1_; }
  Complex c2() const { return c2_; }

  Complex map(Complex w) const;
  Complex derivative(Complex w) const;
  // Psi = Phi^{-1} on the closure of the image domain.
  Complex inverse(Complex z) const;

 private:
  ConformalMapSpec() = default;

  MapKind kind_ = MapKind::kIdentity;
  Complex a_;
  double phase_ = 0.0;
  Complex c1_{1.0, 0.0};
  Complex c2_;
};

Complex map_eval(const ConformalMapSpec& spec, Complex w);
Complex map_derivative(const ConformalMapSpec& spec, Complex w);

struct TransferConstants {
  double min_boundary_deriv = 0.0;  // min |Phi'| on the unit circle
  double max_boundary_deriv = 0.0;  // max |Phi'| on the unit circle
  // sqrt(pi) max|Psi'| / min|Psi'| on the domain boundary.
  double corollary_constant = 0.0;

  double max_inverse_deriv() const { return 1.0 / min_boundary_deriv; }
  double min_inverse_deriv() const { return 1.0 / max_boundary_deriv; }
};

// Extremes of |Phi'| on |w| = 1 from n_samples equispaced points, each
// polished by a bracketed Brent search.
TransferConstants boundary_constants(const ConformalMapSpec& spec, int n_samples = 256);

struct BoundarySamples {
  std::vector<double> theta;
  std::vector<Complex> point;     // Phi(e^{i theta}) on the domain boundary
  std::vector<double> jacobian;   // |Phi'(e^{i theta})|
  std::vector<Complex> value;
};

// Samples of hat f_m = |Psi'| (f_m o Psi) at Phi(e^{i theta_l}), i.e.
// f_m(e^{i theta}) / |Phi'(e^{i theta})|.
BoundarySamples transform_neumann(int m, const ConformalMapSpec& spec, int boundary_samples);

using DomainFunction = std::function<Complex(Complex z)>;

// eta = tilde eta o Psi on the domain.
DomainFunction pull_back(const ZernikeCoeffs& coeffs_on_disk, const ConformalMapSpec& spec);

struct PushForwardResult {
  ZernikeCoeffs coeffs;
  // L^2(D) norm of (f o Phi) minus its projection.
  double residual = 0.0;
};

PushForwardResult push_forward(const DomainFunction& f, const ConformalMapSpec& spec, int K,
                               int J, const QuadratureGrid& grid);

// Entries <(F eta) hat f_m, hat f_n> on the domain, computed by substituting
// the domain integral back to the disk without cancelling the Jacobian
// analytically: eta is evaluated through pull_back and the gradients of
// u_m o Psi through the chain rule.
class DomainSideIntegrator {
 public:
  DomainSideIntegrator(const ZernikeCoeffs& coeffs, const ConformalMapSpec& spec,
                       const QuadratureGrid& grid);
  Complex entry(int m, int n) const;
  // Entries for all modes 0 < |m|, |n| <= modes, row-major over the ascending
  // mode list -modes..-1, 1..modes.
  std::vector<Complex> matrix(int modes) const;

 private:
  // (d/dx, d/dy) of u_m o Psi at node i.
  std::pair<Complex, Complex> gradient(int m, std::size_t node) const;

  std::vector<double> weight_;   // quadrature weight times |Phi'|^2
  std::vector<Complex> eta_;     // eta(Phi(w))
  std::vector<Complex> w_;       // Psi(Phi(w))
  std::vector<Complex> dpsi_;    // Psi'(Phi(w))
};

// (disk-side value from the Zernike quadrature oracle, domain-side value).
std::pair<Complex, Complex> invariance_check(const ZernikeCoeffs& coeffs,
                                             const ConformalMapSpec& spec, int m, int n,
                                             const QuadratureGrid& grid);

struct NormEquivalence {
  double disk = 0.0;
  double domain = 0.0;
  double lower = 0.0;  // bound the domain value must exceed
  double upper = 0.0;  // bound the domain value must not exceed

  bool holds(double slack) const { return domain >= lower - slack && domain <= upper + slack; }
};

// ||eta||_{L^2(Omega)} against ||tilde eta||_{L^2(D)}.
NormEquivalence perturbation_norms(const ZernikeCoeffs& coeffs, const ConformalMapSpec& spec,
                                   const TransferConstants& tc, const QuadratureGrid& grid);

// ||hat f_m||_{L^2(dOmega)} against ||tilde f||_{L^2(dD)} with tilde f = f_m.
NormEquivalence neumann_norms(int m, const ConformalMapSpec& spec, const TransferConstants& tc,
                              int boundary_samples = 1024);

// HS norm of F eta compressed to span{hat f_m : 0 < |m| <= modes} (orthonormalised
// in L^2(dOmega)) against the disk HS norm over the same index set.
NormEquivalence hs_norms(const ZernikeCoeffs& coeffs, const ConformalMapSpec& spec,
                         const TransferConstants& tc, int modes, const QuadratureGrid& grid,
                         int boundary_samples = 1024);

}  // namespace calderon

#endif  // CALDERON_CONFORMAL_HPP_
