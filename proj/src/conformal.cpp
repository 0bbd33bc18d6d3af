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

#include <Eigen/Dense>
#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "calderon/forward_operator.hpp"

namespace calderon {
namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

std::vector<int> mode_list(int modes) {
  std::vector<int> out;
  for (int m = -modes; m <= modes; ++m) {
    if (m != 0) out.push_back(m);
  }
  return out;
}

// (d/dx, d/dy) of u_m(w) = w^m / (sqrt(2 pi) m) for m > 0 and
// conj(w)^{|m|} / (sqrt(2 pi) |m|) for m < 0.
std::pair<Complex, Complex> disk_gradient(int m, Complex w) {
  if (m > 0) {
    const Complex g = std::pow(w, m - 1) * kInvSqrt2Pi;
    return {g, Complex{0.0, 1.0} * g};
  }
  const Complex g = std::pow(std::conj(w), -m - 1) * kInvSqrt2Pi;
  return {g, Complex{0.0, -1.0} * g};
}

}  // namespace

ConformalMapSpec ConformalMapSpec::identity() { return ConformalMapSpec{}; }

ConformalMapSpec ConformalMapSpec::moebius(Complex a, double phase) {
  if (!(std::abs(a) < 1.0)) throw std::domain_error("moebius map: requires |a| < 1");
  if (!std::isfinite(phase)) throw std::domain_error("moebius map: phase must be finite");
  ConformalMapSpec s;
  s.kind_ = MapKind::kMoebius;
  s.a_ = a;
  s.phase_ = phase;
  return s;
}

ConformalMapSpec ConformalMapSpec::quadratic(Complex c1, Complex c2) {
  if (c1 == Complex{}) throw std::domain_error("quadratic map: requires c1 != 0");
  if (!(std::abs(c2) < 0.5 * std::abs(c1))) {
    throw std::domain_error("quadratic map: requires |c2 / c1| < 1/2");
  }
  ConformalMapSpec s;
  s.kind_ = MapKind::kQuadratic;
  s.c1_ = c1;
  s.c2_ = c2;
  return s;
}

Complex ConformalMapSpec::map(Complex w) const {
  switch (kind_) {
    case MapKind::kIdentity:
      return w;
    case MapKind::kMoebius:
      return std::polar(1.0, phase_) * (w - a_) / (1.0 - std::conj(a_) * w);
    case MapKind::kQuadratic:
      return (c1_ + c2_ * w) * w;
  }
  return w;
}

Complex ConformalMapSpec::derivative(Complex w) const {
  switch (kind_) {
    case MapKind::kIdentity:
      return 1.0;
    case MapKind::kMoebius: {
      const Complex d = 1.0 - std::conj(a_) * w;
      return std::polar(1.0, phase_) * (1.0 - std::norm(a_)) / (d * d);
    }
    case MapKind::kQuadratic:
      return c1_ + 2.0 * c2_ * w;
  }
  return 1.0;
}

Complex ConformalMapSpec::inverse(Complex z) const {
  switch (kind_) {
    case MapKind::kIdentity:
      return z;
    case MapKind::kMoebius: {
      const Complex u = std::polar(1.0, -phase_) * z;
      return (u + a_) / (1.0 + std::conj(a_) * u);
    }
    case MapKind::kQuadratic: {
      if (c2_ == Complex{}) return z / c1_;
      // Root of c2 w^2 + c1 w - z nearest the origin, in cancellation-free form.
      const Complex sigma = std::sqrt(c1_ * c1_ + 4.0 * c2_ * z);
      const Complex denom = std::abs(c1_ + sigma) >= std::abs(c1_ - sigma) ? c1_ + sigma
                                                                           : c1_ - sigma;
      Complex w = 2.0 * z / denom;
      for (int it = 0; it < 2; ++it) w -= (map(w) - z) / derivative(w);
      return w;
    }
  }
  return z;
}

Complex map_eval(const ConformalMapSpec& spec, Complex w) { return spec.map(w); }

Complex map_derivative(const ConformalMapSpec& spec, Complex w) { return spec.derivative(w); }

TransferConstants boundary_constants(const ConformalMapSpec& spec, int n_samples) {
  if (n_samples < 64) throw std::domain_error("boundary_constants: need at least 64 samples");
  const auto jac = [&](double t) { return std::abs(spec.derivative(std::polar(1.0, t))); };
  const double h = 2.0 * std::numbers::pi / n_samples;
  int imin = 0;
  int imax = 0;
  std::vector<double> vals(n_samples);
  for (int l = 0; l < n_samples; ++l) {
    vals[l] = jac(l * h);
    if (vals[l] < vals[imin]) imin = l;
    if (vals[l] > vals[imax]) imax = l;
  }
  using boost::math::tools::brent_find_minima;
  constexpr int kBits = std::numeric_limits<double>::digits / 2;
  const double lo = brent_find_minima(jac, (imin - 1) * h, (imin + 1) * h, kBits).second;
  const double hi =
      -brent_find_minima([&](double t) { return -jac(t); }, (imax - 1) * h, (imax + 1) * h, kBits)
           .second;

  TransferConstants tc;
  tc.min_boundary_deriv = std::min(lo, vals[imin]);
  tc.max_boundary_deriv = std::max(hi, vals[imax]);
  tc.corollary_constant =
      std::sqrt(std::numbers::pi) * tc.max_inverse_deriv() / tc.min_inverse_deriv();
  return tc;
}

BoundarySamples transform_neumann(int m, const ConformalMapSpec& spec, int boundary_samples) {
  if (m == 0) throw std::domain_error("transform_neumann: Fourier mode index must be nonzero");
  if (boundary_samples < 1) throw std::domain_error("transform_neumann: need samples");
  BoundarySamples out;
  out.theta.resize(boundary_samples);
  out.point.resize(boundary_samples);
  out.jacobian.resize(boundary_samples);
  out.value.resize(boundary_samples);
  for (int l = 0; l < boundary_samples; ++l) {
    const double t = 2.0 * std::numbers::pi * l / boundary_samples;
    const Complex w = std::polar(1.0, t);
    out.theta[l] = t;
    out.point[l] = spec.map(w);
    out.jacobian[l] = std::abs(spec.derivative(w));
    out.value[l] = kInvSqrt2Pi * std::polar(1.0, m * t) / out.jacobian[l];
  }
  return out;
}

DomainFunction pull_back(const ZernikeCoeffs& coeffs_on_disk, const ConformalMapSpec& spec) {
  return [coeffs = coeffs_on_disk, spec](Complex z) {
    const Complex w = spec.inverse(z);
    // Boundary points can land a rounding error outside the disk.
    const double r = std::min(std::abs(w), 1.0);
    return evaluate(coeffs, r, std::arg(w));
  };
}

PushForwardResult push_forward(const DomainFunction& f, const ConformalMapSpec& spec, int K,
                               int J, const QuadratureGrid& grid) {
  const DiskFunction on_disk = [&](double r, double theta) {
    return f(spec.map(std::polar(r, theta)));
  };
  PushForwardResult out;
  out.coeffs = project_function(on_disk, K, J, grid);
  const DiskFunction diff = [&](double r, double theta) {
    return on_disk(r, theta) - evaluate(out.coeffs, r, theta);
  };
  out.residual = quadrature_l2_norm(diff, grid);
  return out;
}

DomainSideIntegrator::DomainSideIntegrator(const ZernikeCoeffs& coeffs,
                                           const ConformalMapSpec& spec,
                                           const QuadratureGrid& grid) {
  const DomainFunction eta = pull_back(coeffs, spec);
  const std::size_t nodes = static_cast<std::size_t>(grid.n_r()) * grid.n_theta();
  weight_.reserve(nodes);
  eta_.reserve(nodes);
  w_.reserve(nodes);
  dpsi_.reserve(nodes);
  for (int i = 0; i < grid.n_r(); ++i) {
    for (int l = 0; l < grid.n_theta(); ++l) {
      const Complex w = std::polar(grid.r()[i], grid.theta()[l]);
      const Complex z = spec.map(w);
      const Complex dphi = spec.derivative(w);
      weight_.push_back(grid.radial_weights()[i] * grid.angular_weight() * std::norm(dphi));
      eta_.push_back(eta(z));
      const Complex back = spec.inverse(z);
      w_.push_back(back);
      dpsi_.push_back(1.0 / spec.derivative(back));
    }
  }
}

std::pair<Complex, Complex> DomainSideIntegrator::gradient(int m, std::size_t node) const {
  const auto [ux, uy] = disk_gradient(m, w_[node]);
  // Psi = a + i b with a_x = b_y = Re Psi', b_x = -a_y = Im Psi'.
  const double ax = dpsi_[node].real();
  const double bx = dpsi_[node].imag();
  return {ux * ax + uy * bx, -ux * bx + uy * ax};
}

Complex DomainSideIntegrator::entry(int m, int n) const {
  if (m == 0 || n == 0) throw std::domain_error("DomainSideIntegrator: mode index must be nonzero");
  Complex sum{};
  for (std::size_t i = 0; i < weight_.size(); ++i) {
    const auto [mx, my] = gradient(m, i);
    const auto [nx, ny] = gradient(n, i);
    sum += weight_[i] * eta_[i] * (mx * std::conj(nx) + my * std::conj(ny));
  }
  return -sum;
}

std::vector<Complex> DomainSideIntegrator::matrix(int modes) const {
  const std::vector<int> ms = mode_list(modes);
  const std::size_t nm = ms.size();
  const std::size_t nodes = weight_.size();
  std::vector<Complex> gx(nm * nodes);
  std::vector<Complex> gy(nm * nodes);
  for (std::size_t a = 0; a < nm; ++a) {
    for (std::size_t i = 0; i < nodes; ++i) {
      const auto [x, y] = gradient(ms[a], i);
      gx[a * nodes + i] = x;
      gy[a * nodes + i] = y;
    }
  }
  std::vector<Complex> out(nm * nm);
  for (std::size_t a = 0; a < nm; ++a) {
    for (std::size_t b = 0; b < nm; ++b) {
      Complex sum{};
      for (std::size_t i = 0; i < nodes; ++i) {
        sum += weight_[i] * eta_[i] *
               (gx[a * nodes + i] * std::conj(gx[b * nodes + i]) +
                gy[a * nodes + i] * std::conj(gy[b * nodes + i]));
      }
      out[a * nm + b] = -sum;
    }
  }
  return out;
}

std::pair<Complex, Complex> invariance_check(const ZernikeCoeffs& coeffs,
                                             const ConformalMapSpec& spec, int m, int n,
                                             const QuadratureGrid& grid) {
  if (m == 0 || n == 0) throw std::domain_error("invariance_check: mode index must be nonzero");
  // With hat f_m on the domain boundary, tilde f = |Phi'| (hat f_m o Phi) = f_m.
  const Complex disk = entry_quadrature_oracle(coeffs, m, n, grid);
  const Complex domain = DomainSideIntegrator(coeffs, spec, grid).entry(m, n);
  return {disk, domain};
}

NormEquivalence perturbation_norms(const ZernikeCoeffs& coeffs, const ConformalMapSpec& spec,
                                   const TransferConstants& tc, const QuadratureGrid& grid) {
  const DomainFunction eta = pull_back(coeffs, spec);
  double disk_sq = 0.0;
  double domain_sq = 0.0;
  for (int i = 0; i < grid.n_r(); ++i) {
    for (int l = 0; l < grid.n_theta(); ++l) {
      const double r = grid.r()[i];
      const double t = grid.theta()[l];
      const Complex w = std::polar(r, t);
      const double wt = grid.radial_weights()[i] * grid.angular_weight();
      disk_sq += wt * std::norm(evaluate(coeffs, r, t));
      domain_sq += wt * std::norm(eta(spec.map(w))) * std::norm(spec.derivative(w));
    }
  }
  NormEquivalence out;
  out.disk = std::sqrt(disk_sq);
  out.domain = std::sqrt(domain_sq);
  out.lower = out.disk / tc.max_inverse_deriv();
  out.upper = tc.max_boundary_deriv * out.disk;
  return out;
}

NormEquivalence neumann_norms(int m, const ConformalMapSpec& spec, const TransferConstants& tc,
                              int boundary_samples) {
  const BoundarySamples s = transform_neumann(m, spec, boundary_samples);
  const double h = 2.0 * std::numbers::pi / boundary_samples;
  double disk_sq = 0.0;
  double domain_sq = 0.0;
  for (int l = 0; l < boundary_samples; ++l) {
    disk_sq += h * kInvSqrt2Pi * kInvSqrt2Pi;
    // ds = |Phi'| dtheta on the domain boundary.
    domain_sq += h * std::norm(s.value[l]) * s.jacobian[l];
  }
  NormEquivalence out;
  out.disk = std::sqrt(disk_sq);
  out.domain = std::sqrt(domain_sq);
  out.lower = out.disk / std::sqrt(tc.max_boundary_deriv);
  out.upper = std::sqrt(tc.max_inverse_deriv()) * out.disk;
  return out;
}

NormEquivalence hs_norms(const ZernikeCoeffs& coeffs, const ConformalMapSpec& spec,
                         const TransferConstants& tc, int modes, const QuadratureGrid& grid,
                         int boundary_samples) {
  if (modes < 1) throw std::domain_error("hs_norms: need at least one mode");
  const std::vector<int> ms = mode_list(modes);
  const Eigen::Index nm = static_cast<Eigen::Index>(ms.size());

  // Gram matrix <hat f_a, hat f_b>_{L^2(dOmega)} = int f_a conj(f_b) / |Phi'| dtheta.
  const double h = 2.0 * std::numbers::pi / boundary_samples;
  std::vector<double> inv_jac(boundary_samples);
  for (int l = 0; l < boundary_samples; ++l) {
    inv_jac[l] = 1.0 / std::abs(spec.derivative(std::polar(1.0, l * h)));
  }
  Eigen::MatrixXcd gram(nm, nm);
  for (Eigen::Index a = 0; a < nm; ++a) {
    for (Eigen::Index b = 0; b < nm; ++b) {
      Complex sum{};
      for (int l = 0; l < boundary_samples; ++l) {
        sum += inv_jac[l] * std::polar(1.0, (ms[a] - ms[b]) * l * h);
      }
      gram(a, b) = sum * (h / (2.0 * std::numbers::pi));
    }
  }

  const std::vector<Complex> e = DomainSideIntegrator(coeffs, spec, grid).matrix(modes);
  Eigen::MatrixXcd data(nm, nm);
  double disk_sq = 0.0;
  for (Eigen::Index a = 0; a < nm; ++a) {
    for (Eigen::Index b = 0; b < nm; ++b) {
      data(a, b) = e[a * nm + b];
      disk_sq += std::norm(entry_closed_form(coeffs, ms[a], ms[b]));
    }
  }

  // HS^2 = tr(E G^{-1} E^H G^{-1}) = ||L^{-1} E L^{-H}||_F^2 with G = L L^H.
  const Eigen::LLT<Eigen::MatrixXcd> llt(gram);
  if (llt.info() != Eigen::Success) throw std::runtime_error("hs_norms: Gram matrix not positive definite");
  const Eigen::MatrixXcd left = llt.matrixL().solve(data);
  const Eigen::MatrixXcd both = llt.matrixL().solve(left.adjoint()).adjoint();

  NormEquivalence out;
  out.disk = std::sqrt(disk_sq);
  out.domain = both.norm();
  out.lower = out.disk / tc.max_inverse_deriv();
  out.upper = tc.max_boundary_deriv * out.disk;
  return out;
}

}  // namespace calderon
