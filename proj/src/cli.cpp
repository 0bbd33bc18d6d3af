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

#include "calderon/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "calderon/conformal.hpp"
#include "calderon/forward_operator.hpp"
#include "calderon/quadrature.hpp"
#include "calderon/reconstruction.hpp"
#include "calderon/serialization.hpp"
#include "calderon/stability.hpp"
#include "calderon/zernike.hpp"

namespace calderon::cli {
namespace {

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raster resolution for eta plots.
constexpr int kRasterRadial = 32;
constexpr int kRasterAngular = 64;
// Index range of the domain-side HS compression in the conformal command.
constexpr int kConformalHsModes = 12;
constexpr int kBoundarySamples = 512;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("read failed for " + path);
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}

std::string f17(double x) { return format_double(x); }

ZernikeCoeffs load_or_sample(const RunConfig& cfg) {
  if (!cfg.input.empty()) return coeffs_from_json(read_file(cfg.input));
  std::mt19937_64 rng(cfg.seed);
  return sample_w_k(rng, cfg.K, cfg.J);
}

std::string raster_csv(const ZernikeCoeffs& coeffs) {
  std::ostringstream os;
  os << "r,theta,re,im\n";
  for (int i = 0; i <= kRasterRadial; ++i) {
    const double r = static_cast<double>(i) / kRasterRadial;
    for (int l = 0; l < kRasterAngular; ++l) {
      const double t = 2.0 * std::numbers::pi * l / kRasterAngular;
      const Complex v = evaluate(coeffs, r, t);
      os << f17(r) << "," << f17(t) << "," << f17(v.real()) << "," << f17(v.imag()) << "\n";
    }
  }
  return os.str();
}

std::string diagonal_csv(const BandedBoundaryOperator& op) {
  std::vector<std::pair<BandedBoundaryOperator::Key, Complex>> cells(op.entries().begin(),
                                                                     op.entries().end());
  std::stable_sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    return a.first.second - a.first.first < b.first.second - b.first.first;
  });
  std::ostringstream os;
  os << "j,m,n,abs,re,im\n";
  for (const auto& [key, v] : cells) {
    os << key.second - key.first << "," << key.first << "," << key.second << "," << f17(std::abs(v))
       << "," << f17(v.real()) << "," << f17(v.imag()) << "\n";
  }
  return os.str();
}

void validate(const RunConfig& cfg) {
  if (cfg.output.empty()) throw PreconditionError("--output is required");
  if (cfg.K < 0 || cfg.J < 0) throw PreconditionError("K and J must be non-negative");
  if (cfg.M < 1) throw PreconditionError("M must be >= 1");
  if (cfg.quad_nr < 2 || cfg.quad_ntheta < 4) {
    throw PreconditionError("quadrature grid needs nr >= 2 and ntheta >= 4");
  }
  if (!(cfg.tol >= 0.0)) throw PreconditionError("tol must be non-negative");
  if (cfg.command == Command::kReconstruct) {
    if (cfg.input.empty()) throw PreconditionError("reconstruct needs --input");
    if (cfg.M < cfg.J + cfg.K + 1) {
      throw PreconditionError("reconstruct needs M >= J + K + 1");
    }
  }
}

void run_forward(const RunConfig& cfg) {
  const ZernikeCoeffs coeffs = load_or_sample(cfg);
  const BandedBoundaryOperator op = assemble(coeffs, cfg.M, cfg.threads);
  write_file(cfg.output, matrix_to_json(op));
  write_file(cfg.output + ".csv", diagonal_csv(op));
}

void run_reconstruct(const RunConfig& cfg) {
  BandedBoundaryOperator data = matrix_from_json(read_file(cfg.input));
  if (data.M() < cfg.J + cfg.K + 1) {
    throw PreconditionError("matrix truncation M=" + std::to_string(data.M()) +
                            " is below J + K + 1 = " + std::to_string(cfg.J + cfg.K + 1));
  }
  const ZernikeCoeffs coeffs = reconstruct({std::move(data), cfg.K, cfg.J});
  write_file(cfg.output, coeffs_to_json(coeffs));
  write_file(cfg.output + ".csv", raster_csv(coeffs));

  std::ostringstream amp;
  amp << "j,k,amplification,re,im\n";
  for (int k = 0; k <= cfg.K; ++k) {
    for (int j = -cfg.J; j <= cfg.J; ++j) {
      const Complex c = coeffs.get(j, k);
      amp << j << "," << k << "," << f17(amplification_factor(j, k)) << "," << f17(c.real())
          << "," << f17(c.imag()) << "\n";
    }
  }
  write_file(cfg.output + ".amplification.csv", amp.str());
}

void run_stability(const RunConfig& cfg) {
  const ZernikeCoeffs coeffs = load_or_sample(cfg);
  const StabilityReport rep = verify(coeffs, cfg.M, cfg.threads);
  write_file(cfg.output, stability_report_to_json(rep));
  write_file(cfg.output + ".csv", stability_csv_header() + stability_csv_row(rep));
}

void run_oracle_check(const RunConfig& cfg) {
  const ZernikeCoeffs coeffs = load_or_sample(cfg);
  const QuadratureGrid grid(cfg.quad_nr, cfg.quad_ntheta);
  const QuadratureOracle oracle(coeffs, grid);
  std::ostringstream csv;
  csv << "m,n,closed_re,closed_im,quadrature_re,quadrature_im,abs_diff\n";
  double max_diff = 0.0;
  long checked = 0;
  for (int m = -cfg.M; m <= cfg.M; ++m) {
    for (int n = -cfg.M; n <= cfg.M; ++n) {
      if (m == 0 || n == 0 || (m < 0) != (n < 0)) continue;
      const Complex closed = entry_closed_form(coeffs, m, n);
      const Complex quad = oracle.entry(m, n);
      const double diff = std::abs(closed - quad);
      max_diff = std::max(max_diff, diff);
      ++checked;
      csv << m << "," << n << "," << f17(closed.real()) << "," << f17(closed.imag()) << ","
          << f17(quad.real()) << "," << f17(quad.imag()) << "," << f17(diff) << "\n";
    }
  }
  std::ostringstream js;
  js << "{\"M\":" << cfg.M << ",\"nr\":" << cfg.quad_nr << ",\"ntheta\":" << cfg.quad_ntheta
     << ",\"entries_checked\":" << checked << ",\"max_abs_diff\":" << f17(max_diff)
     << ",\"tol\":" << f17(cfg.tol) << ",\"pass\":" << (max_diff <= cfg.tol ? "true" : "false")
     << "}\n";
  write_file(cfg.output, js.str());
  write_file(cfg.output + ".csv", csv.str());
}

std::string norm_json(const NormEquivalence& n, double slack) {
  std::ostringstream os;
  os << "{\"disk\":" << f17(n.disk) << ",\"domain\":" << f17(n.domain)
     << ",\"lower\":" << f17(n.lower) << ",\"upper\":" << f17(n.upper)
     << ",\"holds\":" << (n.holds(slack) ? "true" : "false") << "}";
  return os.str();
}

void run_conformal(const RunConfig& cfg) {
  const ZernikeCoeffs coeffs = load_or_sample(cfg);
  const ConformalMapSpec spec = cfg.map_spec.empty()
                                    ? ConformalMapSpec::identity()
                                    : map_spec_from_json(read_file(cfg.map_spec));
  const QuadratureGrid grid(cfg.quad_nr, cfg.quad_ntheta);
  const TransferConstants tc = boundary_constants(spec, kBoundarySamples);
  const int modes = std::min(cfg.M, kConformalHsModes);
  constexpr double kSlack = 1e-4;

  std::ostringstream js;
  js << "{\"map\":" << map_spec_to_json(spec).substr(0, map_spec_to_json(spec).size() - 1)
     << ",\"constants\":{\"min_boundary_deriv\":" << f17(tc.min_boundary_deriv)
     << ",\"max_boundary_deriv\":" << f17(tc.max_boundary_deriv)
     << ",\"corollary_constant\":" << f17(tc.corollary_constant) << "}";

  const DomainSideIntegrator domain(coeffs, spec, grid);
  const QuadratureOracle disk(coeffs, grid);
  js << ",\"transferred_entries\":[";
  bool first = true;
  for (int m = -2; m <= 2; ++m) {
    for (int n = -2; n <= 2; ++n) {
      if (m == 0 || n == 0) continue;
      const Complex a = disk.entry(m, n);
      const Complex b = domain.entry(m, n);
      js << (first ? "" : ",") << "{\"m\":" << m << ",\"n\":" << n << ",\"disk_re\":" << f17(a.real())
         << ",\"disk_im\":" << f17(a.imag()) << ",\"domain_re\":" << f17(b.real())
         << ",\"domain_im\":" << f17(b.imag()) << "}";
      first = false;
    }
  }
  js << "],\"perturbation_norms\":" << norm_json(perturbation_norms(coeffs, spec, tc, grid), kSlack);
  js << ",\"neumann_norms\":[";
  for (int m = 1; m <= 8; ++m) {
    js << (m == 1 ? "" : ",") << norm_json(neumann_norms(m, spec, tc), kSlack);
  }
  js << "],\"hs_modes\":" << modes
     << ",\"hs_norms\":" << norm_json(hs_norms(coeffs, spec, tc, modes, grid), kSlack) << "}\n";
  write_file(cfg.output, js.str());

  const BoundarySamples bs = transform_neumann(1, spec, kBoundarySamples);
  std::ostringstream csv;
  csv << "theta,phi_re,phi_im,abs_dphi\n";
  for (std::size_t l = 0; l < bs.theta.size(); ++l) {
    csv << f17(bs.theta[l]) << "," << f17(bs.point[l].real()) << "," << f17(bs.point[l].imag())
        << "," << f17(bs.jacobian[l]) << "\n";
  }
  write_file(cfg.output + ".csv", csv.str());
}

void run_witness(const RunConfig& cfg) {
  const ZernikeCoeffs coeffs = load_or_sample(cfg);
  const QuadratureGrid grid(cfg.quad_nr, cfg.quad_ntheta);
  const WitnessResult w = injectivity_witness(coeffs, grid);
  write_file(cfg.output, witness_to_json(w));

  // Radial profile rho of the probed frequency.
  std::ostringstream csv;
  csv << "r,rho_re,rho_im\n";
  for (int i = 0; i <= kRasterRadial; ++i) {
    const double r = static_cast<double>(i) / kRasterRadial;
    Complex rho{};
    for (const auto& [idx, c] : coeffs.entries()) {
      if (idx.j != w.frequency) continue;
      rho += c * std::sqrt(2.0 * (std::abs(idx.j) + 2.0 * idx.k + 1.0)) * radial_eval(idx.j, idx.k, r);
    }
    csv << f17(r) << "," << f17(rho.real()) << "," << f17(rho.imag()) << "\n";
  }
  write_file(cfg.output + ".csv", csv.str());
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  if (name == "forward") return Command::kForward;
  if (name == "reconstruct") return Command::kReconstruct;
  if (name == "stability") return Command::kStability;
  if (name == "oracle-check") return Command::kOracleCheck;
  if (name == "conformal") return Command::kConformal;
  if (name == "witness") return Command::kWitness;
  return std::nullopt;
}

const char* command_name(Command c) {
  switch (c) {
    case Command::kForward: return "forward";
    case Command::kReconstruct: return "reconstruct";
    case Command::kStability: return "stability";
    case Command::kOracleCheck: return "oracle-check";
    case Command::kConformal: return "conformal";
    case Command::kWitness: return "witness";
  }
  return "unknown";
}

int run(const RunConfig& config, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::kForward: run_forward(config); break;
      case Command::kReconstruct: run_reconstruct(config); break;
      case Command::kStability: run_stability(config); break;
      case Command::kOracleCheck: run_oracle_check(config); break;
      case Command::kConformal: run_conformal(config); break;
      case Command::kWitness: run_witness(config); break;
    }
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: io: " << one_line(e.what()) << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    // Parse failures, domain violations, missing truncation and witness
    // failures are all precondition violations of the request.
    err << "error: precondition: " << one_line(e.what()) << "\n";
    return kExitPrecondition;
  }
}

}  // namespace calderon::cli
