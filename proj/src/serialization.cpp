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

#include "calderon/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <type_traits>

#include "json.hpp"

namespace calderon {
namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  const json& v = obj.at(key);
  if constexpr (std::is_same_v<T, int>) {
    if (!v.is_number_integer()) throw FormatError(std::string("field \"") + key + "\" must be an integer");
  } else if constexpr (std::is_same_v<T, double>) {
    if (!v.is_number()) throw FormatError(std::string("field \"") + key + "\" must be a number");
  } else if constexpr (std::is_same_v<T, std::string>) {
    if (!v.is_string()) throw FormatError(std::string("field \"") + key + "\" must be a string");
  }
  return v.get<T>();
}

const json& entries_array(const json& doc) {
  if (!doc.contains("entries") || !doc.at("entries").is_array()) {
    throw FormatError("missing array field \"entries\"");
  }
  return doc.at("entries");
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) throw FormatError("cannot serialise non-finite value");
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string coeffs_to_json(const ZernikeCoeffs& coeffs) {
  std::ostringstream os;
  os << "{\"basis\":\"zernike-disk\",\"K\":" << coeffs.K() << ",\"J\":" << coeffs.J()
     << ",\"entries\":[";
  bool first = true;
  for (const auto& [idx, c] : coeffs.entries()) {
    if (c == Complex{}) continue;
    os << (first ? "" : ",") << "\n  {\"j\":" << idx.j << ",\"k\":" << idx.k
       << ",\"re\":" << format_double(c.real()) << ",\"im\":" << format_double(c.imag()) << "}";
    first = false;
  }
  os << (first ? "" : "\n") << "]}\n";
  return os.str();
}

ZernikeCoeffs coeffs_from_json(std::string_view text) {
  const json doc = parse(text);
  if (field<std::string>(doc, "basis") != "zernike-disk") {
    throw FormatError("unsupported basis, expected \"zernike-disk\"");
  }
  const int K = field<int>(doc, "K");
  const int J = field<int>(doc, "J");
  if (K < 0 || J < 0) throw FormatError("K and J must be non-negative");
  ZernikeCoeffs out(K, J);
  for (const json& e : entries_array(doc)) {
    const int j = field<int>(e, "j");
    const int k = field<int>(e, "k");
    if (k < 0 || k > K || std::abs(j) > J) {
      throw FormatError("entry (j=" + std::to_string(j) + ", k=" + std::to_string(k) +
                        ") outside declared bounds");
    }
    const Complex c{field<double>(e, "re"), field<double>(e, "im")};
    if (c != Complex{}) out.set(j, k, c);
  }
  return out;
}

std::string matrix_to_json(const BandedBoundaryOperator& op) {
  std::ostringstream os;
  os << "{\"M\":" << op.M() << ",\"entries\":[";
  bool first = true;
  for (const auto& [key, v] : op.entries()) {
    if (v == Complex{}) continue;
    os << (first ? "" : ",") << "\n  {\"m\":" << key.first << ",\"n\":" << key.second
       << ",\"re\":" << format_double(v.real()) << ",\"im\":" << format_double(v.imag()) << "}";
    first = false;
  }
  os << (first ? "" : "\n") << "]}\n";
  return os.str();
}

BandedBoundaryOperator matrix_from_json(std::string_view text) {
  const json doc = parse(text);
  const int M = field<int>(doc, "M");
  if (M < 1) throw FormatError("M must be >= 1");
  BandedBoundaryOperator op(M);
  for (const json& e : entries_array(doc)) {
    const int m = field<int>(e, "m");
    const int n = field<int>(e, "n");
    if (!op.contains_index(m, n)) {
      throw FormatError("entry (m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                        ") outside 1 <= |m|,|n| <= M");
    }
    op.set(m, n, {field<double>(e, "re"), field<double>(e, "im")});
  }
  return op;
}

std::string map_spec_to_json(const ConformalMapSpec& spec) {
  std::ostringstream os;
  switch (spec.kind()) {
    case MapKind::kIdentity:
      os << "{\"kind\":\"identity\",\"params\":{}}";
      break;
    case MapKind::kMoebius:
      os << "{\"kind\":\"moebius\",\"params\":{\"a_re\":" << format_double(spec.a().real())
         << ",\"a_im\":" << format_double(spec.a().imag())
         << ",\"phase\":" << format_double(spec.phase()) << "}}";
      break;
    case MapKind::kQuadratic:
      os << "{\"kind\":\"quadratic\",\"params\":{\"c1_re\":" << format_double(spec.c1().real())
         << ",\"c1_im\":" << format_double(spec.c1().imag())
         << ",\"c2_re\":" << format_double(spec.c2().real())
         << ",\"c2_im\":" << format_double(spec.c2().imag()) << "}}";
      break;
  }
  os << "\n";
  return os.str();
}

ConformalMapSpec map_spec_from_json(std::string_view text) {
  const json doc = parse(text);
  const std::string kind = field<std::string>(doc, "kind");
  const json params = doc.contains("params") ? doc.at("params") : json::object();
  const auto opt = [&](const char* key, double fallback) {
    return params.contains(key) ? field<double>(params, key) : fallback;
  };
  try {
    if (kind == "identity") return ConformalMapSpec::identity();
    if (kind == "moebius") {
      return ConformalMapSpec::moebius({opt("a_re", 0.0), opt("a_im", 0.0)}, opt("phase", 0.0));
    }
    if (kind == "quadratic") {
      return ConformalMapSpec::quadratic({opt("c1_re", 1.0), opt("c1_im", 0.0)},
                                         {opt("c2_re", 0.0), opt("c2_im", 0.0)});
    }
  } catch (const std::domain_error& e) {
    throw FormatError(e.what());
  }
  throw FormatError("unknown map kind \"" + kind + "\"");
}

std::string stability_report_to_json(const StabilityReport& rep) {
  std::ostringstream os;
  os << "{\"K\":" << rep.K << ",\"M\":" << rep.M << ",\"l2_norm\":" << format_double(rep.l2_norm)
     << ",\"hs\":{\"truncated_norm\":" << format_double(rep.hs.truncated_norm)
     << ",\"tail_bound\":" << format_double(rep.hs.tail_bound)
     << ",\"certified_interval\":[" << format_double(rep.hs.lower()) << ","
     << format_double(rep.hs.upper()) << "]}"
     << ",\"upper_constant\":" << format_double(rep.upper_constant)
     << ",\"lipschitz_constant\":" << format_double(rep.lipschitz_constant)
     << ",\"in_A_K\":" << bool_str(rep.in_A_K)
     << ",\"upper_satisfied\":" << bool_str(rep.upper_satisfied)
     << ",\"lower_satisfied\":" << bool_str(rep.lower_satisfied)
     << ",\"lower_satisfied_truncated\":" << bool_str(rep.lower_satisfied_truncated) << "}\n";
  return os.str();
}

std::string stability_csv_header() {
  return "K,M,l2_norm,hs_truncated,hs_tail,hs_upper,upper_constant,lipschitz_constant,"
         "in_A_K,upper_satisfied,lower_satisfied\n";
}

std::string stability_csv_row(const StabilityReport& rep) {
  std::ostringstream os;
  os << rep.K << "," << rep.M << "," << format_double(rep.l2_norm) << ","
     << format_double(rep.hs.truncated_norm) << "," << format_double(rep.hs.tail_bound) << ","
     << format_double(rep.hs.upper()) << "," << format_double(rep.upper_constant) << ","
     << format_double(rep.lipschitz_constant) << "," << int{rep.in_A_K} << ","
     << int{rep.upper_satisfied} << "," << int{rep.lower_satisfied} << "\n";
  return os.str();
}

std::string witness_to_json(const WitnessResult& w) {
  std::ostringstream os;
  os << "{\"m\":" << w.m << ",\"n\":" << w.n << ",\"re\":" << format_double(w.value.real())
     << ",\"im\":" << format_double(w.value.imag()) << ",\"n0\":" << w.n0
     << ",\"frequency\":" << w.frequency
     << ",\"quadrature_re\":" << format_double(w.quadrature_value.real())
     << ",\"quadrature_im\":" << format_double(w.quadrature_value.imag()) << "}\n";
  return os.str();
}

}  // namespace calderon
