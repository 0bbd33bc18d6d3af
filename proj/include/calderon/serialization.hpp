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

#ifndef CALDERON_SERIALIZATION_HPP_
#define CALDERON_SERIALIZATION_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "calderon/conformal.hpp"
#include "calderon/forward_operator.hpp"
#include "calderon/reconstruction.hpp"
#include "calderon/stability.hpp"
#include "calderon/zernike.hpp"

namespace calderon {

// Malformed or schema-violating input document.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// 17 significant digits, so every double round-trips.
std::string format_double(double x);

// {"basis":"zernike-disk","K":..,"J":..,"entries":[{"j","k","re","im"},...]};
// zero entries are omitted on output and optional on input.
std::string coeffs_to_json(const ZernikeCoeffs& coeffs);
ZernikeCoeffs coeffs_from_json(std::string_view text);

// {"M":..,"entries":[{"m","n","re","im"},...]}; absent entries are zero.
std::string matrix_to_json(const BandedBoundaryOperator& op);
BandedBoundaryOperator matrix_from_json(std::string_view text);

// {"kind":"identity"|"moebius"|"quadratic","params":{...}} with params
// moebius {"a_re","a_im","phase"} and quadratic {"c1_re","c1_im","c2_re","c2_im"}.
std::string map_spec_to_json(const ConformalMapSpec& spec);
ConformalMapSpec map_spec_from_json(std::string_view text);

std::string stability_report_to_json(const StabilityReport& rep);
std::string stability_csv_header();
std::string stability_csv_row(const StabilityReport& rep);

std::string witness_to_json(const WitnessResult& w);

}  // namespace calderon

#endif  // CALDERON_SERIALIZATION_HPP_
