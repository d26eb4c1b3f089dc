/*
  Copyright (c) 2026 The rkcd Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef RKCD_JSON_IO_HPP
#define RKCD_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "rkcd/commutant.hpp"
#include "rkcd/equivalence.hpp"
#include "rkcd/geometry.hpp"
#include "rkcd/model_zoo.hpp"
#include "rkcd/series.hpp"

namespace rkcd {

using Json = nlohmann::json;

/// Parses text; syntax errors throw Parse naming the source, line and column.
Json parse_json(const std::string& text, const std::string& source = "input");

/// Matrices are row-major arrays of [re, im] pairs. Errors name the field path.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& path);

/// {"rank", "degree", "coefficients": [{"m", "q", "matrix"}]}; zero matrices are omitted.
Json kernel_to_json(const KernelSeries& k);
KernelSeries kernel_from_json(const Json& j);

/// {"rows", "cols", "degree", "coefficients": [{"m", "matrix"}]}; a square
/// series may give "rank" instead of rows and cols.
Json holo_to_json(const HoloSeries& h);
HoloSeries holo_from_json(const Json& j);

/// {"rows", "cols", "box": [hol, antihol], "coefficients": [{"p", "q", "matrix"}]}.
Json bi_series_to_json(const BiSeries& s);

Json validation_to_json(const ValidationReport& r);
Json decomposition_to_json(const Decomposition& d);
Json verdict_to_json(const EquivalenceVerdict& v);
Json kk1_to_json(const Kk1Report& r);
Json intertwiner_report_to_json(const IntertwinerReport& r);
Json truth_to_json(const GroundTruth& t);

/// Keys: kind, degree, alpha, weights, base, components, rank, width, seed.
GeneratorSpec generator_spec_from_json(const Json& j);

}  // namespace rkcd

#endif  // RKCD_JSON_IO_HPP
