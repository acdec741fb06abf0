// Copyright 2026 The aqnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AQNN_SERIALIZATION_HPP
#define AQNN_SERIALIZATION_HPP

#include <nlohmann/json.hpp>

#include "aqnn/channels.hpp"
#include "aqnn/classify.hpp"
#include "aqnn/diamond.hpp"
#include "aqnn/dilation.hpp"
#include "aqnn/states.hpp"

namespace aqnn {

using Json = nlohmann::json;

// Readers throw ParseError on malformed documents.

/// {"rows": r, "cols": c, "re": [[...]], "im": [[...]]}; "im" may be omitted.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// {"re": x, "im": y}; a bare number is read as real.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {"dim": N, "re": [[...]], "im": [[...]]}.
Json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const Json& j);

/// {"dim", "variant", "alpha": {"uniform": a} | {"re", "im"}, "epsilon",
///  "gamma": {"re", "im"}, "lambda": {"re", "im"}}. Missing faulty
/// parameters default to zero. A uniform alpha may be complex.
Json to_json(const ChannelSpec& spec);
ChannelSpec spec_from_json(const Json& j);

Json to_json(const ChoiState& j);
Json to_json(const KrausSet& kraus);
Json to_json(const CptpVerdict& verdict);
Json to_json(const ClassReport& report);
Json to_json(const DilationUnitary& u);
Json to_json(const DiamondResult& result);

}  // namespace aqnn

#endif  // AQNN_SERIALIZATION_HPP
