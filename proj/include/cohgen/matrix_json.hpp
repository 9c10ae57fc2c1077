// Copyright 2026 The cohgen Authors
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

#pragma once

#include <string>

#include <json.hpp>

#include "cohgen/matrix.hpp"

namespace cohgen {

using Json = nlohmann::ordered_json;

// Matrix schema: {"dim": d, "re": [[...]], "im": [[...]]}, row-major.
// "im" may be omitted for real matrices.
ComplexMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ComplexMatrix& m);

Json vector_to_json(const ComplexVector& v);

ComplexMatrix read_matrix_file(const std::string& path);

/// %.17g, so every double round-trips through text bit-exactly.
std::string format_double(double x);

/// Serializes with 17 significant digits for all floating-point values.
/// Non-finite numbers are written as null.
std::string dump_json(const Json& j, int indent = 2);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace cohgen
