// Copyright 2026 The sieved-ops Authors.
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

#include <json.hpp>

#include <string>

#include "sieved/poly.hpp"
#include "sieved/rational.hpp"

namespace sieved {

using Json = nlohmann::ordered_json;

/// Version of every JSON document written by the CLI.
inline constexpr int kSchemaVersion = 1;

/// A polynomial is a JSON array of exact coefficient strings, ascending
/// powers; the zero polynomial is [].
Json poly_to_json(const RatPoly& f);
RatPoly poly_from_json(const Json& j);

/// "zero" for the zero polynomial, otherwise the integer degree.
Json degree_to_json(const RatPoly& f);

}  // namespace sieved
