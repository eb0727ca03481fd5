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

#include "sieved/io.hpp"

namespace sieved {

Json poly_to_json(const RatPoly& f) {
  Json arr = Json::array();
  for (const auto& c : f.coeffs()) arr.push_back(c.str());
  return arr;
}

RatPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::parse_error, "polynomial must be a JSON array");
  std::vector<Rat> c;
  c.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_string()) throw Error(Errc::parse_error, "coefficient must be a string");
    c.push_back(Rat::parse(v.get<std::string>()));
  }
  return RatPoly(std::move(c));
}

Json degree_to_json(const RatPoly& f) {
  if (f.is_zero()) return "zero";
  return f.degree();
}

}  // namespace sieved
