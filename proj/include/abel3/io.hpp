/*
 * Copyright 2026 The abel3 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// JSON encoding. Rationals are "p/q" strings; degree-2 and degree-4 classes
// are sparse objects keyed "ij" (1-based, i < j), omitted keys are zero.

#include "abel3/brauerhodge.hpp"
#include "abel3/evenring.hpp"

#include <json.hpp>

#include <string>

namespace abel3::io {

using nlohmann::json;

json to_json(const Rat& q);
json to_json(const Int& a);
Rat rat_from(const json& j); // accepts "p/q" strings and JSON integers
Int int_from(const json& j);

json to_json(const TwoClassQ& b);
json to_json(const FourClassQ& c);
json to_json(const EvenClassQ& v);
TwoClassQ two_from(const json& j);
FourClassQ four_from(const json& j);
EvenClassQ even_from(const json& j);

json to_json(const IMat& m);
json to_json(const RMat& m);
IMat imat_from(const json& j);
RMat rmat_from(const json& j);

json to_json(const Cubic& c); // [a3, a2, a1, a0]
Cubic cubic_from(const json& j);

json to_json(const AltType& t);

json to_json(const HodgeDatum& d);
HodgeDatum datum_from(const json& j);

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

} // namespace abel3::io
