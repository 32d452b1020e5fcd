// Copyright 2026 The infgon Authors
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

#include "infgon/plucker.hpp"
#include "infgon/quantum.hpp"
#include "infgon/quiver.hpp"
#include "infgon/triangulation.hpp"

namespace infgon {

using Json = nlohmann::json;

Json to_json(const Edge& e);
/// ParseError on anything but a two-integer array with left < right.
Edge edge_from_json(const Json& j);

Json to_json(const TriangulationDesc& t);
/// Structural checks only; call is_valid separately.
TriangulationDesc descriptor_from_json(const Json& j);

/// {"classification": "fountain", "k": 0} and friends.
Json to_json(const TriangulationClass& c);

Json to_json(const IceQuiver& q);
IceQuiver quiver_from_json(const Json& j);

Json to_json(const RelationRecord& r);
Json to_json(const QuantumRelation& r);
Json to_json(const LaurentHalfQ& c);
Json to_json(const QElement& x);
Json to_json(const QuantumCertificate& c);

/// Arcs, sides and frozen/flippable flags inside [a,b].
Json window_snapshot(const TriangulationDesc& t, Vertex a, Vertex b,
                     Vertex budget = kDefaultWindowBudget);

/// Parses "i,j" (as typed on a command line).
Edge parse_arc(const std::string& text);

}  // namespace infgon
