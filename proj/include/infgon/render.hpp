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

#include <string>

#include "infgon/triangulation.hpp"

namespace infgon {

/// Arc diagram over an integer ruler, one text row per arc.
std::string render_ascii(const TriangulationDesc& t, Vertex a, Vertex b,
                         Vertex budget = kDefaultWindowBudget);

/// Semicircular arcs over a number line; the frozen bridge is dashed and
/// fountain vertices carry a badge.
std::string render_svg(const TriangulationDesc& t, Vertex a, Vertex b,
                       Vertex budget = kDefaultWindowBudget);

}  // namespace infgon
