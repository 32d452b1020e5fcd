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
#include <utility>
#include <vector>

#include "infgon/quiver.hpp"

namespace infgon {

using Arrow = std::pair<Edge, Edge>;

/// A quiver figure: the triangulation, the drawn window and the arrows as
/// drawn.
struct FigureData {
  std::string name;
  TriangulationDesc desc;
  Vertex a;
  Vertex b;
  std::vector<Arrow> arrows;
  std::size_t components;
};

/// Standard leapfrog at 0 on [-6,7].
const FigureData& leapfrog_figure();
/// The fountain example at 0 on [-6,7].
const FigureData& fountain_figure();

struct FigureCheck {
  std::vector<Arrow> missing;  // drawn but not built
  std::vector<Arrow> extra;    // built but not drawn
  std::size_t components = 0;
  bool ok(const FigureData& f) const {
    return missing.empty() && extra.empty() && components == f.components;
  }
};

std::vector<Arrow> arrow_set(const IceQuiver& q);
FigureCheck check_figure(const FigureData& f);

}  // namespace infgon
