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

#include "infgon/figures.hpp"

#include <algorithm>
#include <iterator>

namespace infgon {

namespace {

std::vector<Arrow> arrows_of(std::initializer_list<std::pair<std::pair<int, int>, std::pair<int, int>>> list) {
  std::vector<Arrow> out;
  for (const auto& [from, to] : list) {
    out.emplace_back(Edge(from.first, from.second), Edge(to.first, to.second));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const FigureData& leapfrog_figure() {
  static const FigureData data{
      "leapfrog", TriangulationDesc::leapfrog(0), -6, 7, arrows_of({
          {{-6, -5}, {-6, 6}},
          {{-6, 6}, {-6, 7}},
          {{-6, 6}, {-5, 6}},
          {{-6, 7}, {6, 7}},
          {{-5, -4}, {-5, 5}},
          {{-5, 5}, {-5, 6}},
          {{-5, 5}, {-4, 5}},
          {{-5, 6}, {-6, -5}},
          {{-5, 6}, {5, 6}},
          {{-4, -3}, {-4, 4}},
          {{-4, 4}, {-4, 5}},
          {{-4, 4}, {-3, 4}},
          {{-4, 5}, {-5, -4}},
          {{-4, 5}, {4, 5}},
          {{-3, -2}, {-3, 3}},
          {{-3, 3}, {-3, 4}},
          {{-3, 3}, {-2, 3}},
          {{-3, 4}, {-4, -3}},
          {{-3, 4}, {3, 4}},
          {{-2, -1}, {-2, 2}},
          {{-2, 2}, {-2, 3}},
          {{-2, 2}, {-1, 2}},
          {{-2, 3}, {-3, -2}},
          {{-2, 3}, {2, 3}},
          {{-1, 0}, {-1, 1}},
          {{-1, 1}, {-1, 2}},
          {{-1, 1}, {0, 1}},
          {{-1, 2}, {-2, -1}},
          {{-1, 2}, {1, 2}},
          {{1, 2}, {-1, 1}},
          {{2, 3}, {-2, 2}},
          {{3, 4}, {-3, 3}},
          {{4, 5}, {-4, 4}},
          {{5, 6}, {-5, 5}},
          {{6, 7}, {-6, 6}},
      }), 1};
  return data;
}

const FigureData& fountain_figure() {
  static const FigureData data{
      "fountain",
      TriangulationDesc(Fountain{0}, {{0, 2}, {0, 4}, {0, 6}, {-3, 0}, {-4, 0}},
                        {{1, 3}, {3, 5}, {5, 7}, {-4, -2}, {-5, -2}}),
      -6, 7, arrows_of({
          {{-6, -5}, {-6, 0}},
          {{-6, 0}, {-5, 0}},
          {{-5, -4}, {-5, -2}},
          {{-5, -2}, {-5, 0}},
          {{-5, -2}, {-4, -2}},
          {{-5, 0}, {-6, -5}},
          {{-5, 0}, {-2, 0}},
          {{-4, -3}, {-4, -2}},
          {{-4, -2}, {-5, -4}},
          {{-4, -2}, {-3, -2}},
          {{-2, -1}, {-2, 0}},
          {{-2, 0}, {-5, -2}},
          {{-2, 0}, {-1, 0}},
          {{0, 1}, {0, 3}},
          {{0, 3}, {0, 5}},
          {{0, 3}, {1, 3}},
          {{0, 5}, {0, 7}},
          {{0, 5}, {3, 5}},
          {{0, 7}, {5, 7}},
          {{1, 2}, {1, 3}},
          {{1, 3}, {0, 1}},
          {{1, 3}, {2, 3}},
          {{3, 4}, {3, 5}},
          {{3, 5}, {0, 3}},
          {{3, 5}, {4, 5}},
          {{5, 6}, {5, 7}},
          {{5, 7}, {0, 5}},
          {{5, 7}, {6, 7}},
      }), 2};
  return data;
}

std::vector<Arrow> arrow_set(const IceQuiver& q) {
  std::vector<Arrow> out;
  for (const auto& [from, to, mult] : q.arrows()) {
    for (int k = 0; k < mult; ++k) out.emplace_back(from, to);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FigureCheck check_figure(const FigureData& f) {
  const IceQuiver q = build_exchange_quiver(f.desc, f.a, f.b);
  const std::vector<Arrow> built = arrow_set(q);
  FigureCheck c;
  std::set_difference(f.arrows.begin(), f.arrows.end(), built.begin(), built.end(),
                      std::back_inserter(c.missing));
  std::set_difference(built.begin(), built.end(), f.arrows.begin(), f.arrows.end(),
                      std::back_inserter(c.extra));
  c.components = mutable_component_count(q);
  return c;
}

}  // namespace infgon
