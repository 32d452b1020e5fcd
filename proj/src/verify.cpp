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

#include "infgon/verify.hpp"

#include "infgon/error.hpp"
#include "infgon/figures.hpp"
#include "infgon/plucker.hpp"
#include "infgon/quantum.hpp"

namespace infgon {

namespace {

Json arrows_json(const std::vector<Arrow>& arrows) {
  Json out = Json::array();
  for (const auto& [x, y] : arrows) out.push_back(Json::array({to_json(x), to_json(y)}));
  return out;
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

}  // namespace

Json to_json(const SuiteReport& r) {
  return {{"suite", r.suite}, {"passed", r.passed}, {"details", r.details}};
}

TriangulationDesc random_triangulation(std::mt19937_64& rng, int flips, Vertex radius) {
  std::uniform_int_distribution<Vertex> centre(-3, 3);
  TriangulationDesc t = TriangulationDesc::leapfrog(0);
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      t = TriangulationDesc::leapfrog(centre(rng));
      break;
    case 1:
      t = TriangulationDesc::fountain(centre(rng));
      break;
    default: {
      const Vertex l = centre(rng);
      t = TriangulationDesc::split(l, l + std::uniform_int_distribution<Vertex>(1, 4)(rng));
    }
  }
  for (int k = 0; k < flips; ++k) {
    std::vector<Edge> candidates;
    for (const Edge& e : arcs_in_window(t, -radius, radius)) {
      if (t.is_mutable(e)) candidates.push_back(e);
    }
    if (candidates.empty()) break;
    t = flip(t, pick(rng, candidates)).desc;
  }
  return t;
}

SuiteReport verify_figures() {
  SuiteReport r{"figures"};
  Json figs = Json::array();
  for (const FigureData* f : {&leapfrog_figure(), &fountain_figure()}) {
    const FigureCheck c = check_figure(*f);
    const bool ok = c.ok(*f);
    r.passed = r.passed && ok;
    figs.push_back({{"name", f->name},
                    {"window", Json::array({f->a, f->b})},
                    {"arrows", f->arrows.size()},
                    {"missing", arrows_json(c.missing)},
                    {"extra", arrows_json(c.extra)},
                    {"components", c.components},
                    {"expected_components", f->components},
                    {"passed", ok}});
  }
  r.details["figures"] = figs;
  return r;
}

SuiteReport verify_compat(const TriangulationDesc& t, Vertex a, Vertex b, Vertex budget) {
  SuiteReport r{"compat"};
  const CompatibilityReport c = compatibility_check(t, a, b, l_entry, budget);
  r.passed = c.ok();
  Json failures = Json::array();
  for (const auto& [col, row, v] : c.failures) {
    failures.push_back({{"column", to_json(col)}, {"row", to_json(row)}, {"value", v}});
  }
  r.details = {{"descriptor", to_json(t)},
               {"window", Json::array({a, b})},
               {"columns", c.columns},
               {"entries", c.entries},
               {"failures", failures}};
  return r;
}

SuiteReport verify_quantum(Vertex range) {
  SuiteReport r{"quantum"};
  std::size_t relations = 0;
  std::size_t pairs = 0;
  Json failures = Json::array();
  for (Vertex i = -range; i <= range; ++i) {
    for (Vertex k = i + 1; k <= range; ++k) {
      for (Vertex j = k + 1; j <= range; ++j) {
        for (Vertex l = j + 1; l <= range; ++l) {
          ++relations;
          if (!verify_quantum_plucker(i, k, j, l)) {
            failures.push_back({{"relation", Json::array({i, k, j, l})}});
          }
        }
      }
    }
  }
  std::vector<Edge> edges;
  for (Vertex i = -range; i <= range; ++i) {
    for (Vertex j = i + 1; j <= range; ++j) edges.emplace_back(i, j);
  }
  for (const Edge& x : edges) {
    for (const Edge& y : edges) {
      if (crosses(x, y)) continue;
      ++pairs;
      const int s = verify_quasi_commute(x, y);
      if (s != l_entry(x, y)) {
        failures.push_back({{"pair", Json::array({to_json(x), to_json(y)})},
                            {"observed", s},
                            {"table", l_entry(x, y)}});
      }
    }
  }
  r.passed = failures.empty();
  r.details = {{"range", range},
               {"plucker_relations", relations},
               {"commuting_pairs", pairs},
               {"failures", failures}};
  return r;
}

SuiteReport verify_plucker(Vertex range) {
  SuiteReport r{"plucker"};
  std::size_t relations = 0;
  Json failures = Json::array();
  for (Vertex i = -range; i <= range; ++i) {
    for (Vertex k = i + 1; k <= range; ++k) {
      for (Vertex j = k + 1; j <= range; ++j) {
        for (Vertex l = j + 1; l <= range; ++l) {
          ++relations;
          if (!verify_short_plucker(i, k, j, l)) failures.push_back(Json::array({i, k, j, l}));
        }
      }
    }
  }
  r.passed = failures.empty();
  r.details = {{"range", range}, {"relations", relations}, {"failures", failures}};
  return r;
}

SuiteReport verify_flips(std::uint64_t seed, int count) {
  SuiteReport r{"flips"};
  std::mt19937_64 rng(seed);
  Json failures = Json::array();
  int done = 0;
  while (done < count) {
    const TriangulationDesc t = random_triangulation(rng, 6);
    std::vector<Edge> candidates;
    for (const Edge& e : arcs_in_window(t, -6, 6)) {
      if (t.is_mutable(e)) candidates.push_back(e);
    }
    if (candidates.empty()) continue;
    const Edge e = pick(rng, candidates);
    const ExchangeResult x = exchange_flip(ClusterState(t), e);
    const FlipResult back = flip(x.state.desc, x.new_arc);
    const bool ok = is_valid(x.state.desc) && back.desc == t && back.new_arc == e &&
                    relation_holds(x.relation);
    if (!ok) failures.push_back({{"descriptor", to_json(t)}, {"arc", to_json(e)}});
    ++done;
  }
  r.passed = failures.empty();
  r.details = {{"seed", seed}, {"flips", count}, {"failures", failures}};
  return r;
}

}  // namespace infgon
