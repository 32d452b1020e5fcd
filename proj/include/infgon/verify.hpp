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

#include <cstdint>
#include <random>
#include <string>

#include "infgon/json_io.hpp"
#include "infgon/triangulation.hpp"

namespace infgon {

struct SuiteReport {
  std::string suite;
  bool passed = true;
  Json details = Json::object();
};

Json to_json(const SuiteReport& r);

/// Random descriptor: a random base near the origin followed by `flips`
/// random flips of arcs inside [-radius, radius].
TriangulationDesc random_triangulation(std::mt19937_64& rng, int flips, Vertex radius = 6);

SuiteReport verify_figures();
SuiteReport verify_compat(const TriangulationDesc& t, Vertex a, Vertex b,
                          Vertex budget = kDefaultWindowBudget);
/// Quantum Plucker relations and quasi-commutation exponents on [-range, range].
SuiteReport verify_quantum(Vertex range);
/// Classical short Plucker relations on [-range, range].
SuiteReport verify_plucker(Vertex range);
/// Random flips: involution, validity and the exchange relation of each flip.
SuiteReport verify_flips(std::uint64_t seed, int count);

}  // namespace infgon
