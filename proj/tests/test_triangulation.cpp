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

#include <doctest.h>

#include <random>

#include "infgon/error.hpp"
#include "infgon/verify.hpp"
#include "oracles.hpp"

using namespace infgon;

namespace {

std::vector<Edge> sorted(std::vector<Edge> v) {
  std::sort(v.begin(), v.end());
  return v;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an infgon::Error");
  return ErrorCode::ParseError;
}

std::vector<TriangulationDesc> random_descriptors(std::uint64_t seed, int n, int flips = 6) {
  std::mt19937_64 rng(seed);
  std::vector<TriangulationDesc> out;
  for (int k = 0; k < n; ++k) out.push_back(random_triangulation(rng, flips));
  return out;
}

}  // namespace

TEST_CASE("edges") {
  CHECK(code_of([] { Edge(3, 3); }) == ErrorCode::InvalidEdge);
  CHECK(code_of([] { Edge(4, 2); }) == ErrorCode::InvalidEdge);
  CHECK(Edge(0, 1).is_side());
  CHECK(Edge(0, 2).is_arc());
  CHECK(crosses(Edge(0, 2), Edge(1, 3)));
  CHECK_FALSE(crosses(Edge(0, 2), Edge(2, 4)));
  CHECK_FALSE(crosses(Edge(0, 4), Edge(1, 3)));
  CHECK(passes_over(Edge(0, 4), Edge(0, 2)));
  CHECK_FALSE(passes_over(Edge(0, 2), Edge(0, 2)));
  CHECK(pass_side(Edge(0, 4), Edge(0, 2)) == PassSide::Right);
  CHECK(pass_side(Edge(-3, 2), Edge(0, 2)) == PassSide::Left);
  CHECK(code_of([] { pass_side(Edge(-1, 5), Edge(0, 2)); }) == ErrorCode::NotAdjacentCover);

  // Crossing is exactly the strict interleaving of the four endpoints.
  for (Vertex i = -3; i <= 3; ++i) {
    for (Vertex j = i + 1; j <= 4; ++j) {
      for (Vertex k = -3; k <= 3; ++k) {
        for (Vertex l = k + 1; l <= 4; ++l) {
          const bool interleave = (i < k && k < j && j < l) || (k < i && i < l && l < j);
          CHECK(crosses(Edge(i, j), Edge(k, l)) == interleave);
        }
      }
    }
  }
}

TEST_CASE("base families") {
  CHECK(base_contains(Leapfrog{0}, Edge(-2, 3)));
  CHECK(base_contains(Leapfrog{0}, Edge(-1, 1)));
  CHECK_FALSE(base_contains(Leapfrog{0}, Edge(-2, 4)));
  CHECK(base_contains(Fountain{0}, Edge(-7, 0)));
  CHECK_FALSE(base_contains(Fountain{0}, Edge(0, 1)));
  CHECK(base_contains(SplitFountain{0, 3}, Edge(0, 3)));
  CHECK(base_contains(SplitFountain{0, 3}, Edge(3, 5)));
  CHECK_FALSE(base_contains(SplitFountain{0, 3}, Edge(1, 3)));

  const TriangulationDesc edited(Fountain{0}, {Edge(0, 2)}, {Edge(1, 3)});
  CHECK_FALSE(edited.contains(Edge(0, 2)));
  CHECK(edited.contains(Edge(1, 3)));

  CHECK(code_of([] { TriangulationDesc(Fountain{0}, {Edge(1, 3)}, {}); }) ==
        ErrorCode::InvalidDescriptor);
  CHECK(code_of([] { TriangulationDesc::split(2, 2); }) == ErrorCode::InvalidDescriptor);
}

TEST_CASE("arcs in a window") {
  CHECK(arcs_in_window(TriangulationDesc::fountain(0), -2, 3) ==
        std::vector<Edge>{Edge(-2, 0), Edge(0, 2), Edge(0, 3)});
  CHECK(sorted(arcs_in_window(TriangulationDesc::leapfrog(0), -2, 3)) ==
        sorted({Edge(-1, 1), Edge(-1, 2), Edge(-2, 2), Edge(-2, 3)}));
  CHECK(arcs_in_window(TriangulationDesc::leapfrog(0), 5, 6).empty());
  CHECK(edges_in_window(TriangulationDesc::fountain(0), 0, 2) ==
        std::vector<Edge>{Edge(0, 1), Edge(0, 2), Edge(1, 2)});
  CHECK(code_of([] { arcs_in_window(TriangulationDesc::fountain(0), 3, 3); }) ==
        ErrorCode::WindowTooLarge);
  CHECK(code_of([] { arcs_in_window(TriangulationDesc::fountain(0), 0, 100, 50); }) ==
        ErrorCode::WindowTooLarge);

  for (const auto& t : random_descriptors(11, 150)) {
    const oracle::Model m(t, -40, 40);
    CHECK(arcs_in_window(t, -12, 12) == m.arc_list(-12, 12));
  }
}

TEST_CASE("minimal arc over") {
  const auto lf = TriangulationDesc::leapfrog(0);
  Cover c = minimal_arc_over(lf, Edge(-1, 1));
  CHECK(c.arc == Edge(-1, 2));
  CHECK(c.side == PassSide::Right);
  c = minimal_arc_over(TriangulationDesc::fountain(0), Edge(0, 2));
  CHECK(c.arc == Edge(0, 3));
  CHECK(c.side == PassSide::Right);
  c = minimal_arc_over(TriangulationDesc::fountain(0), Edge(-2, 0));
  CHECK(c.arc == Edge(-3, 0));
  CHECK(c.side == PassSide::Left);
  CHECK(code_of([] { minimal_arc_over(TriangulationDesc::split(0, 3), Edge(0, 3)); }) ==
        ErrorCode::NoCover);

  // Brute force: every arc or side of the middle of the window has exactly
  // one minimal cover, except the split-fountain segment (l,r) which has none.
  for (const auto& t : random_descriptors(12, 120)) {
    const oracle::Model m(t, -60, 60);
    std::vector<Edge> edges = m.arc_list(-10, 10);
    for (Vertex v = -10; v < 10; ++v) edges.emplace_back(v, v + 1);
    for (const Edge& e : edges) {
      const auto brute = m.minimal_covers(e.left(), e.right());
      if (brute.empty()) {
        const TriangulationClass c = classify(t);
        CHECK(c.kind == TriangulationClass::Kind::SplitFountainAt);
        CHECK(e == Edge(c.first, c.second));
        CHECK(code_of([&] { minimal_arc_over(t, e); }) == ErrorCode::NoCover);
        continue;
      }
      REQUIRE(brute.size() == 1);
      const Cover got = minimal_arc_over(t, e);
      CHECK(got.arc == brute.front());
      CHECK(got.side == pass_side(got.arc, e));
    }
  }
}

TEST_CASE("quadrilaterals and flips") {
  const auto f0 = TriangulationDesc::fountain(0);
  const Quadrilateral q = quadrilateral_of(f0, Edge(0, 2));
  CHECK(q.v == std::array<Vertex, 4>{0, 1, 2, 3});
  CHECK(q.diagonal == Edge(0, 2));
  CHECK(q.other_diagonal() == Edge(1, 3));
  CHECK(quadrilateral_of(TriangulationDesc::leapfrog(0), Edge(-1, 2)).v ==
        std::array<Vertex, 4>{-2, -1, 1, 2});

  const FlipResult r = flip(f0, Edge(0, 2));
  CHECK(r.new_arc == Edge(1, 3));
  CHECK(flip(r.desc, Edge(1, 3)).desc == f0);

  CHECK(code_of([&] { flip(f0, Edge(0, 1)); }) == ErrorCode::SideNotFlippable);
  CHECK(code_of([&] { flip(r.desc, Edge(0, 2)); }) == ErrorCode::NotInTriangulation);
  CHECK(code_of([] { flip(TriangulationDesc::split(0, 3), Edge(0, 3)); }) ==
        ErrorCode::FrozenArc);
  try {
    flip(f0, Edge(0, 1));
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "side is not flippable");
  }

  for (const auto& t : random_descriptors(13, 120)) {
    const oracle::Model m(t, -60, 60);
    for (const Edge& e : m.arc_list(-8, 8)) {
      if (t.is_frozen(e)) continue;
      const auto brute = oracle::quadrilateral(m, e.left(), e.right());
      REQUIRE(brute.has_value());
      const Quadrilateral got = quadrilateral_of(t, e);
      CHECK(got.v == *brute);
      const FlipResult f = flip(t, e);
      CHECK(is_valid(f.desc));
      CHECK(f.new_arc == got.other_diagonal());
      CHECK(flip(f.desc, f.new_arc).desc == t);
      // The flipped realized set differs from the old one in exactly e.
      const oracle::Model after(f.desc, -60, 60);
      auto expected = m.arcs;
      expected.erase({e.left(), e.right()});
      expected.insert({f.new_arc.left(), f.new_arc.right()});
      CHECK(after.arcs == expected);
    }
  }
}

TEST_CASE("validation") {
  CHECK(is_valid(TriangulationDesc::leapfrog(3)));
  CHECK(is_valid(TriangulationDesc::split(-2, 5)));
  // Removing an arc without replacing it leaves a hole.
  CHECK_FALSE(is_valid(TriangulationDesc(Fountain{0}, {Edge(0, 3)}, {})));
  // Adding an arc that crosses the base.
  CHECK_FALSE(is_valid(TriangulationDesc(Fountain{0}, {}, {Edge(-1, 1)})));
  CHECK_FALSE(is_valid(TriangulationDesc(Leapfrog{0}, {}, {Edge(-3, 5)})));
  CHECK(is_valid(TriangulationDesc(Leapfrog{0}, {Edge(-1, 2)}, {Edge(-2, 1)})));
  CHECK_FALSE(validate_window(TriangulationDesc(Fountain{0}, {Edge(0, 3)}, {}), -5, 5));
}

TEST_CASE("classification") {
  CHECK(to_string(classify(TriangulationDesc::leapfrog(0))) == "LocallyFinite");
  CHECK(to_string(classify(TriangulationDesc::fountain(0))) == "FountainAt(0)");
  CHECK(to_string(classify(TriangulationDesc::split(0, 3))) == "SplitFountainAt(0,3)");
  CHECK(TriangulationDesc::split(0, 3).bridge() == Edge(0, 3));
  CHECK_FALSE(TriangulationDesc::split(0, 1).bridge().has_value());

  for (const auto& t : random_descriptors(14, 100)) {
    const auto c = classify(t);
    std::visit(
        [&](const auto& f) {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, Leapfrog>) {
            CHECK(c.kind == TriangulationClass::Kind::LocallyFinite);
          } else if constexpr (std::is_same_v<F, Fountain>) {
            CHECK(c.kind == TriangulationClass::Kind::FountainAt);
            CHECK(c.first == f.vertex);
          } else {
            CHECK(c.kind == TriangulationClass::Kind::SplitFountainAt);
            CHECK(c.first == f.left);
            CHECK(c.second == f.right);
          }
        },
        t.base());
  }

  CHECK(fountain_arc_sequence(TriangulationDesc::fountain(0), 3, FountainSide::Right) ==
        std::vector<Edge>{Edge(0, 2), Edge(0, 3), Edge(0, 4)});
  CHECK(fountain_arc_sequence(TriangulationDesc::fountain(0), 2, FountainSide::Left) ==
        std::vector<Edge>{Edge(-2, 0), Edge(-3, 0)});
  CHECK(code_of([] {
          fountain_arc_sequence(TriangulationDesc::leapfrog(0), 2, FountainSide::Left);
        }) == ErrorCode::NotAFountain);
  CHECK(minimal_arc_chain(TriangulationDesc::leapfrog(0), Edge(0, 1), 4) ==
        std::vector<Edge>{Edge(0, 1), Edge(-1, 1), Edge(-1, 2), Edge(-2, 2)});
  CHECK(code_of([] { minimal_arc_chain(TriangulationDesc::fountain(0), Edge(0, 2), 3); }) ==
        ErrorCode::NotLocallyFinite);
}

TEST_CASE("flip sequences between equivalent descriptors") {
  std::mt19937_64 rng(15);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    const TriangulationDesc t1 = random_triangulation(rng, 6);
    TriangulationDesc t2(t1.base());
    for (int n = 0; n < 6; ++n) {
      std::vector<Edge> arcs;
      for (const Edge& e : arcs_in_window(t2, -6, 6)) {
        if (t2.is_mutable(e)) arcs.push_back(e);
      }
      t2 = flip(t2, arcs[rng() % arcs.size()]).desc;
    }
    REQUIRE(mutation_equivalent(t1, t2));
    CHECK(apply_flips(t1, find_flip_sequence(t1, t2)) == t2);
    ++checked;
  }
  CHECK(checked == 200);
  CHECK(find_flip_sequence(TriangulationDesc::leapfrog(0), TriangulationDesc::leapfrog(0)).empty());
  CHECK_FALSE(mutation_equivalent(TriangulationDesc::fountain(0), TriangulationDesc::fountain(1)));
  CHECK(code_of([] {
          find_flip_sequence(TriangulationDesc::fountain(0), TriangulationDesc::leapfrog(0));
        }) == ErrorCode::NotEquivalent);
}

TEST_CASE("repeated flips out of the fountain") {
  // Flipping (0,2), (0,3), ..., (0,k) in turn moves the right fan to vertex 1:
  // the arcs (1,3), ..., (1,k+1) appear and (0,n) survives for n >= k+1.
  TriangulationDesc t = TriangulationDesc::fountain(0);
  for (Vertex k = 2; k <= 10; ++k) {
    const FlipResult r = flip(t, Edge(0, k));
    CHECK(r.new_arc == Edge(1, k + 1));
    t = r.desc;
    CHECK(validate_window(t, -k - 5, k + 5));
    const oracle::Model m(t, -30, 30);
    for (Vertex j = 3; j <= k + 1; ++j) CHECK(m.has_arc(1, j));
    CHECK_FALSE(m.has_arc(0, k));
    CHECK(m.has_arc(0, k + 1));
    CHECK(classify(t).first == 0);
  }
}
