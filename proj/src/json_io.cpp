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

#include "infgon/json_io.hpp"

#include <charconv>

#include "infgon/error.hpp"

namespace infgon {

namespace {

Error parse_error(const std::string& what) { return Error(ErrorCode::ParseError, what); }

Vertex integer_field(const Json& obj, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    const auto it = obj.find(name);
    if (it == obj.end()) continue;
    if (!it->is_number_integer()) {
      throw parse_error(std::string("field \"") + name + "\" must be an integer");
    }
    return it->get<Vertex>();
  }
  throw parse_error(std::string("missing field \"") + *names.begin() + "\"");
}

EdgeSet edge_list(const Json& obj, const char* name) {
  EdgeSet out;
  const auto it = obj.find(name);
  if (it == obj.end()) return out;
  if (!it->is_array()) throw parse_error(std::string("\"") + name + "\" must be an array");
  std::size_t pos = 0;
  for (const Json& e : *it) {
    try {
      out.insert(edge_from_json(e));
    } catch (const Error& err) {
      throw parse_error(std::string(name) + "[" + std::to_string(pos) + "]: " + err.what());
    }
    ++pos;
  }
  return out;
}

}  // namespace

Json to_json(const Edge& e) { return Json::array({e.left(), e.right()}); }

Edge edge_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw parse_error("edge must be a two-element integer array [i, j]");
  }
  try {
    return Edge(j[0].get<Vertex>(), j[1].get<Vertex>());
  } catch (const Error& e) {
    throw parse_error(e.what());
  }
}

Json to_json(const TriangulationDesc& t) {
  Json base = std::visit(
      [](const auto& f) -> Json {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Leapfrog>) {
          return {{"kind", "leapfrog"}, {"center", f.center}};
        } else if constexpr (std::is_same_v<F, Fountain>) {
          return {{"kind", "fountain"}, {"vertex", f.vertex}};
        } else {
          return {{"kind", "split"}, {"l", f.left}, {"r", f.right}};
        }
      },
      t.base());
  Json removed = Json::array();
  for (const Edge& e : t.removed()) removed.push_back(to_json(e));
  Json added = Json::array();
  for (const Edge& e : t.added()) added.push_back(to_json(e));
  return {{"base", base}, {"removed", removed}, {"added", added}};
}

TriangulationDesc descriptor_from_json(const Json& j) {
  if (!j.is_object()) throw parse_error("descriptor must be a JSON object");
  const auto base_it = j.find("base");
  if (base_it == j.end() || !base_it->is_object()) {
    throw parse_error("descriptor needs a \"base\" object");
  }
  const Json& base = *base_it;
  const auto kind_it = base.find("kind");
  if (kind_it == base.end() || !kind_it->is_string()) {
    throw parse_error("base needs a string \"kind\"");
  }
  const std::string kind = kind_it->get<std::string>();
  BaseFamily family;
  if (kind == "leapfrog") {
    family = Leapfrog{integer_field(base, {"center", "c"})};
  } else if (kind == "fountain") {
    family = Fountain{integer_field(base, {"vertex", "k", "v"})};
  } else if (kind == "split") {
    family = SplitFountain{integer_field(base, {"l", "left"}), integer_field(base, {"r", "right"})};
  } else {
    throw parse_error("unknown base kind \"" + kind + "\"");
  }
  return TriangulationDesc(family, edge_list(j, "removed"), edge_list(j, "added"));
}

Json to_json(const TriangulationClass& c) {
  switch (c.kind) {
    case TriangulationClass::Kind::LocallyFinite:
      return {{"classification", "locally_finite"}};
    case TriangulationClass::Kind::FountainAt:
      return {{"classification", "fountain"}, {"k", c.first}};
    case TriangulationClass::Kind::SplitFountainAt:
      return {{"classification", "split_fountain"}, {"l", c.first}, {"r", c.second}};
  }
  return {};
}

Json to_json(const IceQuiver& q) {
  Json vertices = Json::array();
  for (const QuiverVertex& v : q.vertices()) {
    vertices.push_back({{"label", to_json(v.label)}, {"frozen", v.frozen}});
  }
  Json b = Json::array();
  for (std::size_t u = 0; u < q.size(); ++u) {
    Json row = Json::array();
    for (std::size_t v = 0; v < q.size(); ++v) row.push_back(q.b(u, v));
    b.push_back(row);
  }
  return {{"vertices", vertices}, {"b", b}};
}

IceQuiver quiver_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("b")) {
    throw parse_error("quiver needs \"vertices\" and \"b\"");
  }
  std::vector<QuiverVertex> vertices;
  for (const Json& v : j.at("vertices")) {
    vertices.push_back({edge_from_json(v.at("label")), v.value("frozen", false)});
  }
  std::vector<int> b;
  for (const Json& row : j.at("b")) {
    if (row.size() != vertices.size()) throw parse_error("quiver matrix row has wrong length");
    for (const Json& x : row) b.push_back(x.get<int>());
  }
  return IceQuiver(std::move(vertices), std::move(b));
}

Json to_json(const RelationRecord& r) {
  return {{"lhs", Json::array({to_json(r.lhs[0]), to_json(r.lhs[1])})},
          {"rhs", Json::array({Json::array({to_json(r.rhs[0].first), to_json(r.rhs[0].second)}),
                               Json::array({to_json(r.rhs[1].first), to_json(r.rhs[1].second)})})},
          {"text", to_string(r)}};
}

Json to_json(const QuantumRelation& r) {
  return {{"lhs", Json::array({to_json(r.lhs_first), to_json(r.lhs_second)})},
          {"rhs", Json::array({Json::array({to_json(r.rhs[0].first), to_json(r.rhs[0].second)}),
                               Json::array({to_json(r.rhs[1].first), to_json(r.rhs[1].second)})})},
          {"qpow", Json::array({r.qpow[0], r.qpow[1]})},
          {"text", to_string(r)}};
}

Json to_json(const LaurentHalfQ& c) {
  Json out = Json::array();
  for (const auto& [h, k] : c.terms()) out.push_back(Json::array({h, k}));
  return out;
}

Json to_json(const QElement& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x.terms()) {
    Json word = Json::array();
    for (std::size_t k = 0; k < w.size();) {
      std::size_t run = 1;
      while (k + run < w.size() && w[k + run] == w[k]) ++run;
      word.push_back(Json::array({w[k].row, w[k].col, run}));
      k += run;
    }
    out.push_back({{"word", word}, {"coeff", to_json(c)}});
  }
  return out;
}

Json to_json(const QuantumCertificate& c) {
  auto torus = [&](const QTorusElement& t) {
    Json out = Json::array();
    for (const auto& [exp, coeff] : t) {
      Json factors = Json::array();
      for (std::size_t p = 0; p < exp.size(); ++p) {
        if (exp[p] != 0) factors.push_back({{"label", to_json(c.order[p])}, {"exp", exp[p]}});
      }
      out.push_back({{"monomial", factors}, {"coeff", to_json(coeff)}});
    }
    return out;
  };
  Json order = Json::array();
  for (const Edge& e : c.order) order.push_back(to_json(e));
  return {{"old_arc", to_json(c.old_arc)},
          {"new_arc", to_json(c.new_arc)},
          {"quad", Json::array({c.quad.v[0], c.quad.v[1], c.quad.v[2], c.quad.v[3]})},
          {"order", order},
          {"mu", torus(c.mu)},
          {"mu_times_old", torus(c.mu_times)},
          {"lhs", to_json(c.lhs)},
          {"rhs", to_json(c.rhs)},
          {"verified", c.verified}};
}

Json window_snapshot(const TriangulationDesc& t, Vertex a, Vertex b, Vertex budget) {
  Json arcs = Json::array();
  for (const Edge& e : arcs_in_window(t, a, b, budget)) {
    arcs.push_back({{"arc", to_json(e)}, {"frozen", t.is_frozen(e)}, {"flippable", t.is_mutable(e)}});
  }
  Json sides = Json::array();
  for (Vertex v = a; v < b; ++v) sides.push_back(Json::array({v, v + 1}));
  Json out = {{"a", a}, {"b", b}, {"arcs", arcs}, {"sides", sides}};
  out.update(to_json(classify(t)));
  return out;
}

Edge parse_arc(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw parse_error("arc must look like i,j: \"" + text + "\"");
  auto number = [&](std::string_view s) {
    Vertex v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw parse_error("bad integer \"" + std::string(s) + "\" in arc \"" + text + "\"");
    }
    return v;
  };
  const std::string_view sv(text);
  const Vertex i = number(sv.substr(0, comma));
  const Vertex j = number(sv.substr(comma + 1));
  try {
    return Edge(i, j);
  } catch (const Error& e) {
    throw parse_error(e.what());
  }
}

}  // namespace infgon
