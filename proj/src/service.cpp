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

#include "infgon/service.hpp"

#include <charconv>
#include <random>
#include <sstream>

#include "infgon/error.hpp"
#include "infgon/quantum.hpp"
#include "infgon/quiver.hpp"

namespace infgon {

struct Service::Session {
  std::mutex mutex;
  TriangulationDesc initial;
  ClusterState state;
  std::vector<Edge> undo;  // arcs created by applied flips
  std::vector<Edge> redo;  // arcs removed by undone flips
  Clock::time_point last_access;

  explicit Session(const TriangulationDesc& t) : initial(t), state(t) {}
};

namespace {

HttpResponse json_response(int status, const Json& body) {
  return {status, body.dump(), "application/json"};
}

HttpResponse error_response(int status, std::string_view code, const std::string& message,
                            const std::optional<std::pair<Vertex, Vertex>>& arc = std::nullopt) {
  Json body = {{"code", code}, {"message", message}};
  if (arc) body["arc"] = Json::array({arc->first, arc->second});
  return json_response(status, body);
}

HttpResponse error_response(int status, const Error& e) {
  return error_response(status, code_name(e.code()), e.what(), e.arc());
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream is(path);
  while (std::getline(is, part, '/')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

Vertex query_int(const std::map<std::string, std::string>& query, const std::string& key) {
  const auto it = query.find(key);
  if (it == query.end()) {
    throw Error(ErrorCode::ParseError, "missing query parameter \"" + key + "\"");
  }
  Vertex v = 0;
  const std::string& s = it->second;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "query parameter \"" + key + "\" is not an integer");
  }
  return v;
}

std::string new_id() {
  static std::mutex m;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard lock(m);
  std::ostringstream os;
  os << std::hex << rng();
  return os.str();
}

Json state_json(const TriangulationDesc& t, const std::vector<Edge>& history,
                std::size_t undo, std::size_t redo) {
  Json flips = Json::array();
  for (const Edge& e : history) flips.push_back(to_json(e));
  Json out = {{"descriptor", to_json(t)},
              {"history", flips},
              {"can_undo", undo > 0},
              {"can_redo", redo > 0}};
  out.update(to_json(classify(t)));
  return out;
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidEdge:
    case ErrorCode::InvalidDescriptor:
      return 400;
    case ErrorCode::WindowTooLarge:
    case ErrorCode::OutsideWindow:
      return 422;
    case ErrorCode::NotInTriangulation:
    case ErrorCode::FrozenArc:
    case ErrorCode::SideNotFlippable:
    case ErrorCode::FrozenVertex:
      return 409;
    case ErrorCode::BudgetExceeded:
      return 503;
    default:
      return 500;
  }
}

}  // namespace

Service::Service() : Service(Options{}) {}
Service::Service(Options options) : options_(std::move(options)) {}
Service::~Service() = default;

std::size_t Service::session_count() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

std::size_t Service::evict_expired() {
  const auto now = options_.now();
  std::lock_guard lock(mutex_);
  std::size_t n = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    if (now - it->second->last_access > options_.ttl) {
      it = sessions_.erase(it);
      ++n;
    } else {
      ++it;
    }
  }
  return n;
}

std::shared_ptr<Service::Session> Service::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  it->second->last_access = options_.now();
  return it->second;
}

std::string Service::create(const TriangulationDesc& initial) {
  if (!is_valid(initial)) {
    throw Error(ErrorCode::InvalidDescriptor,
                "descriptor is not a triangulation (crossing or non-maximal arcs)");
  }
  auto session = std::make_shared<Session>(initial);
  session->last_access = options_.now();
  std::lock_guard lock(mutex_);
  if (sessions_.size() >= options_.max_sessions) {
    throw Error(ErrorCode::BudgetExceeded, "too many open sessions");
  }
  std::string id = new_id();
  while (sessions_.contains(id)) id = new_id();
  sessions_.emplace(id, std::move(session));
  return id;
}

Json Service::snapshot(const std::string& id) const {
  const auto s = find(id);
  if (!s) throw Error(ErrorCode::ParseError, "no session " + id);
  std::lock_guard lock(s->mutex);
  Json flips = Json::array();
  for (const Edge& e : s->state.history) flips.push_back(to_json(e));
  Json redo = Json::array();
  for (const Edge& e : s->redo) redo.push_back(to_json(e));
  return {{"initial", to_json(s->initial)}, {"flips", flips}, {"redo", redo}};
}

std::string Service::restore(const Json& snap) {
  if (!snap.is_object() || !snap.contains("initial")) {
    throw Error(ErrorCode::ParseError, "snapshot needs \"initial\"");
  }
  const TriangulationDesc initial = descriptor_from_json(snap.at("initial"));
  const std::string id = create(initial);
  const auto s = find(id);
  std::lock_guard lock(s->mutex);
  for (const Json& e : snap.value("flips", Json::array())) {
    ExchangeResult r = exchange_flip(s->state, edge_from_json(e));
    s->state = std::move(r.state);
    s->undo.push_back(r.new_arc);
  }
  for (const Json& e : snap.value("redo", Json::array())) s->redo.push_back(edge_from_json(e));
  return id;
}

HttpResponse Service::handle(const std::string& method, const std::string& path,
                             const std::map<std::string, std::string>& query,
                             const std::string& body, const std::string& accept) {
  evict_expired();
  const std::vector<std::string> seg = split_path(path);
  try {
    if (seg.size() == 1 && seg[0] == "spec") {
      if (method != "GET") return error_response(405, "MethodNotAllowed", "use GET");
      return json_response(200, openapi());
    }
    if (seg.empty() || seg[0] != "sessions") {
      return error_response(404, "NotFound", "no route for " + path);
    }
    if (seg.size() == 1) {
      if (method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
      Json j;
      try {
        j = Json::parse(body);
      } catch (const Json::parse_error& e) {
        return error_response(400, "ParseError", e.what());
      }
      const TriangulationDesc t = descriptor_from_json(j);
      const std::string id = create(t);
      Json out = {{"id", id}, {"descriptor", to_json(t)}};
      out.update(to_json(classify(t)));
      const ComponentCount c = component_count(t);
      out["components"] = c.count;
      out["finite_component_empty"] = c.finite_component_empty;
      return json_response(201, out);
    }
    if (seg.size() == 2 && seg[1] == "restore") {
      if (method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
      Json j;
      try {
        j = Json::parse(body);
      } catch (const Json::parse_error& e) {
        return error_response(400, "ParseError", e.what());
      }
      const std::string id = restore(j);
      return json_response(201, {{"id", id}});
    }

    const auto s = find(seg[1]);
    if (!s) return error_response(404, "NotFound", "no session " + seg[1]);
    if (seg.size() == 2) {
      if (method == "DELETE") {
        std::lock_guard lock(mutex_);
        sessions_.erase(seg[1]);
        return json_response(200, {{"deleted", seg[1]}});
      }
      if (method != "GET") return error_response(405, "MethodNotAllowed", "use GET or DELETE");
      std::lock_guard lock(s->mutex);
      return json_response(200, state_json(s->state.desc, s->state.history, s->undo.size(),
                                           s->redo.size()));
    }
    if (seg.size() != 3) return error_response(404, "NotFound", "no route for " + path);
    const std::string& action = seg[2];

    if (method == "GET") {
      if (action == "snapshot") return json_response(200, snapshot(seg[1]));
      const Vertex a = query_int(query, "a");
      const Vertex b = query_int(query, "b");
      if (a >= b) {
        return error_response(422, "WindowTooLarge", "window needs a < b");
      }
      TriangulationDesc t = [&] {
        std::lock_guard lock(s->mutex);
        return s->state.desc;
      }();
      if (action == "window") return json_response(200, window_snapshot(t, a, b, options_.budget));
      if (action == "quiver") {
        const IceQuiver q = build_exchange_quiver(t, a, b, options_.budget);
        if (accept.find("text/vnd.graphviz") != std::string::npos) {
          return {200, export_dot(q), "text/vnd.graphviz"};
        }
        return json_response(200, to_json(q));
      }
      if (action == "variables") {
        Json vars = Json::array();
        for (const Edge& e : arcs_in_window(t, a, b, options_.budget)) {
          vars.push_back({{"arc", to_json(e)},
                          {"label", delta_name(e)},
                          {"mutable", t.is_mutable(e)}});
        }
        Json coeffs = Json::array();
        const ClusterState cs(t);
        for (const Edge& e : cs.coefficients(a, b)) {
          coeffs.push_back({{"arc", to_json(e)}, {"label", delta_name(e)}});
        }
        return json_response(200, {{"variables", vars}, {"coefficients", coeffs}});
      }
      if (action == "lmatrix") {
        const std::vector<Edge> edges = edges_in_window(t, a, b, options_.budget);
        Json labels = Json::array();
        Json rows = Json::array();
        for (const Edge& x : edges) {
          labels.push_back(to_json(x));
          Json row = Json::array();
          for (const Edge& y : edges) row.push_back(l_entry(x, y));
          rows.push_back(row);
        }
        return json_response(200, {{"labels", labels}, {"L", rows}});
      }
      return error_response(404, "NotFound", "no route for " + path);
    }

    if (method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
    std::lock_guard lock(s->mutex);
    if (action == "flip") {
      Json j;
      try {
        j = Json::parse(body);
      } catch (const Json::parse_error& e) {
        return error_response(400, "ParseError", e.what());
      }
      if (!j.is_object() || !j.contains("arc")) {
        return error_response(400, "ParseError", "flip body needs \"arc\"");
      }
      const Edge e = edge_from_json(j.at("arc"));
      const bool quantum = j.value("quantum", false);
      std::optional<QuantumMutation> qm;
      if (quantum) qm = quantum_mutate(s->state.desc, e);
      ExchangeResult r = exchange_flip(s->state, e);
      Json out = {{"new_arc", to_json(r.new_arc)},
                  {"old_arc", to_json(e)},
                  {"quad", Json::array({r.quad.v[0], r.quad.v[1], r.quad.v[2], r.quad.v[3]})},
                  {"relation", to_json(r.relation)}};
      if (qm) {
        const QuantumRelation qr = quantum_exchange_relation(r.quad);
        if (!quantum_relation_holds(qr)) {
          throw Error(ErrorCode::CertificateFailed, "quantum exchange relation failed");
        }
        out["q_relation"] = to_json(qr);
        out["certificate"] = to_json(qm->certificate);
      }
      s->state = std::move(r.state);
      s->undo.push_back(r.new_arc);
      s->redo.clear();
      out["state"] = state_json(s->state.desc, s->state.history, s->undo.size(), s->redo.size());
      return json_response(200, out);
    }
    if (action == "undo" || action == "redo") {
      auto& from = action == "undo" ? s->undo : s->redo;
      auto& to = action == "undo" ? s->redo : s->undo;
      if (from.empty()) {
        return error_response(409, action == "undo" ? "NothingToUndo" : "NothingToRedo",
                              "nothing to " + action);
      }
      ExchangeResult r = exchange_flip(s->state, from.back());
      from.pop_back();
      to.push_back(r.new_arc);
      std::vector<Edge> history = s->state.history;
      if (action == "undo") {
        history.pop_back();
      } else {
        history.push_back(r.state.history.back());
      }
      s->state = std::move(r.state);
      s->state.history = std::move(history);
      return json_response(200, state_json(s->state.desc, s->state.history, s->undo.size(),
                                           s->redo.size()));
    }
    return error_response(404, "NotFound", "no route for " + path);
  } catch (const Error& e) {
    return error_response(status_for(e.code()), e);
  } catch (const Json::exception& e) {
    return error_response(400, "ParseError", e.what());
  }
}

const Json& Service::openapi() {
  static const Json doc = Json::parse(R"json({
  "openapi": "3.0.3",
  "info": {"title": "infgon session API", "version": "1.0.0"},
  "components": {
    "schemas": {
      "Edge": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
      "Descriptor": {
        "type": "object",
        "required": ["base"],
        "properties": {
          "base": {"type": "object", "properties": {
            "kind": {"type": "string", "enum": ["leapfrog", "fountain", "split"]},
            "center": {"type": "integer"}, "vertex": {"type": "integer"},
            "l": {"type": "integer"}, "r": {"type": "integer"}}},
          "removed": {"type": "array", "items": {"$ref": "#/components/schemas/Edge"}},
          "added": {"type": "array", "items": {"$ref": "#/components/schemas/Edge"}}
        }
      },
      "Error": {"type": "object", "properties": {
        "code": {"type": "string"}, "message": {"type": "string"},
        "arc": {"$ref": "#/components/schemas/Edge"}}}
    }
  },
  "paths": {
    "/sessions": {"post": {"summary": "Create a session from a descriptor",
      "requestBody": {"content": {"application/json": {"schema": {"$ref": "#/components/schemas/Descriptor"}}}},
      "responses": {"201": {"description": "id, classification and component count"},
                    "400": {"description": "invalid descriptor"}}}},
    "/sessions/restore": {"post": {"summary": "Rebuild a session from a snapshot",
      "responses": {"201": {"description": "new id"}, "400": {"description": "bad snapshot"}}}},
    "/sessions/{id}": {
      "get": {"summary": "Current state", "responses": {"200": {"description": "state"}, "404": {"description": "unknown session"}}},
      "delete": {"summary": "Close the session", "responses": {"200": {"description": "deleted"}}}},
    "/sessions/{id}/window": {"get": {"summary": "Arcs and sides in [a,b]",
      "parameters": [{"name": "a", "in": "query", "required": true, "schema": {"type": "integer"}},
                     {"name": "b", "in": "query", "required": true, "schema": {"type": "integer"}}],
      "responses": {"200": {"description": "window snapshot"}, "404": {"description": "unknown session"},
                    "422": {"description": "empty or oversize window"}}}},
    "/sessions/{id}/quiver": {"get": {"summary": "Exchange quiver of [a,b]; DOT with Accept: text/vnd.graphviz",
      "responses": {"200": {"description": "quiver"}, "422": {"description": "empty or oversize window"}}}},
    "/sessions/{id}/variables": {"get": {"summary": "Cluster variables and coefficients in [a,b]",
      "responses": {"200": {"description": "labels"}}}},
    "/sessions/{id}/lmatrix": {"get": {"summary": "Quasi-commutation matrix on the edges in [a,b]",
      "responses": {"200": {"description": "L"}}}},
    "/sessions/{id}/flip": {"post": {"summary": "Flip an arc",
      "requestBody": {"content": {"application/json": {"schema": {"type": "object", "properties": {
        "arc": {"$ref": "#/components/schemas/Edge"}, "quantum": {"type": "boolean"}}}}}},
      "responses": {"200": {"description": "new arc, relation, optional q_relation and certificate"},
                    "409": {"description": "arc not flippable", "content": {"application/json": {"schema": {"$ref": "#/components/schemas/Error"}}}}}}},
    "/sessions/{id}/undo": {"post": {"summary": "Undo the last flip", "responses": {"200": {"description": "state"}, "409": {"description": "nothing to undo"}}}},
    "/sessions/{id}/redo": {"post": {"summary": "Redo the last undone flip", "responses": {"200": {"description": "state"}, "409": {"description": "nothing to redo"}}}},
    "/sessions/{id}/snapshot": {"get": {"summary": "Initial descriptor and flip history", "responses": {"200": {"description": "snapshot"}}}},
    "/spec": {"get": {"summary": "This document", "responses": {"200": {"description": "OpenAPI"}}}}
  }
})json");
  return doc;
}

}  // namespace infgon
