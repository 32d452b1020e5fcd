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

#include <CLI11.hpp>
#include <httplib.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "infgon/error.hpp"
#include "infgon/json_io.hpp"
#include "infgon/plucker.hpp"
#include "infgon/quantum.hpp"
#include "infgon/quiver.hpp"
#include "infgon/render.hpp"
#include "infgon/service.hpp"
#include "infgon/verify.hpp"

using namespace infgon;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  Vertex budget = kDefaultWindowBudget;
  std::uint64_t seed = 1;
};

Vertex budget_from_env() {
  const char* env = std::getenv("INFGON_BUDGET");
  if (env == nullptr) return kDefaultWindowBudget;
  try {
    const long long v = std::stoll(env);
    if (v > 0) return v;
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring INFGON_BUDGET=" << env << "\n";
  return kDefaultWindowBudget;
}

TriangulationDesc read_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  TriangulationDesc t = descriptor_from_json(j);
  if (!is_valid(t)) {
    throw Error(ErrorCode::InvalidDescriptor, path + ": descriptor is not a triangulation");
  }
  return t;
}

/// Writes the descriptor to `out` or stdout; reports go to stdout only when
/// stdout does not carry the descriptor.
std::ostream& emit(const TriangulationDesc& t, const std::string& out) {
  if (out.empty()) {
    std::cout << to_json(t).dump(2) << "\n";
    return std::cerr;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + out);
  f << to_json(t).dump(2) << "\n";
  return std::cout;
}

std::pair<Vertex, Vertex> default_window(const TriangulationDesc& t) {
  const auto [lo, hi] = t.support();
  return {lo - 4, hi + 4};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangulations of the infinity-gon and their cluster structures"};
  app.require_subcommand(1);
  Options opt;
  opt.budget = budget_from_env();
  app.add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  app.add_option("--budget", opt.budget, "Largest window width (INFGON_BUDGET)");

  // new
  auto* cmd_new = app.add_subcommand("new", "Create a descriptor from a base triangulation");
  std::optional<Vertex> fountain_at;
  std::optional<Vertex> leapfrog_at;
  std::vector<Vertex> split_at;
  std::vector<std::string> remove_arcs;
  std::vector<std::string> add_arcs;
  std::string new_out;
  auto* o_f = cmd_new->add_option("--fountain", fountain_at, "Fountain at k");
  auto* o_l = cmd_new->add_option("--leapfrog", leapfrog_at, "Leapfrog centred at c");
  auto* o_s = cmd_new->add_option("--split", split_at, "Split fountain at l r")->expected(2);
  o_f->excludes(o_l)->excludes(o_s);
  o_l->excludes(o_s);
  cmd_new->add_option("--remove", remove_arcs, "Base arc to drop, as i,j");
  cmd_new->add_option("--add", add_arcs, "Arc to add, as i,j");
  cmd_new->add_option("-o,--output", new_out, "Descriptor file");

  // flip
  auto* cmd_flip = app.add_subcommand("flip", "Flip arcs of a descriptor in order");
  std::string flip_in;
  std::vector<std::string> flip_arcs;
  bool flip_quantum = false;
  std::string flip_out;
  cmd_flip->add_option("descriptor", flip_in, "Descriptor file")->required();
  cmd_flip->add_option("arcs", flip_arcs, "Arcs to flip, as i,j")->required();
  cmd_flip->add_flag("--quantum", flip_quantum, "Also log and certify the quantum relation");
  cmd_flip->add_option("-o,--output", flip_out, "Descriptor file for the result");

  // show
  auto* cmd_show = app.add_subcommand("show", "Render a window of a descriptor");
  std::string show_in;
  std::string format = "ascii";
  std::vector<Vertex> show_window;
  cmd_show->add_option("descriptor", show_in, "Descriptor file")->required();
  cmd_show->add_option("--format", format, "ascii, svg, dot or json")
      ->check(CLI::IsMember({"ascii", "svg", "dot", "json"}))
      ->capture_default_str();
  cmd_show->add_option("--window", show_window, "Window a b")->expected(2);

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::vector<Vertex> verify_window;
  Vertex range = 4;
  int count = 200;
  std::string verify_in;
  cmd_verify->add_option("suite", suite, "figures, compat, quantum, plucker, flips or all")
      ->required()
      ->check(CLI::IsMember({"figures", "compat", "quantum", "plucker", "flips", "all"}));
  cmd_verify->add_option("--window", verify_window, "Window a b for compat")->expected(2);
  cmd_verify->add_option("--range", range, "Index range for quantum and plucker")
      ->capture_default_str();
  cmd_verify->add_option("--count", count, "Number of random flips")->capture_default_str();
  cmd_verify->add_option("--descriptor", verify_in, "Descriptor for compat");

  // serve
  auto* cmd_serve = app.add_subcommand("serve", "Start the HTTP session service");
  int port = 8080;
  std::string host = "127.0.0.1";
  long ttl = 3600;
  cmd_serve->add_option("--port", port)->capture_default_str();
  cmd_serve->add_option("--host", host)->capture_default_str();
  cmd_serve->add_option("--ttl", ttl, "Session idle timeout in seconds")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cmd_new) {
      TriangulationDesc base = TriangulationDesc::leapfrog(0);
      if (fountain_at) {
        base = TriangulationDesc::fountain(*fountain_at);
      } else if (!split_at.empty()) {
        base = TriangulationDesc::split(split_at[0], split_at[1]);
      } else if (leapfrog_at) {
        base = TriangulationDesc::leapfrog(*leapfrog_at);
      } else {
        std::cerr << "error: one of --fountain, --leapfrog, --split is required\n";
        return kExitUsage;
      }
      EdgeSet removed;
      EdgeSet added;
      for (const auto& s : remove_arcs) removed.insert(parse_arc(s));
      for (const auto& s : add_arcs) added.insert(parse_arc(s));
      const TriangulationDesc t(base.base(), removed, added);
      if (!is_valid(t)) {
        std::cerr << "error: descriptor is not a triangulation (crossing or non-maximal arcs)\n";
        return kExitUsage;
      }
      std::ostream& report = emit(t, new_out);
      report << "classification: " << to_string(classify(t)) << "\n";
      if (const auto bridge = t.bridge()) {
        report << "frozen bridge: " << to_string(*bridge) << "\n";
      }
      return 0;
    }

    if (*cmd_flip) {
      ClusterState state(read_descriptor(flip_in));
      std::vector<std::string> log;
      for (const auto& s : flip_arcs) {
        const Edge e = parse_arc(s);
        std::optional<QuantumMutation> qm;
        if (flip_quantum) qm = quantum_mutate(state.desc, e);
        ExchangeResult r = exchange_flip(state, e);
        log.push_back("flip " + to_string(e) + " -> " + to_string(r.new_arc) + ": " +
                      to_string(r.relation));
        if (qm) {
          const QuantumRelation qr = quantum_exchange_relation(r.quad);
          if (!quantum_relation_holds(qr) || !qm->certificate.verified) {
            throw Error(ErrorCode::CertificateFailed, "quantum relation failed for " + to_string(e));
          }
          log.push_back("  quantum: " + to_string(qr));
        }
        state = std::move(r.state);
      }
      std::ostream& report = emit(state.desc, flip_out);
      for (const auto& line : log) report << line << "\n";
      return 0;
    }

    if (*cmd_show) {
      const TriangulationDesc t = read_descriptor(show_in);
      auto [a, b] = default_window(t);
      if (!show_window.empty()) {
        a = show_window[0];
        b = show_window[1];
      }
      if (format == "ascii") {
        std::cout << render_ascii(t, a, b, opt.budget);
      } else if (format == "svg") {
        std::cout << render_svg(t, a, b, opt.budget);
      } else if (format == "dot") {
        std::cout << export_dot(build_exchange_quiver(t, a, b, opt.budget));
      } else {
        std::cout << window_snapshot(t, a, b, opt.budget).dump(2) << "\n";
      }
      return 0;
    }

    if (*cmd_verify) {
      std::vector<SuiteReport> reports;
      const bool all = suite == "all";
      if (all || suite == "figures") reports.push_back(verify_figures());
      if (all || suite == "compat") {
        const Vertex a = verify_window.empty() ? -5 : verify_window[0];
        const Vertex b = verify_window.empty() ? 5 : verify_window[1];
        if (!verify_in.empty()) {
          reports.push_back(verify_compat(read_descriptor(verify_in), a, b, opt.budget));
        } else {
          for (const auto& t : {TriangulationDesc::leapfrog(0), TriangulationDesc::fountain(0),
                                TriangulationDesc::split(0, 3)}) {
            reports.push_back(verify_compat(t, a, b, opt.budget));
          }
        }
      }
      if (all || suite == "quantum") reports.push_back(verify_quantum(range));
      if (all || suite == "plucker") reports.push_back(verify_plucker(range));
      if (all || suite == "flips") reports.push_back(verify_flips(opt.seed, count));
      bool passed = true;
      Json out = Json::array();
      for (const auto& r : reports) {
        passed = passed && r.passed;
        out.push_back(to_json(r));
      }
      std::cout << Json{{"passed", passed}, {"suites", out}}.dump(2) << "\n";
      return passed ? 0 : kExitFailure;
    }

    if (*cmd_serve) {
      Service::Options so;
      so.ttl = std::chrono::seconds(ttl);
      so.budget = opt.budget;
      Service service(so);
      httplib::Server server;
      install_routes(server, service);
      std::cerr << "listening on http://" << host << ":" << port << "\n";
      if (!server.listen(host, port)) {
        std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
        return kExitFailure;
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
