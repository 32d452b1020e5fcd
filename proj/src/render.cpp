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

#include "infgon/render.hpp"

#include <algorithm>
#include <sstream>

namespace infgon {

namespace {

constexpr int kCell = 4;

std::vector<Vertex> fountain_vertices(const TriangulationDesc& t) {
  const TriangulationClass c = classify(t);
  switch (c.kind) {
    case TriangulationClass::Kind::LocallyFinite: return {};
    case TriangulationClass::Kind::FountainAt: return {c.first};
    case TriangulationClass::Kind::SplitFountainAt: return {c.first, c.second};
  }
  return {};
}

}  // namespace

std::string render_ascii(const TriangulationDesc& t, Vertex a, Vertex b, Vertex budget) {
  std::vector<Edge> arcs = arcs_in_window(t, a, b, budget);
  std::stable_sort(arcs.begin(), arcs.end(),
                   [](const Edge& x, const Edge& y) { return x.span() > y.span(); });
  const auto width = static_cast<std::size_t>((b - a) * kCell + 1);
  auto column = [&](Vertex v) { return static_cast<std::size_t>((v - a) * kCell); };
  std::ostringstream os;
  for (const Edge& e : arcs) {
    std::string row(width, ' ');
    const char fill = t.is_frozen(e) ? '=' : '-';
    for (std::size_t c = column(e.left()); c <= column(e.right()); ++c) row[c] = fill;
    row[column(e.left())] = '+';
    row[column(e.right())] = '+';
    row.erase(row.find_last_not_of(' ') + 1);
    os << row << "   " << to_string(e) << (t.is_frozen(e) ? " frozen" : "") << "\n";
  }
  std::string ticks(width, '-');
  std::string labels(width + 4, ' ');
  for (Vertex v = a; v <= b; ++v) {
    ticks[column(v)] = '|';
    const std::string n = std::to_string(v);
    labels.replace(column(v), n.size(), n);
  }
  const auto fountains = fountain_vertices(t);
  for (Vertex f : fountains) {
    if (f >= a && f <= b) ticks[column(f)] = '*';
  }
  labels.erase(labels.find_last_not_of(' ') + 1);
  os << ticks << "\n" << labels << "\n";
  if (!fountains.empty()) os << "* fountain vertex\n";
  return os.str();
}

std::string render_svg(const TriangulationDesc& t, Vertex a, Vertex b, Vertex budget) {
  const std::vector<Edge> arcs = arcs_in_window(t, a, b, budget);
  constexpr double unit = 40.0;
  constexpr double margin = 30.0;
  const double width = static_cast<double>(b - a) * unit + 2 * margin;
  const double height = static_cast<double>(b - a) * unit / 2 + 70.0;
  const double base = height - 35.0;
  auto x = [&](Vertex v) { return margin + static_cast<double>(v - a) * unit; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "  <line x1=\"" << x(a) - 15 << "\" y1=\"" << base << "\" x2=\"" << x(b) + 15
     << "\" y2=\"" << base << "\" stroke=\"black\"/>\n";
  for (Vertex v = a; v <= b; ++v) {
    os << "  <line x1=\"" << x(v) << "\" y1=\"" << base - 4 << "\" x2=\"" << x(v)
       << "\" y2=\"" << base + 4 << "\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << x(v) << "\" y=\"" << base + 20
       << "\" font-size=\"12\" text-anchor=\"middle\">" << v << "</text>\n";
  }
  for (const Edge& e : arcs) {
    const double r = static_cast<double>(e.span()) * unit / 2;
    os << "  <path d=\"M " << x(e.left()) << " " << base << " A " << r << " " << r
       << " 0 0 1 " << x(e.right()) << " " << base << "\" fill=\"none\"";
    if (t.is_frozen(e)) {
      os << " stroke=\"#b22222\" stroke-width=\"2\" stroke-dasharray=\"6 4\"";
    } else {
      os << " stroke=\"#1f4e8c\" stroke-width=\"1.5\"";
    }
    os << "><title>" << to_string(e) << "</title></path>\n";
  }
  for (Vertex f : fountain_vertices(t)) {
    if (f < a || f > b) continue;
    os << "  <circle cx=\"" << x(f) << "\" cy=\"" << base << "\" r=\"5\" fill=\"#e08000\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace infgon
