#pragma once

#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "injcol/error.hpp"
#include "injcol/graph.hpp"

namespace injcol {

using AnyGraph = std::variant<UndirectedGraph, OrientedGraph>;

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace detail

/// Reads the DIMACS-like format:
///   c comment
///   p edge|arc n m
///   e u v        (edge mode)
///   a u v        (arc mode)
/// Vertices are 1-indexed in the file and 0-indexed in memory.
inline AnyGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  bool arc_mode = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::vector<Arc> arcs;
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (have_header) detail::parse_fail(line_no, "duplicate problem line");
      std::string mode;
      long long nn = -1;
      long long mm = -1;
      if (!(ls >> mode >> nn >> mm) || nn < 0 || mm < 0) {
        detail::parse_fail(line_no, "expected 'p edge|arc n m'");
      }
      if (mode != "edge" && mode != "arc") detail::parse_fail(line_no, "unknown mode '" + mode + "'");
      arc_mode = mode == "arc";
      n = static_cast<std::size_t>(nn);
      m = static_cast<std::size_t>(mm);
      have_header = true;
    } else if (tag == "e" || tag == "a") {
      if (!have_header) detail::parse_fail(line_no, "edge before problem line");
      if ((tag == "a") != arc_mode) {
        detail::parse_fail(line_no, "'" + tag + "' line in " + (arc_mode ? "arc" : "edge") + " mode");
      }
      long long u = 0;
      long long v = 0;
      if (!(ls >> u >> v)) detail::parse_fail(line_no, "expected two vertices");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n) {
        detail::parse_fail(line_no, "vertex out of range 1.." + std::to_string(n));
      }
      if (u == v) throw Error(Errc::loop, "line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
      const auto a = static_cast<Vertex>(u - 1);
      const auto b = static_cast<Vertex>(v - 1);
      if (arc_mode) {
        arcs.push_back(Arc{a, b});
      } else {
        edges.push_back(make_edge(a, b));
      }
      ++seen;
    } else {
      detail::parse_fail(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (!have_header) detail::parse_fail(line_no, "missing problem line");
  if (seen != m) {
    detail::parse_fail(line_no, "problem line declares " + std::to_string(m) + " lines, found " +
                                    std::to_string(seen));
  }
  if (arc_mode) return OrientedGraph(n, arcs);
  return UndirectedGraph(n, edges);
}

inline AnyGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline std::string emit_graph(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

inline std::string emit_graph(const OrientedGraph& d) {
  std::ostringstream out;
  out << "p arc " << d.n() << ' ' << d.m() << '\n';
  for (const Arc& a : d.arcs()) out << "a " << a.tail + 1 << ' ' << a.head + 1 << '\n';
  return out.str();
}

inline std::string emit_graph(const AnyGraph& g) {
  return std::visit([](const auto& x) { return emit_graph(x); }, g);
}

/// Undirected view; arc files are read as their underlying graph.
inline UndirectedGraph as_undirected(const AnyGraph& g) {
  if (const auto* d = std::get_if<OrientedGraph>(&g)) return d->underlying();
  return std::get<UndirectedGraph>(g);
}

inline OrientedGraph as_oriented(const AnyGraph& g) {
  if (const auto* d = std::get_if<OrientedGraph>(&g)) return *d;
  throw Error(Errc::invalid_input, "expected an arc-mode graph ('p arc n m')");
}

// Coloring JSON: {"kind": "edge", "k": .., "assign": [[u, v, color], ...]}
// or {"kind": "vertex", "k": .., "assign": [[v, color], ...]}, 1-indexed.

inline nlohmann::json coloring_to_json(const EdgeColoring& c) {
  nlohmann::json assign = nlohmann::json::array();
  for (const auto& [e, color] : c) assign.push_back({e.u + 1, e.v + 1, color});
  return {{"kind", "edge"}, {"k", c.num_colors()}, {"assign", std::move(assign)}};
}

inline nlohmann::json coloring_to_json(const VertexColoring& c) {
  nlohmann::json assign = nlohmann::json::array();
  for (std::size_t v = 0; v < c.size(); ++v) assign.push_back({v + 1, c.colors[v]});
  return {{"kind", "vertex"}, {"k", c.num_colors()}, {"assign", std::move(assign)}};
}

using AnyColoring = std::variant<EdgeColoring, VertexColoring>;

inline AnyColoring coloring_from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const auto& assign = j.at("assign");
    if (kind == "edge") {
      EdgeColoring c;
      for (const auto& row : assign) {
        const int u = row.at(0).get<int>();
        const int v = row.at(1).get<int>();
        if (u < 1 || v < 1 || u == v) throw Error(Errc::parse_error, "bad edge in coloring");
        c.assign(make_edge(u - 1, v - 1), row.at(2).get<Color>());
      }
      return c;
    }
    if (kind == "vertex") {
      VertexColoring c;
      for (const auto& row : assign) {
        const int v = row.at(0).get<int>();
        if (v < 1) throw Error(Errc::parse_error, "bad vertex in coloring");
        if (static_cast<std::size_t>(v) > c.colors.size()) c.colors.resize(v, 0);
        c.colors[v - 1] = row.at(1).get<Color>();
      }
      for (Color col : c.colors) {
        if (col < 1) throw Error(Errc::parse_error, "vertex coloring leaves a vertex uncolored");
      }
      return c;
    }
    throw Error(Errc::parse_error, "unknown coloring kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("malformed coloring JSON: ") + e.what());
  }
}

inline AnyColoring parse_coloring(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("malformed coloring JSON: ") + e.what());
  }
  return coloring_from_json(j);
}

}  // namespace injcol
