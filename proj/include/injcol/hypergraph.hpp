#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "injcol/graph.hpp"

namespace injcol {

/// Hypergraph on vertices 0..n-1. Edges form a multiset; equal edges are kept.
struct Hypergraph {
  std::size_t n = 0;
  std::vector<std::vector<Vertex>> edges;  // each sorted, nonempty

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& e : edges) r = std::max(r, e.size());
    return r;
  }
};

/// Hypergraph on V(D) \ X together with the map back to vertices of D.
struct NeighborhoodHypergraph {
  Hypergraph hypergraph;
  std::vector<Vertex> to_host;    // local index -> vertex of D
  std::vector<int> from_host;     // vertex of D -> local index, -1 for X
};

/// Edges are the out-neighborhoods N+(x), x in X, skipping empty ones.
inline NeighborhoodHypergraph neighborhood_hypergraph(const OrientedGraph& d,
                                                      std::span<const Vertex> x_set) {
  NeighborhoodHypergraph out;
  std::vector<char> in_x(d.n(), 0);
  for (Vertex x : x_set) {
    detail::check_vertex(d.n(), x);
    in_x[x] = 1;
  }
  out.from_host.assign(d.n(), -1);
  for (std::size_t v = 0; v < d.n(); ++v) {
    if (in_x[v]) continue;
    out.from_host[v] = static_cast<int>(out.to_host.size());
    out.to_host.push_back(static_cast<Vertex>(v));
  }
  out.hypergraph.n = out.to_host.size();
  std::vector<Vertex> sorted_x(x_set.begin(), x_set.end());
  detail::sort_unique(sorted_x);
  for (Vertex x : sorted_x) {
    if (d.out_degree(x) == 0) continue;
    std::vector<Vertex> edge;
    for (Vertex w : d.out_neighbors(x)) {
      if (out.from_host[w] < 0) {
        throw Error(Errc::invalid_independent_set, "arc inside the independent set");
      }
      edge.push_back(out.from_host[w]);
    }
    std::sort(edge.begin(), edge.end());
    out.hypergraph.edges.push_back(std::move(edge));
  }
  return out;
}

/// Bipartite incidence graph: vertices 0..n-1 are hypergraph vertices and
/// n + i is the node of edge i.
inline UndirectedGraph levi_graph(const Hypergraph& h) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const Vertex node = static_cast<Vertex>(h.n + i);
    for (Vertex v : h.edges[i]) edges.push_back(make_edge(v, node));
  }
  return UndirectedGraph(h.n + h.edges.size(), edges);
}

/// Each hyperedge replaced by a clique.
inline UndirectedGraph clique_graph(const Hypergraph& h) {
  std::vector<Edge> edges;
  for (const auto& e : h.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) edges.push_back(make_edge(e[i], e[j]));
    }
  }
  return UndirectedGraph(h.n, edges);
}

struct PeelColoring {
  VertexColoring coloring;
  std::vector<Vertex> removal_order;  // first removed first
  std::size_t max_peel_degree = 0;    // largest clique-graph degree at removal
};

/// Repeatedly deletes a vertex of minimum degree in the clique graph of the
/// current hypergraph (truncating every edge that contains it), then colors
/// greedily in reverse deletion order.
///
/// Deleting u from every edge turns K(H) into K(H) - u, so the clique graph is
/// built once and maintained by degree updates rather than rebuilt per step.
inline PeelColoring peel_color_clique_graph(const Hypergraph& h) {
  const UndirectedGraph k = clique_graph(h);
  const VertexOrdering ord = degeneracy_order(k);
  PeelColoring out;
  out.coloring = greedy_color(k, ord);
  out.removal_order.assign(ord.order.rbegin(), ord.order.rend());
  out.max_peel_degree = ord.d;
  return out;
}

/// Certificates that can be checked when a caller asserts the Levi graph of h
/// has Euler genus at most g >= 2. Violations mean the assertion is false;
/// they are reported, never thrown.
struct GenusDiagnostics {
  double g = 0;
  std::size_t pair_edges = 0;         // distinct edges of size 2
  std::size_t large_edges = 0;        // edges of size >= 3
  double pair_edge_limit = 0;         // 3|V| + 3g - 6
  double large_edge_limit = 0;        // 2|V| + 2g (strict)
  double peel_degree_limit = 0;       // 20 r^2 sqrt(g) - 1
  double color_limit = 0;             // 20 r^2 sqrt(g)
  bool pair_edges_ok = true;
  bool large_edges_ok = true;
  bool peel_degree_ok = true;
  bool colors_ok = true;
  std::vector<std::string> warnings;
};

inline GenusDiagnostics check_genus_bounds(const Hypergraph& h, const PeelColoring& peel,
                                           std::size_t g) {
  GenusDiagnostics diag;
  diag.g = static_cast<double>(g);
  std::set<std::vector<Vertex>> pairs;
  for (const auto& e : h.edges) {
    if (e.size() == 2) pairs.insert(e);
    if (e.size() >= 3) ++diag.large_edges;
  }
  diag.pair_edges = pairs.size();
  const double nv = static_cast<double>(h.n);
  const double r = static_cast<double>(h.rank());
  diag.pair_edge_limit = 3 * nv + 3 * diag.g - 6;
  diag.large_edge_limit = 2 * nv + 2 * diag.g;
  diag.color_limit = 20 * r * r * std::sqrt(diag.g);
  diag.peel_degree_limit = diag.color_limit - 1;
  diag.pair_edges_ok = static_cast<double>(diag.pair_edges) <= diag.pair_edge_limit;
  diag.large_edges_ok = static_cast<double>(diag.large_edges) < diag.large_edge_limit;
  diag.peel_degree_ok = static_cast<double>(peel.max_peel_degree) <= diag.peel_degree_limit;
  diag.colors_ok = static_cast<double>(peel.coloring.num_colors()) <= diag.color_limit;
  if (!diag.pair_edges_ok) diag.warnings.push_back("size-2 edge count exceeds 3|V|+3g-6");
  if (!diag.large_edges_ok) diag.warnings.push_back("size>=3 edge count reaches 2|V|+2g");
  if (!diag.peel_degree_ok) diag.warnings.push_back("peel degree exceeds 20 r^2 sqrt(g) - 1");
  if (!diag.colors_ok) diag.warnings.push_back("clique-graph colors exceed 20 r^2 sqrt(g)");
  return diag;
}

}  // namespace injcol
