#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "injcol/error.hpp"
#include "injcol/graph.hpp"
#include "injcol/random.hpp"

namespace injcol {

inline UndirectedGraph complete_graph(std::size_t n) {
  if (n < 1) throw Error(Errc::invalid_size, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  return UndirectedGraph(n, edges);
}

inline UndirectedGraph path(std::size_t n) {
  if (n < 1) throw Error(Errc::invalid_size, "path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back(make_edge(static_cast<Vertex>(v - 1), static_cast<Vertex>(v)));
  return UndirectedGraph(n, edges);
}

inline UndirectedGraph cycle(std::size_t n) {
  if (n < 3) throw Error(Errc::invalid_size, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    edges.push_back(make_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n)));
  }
  return UndirectedGraph(n, edges);
}

/// rows x cols grid graph; vertex (i, j) is i * cols + j.
inline UndirectedGraph grid(std::size_t rows, std::size_t cols) {
  if (rows < 1 || cols < 1) throw Error(Errc::invalid_size, "grid needs positive sides");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto v = static_cast<Vertex>(i * cols + j);
      if (j + 1 < cols) edges.push_back(make_edge(v, v + 1));
      if (i + 1 < rows) edges.push_back(make_edge(v, v + static_cast<Vertex>(cols)));
    }
  }
  return UndirectedGraph(rows * cols, edges);
}

/// ceil((n-3)(n-4)/6), the Euler genus of K_n for n >= 8.
inline std::size_t genus_of_complete(std::size_t n) {
  if (n < 8) throw Error(Errc::invalid_size, "genus formula is stated for n >= 8");
  return ((n - 3) * (n - 4) + 5) / 6;
}

/// Disjoint union of g and `copies` copies of K5, appended after g's vertices.
inline UndirectedGraph pad_with_k5(const UndirectedGraph& g, std::size_t copies) {
  std::vector<Edge> edges = g.edges();
  for (std::size_t c = 0; c < copies; ++c) {
    const auto base = static_cast<Vertex>(g.n() + 5 * c);
    for (Vertex a = 0; a < 5; ++a) {
      for (Vertex b = a + 1; b < 5; ++b) edges.push_back(make_edge(base + a, base + b));
    }
  }
  return UndirectedGraph(g.n() + 5 * copies, edges);
}

/// Each edge oriented by a fair coin.
inline OrientedGraph random_orientation(const UndirectedGraph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Arc> arcs;
  arcs.reserve(g.m());
  for (const Edge& e : g.edges()) {
    arcs.push_back(coin(rng, 0.5) ? Arc{e.u, e.v} : Arc{e.v, e.u});
  }
  return OrientedGraph(g.n(), arcs);
}

/// Vertex v >= 1 joins min(v, d) distinct earlier vertices chosen uniformly,
/// so the ordering 0..n-1 witnesses degeneracy <= d.
inline UndirectedGraph random_degenerate_graph(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n < 1) throw Error(Errc::invalid_size, "random degenerate graph needs n >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<Vertex> pool;
  for (std::size_t v = 1; v < n; ++v) {
    pool.resize(v);
    std::iota(pool.begin(), pool.end(), 0);
    const std::size_t take = std::min(v, d);
    for (std::size_t i = 0; i < take; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, v - 1);
      std::swap(pool[i], pool[pick(rng)]);
      edges.push_back(make_edge(pool[i], static_cast<Vertex>(v)));
    }
  }
  return UndirectedGraph(n, edges);
}

/// Random subgraph of the triangulated rows x cols grid (each cell split by
/// one diagonal), keeping every edge with probability keep. Always planar.
inline UndirectedGraph random_planar_graph(std::size_t rows, std::size_t cols, double keep,
                                           std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw Error(Errc::invalid_size, "planar graph needs positive sides");
  Rng rng(seed);
  std::vector<Edge> edges;
  auto offer = [&](Vertex a, Vertex b) {
    if (coin(rng, keep)) edges.push_back(make_edge(a, b));
  };
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto v = static_cast<Vertex>(i * cols + j);
      const auto down = static_cast<Vertex>(cols);
      if (j + 1 < cols) offer(v, v + 1);
      if (i + 1 < rows) offer(v, v + down);
      if (i + 1 < rows && j + 1 < cols) offer(v, v + down + 1);
    }
  }
  return UndirectedGraph(rows * cols, edges);
}

/// Maximal independent set grown greedily in a seeded random vertex order.
inline std::vector<Vertex> greedy_independent_set(const OrientedGraph& d, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vertex> order(d.n());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> blocked(d.n(), 0);
  std::vector<Vertex> out;
  for (Vertex v : order) {
    if (blocked[v]) continue;
    out.push_back(v);
    blocked[v] = 1;
    for (Vertex w : d.out_neighbors(v)) blocked[w] = 1;
    for (Vertex w : d.in_neighbors(v)) blocked[w] = 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct LowerBoundReport {
  std::size_t n = 0;
  double p = 0;            // min(1, sqrt(150 ln n / n))
  std::size_t edges = 0;
  double genus_budget = 0;  // p n^2
};

/// min(1, sqrt(150 ln n / n))
inline double lower_bound_edge_probability(std::size_t n) {
  const double nn = static_cast<double>(n);
  return std::min(1.0, std::sqrt(150 * std::log(nn) / nn));
}

/// G(n, p) with p = min(1, sqrt(150 ln n / n)), each edge oriented by a fair
/// coin.
inline OrientedGraph random_genus_lowerbound(std::size_t n, std::uint64_t seed,
                                             LowerBoundReport* report = nullptr) {
  if (n < 2 || n % 2 != 0) throw Error(Errc::invalid_size, "n must be even and at least 2");
  const double p = lower_bound_edge_probability(n);
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!coin(rng, p)) continue;
      const auto a = static_cast<Vertex>(u);
      const auto b = static_cast<Vertex>(v);
      arcs.push_back(coin(rng, 0.5) ? Arc{a, b} : Arc{b, a});
    }
  }
  if (report) {
    report->n = n;
    report->p = p;
    report->edges = arcs.size();
    report->genus_budget = p * static_cast<double>(n) * static_cast<double>(n);
  }
  return OrientedGraph(n, arcs);
}

}  // namespace injcol
