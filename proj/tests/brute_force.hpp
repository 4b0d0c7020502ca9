#pragma once

// Reference solvers written straight from the definitions. They share no code
// with the library beyond the plain Edge/Arc structs, and are only meant for
// tiny instances.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "injcol/graph.hpp"

namespace brute {

using injcol::Arc;
using injcol::Edge;

inline bool shares_endpoint(const Edge& e, int v) { return e.u == v || e.v == v; }

// Some third edge h joins an endpoint of e to an endpoint of f.
inline bool joined_by_third_edge(const std::vector<Edge>& edges, const Edge& e, const Edge& f) {
  for (const Edge& h : edges) {
    if (h == e || h == f) continue;
    const bool fwd = shares_endpoint(e, h.u) && shares_endpoint(f, h.v);
    const bool bwd = shares_endpoint(e, h.v) && shares_endpoint(f, h.u);
    if (fwd || bwd) return true;
  }
  return false;
}

// Smallest k admitting an assignment of 1..k to items such that ok(partial)
// holds after each step; item i may only open color max_used + 1.
inline std::size_t min_colors(std::size_t items,
                              const std::function<bool(const std::vector<int>&, std::size_t)>& ok) {
  if (items == 0) return 0;
  for (std::size_t k = 1;; ++k) {
    std::vector<int> col(items, 0);
    std::function<bool(std::size_t, int)> go = [&](std::size_t i, int used) -> bool {
      if (i == items) return true;
      for (int c = 1; c <= std::min<int>(static_cast<int>(k), used + 1); ++c) {
        col[i] = c;
        if (ok(col, i) && go(i + 1, std::max(used, c))) return true;
      }
      col[i] = 0;
      return false;
    };
    if (go(0, 0)) return k;
  }
}

inline std::size_t injective_index(const std::vector<Edge>& edges) {
  return min_colors(edges.size(), [&](const std::vector<int>& col, std::size_t i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (col[j] == col[i] && joined_by_third_edge(edges, edges[i], edges[j])) return false;
    }
    return true;
  });
}

inline bool injective_by_definition(const std::vector<Edge>& edges, const std::vector<int>& col) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (col[i] == col[j] && joined_by_third_edge(edges, edges[i], edges[j])) return false;
    }
  }
  return true;
}

inline std::size_t chromatic_number(std::size_t n, const std::vector<Edge>& edges) {
  if (n == 0) return 0;
  return min_colors(n, [&](const std::vector<int>& col, std::size_t i) {
    for (const Edge& e : edges) {
      const auto u = static_cast<std::size_t>(e.u);
      const auto v = static_cast<std::size_t>(e.v);
      if ((u == i && v < i && col[v] == col[i]) || (v == i && u < i && col[u] == col[i])) return false;
    }
    return true;
  });
}

inline bool oriented_by_definition(const std::vector<Arc>& arcs, const std::vector<int>& col) {
  for (const Arc& a : arcs) {
    if (col[a.tail] == col[a.head]) return false;
    for (const Arc& b : arcs) {
      if (col[a.tail] == col[b.head] && col[a.head] == col[b.tail]) return false;
    }
  }
  return true;
}

inline bool dipath_by_definition(const std::vector<Arc>& arcs, const std::vector<int>& col) {
  for (const Arc& a : arcs) {
    if (col[a.tail] == col[a.head]) return false;
    for (const Arc& b : arcs) {
      if (a.head == b.tail && a.tail != b.head && col[a.tail] == col[b.head]) return false;
    }
  }
  return true;
}

// Full enumeration of k^n colorings for increasing k.
inline std::size_t min_vertex_colors(std::size_t n,
                                     const std::function<bool(const std::vector<int>&)>& valid) {
  if (n == 0) return 0;
  for (std::size_t k = 1;; ++k) {
    std::vector<int> col(n, 1);
    while (true) {
      if (valid(col)) return k;
      std::size_t i = 0;
      while (i < n && col[i] == static_cast<int>(k)) col[i++] = 1;
      if (i == n) break;
      ++col[i];
    }
  }
}

inline std::size_t oriented_number(std::size_t n, const std::vector<Arc>& arcs) {
  return min_vertex_colors(n, [&](const std::vector<int>& c) { return oriented_by_definition(arcs, c); });
}

inline std::size_t dipath_number(std::size_t n, const std::vector<Arc>& arcs) {
  return min_vertex_colors(n, [&](const std::vector<int>& c) { return dipath_by_definition(arcs, c); });
}

// Every ordered r-tuple of distinct elements of 1..k is separated.
inline bool separates(std::size_t k, std::size_t r, const std::vector<std::vector<int>>& sets) {
  std::vector<int> tuple;
  std::function<bool()> go = [&]() -> bool {
    if (tuple.size() == r) {
      for (const auto& s : sets) {
        auto has = [&](int e) { return std::find(s.begin(), s.end(), e) != s.end(); };
        if (!has(tuple[0])) continue;
        if (std::none_of(tuple.begin() + 1, tuple.end(), has)) return true;
      }
      return false;
    }
    for (int e = 1; e <= static_cast<int>(k); ++e) {
      if (std::find(tuple.begin(), tuple.end(), e) != tuple.end()) continue;
      tuple.push_back(e);
      const bool ok = go();
      tuple.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return go();
}

// Graphs on n <= 7 vertices as bitmasks over the pairs (i < j).
struct SmallGraph {
  int n = 0;
  std::uint32_t mask = 0;

  static int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
  }
  bool has(int i, int j) const { return (mask >> pair_index(i, j)) & 1u; }
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (has(i, j)) out.push_back(Edge{i, j});
      }
    }
    return out;
  }
};

// Smallest relabelled mask over permutations that list vertices by
// nonincreasing degree; isomorphic graphs get equal forms.
inline std::uint32_t canonical_mask(const SmallGraph& g) {
  std::vector<int> deg(g.n, 0);
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has(i, j)) {
        ++deg[i];
        ++deg[j];
      }
    }
  }
  std::vector<int> perm(g.n);  // perm[new] = old
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return deg[a] > deg[b] || (deg[a] == deg[b] && a < b); });
  std::uint32_t best = ~0u;
  // Permute within blocks of equal degree only.
  std::vector<std::pair<int, int>> blocks;
  for (int s = 0; s < g.n;) {
    int e = s;
    while (e < g.n && deg[perm[e]] == deg[perm[s]]) ++e;
    blocks.emplace_back(s, e);
    s = e;
  }
  std::function<void(std::size_t)> go = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::uint32_t m = 0;
      for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (g.has(perm[i], perm[j])) m |= 1u << SmallGraph::pair_index(i, j);
        }
      }
      best = std::min(best, m);
      return;
    }
    auto [s, e] = blocks[b];
    std::sort(perm.begin() + s, perm.begin() + e);
    do {
      go(b + 1);
    } while (std::next_permutation(perm.begin() + s, perm.begin() + e));
  };
  go(0);
  return best;
}

// All nonisomorphic connected graphs on exactly n vertices (n >= 1). Each one
// arises from a connected graph on n-1 vertices plus a vertex joined to a
// nonempty subset, since removing a non-cut vertex keeps a graph connected.
inline std::vector<SmallGraph> connected_graphs(int n) {
  std::vector<SmallGraph> level{SmallGraph{1, 0}};
  for (int size = 2; size <= n; ++size) {
    std::set<std::uint32_t> seen;
    std::vector<SmallGraph> next;
    for (const SmallGraph& g : level) {
      for (std::uint32_t subset = 1; subset < (1u << (size - 1)); ++subset) {
        SmallGraph h{size, g.mask};
        for (int i = 0; i < size - 1; ++i) {
          if ((subset >> i) & 1u) h.mask |= 1u << SmallGraph::pair_index(i, size - 1);
        }
        const std::uint32_t key = canonical_mask(h);
        if (seen.insert(key).second) next.push_back(SmallGraph{size, key});
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace brute
