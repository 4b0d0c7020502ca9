#pragma once

// Exact exponential-time solvers used as ground truth on small instances.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "injcol/error.hpp"
#include "injcol/graph.hpp"

namespace injcol {

struct OracleBudget {
  std::size_t max_vertices = 12;
  std::size_t max_edges = 24;
  double timeout_seconds = 60.0;
};

namespace detail {

class Deadline {
 public:
  explicit Deadline(double seconds)
      : limit_(std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(seconds))) {}

  // Clock reads are amortized over 4096 calls.
  void tick() {
    if ((++calls_ & 0xfff) == 0 && std::chrono::steady_clock::now() > limit_) {
      throw Error(Errc::budget_exceeded, "oracle timeout");
    }
  }

 private:
  std::chrono::steady_clock::time_point limit_;
  std::uint64_t calls_ = 0;
};

inline void check_budget(const OracleBudget& b) {
  if (b.max_vertices == 0 || b.max_edges == 0 || !(b.timeout_seconds > 0)) {
    throw Error(Errc::invalid_parameters, "oracle budget limits must be positive");
  }
}

/// DSATUR branch and bound. Returns an optimal coloring with colors 1..chi.
class ExactColorer {
 public:
  ExactColorer(const UndirectedGraph& g, Deadline& deadline)
      : g_(g), n_(g.n()), deadline_(deadline) {}

  std::vector<Color> solve() {
    if (n_ == 0) return {};
    best_ = dsatur_greedy();
    upper_ = *std::max_element(best_.begin(), best_.end());
    lower_ = static_cast<Color>(greedy_clique_size());
    if (lower_ >= upper_) return best_;

    colors_.assign(n_, 0);
    stride_ = static_cast<std::size_t>(upper_) + 1;
    counts_.assign(n_ * stride_, 0);
    saturation_.assign(n_, 0);
    search(0, 0);
    return best_;
  }

 private:
  std::vector<Color> dsatur_greedy() const {
    std::vector<Color> c(n_, 0);
    std::vector<std::vector<char>> seen(n_);
    std::vector<std::size_t> sat(n_, 0);
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t pick = n_;
      for (std::size_t v = 0; v < n_; ++v) {
        if (c[v] != 0) continue;
        if (pick == n_ || sat[v] > sat[pick] ||
            (sat[v] == sat[pick] && g_.degree(static_cast<Vertex>(v)) >
                                        g_.degree(static_cast<Vertex>(pick)))) {
          pick = v;
        }
      }
      std::vector<char> taken(g_.degree(static_cast<Vertex>(pick)) + 2, 0);
      for (Vertex w : g_.neighbors(static_cast<Vertex>(pick))) {
        if (c[w] > 0 && static_cast<std::size_t>(c[w]) < taken.size()) taken[c[w]] = 1;
      }
      Color col = 1;
      while (taken[col]) ++col;
      c[pick] = col;
      for (Vertex w : g_.neighbors(static_cast<Vertex>(pick))) {
        auto& s = seen[w];
        if (s.size() <= static_cast<std::size_t>(col)) s.resize(col + 1, 0);
        if (!s[col]) {
          s[col] = 1;
          ++sat[w];
        }
      }
    }
    return c;
  }

  std::size_t greedy_clique_size() const {
    std::size_t best = 1;
    for (std::size_t start = 0; start < n_; ++start) {
      std::vector<Vertex> cand(g_.neighbors(static_cast<Vertex>(start)).begin(),
                               g_.neighbors(static_cast<Vertex>(start)).end());
      std::sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
        return g_.degree(a) != g_.degree(b) ? g_.degree(a) > g_.degree(b) : a < b;
      });
      std::vector<Vertex> clique{static_cast<Vertex>(start)};
      for (Vertex v : cand) {
        bool ok = true;
        for (Vertex u : clique) {
          if (!g_.adjacent(u, v)) {
            ok = false;
            break;
          }
        }
        if (ok) clique.push_back(v);
      }
      best = std::max(best, clique.size());
    }
    return best;
  }

  int& count(std::size_t v, Color c) { return counts_[v * stride_ + c]; }

  void set_color(std::size_t v, Color c, int delta) {
    for (Vertex w : g_.neighbors(static_cast<Vertex>(v))) {
      int& k = count(w, c);
      if (delta > 0 && k++ == 0) ++saturation_[w];
      if (delta < 0 && --k == 0) --saturation_[w];
    }
  }

  void search(std::size_t colored, Color used) {
    deadline_.tick();
    if (used >= upper_) return;
    if (colored == n_) {
      best_ = colors_;
      upper_ = used;
      return;
    }
    std::size_t pick = n_;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colors_[v] != 0) continue;
      if (pick == n_ || saturation_[v] > saturation_[pick] ||
          (saturation_[v] == saturation_[pick] &&
           g_.degree(static_cast<Vertex>(v)) > g_.degree(static_cast<Vertex>(pick)))) {
        pick = v;
      }
    }
    const Color limit = std::min<Color>(used + 1, upper_ - 1);
    for (Color c = 1; c <= limit; ++c) {
      if (count(pick, c) != 0) continue;
      colors_[pick] = c;
      set_color(pick, c, +1);
      search(colored + 1, std::max(used, c));
      set_color(pick, c, -1);
      colors_[pick] = 0;
      if (upper_ <= lower_) return;
    }
  }

  const UndirectedGraph& g_;
  std::size_t n_;
  Deadline& deadline_;
  std::vector<Color> best_;
  std::vector<Color> colors_;
  std::vector<int> counts_;
  std::vector<std::size_t> saturation_;
  std::size_t stride_ = 0;
  Color upper_ = 0;
  Color lower_ = 0;
};

inline std::vector<Color> exact_color(const UndirectedGraph& g, Deadline& deadline) {
  return ExactColorer(g, deadline).solve();
}

/// Backtracking search for an oriented coloring with exactly `k` colors
/// available. Vertices are colored in a fixed order; a new color is only ever
/// the next unused one.
class OrientedSearch {
 public:
  OrientedSearch(const OrientedGraph& d, Deadline& deadline) : d_(d), deadline_(deadline) {
    // Order: repeatedly take the vertex with most already-ordered neighbors.
    const std::size_t n = d.n();
    std::vector<std::size_t> placed_neighbors(n, 0);
    std::vector<char> placed(n, 0);
    const UndirectedGraph g = d.underlying();
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t pick = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (pick == n || placed_neighbors[v] > placed_neighbors[pick] ||
            (placed_neighbors[v] == placed_neighbors[pick] &&
             g.degree(static_cast<Vertex>(v)) > g.degree(static_cast<Vertex>(pick)))) {
          pick = v;
        }
      }
      placed[pick] = 1;
      order_.push_back(static_cast<Vertex>(pick));
      for (Vertex w : g.neighbors(static_cast<Vertex>(pick))) ++placed_neighbors[w];
    }
  }

  bool try_colors(std::size_t k, std::vector<Color>& out) {
    k_ = k;
    colors_.assign(d_.n(), 0);
    pairs_.assign((k + 1) * (k + 1), 0);
    if (!extend(0, 0)) return false;
    out = colors_;
    return true;
  }

 private:
  int& pair(Color a, Color b) { return pairs_[a * (k_ + 1) + b]; }

  bool place(Vertex v, Color c, std::vector<std::pair<Color, Color>>& added) {
    auto add = [&](Color a, Color b) {
      if (a == b || pair(b, a) != 0) return false;
      ++pair(a, b);
      added.emplace_back(a, b);
      return true;
    };
    for (Vertex w : d_.out_neighbors(v)) {
      if (colors_[w] != 0 && !add(c, colors_[w])) return false;
    }
    for (Vertex w : d_.in_neighbors(v)) {
      if (colors_[w] != 0 && !add(colors_[w], c)) return false;
    }
    return true;
  }

  bool extend(std::size_t idx, Color used) {
    deadline_.tick();
    if (idx == order_.size()) return true;
    const Vertex v = order_[idx];
    const Color limit = std::min<Color>(used + 1, static_cast<Color>(k_));
    for (Color c = 1; c <= limit; ++c) {
      std::vector<std::pair<Color, Color>> added;
      const bool ok = place(v, c, added);
      if (ok) {
        colors_[v] = c;
        if (extend(idx + 1, std::max(used, c))) return true;
        colors_[v] = 0;
      }
      for (auto [a, b] : added) --pair(a, b);
    }
    return false;
  }

  const OrientedGraph& d_;
  Deadline& deadline_;
  std::vector<Vertex> order_;
  std::vector<Color> colors_;
  std::vector<int> pairs_;
  std::size_t k_ = 0;
};

inline VertexColoring exact_oriented_coloring_with(const OrientedGraph& d, Deadline& deadline) {
  VertexColoring c;
  if (d.n() == 0) return c;
  OrientedSearch search(d, deadline);
  const std::size_t lower = d.m() > 0 ? 2 : 1;
  for (std::size_t k = lower; k <= d.n(); ++k) {
    if (search.try_colors(k, c.colors)) return c;
  }
  // Unreachable: n distinct colors always work on a digon-free graph.
  throw Error(Errc::invalid_input, "no oriented coloring found");
}

}  // namespace detail

/// Conflict graph of g: one vertex per edge (indexed as in g.edges()),
/// adjacent when the two edges conflict.
inline UndirectedGraph conflict_graph(const UndirectedGraph& g) {
  const std::vector<Edge> edges = g.edges();
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges_conflict(g, edges[i], edges[j])) {
        pairs.push_back(Edge{static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  return UndirectedGraph(edges.size(), pairs);
}

/// Optimal injective edge-coloring: an optimal proper coloring of the
/// conflict graph.
inline EdgeColoring exact_injective_coloring(const UndirectedGraph& g,
                                             const OracleBudget& b = {}) {
  detail::check_budget(b);
  if (g.m() > b.max_edges) {
    throw Error(Errc::budget_exceeded, std::to_string(g.m()) + " edges exceed oracle limit " +
                                           std::to_string(b.max_edges));
  }
  detail::Deadline deadline(b.timeout_seconds);
  const std::vector<Edge> edges = g.edges();
  const std::vector<Color> colors = detail::exact_color(conflict_graph(g), deadline);
  EdgeColoring out;
  for (std::size_t i = 0; i < edges.size(); ++i) out.assign(edges[i], colors[i]);
  return out;
}

inline std::size_t exact_injective_index(const UndirectedGraph& g, const OracleBudget& b = {}) {
  return exact_injective_coloring(g, b).num_colors();
}

inline VertexColoring exact_chromatic_coloring(const UndirectedGraph& g,
                                               const OracleBudget& b = {}) {
  detail::check_budget(b);
  if (g.n() > b.max_vertices) {
    throw Error(Errc::budget_exceeded, std::to_string(g.n()) +
                                           " vertices exceed oracle limit " +
                                           std::to_string(b.max_vertices));
  }
  detail::Deadline deadline(b.timeout_seconds);
  return VertexColoring{detail::exact_color(g, deadline)};
}

inline std::size_t exact_chromatic_number(const UndirectedGraph& g, const OracleBudget& b = {}) {
  return exact_chromatic_coloring(g, b).num_colors();
}

/// Optimal 2-dipath coloring of the given orientation.
inline VertexColoring exact_2dipath_coloring(const OrientedGraph& d, const OracleBudget& b = {}) {
  return exact_chromatic_coloring(two_dipath_graph(d), b);
}

inline std::size_t exact_2dipath_number(const OrientedGraph& d, const OracleBudget& b = {}) {
  return exact_2dipath_coloring(d, b).num_colors();
}

/// Optimal oriented coloring of the given orientation.
inline VertexColoring exact_oriented_coloring(const OrientedGraph& d,
                                              const OracleBudget& b = {}) {
  detail::check_budget(b);
  if (d.n() > b.max_vertices) {
    throw Error(Errc::budget_exceeded, std::to_string(d.n()) +
                                           " vertices exceed oracle limit " +
                                           std::to_string(b.max_vertices));
  }
  detail::Deadline deadline(b.timeout_seconds);
  return detail::exact_oriented_coloring_with(d, deadline);
}

inline std::size_t exact_oriented_number(const OrientedGraph& d, const OracleBudget& b = {}) {
  return exact_oriented_coloring(d, b).num_colors();
}

inline constexpr std::size_t kMaxEdgesAllOrientations = 10;

/// Oriented chromatic number of an undirected graph: the maximum over all
/// 2^m orientations. Only offered for m <= 10.
inline std::size_t exact_oriented_number_all_orientations(const UndirectedGraph& g,
                                                          const OracleBudget& b = {}) {
  detail::check_budget(b);
  if (g.m() > kMaxEdgesAllOrientations) {
    throw Error(Errc::budget_exceeded,
                "all-orientation search is limited to " +
                    std::to_string(kMaxEdgesAllOrientations) + " edges");
  }
  if (g.n() > b.max_vertices) {
    throw Error(Errc::budget_exceeded, "vertex count exceeds oracle limit");
  }
  detail::Deadline deadline(b.timeout_seconds);
  const std::vector<Edge> edges = g.edges();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      arcs.push_back((mask >> i) & 1u ? Arc{edges[i].v, edges[i].u} : Arc{edges[i].u, edges[i].v});
    }
    const OrientedGraph d(g.n(), arcs);
    best = std::max(best, detail::exact_oriented_coloring_with(d, deadline).num_colors());
  }
  return best;
}

}  // namespace injcol
