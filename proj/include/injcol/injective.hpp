#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "injcol/error.hpp"
#include "injcol/graph.hpp"
#include "injcol/oracles.hpp"
#include "injcol/random.hpp"
#include "injcol/separating_family.hpp"

namespace injcol {

namespace detail {

inline std::vector<char> independent_set_mask(const OrientedGraph& d,
                                              std::span<const Vertex> x_set) {
  std::vector<char> in_x(d.n(), 0);
  for (Vertex x : x_set) {
    check_vertex(d.n(), x);
    in_x[x] = 1;
  }
  for (Vertex x : x_set) {
    for (Vertex w : d.out_neighbors(x)) {
      if (in_x[w]) throw Error(Errc::invalid_independent_set, "arc inside the independent set");
    }
  }
  return in_x;
}

inline std::size_t max_out_degree_over(const OrientedGraph& d, std::span<const Vertex> x_set) {
  std::size_t best = 0;
  for (Vertex x : x_set) best = std::max(best, d.out_degree(x));
  return best;
}

inline std::size_t max_total_degree(const OrientedGraph& d) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < d.n(); ++v) {
    best = std::max(best, d.out_degree(static_cast<Vertex>(v)) + d.in_degree(static_cast<Vertex>(v)));
  }
  return best;
}

// Proper coloring of the graph on `members` (local ids 0..size-1) with the
// given local edges, by first-fit along a degeneracy ordering.
inline VertexColoring color_auxiliary(std::size_t size, const std::vector<Edge>& local_edges) {
  return degeneracy_greedy_color(UndirectedGraph(size, local_edges));
}

}  // namespace detail

struct RoundStats {
  std::size_t nominal_rounds = 0;  // ceil(4e d ln Delta), at least 1
  std::size_t rounds = 0;          // rounds actually run
  std::size_t d = 0;
  std::size_t max_degree = 0;
};

/// Colors every arc leaving the independent set X so that each color class
/// is a star forest induced in D.
///
/// Round c samples S_c from V \ X with probability 1/d per vertex and colors
/// x->a with c whenever a is the only out-neighbor of x in S_c; later rounds
/// overwrite. The nominal ceil(4e d ln Delta) rounds always run; if arcs are
/// still uncolored, rounds continue (resampling) up to 64 times the nominal
/// count. Each round color c is then split by a proper coloring of the
/// auxiliary digraph H_c on S_c (a->a' when a->a' in D, or a->x and x->a' has
/// color c), and the pair (c, shade) becomes the final color.
inline PartialEdgeColoring color_arcs_randomized(const OrientedGraph& d,
                                                 std::span<const Vertex> x_set,
                                                 std::uint64_t seed,
                                                 RoundStats* stats = nullptr) {
  const std::vector<char> in_x = detail::independent_set_mask(d, x_set);
  std::vector<Vertex> xs(x_set.begin(), x_set.end());
  detail::sort_unique(xs);

  RoundStats local;
  local.d = detail::max_out_degree_over(d, xs);
  local.max_degree = detail::max_total_degree(d);
  if (local.d == 0) {
    if (stats) *stats = local;
    return {};
  }
  const double dd = static_cast<double>(local.d);
  const double nominal =
      std::ceil(4 * std::numbers::e * dd * std::log(static_cast<double>(local.max_degree)));
  local.nominal_rounds = std::max<std::size_t>(1, static_cast<std::size_t>(nominal));
  const std::size_t round_limit = 64 * local.nominal_rounds;

  std::size_t total_arcs = 0;
  for (Vertex x : xs) total_arcs += d.out_degree(x);

  Rng rng(derive_seed(seed, 0));
  const double p = 1.0 / dd;
  std::map<Edge, int> round_of;             // current round color of each arc
  std::vector<std::vector<char>> samples;   // samples[c-1][v]: v in S_c
  std::size_t c = 0;
  while (c < local.nominal_rounds || round_of.size() < total_arcs) {
    if (c == round_limit) {
      if (stats) *stats = local;
      throw Error(Errc::round_limit_exceeded,
                  std::to_string(total_arcs - round_of.size()) + " arcs uncolored after " +
                      std::to_string(round_limit) + " rounds");
    }
    ++c;
    std::vector<char> in_s(d.n(), 0);
    for (std::size_t v = 0; v < d.n(); ++v) {
      if (!in_x[v]) in_s[v] = coin(rng, p) ? 1 : 0;
    }
    for (Vertex x : xs) {
      Vertex unique = -1;
      int hits = 0;
      for (Vertex a : d.out_neighbors(x)) {
        if (in_s[a]) {
          unique = a;
          if (++hits > 1) break;
        }
      }
      if (hits == 1) round_of[make_edge(x, unique)] = static_cast<int>(c);
    }
    samples.push_back(std::move(in_s));
  }
  local.rounds = c;

  // Final arcs of each round color, as x -> a.
  std::map<int, std::vector<Arc>> by_round;
  for (const auto& [e, round] : round_of) {
    const Arc arc = in_x[e.u] ? Arc{e.u, e.v} : Arc{e.v, e.u};
    by_round[round].push_back(arc);
  }

  std::map<Edge, std::pair<int, int>> raw;
  for (const auto& [round, arcs] : by_round) {
    const auto& in_s = samples[round - 1];
    std::vector<int> local_id(d.n(), -1);
    std::size_t size = 0;
    for (std::size_t v = 0; v < d.n(); ++v) {
      if (in_s[v]) local_id[v] = static_cast<int>(size++);
    }
    std::vector<Vertex> colored_head(d.n(), -1);  // x -> its head of this color
    for (const Arc& a : arcs) colored_head[a.tail] = a.head;
    std::vector<Edge> aux;
    for (std::size_t v = 0; v < d.n(); ++v) {
      if (!in_s[v]) continue;
      const Vertex a = static_cast<Vertex>(v);
      for (Vertex w : d.out_neighbors(a)) {
        if (in_s[w]) {
          aux.push_back(make_edge(local_id[a], local_id[w]));
        } else if (in_x[w] && colored_head[w] >= 0 && colored_head[w] != a) {
          aux.push_back(make_edge(local_id[a], local_id[colored_head[w]]));
        }
      }
    }
    const VertexColoring shade = detail::color_auxiliary(size, aux);
    for (const Arc& a : arcs) {
      raw[make_edge(a.tail, a.head)] = {round, shade[local_id[a.head]]};
    }
  }
  if (stats) *stats = local;
  return canonicalize(raw);
}

/// True iff every edge of g is colored, c colors nothing else, and no two
/// edges of one color are joined by a third edge. Checked locally: for each
/// edge ab, the colors on the other edges at a and at b must be disjoint.
inline bool verify_injective(const UndirectedGraph& g, const EdgeColoring& c) {
  std::size_t covered = 0;
  for (const Edge& e : g.edges()) {
    if (!c.contains(e)) {
      throw Error(Errc::missing_edge_color, "edge {" + std::to_string(e.u) + "," +
                                                std::to_string(e.v) + "} has no color");
    }
    ++covered;
  }
  if (covered != c.size()) {
    throw Error(Errc::invalid_input, "coloring assigns colors to edges outside the graph");
  }
  std::set<Color> at_u;
  for (const Edge& e : g.edges()) {
    at_u.clear();
    for (Vertex w : g.neighbors(e.u)) {
      if (w != e.v) at_u.insert(c.at(make_edge(e.u, w)));
    }
    for (Vertex w : g.neighbors(e.v)) {
      if (w != e.u && at_u.count(c.at(make_edge(e.v, w))) != 0) return false;
    }
  }
  return true;
}

struct DegenerateStats {
  std::size_t degeneracy = 0;
  std::size_t max_degree = 0;
  std::size_t proper_colors = 0;  // colors of the greedy proper coloring
  bool exact_fallback = false;    // max degree <= 2: solved by the oracle
  std::map<Color, RoundStats> per_class;
};

/// ceil(4e d ln Delta) (2d+1) chi: the color budget for a d-degenerate graph.
inline double degenerate_color_bound(std::size_t d, std::size_t max_degree, std::size_t chi) {
  const double dd = static_cast<double>(d);
  return std::ceil(4 * std::numbers::e * dd * std::log(static_cast<double>(max_degree))) *
         (2 * dd + 1) * static_cast<double>(chi);
}

/// Injective edge-coloring of an arbitrary graph via its degeneracy
/// orientation: a first-fit proper coloring splits V into independent sets
/// and the randomized arc procedure colors the arcs leaving each of them in
/// its own color namespace. Graphs of maximum degree <= 2 are solved exactly,
/// one component at a time.
inline EdgeColoring injective_color_degenerate(const UndirectedGraph& g, std::uint64_t seed,
                                               DegenerateStats* stats = nullptr) {
  DegenerateStats local;
  const VertexOrdering ord = degeneracy_order(g);
  local.degeneracy = ord.d;
  local.max_degree = g.max_degree();
  if (g.m() == 0) {
    if (stats) *stats = local;
    return {};
  }

  if (local.max_degree <= 2) {
    local.exact_fallback = true;
    // Components are paths and cycles; they never conflict with each other,
    // so each one reuses colors 1..k.
    std::vector<int> comp(g.n(), -1);
    int count = 0;
    for (std::size_t s = 0; s < g.n(); ++s) {
      if (comp[s] >= 0) continue;
      std::vector<Vertex> stack{static_cast<Vertex>(s)};
      comp[s] = count;
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
          if (comp[w] < 0) {
            comp[w] = count;
            stack.push_back(w);
          }
        }
      }
      ++count;
    }
    std::vector<std::vector<Vertex>> members(count);
    for (std::size_t v = 0; v < g.n(); ++v) members[comp[v]].push_back(static_cast<Vertex>(v));
    EdgeColoring out;
    std::vector<int> local_id(g.n(), -1);
    for (const auto& verts : members) {
      for (std::size_t i = 0; i < verts.size(); ++i) local_id[verts[i]] = static_cast<int>(i);
      std::vector<Edge> edges;
      for (Vertex v : verts) {
        for (Vertex w : g.neighbors(v)) {
          if (v < w) edges.push_back(make_edge(local_id[v], local_id[w]));
        }
      }
      if (edges.empty()) continue;
      const UndirectedGraph piece(verts.size(), edges);
      OracleBudget budget;
      budget.max_vertices = std::max<std::size_t>(1, piece.n());
      budget.max_edges = piece.m();
      for (const auto& [e, color] : exact_injective_coloring(piece, budget)) {
        out.assign(make_edge(verts[e.u], verts[e.v]), color);
      }
    }
    local.proper_colors = greedy_color(g, ord).num_colors();
    if (stats) *stats = local;
    return out;
  }

  const OrientedGraph d = orient_by_ordering(g, ord);
  const VertexColoring psi = greedy_color(g, ord);
  local.proper_colors = psi.num_colors();
  std::map<Color, std::vector<Vertex>> classes;
  for (std::size_t v = 0; v < g.n(); ++v) classes[psi[static_cast<Vertex>(v)]].push_back(static_cast<Vertex>(v));

  std::map<Edge, std::pair<Color, Color>> raw;
  for (const auto& [cls, xs] : classes) {
    RoundStats rs;
    const PartialEdgeColoring part =
        color_arcs_randomized(d, xs, derive_seed(seed, static_cast<std::uint64_t>(cls)), &rs);
    local.per_class[cls] = rs;
    for (const auto& [e, color] : part) raw[e] = {cls, color};
  }
  if (stats) *stats = local;
  return canonicalize(raw);
}

/// Deterministic counterpart of the randomized arc procedure. hcol must be a
/// proper coloring (indexed by vertices of D; entries on X are ignored) of the
/// graph on V \ X joining two vertices that share an in-neighbor in X. For
/// every set P_i of the family: X_i holds the x with exactly one out-neighbor
/// whose hcol color lies in P_i, z_i(x) is that neighbor, D_i joins u->v on
/// V_i = z_i(X_i) when u->v in D or u->x with z_i(x) = v, and arc x z_i(x)
/// gets color (i, psi_i(z_i(x))) for a proper coloring psi_i of D_i. Later
/// sets overwrite earlier ones.
inline PartialEdgeColoring color_arcs_deterministic(const OrientedGraph& d,
                                                    std::span<const Vertex> x_set,
                                                    const VertexColoring& hcol,
                                                    const SeparatingFamily& fam) {
  const std::vector<char> in_x = detail::independent_set_mask(d, x_set);
  std::vector<Vertex> xs(x_set.begin(), x_set.end());
  detail::sort_unique(xs);
  const std::size_t out_deg = detail::max_out_degree_over(d, xs);
  if (out_deg == 0) return {};
  if (hcol.size() != d.n()) {
    throw Error(Errc::invalid_hcol, "hcol must assign a color to every vertex of D");
  }
  Color max_color = 0;
  for (Vertex x : xs) {
    std::set<Color> seen;
    for (Vertex a : d.out_neighbors(x)) {
      const Color c = hcol[a];
      if (c < 1) throw Error(Errc::invalid_hcol, "hcol colors must be positive");
      if (!seen.insert(c).second) {
        throw Error(Errc::invalid_hcol, "two out-neighbors of " + std::to_string(x) +
                                            " share an hcol color");
      }
      max_color = std::max(max_color, c);
    }
  }
  if (static_cast<std::size_t>(max_color) > fam.k || fam.r < out_deg) {
    throw Error(Errc::family_too_weak, "family (k=" + std::to_string(fam.k) +
                                           ", r=" + std::to_string(fam.r) +
                                           ") cannot separate " + std::to_string(max_color) +
                                           " colors with out-degree " +
                                           std::to_string(out_deg));
  }

  std::map<Edge, std::pair<int, Color>> raw;
  std::vector<char> in_p(fam.k + 1, 0);
  std::vector<Vertex> z(d.n(), -1);
  std::vector<int> local_id(d.n(), -1);
  for (std::size_t i = 0; i < fam.sets.size(); ++i) {
    std::fill(in_p.begin(), in_p.end(), 0);
    for (int e : fam.sets[i]) in_p[e] = 1;

    std::vector<Vertex> xi;
    std::vector<Vertex> vi;
    for (Vertex x : xs) {
      Vertex only = -1;
      int hits = 0;
      for (Vertex a : d.out_neighbors(x)) {
        if (in_p[hcol[a]]) {
          only = a;
          ++hits;
        }
      }
      if (hits == 1) {
        z[x] = only;
        xi.push_back(x);
        if (local_id[only] < 0) {
          local_id[only] = static_cast<int>(vi.size());
          vi.push_back(only);
        }
      }
    }

    std::vector<Edge> aux;
    for (Vertex u : vi) {
      for (Vertex w : d.out_neighbors(u)) {
        if (local_id[w] >= 0 && !in_x[w]) {
          aux.push_back(make_edge(local_id[u], local_id[w]));
        } else if (in_x[w] && z[w] >= 0 && z[w] != u) {
          aux.push_back(make_edge(local_id[u], local_id[z[w]]));
        }
      }
    }
    const VertexColoring psi = detail::color_auxiliary(vi.size(), aux);
    for (Vertex x : xi) {
      raw[make_edge(x, z[x])] = {static_cast<int>(i) + 1, psi[local_id[z[x]]]};
    }

    for (Vertex x : xi) z[x] = -1;
    for (Vertex v : vi) local_id[v] = -1;
  }

  std::size_t total_arcs = 0;
  for (Vertex x : xs) total_arcs += d.out_degree(x);
  if (raw.size() != total_arcs) {
    throw Error(Errc::family_too_weak,
                std::to_string(total_arcs - raw.size()) + " arcs left uncolored");
  }
  return canonicalize(raw);
}

/// Replaces every edge uv by a path u - w_uv - v. The midpoint of the i-th
/// edge of g.edges() is vertex n + i.
inline UndirectedGraph subdivide(const UndirectedGraph& g) {
  const std::vector<Edge> edges = g.edges();
  std::vector<Edge> out;
  out.reserve(2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Vertex mid = static_cast<Vertex>(g.n() + i);
    out.push_back(make_edge(edges[i].u, mid));
    out.push_back(make_edge(mid, edges[i].v));
  }
  return UndirectedGraph(g.n() + edges.size(), out);
}

/// Injective edge-coloring of subdivide(g) with at most 2 ceil(log2 k) colors
/// from a proper k-coloring of g. Colors are written as t-bit codes; for an
/// edge uv, i is the lowest bit where the codes differ, and the half-edges
/// u w_uv, w_uv v get (i, bit_i(u)) and (i, bit_i(v)).
inline EdgeColoring injective_color_subdivision(const UndirectedGraph& g,
                                                const VertexColoring& pc) {
  if (pc.size() != g.n() || !is_proper_coloring(g, pc)) {
    throw Error(Errc::invalid_proper_coloring, "expected a proper coloring of the graph");
  }
  std::map<Color, std::uint64_t> code;
  for (Color c : pc.colors) code.emplace(c, 0);
  std::uint64_t next = 0;
  for (auto& [c, id] : code) id = next++;

  const std::vector<Edge> edges = g.edges();
  std::map<Edge, std::pair<int, int>> raw;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Vertex mid = static_cast<Vertex>(g.n() + i);
    const std::uint64_t cu = code.at(pc[edges[i].u]);
    const std::uint64_t cv = code.at(pc[edges[i].v]);
    const int bit = std::countr_zero(cu ^ cv);
    raw[make_edge(edges[i].u, mid)] = {bit, static_cast<int>((cu >> bit) & 1u)};
    raw[make_edge(mid, edges[i].v)] = {bit, static_cast<int>((cv >> bit) & 1u)};
  }
  return canonicalize(raw);
}

}  // namespace injcol
