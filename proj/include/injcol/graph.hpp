#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "injcol/error.hpp"

namespace injcol {

using Vertex = int;
using Color = int;

/// Unordered pair of vertices, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

namespace detail {

inline void check_vertex(std::size_t n, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= n) {
    throw Error(Errc::invalid_input, "vertex " + std::to_string(v) + " out of range for n=" +
                                         std::to_string(n));
  }
}

inline bool sorted_contains(std::span<const Vertex> sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

inline void sort_unique(std::vector<Vertex>& list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
}

}  // namespace detail

/// Simple loop-free graph on vertices 0..n-1 with sorted adjacency lists.
/// Repeated edges in the input collapse to one.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  explicit UndirectedGraph(std::size_t n) : adj_(n) {}

  UndirectedGraph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    for (const Edge& e : edges) {
      detail::check_vertex(n, e.u);
      detail::check_vertex(n, e.v);
      if (e.u == e.v) {
        throw Error(Errc::loop, "self-loop at vertex " + std::to_string(e.u));
      }
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    std::size_t degree_sum = 0;
    for (auto& list : adj_) {
      detail::sort_unique(list);
      degree_sum += list.size();
    }
    m_ = degree_sum / 2;
  }

  UndirectedGraph(std::size_t n, const std::vector<Edge>& edges)
      : UndirectedGraph(n, std::span<const Edge>(edges)) {}

  std::size_t n() const noexcept { return adj_.size(); }
  std::size_t m() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  bool adjacent(Vertex a, Vertex b) const {
    if (adj_[a].size() > adj_[b].size()) std::swap(a, b);
    return detail::sorted_contains(adj_[a], b);
  }

  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adj_) best = std::max(best, list.size());
    return best;
  }

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (static_cast<Vertex>(u) < v) out.push_back(Edge{static_cast<Vertex>(u), v});
      }
    }
    return out;
  }

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Digon-free oriented graph. Repeated arcs collapse to one; an arc together
/// with its reverse is rejected.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  explicit OrientedGraph(std::size_t n) : out_(n), in_(n) {}

  OrientedGraph(std::size_t n, std::span<const Arc> arcs) : out_(n), in_(n) {
    for (const Arc& a : arcs) {
      detail::check_vertex(n, a.tail);
      detail::check_vertex(n, a.head);
      if (a.tail == a.head) {
        throw Error(Errc::loop, "self-loop at vertex " + std::to_string(a.tail));
      }
      out_[a.tail].push_back(a.head);
      in_[a.head].push_back(a.tail);
    }
    std::size_t count = 0;
    for (std::size_t v = 0; v < n; ++v) {
      detail::sort_unique(out_[v]);
      detail::sort_unique(in_[v]);
      count += out_[v].size();
      // A digon u->v, v->u puts v in both lists of u.
      auto o = out_[v].begin();
      auto i = in_[v].begin();
      while (o != out_[v].end() && i != in_[v].end()) {
        if (*o < *i) {
          ++o;
        } else if (*i < *o) {
          ++i;
        } else {
          throw Error(Errc::digon, "arcs in both directions between " + std::to_string(v) +
                                       " and " + std::to_string(*o));
        }
      }
    }
    m_ = count;
  }

  OrientedGraph(std::size_t n, const std::vector<Arc>& arcs)
      : OrientedGraph(n, std::span<const Arc>(arcs)) {}

  std::size_t n() const noexcept { return out_.size(); }
  /// Number of arcs.
  std::size_t m() const noexcept { return m_; }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }

  std::size_t max_out_degree() const {
    std::size_t best = 0;
    for (const auto& list : out_) best = std::max(best, list.size());
    return best;
  }

  bool has_arc(Vertex tail, Vertex head) const {
    return detail::sorted_contains(out_[tail], head);
  }

  bool adjacent(Vertex a, Vertex b) const { return has_arc(a, b) || has_arc(b, a); }

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(m_);
    for (std::size_t u = 0; u < out_.size(); ++u) {
      for (Vertex v : out_[u]) out.push_back(Arc{static_cast<Vertex>(u), v});
    }
    return out;
  }

  UndirectedGraph underlying() const {
    std::vector<Edge> edges;
    edges.reserve(m_);
    for (const Arc& a : arcs()) edges.push_back(make_edge(a.tail, a.head));
    return UndirectedGraph(n(), edges);
  }

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t m_ = 0;
};

/// A permutation v_1..v_n of the vertices together with the largest number of
/// neighbors any vertex has earlier in the permutation.
struct VertexOrdering {
  std::vector<Vertex> order;
  std::vector<std::size_t> position;
  std::size_t d = 0;

  static VertexOrdering from_order(const UndirectedGraph& g, std::vector<Vertex> order) {
    if (order.size() != g.n()) {
      throw Error(Errc::invalid_input, "ordering length differs from vertex count");
    }
    VertexOrdering ord;
    ord.position.assign(g.n(), g.n());
    for (std::size_t i = 0; i < order.size(); ++i) {
      detail::check_vertex(g.n(), order[i]);
      if (ord.position[order[i]] != g.n()) {
        throw Error(Errc::invalid_input, "ordering repeats a vertex");
      }
      ord.position[order[i]] = i;
    }
    ord.order = std::move(order);
    for (Vertex v : ord.order) {
      std::size_t back = 0;
      for (Vertex w : g.neighbors(v)) back += ord.position[w] < ord.position[v] ? 1 : 0;
      ord.d = std::max(ord.d, back);
    }
    return ord;
  }

  std::size_t back_degree(const UndirectedGraph& g, Vertex v) const {
    std::size_t back = 0;
    for (Vertex w : g.neighbors(v)) back += position[w] < position[v] ? 1 : 0;
    return back;
  }
};

/// Total map from vertices to positive color ids.
struct VertexColoring {
  std::vector<Color> colors;

  Color operator[](Vertex v) const { return colors[v]; }
  std::size_t size() const { return colors.size(); }

  /// Number of distinct colors used.
  std::size_t num_colors() const {
    std::vector<Color> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  Color max_color() const {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
  }

  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

/// Map from edges to positive color ids. Total on E(G) for a finished
/// coloring; a partial coloring uses the same type.
class EdgeColoring {
 public:
  using Map = std::map<Edge, Color>;

  void assign(const Edge& e, Color c) { colors_[e] = c; }

  std::optional<Color> find(const Edge& e) const {
    auto it = colors_.find(e);
    if (it == colors_.end()) return std::nullopt;
    return it->second;
  }

  Color at(const Edge& e) const {
    auto it = colors_.find(e);
    if (it == colors_.end()) {
      throw Error(Errc::missing_edge_color, "edge {" + std::to_string(e.u) + "," +
                                                std::to_string(e.v) + "} is uncolored");
    }
    return it->second;
  }

  bool contains(const Edge& e) const { return colors_.count(e) != 0; }
  std::size_t size() const { return colors_.size(); }
  bool empty() const { return colors_.empty(); }

  std::size_t num_colors() const {
    std::set<Color> seen;
    for (const auto& [e, c] : colors_) seen.insert(c);
    return seen.size();
  }

  Map::const_iterator begin() const { return colors_.begin(); }
  Map::const_iterator end() const { return colors_.end(); }
  const Map& map() const { return colors_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  Map colors_;
};

using PartialEdgeColoring = EdgeColoring;

/// Relabels arbitrary ordered color keys to 1..k in increasing key order.
template <class Key>
EdgeColoring canonicalize(const std::map<Edge, Key>& raw) {
  std::map<Key, Color> ids;
  for (const auto& [e, key] : raw) ids.emplace(key, 0);
  Color next = 1;
  for (auto& [key, id] : ids) id = next++;
  EdgeColoring out;
  for (const auto& [e, key] : raw) out.assign(e, ids.at(key));
  return out;
}

template <class Key>
VertexColoring canonicalize(const std::vector<Key>& raw) {
  std::map<Key, Color> ids;
  for (const auto& key : raw) ids.emplace(key, 0);
  Color next = 1;
  for (auto& [key, id] : ids) id = next++;
  VertexColoring out;
  out.colors.reserve(raw.size());
  for (const auto& key : raw) out.colors.push_back(ids.at(key));
  return out;
}

/// Peels a minimum-degree vertex (smallest id on ties) into the last free slot
/// until the graph is empty. The returned d is the degeneracy of g.
inline VertexOrdering degeneracy_order(const UndirectedGraph& g) {
  const std::size_t n = g.n();
  std::vector<std::size_t> degree(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = g.degree(static_cast<Vertex>(v));
    queue.emplace(degree[v], static_cast<Vertex>(v));
  }
  VertexOrdering ord;
  ord.order.assign(n, 0);
  ord.position.assign(n, 0);
  std::vector<char> removed(n, 0);
  for (std::size_t slot = n; slot-- > 0;) {
    auto [deg, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    ord.order[slot] = v;
    ord.position[v] = slot;
    ord.d = std::max(ord.d, deg);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({degree[w], w});
      --degree[w];
      queue.emplace(degree[w], w);
    }
  }
  return ord;
}

/// Orients every edge from its later endpoint to its earlier one.
inline OrientedGraph orient_by_ordering(const UndirectedGraph& g, const VertexOrdering& ord) {
  std::vector<Arc> arcs;
  arcs.reserve(g.m());
  for (const Edge& e : g.edges()) {
    if (ord.position[e.u] > ord.position[e.v]) {
      arcs.push_back(Arc{e.u, e.v});
    } else {
      arcs.push_back(Arc{e.v, e.u});
    }
  }
  return OrientedGraph(g.n(), arcs);
}

/// First-fit coloring along the ordering; each vertex takes the least positive
/// integer missing among its already colored neighbors.
inline VertexColoring greedy_color(const UndirectedGraph& g, const VertexOrdering& ord) {
  VertexColoring c;
  c.colors.assign(g.n(), 0);
  std::vector<char> taken;
  for (Vertex v : ord.order) {
    taken.assign(g.degree(v) + 2, 0);
    for (Vertex w : g.neighbors(v)) {
      const Color cw = c.colors[w];
      if (cw > 0 && static_cast<std::size_t>(cw) < taken.size()) taken[cw] = 1;
    }
    Color pick = 1;
    while (taken[pick]) ++pick;
    c.colors[v] = pick;
  }
  return c;
}

inline VertexColoring degeneracy_greedy_color(const UndirectedGraph& g) {
  return greedy_color(g, degeneracy_order(g));
}

inline bool is_proper_coloring(const UndirectedGraph& g, const VertexColoring& c) {
  if (c.size() != g.n()) return false;
  for (const Edge& e : g.edges()) {
    if (c[e.u] == c[e.v]) return false;
  }
  return true;
}

/// True iff some edge of g other than e and f joins an endpoint of e to an
/// endpoint of f.
inline bool edges_conflict(const UndirectedGraph& g, const Edge& e, const Edge& f) {
  const Vertex ends_e[2] = {e.u, e.v};
  const Vertex ends_f[2] = {f.u, f.v};
  for (Vertex a : ends_e) {
    for (Vertex b : ends_f) {
      if (a == b || !g.adjacent(a, b)) continue;
      const Edge joining = make_edge(a, b);
      if (joining != e && joining != f) return true;
    }
  }
  return false;
}

/// True iff no two edges of f conflict, i.e. f is a star forest induced in g.
inline bool is_induced_star_forest(const UndirectedGraph& g, std::span<const Edge> f) {
  for (const Edge& e : f) {
    if (!g.has_edge(e)) {
      throw Error(Errc::invalid_input, "edge set is not contained in the graph");
    }
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (f[i] != f[j] && edges_conflict(g, f[i], f[j])) return false;
    }
  }
  return true;
}

/// Edges grouped by color, keyed by color id.
inline std::map<Color, std::vector<Edge>> color_classes(const EdgeColoring& c) {
  std::map<Color, std::vector<Edge>> classes;
  for (const auto& [e, color] : c) classes[color].push_back(e);
  return classes;
}

/// Undirected graph joining u and v when they are adjacent in d or joined by
/// a directed path of length 2.
inline UndirectedGraph two_dipath_graph(const OrientedGraph& d) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < d.n(); ++v) {
    const Vertex mid = static_cast<Vertex>(v);
    for (Vertex w : d.out_neighbors(mid)) edges.push_back(make_edge(mid, w));
    for (Vertex a : d.in_neighbors(mid)) {
      for (Vertex b : d.out_neighbors(mid)) {
        if (a != b) edges.push_back(make_edge(a, b));
      }
    }
  }
  return UndirectedGraph(d.n(), edges);
}

/// Graph with the same vertex set and only the edges accepted by keep.
template <class Pred>
UndirectedGraph filter_edges(const UndirectedGraph& g, Pred keep) {
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (keep(e)) kept.push_back(e);
  }
  return UndirectedGraph(g.n(), kept);
}

template <class Pred>
OrientedGraph filter_arcs(const OrientedGraph& d, Pred keep) {
  std::vector<Arc> kept;
  for (const Arc& a : d.arcs()) {
    if (keep(a)) kept.push_back(a);
  }
  return OrientedGraph(d.n(), kept);
}

}  // namespace injcol
