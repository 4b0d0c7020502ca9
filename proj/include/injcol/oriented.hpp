#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "injcol/error.hpp"
#include "injcol/graph.hpp"
#include "injcol/injective.hpp"
#include "injcol/random.hpp"
#include "injcol/separating_family.hpp"

namespace injcol {

/// Colors on the arcs leaving (s_plus) and entering (s_minus) a vertex.
struct OrientedColorPair {
  std::vector<Color> s_plus;
  std::vector<Color> s_minus;

  friend auto operator<=>(const OrientedColorPair&, const OrientedColorPair&) = default;
};

// ---------------------------------------------------------------------------
// Verifiers

/// Proper on the underlying graph, and no two arcs carry reversed ordered
/// color pairs (a,b) and (b,a).
inline bool verify_oriented_coloring(const OrientedGraph& d, const VertexColoring& c) {
  if (c.size() != d.n()) return false;
  std::set<std::pair<Color, Color>> pairs;
  for (const Arc& a : d.arcs()) {
    const Color ct = c[a.tail];
    const Color ch = c[a.head];
    if (ct == ch) return false;
    pairs.emplace(ct, ch);
  }
  for (const auto& [a, b] : pairs) {
    if (pairs.count({b, a}) != 0) return false;
  }
  return true;
}

/// Endpoints of every directed path of length 1 or 2 get distinct colors.
inline bool verify_2dipath(const OrientedGraph& d, const VertexColoring& c) {
  if (c.size() != d.n()) return false;
  for (std::size_t v = 0; v < d.n(); ++v) {
    const Vertex mid = static_cast<Vertex>(v);
    for (Vertex w : d.out_neighbors(mid)) {
      if (c[mid] == c[w]) return false;
    }
    for (Vertex a : d.in_neighbors(mid)) {
      for (Vertex b : d.out_neighbors(mid)) {
        if (a != b && c[a] == c[b]) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Injective edge-coloring -> oriented coloring

inline std::vector<OrientedColorPair> oriented_color_pairs(const OrientedGraph& d,
                                                           const EdgeColoring& c) {
  std::vector<OrientedColorPair> pairs(d.n());
  for (const Arc& a : d.arcs()) {
    const Color col = c.at(make_edge(a.tail, a.head));
    pairs[a.tail].s_plus.push_back(col);
    pairs[a.head].s_minus.push_back(col);
  }
  for (auto& p : pairs) {
    detail::sort_unique(p.s_plus);
    detail::sort_unique(p.s_minus);
  }
  return pairs;
}

/// Colors each vertex by (S+, S-), the sets of edge colors on its outgoing and
/// incoming arcs. With an injective k-edge-coloring this is an oriented
/// coloring with at most 4^k colors; ids are assigned in lexicographic order
/// of the pairs.
inline VertexColoring oriented_from_injective(const OrientedGraph& d, const EdgeColoring& c) {
  bool valid = false;
  try {
    valid = verify_injective(d.underlying(), c);
  } catch (const Error& e) {
    throw Error(Errc::invalid_injective_coloring, e.what());
  }
  if (!valid) {
    throw Error(Errc::invalid_injective_coloring, "edge coloring is not injective");
  }
  return canonicalize(oriented_color_pairs(d, c));
}

/// Recolors each vertex of U with a color of its own. base must be an
/// oriented coloring of D with the arcs inside U removed.
inline VertexColoring add_unique_colors(const OrientedGraph& d, std::span<const Vertex> u_set,
                                        const VertexColoring& base) {
  std::vector<char> in_u(d.n(), 0);
  for (Vertex u : u_set) {
    detail::check_vertex(d.n(), u);
    in_u[u] = 1;
  }
  const OrientedGraph outside =
      filter_arcs(d, [&](const Arc& a) { return !(in_u[a.tail] && in_u[a.head]); });
  if (!verify_oriented_coloring(outside, base)) {
    throw Error(Errc::invalid_base_coloring,
                "base is not an oriented coloring of D without the arcs inside U");
  }
  VertexColoring out = base;
  Color next = base.max_color() + 1;
  for (std::size_t v = 0; v < d.n(); ++v) {
    if (in_u[v]) out.colors[v] = next++;
  }
  return out;
}

/// First-fit coloring of the 2-dipath constraint graph along its degeneracy
/// ordering.
inline VertexColoring greedy_2dipath(const OrientedGraph& d) {
  return degeneracy_greedy_color(two_dipath_graph(d));
}

// ---------------------------------------------------------------------------
// Full graphs and homomorphisms

/// Entries +1 (v -> u_i) or -1 (u_i -> v).
using SignVector = std::vector<int>;

inline SignVector sign_vector(const OrientedGraph& d, std::span<const Vertex> u_list, Vertex v) {
  SignVector out;
  out.reserve(u_list.size());
  for (Vertex u : u_list) {
    if (d.has_arc(v, u)) {
      out.push_back(+1);
    } else if (d.has_arc(u, v)) {
      out.push_back(-1);
    } else {
      throw Error(Errc::not_adjacent, std::to_string(u) + " is not a neighbor of " +
                                          std::to_string(v));
    }
  }
  return out;
}

/// ceil(8^d ln k)
inline std::size_t full_graph_part_size(std::size_t k, std::size_t d) {
  return static_cast<std::size_t>(
      std::ceil(std::pow(8.0, static_cast<double>(d)) * std::log(static_cast<double>(k))));
}

/// Orientation of the complete k-partite graph with parts P_i = {iN..iN+N-1}
/// (i = 0..k-1). Random instances are stored implicitly: the direction of a
/// cross pair is a hash of the seed and the pair, so graphs far too large to
/// materialize can still be sampled and queried.
class FullGraph {
 public:
  /// Uniformly random orientation determined by seed.
  static FullGraph random(std::size_t k, std::size_t d, std::size_t part_size,
                          std::uint64_t seed) {
    FullGraph h(k, d, part_size);
    h.seed_ = seed;
    return h;
  }

  /// Orientation given by forward(u, v) == true meaning u -> v, queried once
  /// per cross pair with u < v.
  template <class Fn>
  static FullGraph from_rule(std::size_t k, std::size_t d, std::size_t part_size, Fn forward) {
    FullGraph h(k, d, part_size);
    const std::size_t total = h.n();
    h.dense_.assign(total * total, 0);
    for (std::size_t u = 0; u < total; ++u) {
      for (std::size_t v = u + 1; v < total; ++v) {
        if (u / part_size == v / part_size) continue;
        if (forward(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
          h.dense_[u * total + v] = 1;
        } else {
          h.dense_[v * total + u] = 1;
        }
      }
    }
    return h;
  }

  std::size_t k() const noexcept { return k_; }
  std::size_t d() const noexcept { return d_; }
  std::size_t part_size() const noexcept { return part_size_; }
  std::size_t n() const noexcept { return k_ * part_size_; }
  bool certified() const noexcept { return certified_; }
  std::size_t attempts() const noexcept { return attempts_; }

  std::size_t part_of(Vertex v) const { return static_cast<std::size_t>(v) / part_size_; }
  Vertex part_begin(std::size_t part) const { return static_cast<Vertex>(part * part_size_); }

  bool has_arc(Vertex u, Vertex v) const {
    if (u == v || part_of(u) == part_of(v)) return false;
    if (!dense_.empty()) return dense_[static_cast<std::size_t>(u) * n() + v] != 0;
    const Vertex lo = std::min(u, v);
    const Vertex hi = std::max(u, v);
    const std::uint64_t key = static_cast<std::uint64_t>(lo) * n() + static_cast<std::uint64_t>(hi);
    const bool lo_to_hi = (mix64(seed_ ^ mix64(key)) & 1u) != 0;
    return lo_to_hi == (u == lo);
  }

  /// Materialized copy; only sensible for small graphs.
  OrientedGraph to_oriented_graph() const {
    std::vector<Arc> arcs;
    for (std::size_t u = 0; u < n(); ++u) {
      for (std::size_t v = 0; v < n(); ++v) {
        if (has_arc(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
          arcs.push_back(Arc{static_cast<Vertex>(u), static_cast<Vertex>(v)});
        }
      }
    }
    return OrientedGraph(n(), arcs);
  }

 private:
  FullGraph(std::size_t k, std::size_t d, std::size_t part_size)
      : k_(k), d_(d), part_size_(part_size) {}

  friend FullGraph build_full_graph(std::size_t, std::size_t, std::uint64_t);
  friend FullGraph sample_full_graph(std::size_t, std::size_t, std::uint64_t);

  std::size_t k_ = 0;
  std::size_t d_ = 0;
  std::size_t part_size_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<std::uint8_t> dense_;
  bool certified_ = false;
  std::size_t attempts_ = 0;
};

namespace detail {

// Enumerates d-subsets of `outside`, calling check(words of chosen) until it
// returns false.
class FullnessChecker {
 public:
  FullnessChecker(const FullGraph& h, std::size_t part) : h_(h), part_(part) {
    words_ = (h.part_size() + 63) / 64;
    for (std::size_t v = 0; v < h.n(); ++v) {
      if (h.part_of(static_cast<Vertex>(v)) != part) outside_.push_back(static_cast<Vertex>(v));
    }
    // toward_[j]: bit x set when x -> outside_[j].
    toward_.assign(outside_.size() * words_, 0);
    const Vertex first = h.part_begin(part);
    for (std::size_t j = 0; j < outside_.size(); ++j) {
      for (std::size_t x = 0; x < h.part_size(); ++x) {
        if (h.has_arc(first + static_cast<Vertex>(x), outside_[j])) {
          toward_[j * words_ + x / 64] |= std::uint64_t{1} << (x % 64);
        }
      }
    }
    tail_mask_ = h.part_size() % 64 == 0 ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << (h.part_size() % 64)) - 1;
  }

  bool all_patterns_realized() {
    chosen_.clear();
    if (outside_.size() < h_.d()) return true;
    return recurse(0);
  }

 private:
  bool recurse(std::size_t start) {
    if (chosen_.size() == h_.d()) return realizes_all();
    for (std::size_t j = start; j + (h_.d() - chosen_.size()) <= outside_.size(); ++j) {
      chosen_.push_back(j);
      const bool ok = recurse(j + 1);
      chosen_.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  bool realizes_all() const {
    const std::size_t d = chosen_.size();
    for (std::uint32_t q = 0; q < (1u << d); ++q) {
      bool found = false;
      for (std::size_t w = 0; w < words_ && !found; ++w) {
        std::uint64_t acc = w + 1 == words_ ? tail_mask_ : ~std::uint64_t{0};
        for (std::size_t i = 0; i < d && acc != 0; ++i) {
          const std::uint64_t word = toward_[chosen_[i] * words_ + w];
          acc &= (q >> i) & 1u ? word : ~word;
        }
        found = acc != 0;
      }
      if (!found) return false;
    }
    return true;
  }

  const FullGraph& h_;
  std::size_t part_;
  std::size_t words_ = 0;
  std::uint64_t tail_mask_ = 0;
  std::vector<Vertex> outside_;
  std::vector<std::uint64_t> toward_;
  std::vector<std::size_t> chosen_;
};

}  // namespace detail

/// Exhaustive (k,d,N)-fullness check: for every part P_i, every d vertices
/// outside it, and every sign pattern, some x in P_i realizes the pattern.
/// Unordered d-sets suffice; reordering a set permutes patterns.
inline bool verify_full(const FullGraph& h) {
  if (h.k() == 0 || h.part_size() == 0) return false;
  for (std::size_t part = 0; part < h.k(); ++part) {
    detail::FullnessChecker checker(h, part);
    if (!checker.all_patterns_realized()) return false;
  }
  return true;
}

/// Random orientation of K_{N,...,N}, N = ceil(8^d ln k), redrawn until
/// verify_full accepts it.
inline FullGraph build_full_graph(std::size_t k, std::size_t d, std::uint64_t seed) {
  if (k < 5 || d < 2) {
    throw Error(Errc::invalid_parameters, "full graphs need k >= 5 and d >= 2 (k=" +
                                              std::to_string(k) + ", d=" + std::to_string(d) +
                                              ")");
  }
  const std::size_t part_size = full_graph_part_size(k, d);
  for (int attempt = 0; attempt < kMaxConstructionAttempts; ++attempt) {
    FullGraph h = FullGraph::random(k, d, part_size,
                                    derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    h.attempts_ = static_cast<std::size_t>(attempt) + 1;
    if (verify_full(h)) {
      h.certified_ = true;
      return h;
    }
  }
  throw Error(Errc::construction_failed, "no full graph after " +
                                             std::to_string(kMaxConstructionAttempts) +
                                             " attempts");
}

/// Same distribution as build_full_graph, without certification.
inline FullGraph sample_full_graph(std::size_t k, std::size_t d, std::uint64_t seed) {
  if (k < 5 || d < 2) {
    throw Error(Errc::invalid_parameters, "full graphs need k >= 5 and d >= 2");
  }
  FullGraph h = FullGraph::random(k, d, full_graph_part_size(k, d), derive_seed(seed, 0));
  h.attempts_ = 1;
  return h;
}

struct Homomorphism {
  std::vector<Vertex> map;

  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;
};

/// True iff h is total on V(D) and every arc of D maps onto an arc of the
/// target. Target needs n() and has_arc(u, v).
template <class Target>
bool verify_homomorphism(const OrientedGraph& d, const Target& target, const Homomorphism& h) {
  if (h.map.size() != d.n()) return false;
  for (Vertex image : h.map) {
    if (image < 0 || static_cast<std::size_t>(image) >= target.n()) return false;
  }
  for (const Arc& a : d.arcs()) {
    if (!target.has_arc(h.map[a.tail], h.map[a.head])) return false;
  }
  return true;
}

/// Maps D into a full graph one vertex at a time along ord: v goes to the
/// smallest x in part psi(v) whose arcs to the images of v's earlier
/// neighbors point the same way as v's arcs to those neighbors.
inline Homomorphism homomorphism_to_full(const OrientedGraph& d, const VertexOrdering& ord,
                                         const VertexColoring& psi, const FullGraph& h) {
  if (ord.order.size() != d.n() || psi.size() != d.n()) {
    throw Error(Errc::invalid_input, "ordering and coloring must cover every vertex");
  }
  if (!verify_2dipath(d, psi)) {
    throw Error(Errc::invalid_2dipath, "psi is not a 2-dipath coloring");
  }
  for (Color c : psi.colors) {
    if (c < 1 || static_cast<std::size_t>(c) > h.k()) {
      throw Error(Errc::invalid_parameters, "psi uses more colors than the full graph has parts");
    }
  }
  Homomorphism out;
  out.map.assign(d.n(), -1);
  std::map<Vertex, int> required;  // image of an earlier neighbor -> sign
  for (Vertex v : ord.order) {
    required.clear();
    auto need = [&](Vertex u, int sign) {
      if (ord.position[u] >= ord.position[v]) return;
      auto [it, fresh] = required.emplace(out.map[u], sign);
      if (!fresh && it->second != sign) {
        throw Error(Errc::invalid_2dipath, "earlier neighbors in opposite directions share an image");
      }
    };
    for (Vertex u : d.out_neighbors(v)) need(u, +1);
    for (Vertex u : d.in_neighbors(v)) need(u, -1);
    if (required.size() > h.d()) {
      throw Error(Errc::invalid_parameters, "vertex " + std::to_string(v) + " has " +
                                                std::to_string(required.size()) +
                                                " earlier neighbors; full graph order is " +
                                                std::to_string(h.d()));
    }
    const std::size_t part = static_cast<std::size_t>(psi[v]) - 1;
    const Vertex first = h.part_begin(part);
    Vertex witness = -1;
    for (std::size_t i = 0; i < h.part_size(); ++i) {
      const Vertex x = first + static_cast<Vertex>(i);
      const bool ok = std::all_of(required.begin(), required.end(), [&](const auto& entry) {
        return entry.second > 0 ? h.has_arc(x, entry.first) : h.has_arc(entry.first, x);
      });
      if (ok) {
        witness = x;
        break;
      }
    }
    if (witness < 0) {
      throw Error(Errc::no_witness, "no vertex of part " + std::to_string(part + 1) +
                                        " realizes the sign vector of vertex " +
                                        std::to_string(v));
    }
    out.map[v] = witness;
  }
  return out;
}

/// Coloring induced by a homomorphism: the color of v is h(v) + 1.
inline VertexColoring coloring_from_homomorphism(const Homomorphism& h) {
  VertexColoring c;
  c.colors.reserve(h.map.size());
  for (Vertex image : h.map) c.colors.push_back(image + 1);
  return c;
}

}  // namespace injcol
