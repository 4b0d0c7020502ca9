#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "injcol/error.hpp"
#include "injcol/graph.hpp"
#include "injcol/hypergraph.hpp"
#include "injcol/injective.hpp"
#include "injcol/oracles.hpp"
#include "injcol/oriented.hpp"
#include "injcol/separating_family.hpp"

namespace injcol {

/// Caller-asserted Euler genus bound. Never computed.
struct GenusParameter {
  std::size_t g = 0;
};

struct ClassReport {
  Color cls = 0;
  std::size_t x_size = 0;
  std::size_t arcs = 0;
  std::size_t max_out_degree = 0;
  std::size_t hcol_colors = 0;
  std::size_t family_k = 0;
  std::size_t family_r = 0;
  std::size_t family_size = 0;
  std::size_t colors = 0;
  std::vector<std::string> warnings;
};

struct PipelineReport {
  std::size_t colors_used = 0;
  std::size_t v1_size = 0;
  std::size_t v2_size = 0;
  std::size_t degeneracy = 0;
  std::size_t heawood_bound = 0;
  bool small_n = false;

  // injective pipeline
  std::size_t v1_edges = 0;
  std::size_t fresh_colors = 0;
  double v1_edge_limit = 0;  // 6g + 36g / ln g, compared against 2|E(G[V1])|
  bool v1_edges_ok = true;

  // oriented pipelines
  std::size_t injective_colors = 0;  // k' of G'
  bool bound_ok = true;              // colors_used against the pipeline's bound
  double log2_bound = 0;             // log2 of that bound

  // 2-dipath pipeline
  std::size_t dipath_colors = 0;
  std::size_t full_k = 0;
  std::size_t full_d = 0;
  std::size_t full_n = 0;
  bool full_certified = false;
  bool exact_substitute = false;

  std::vector<ClassReport> classes;
  std::vector<std::string> warnings;
  bool verified = false;
};

/// floor((5 + sqrt(1 + 24g)) / 2): a graph of Euler genus g has degeneracy at
/// most this.
inline std::size_t heawood_degeneracy(std::size_t g) {
  const double gg = static_cast<double>(g);
  return static_cast<std::size_t>(std::floor((5 + std::sqrt(1 + 24 * gg)) / 2));
}

namespace detail {

inline void require_genus(const GenusParameter& g) {
  if (g.g < 2) {
    throw Error(Errc::genus_too_small, "asserted genus must be at least 2 (got " +
                                           std::to_string(g.g) + ")");
  }
}

inline void require_heawood(const VertexOrdering& ord, std::size_t g, PipelineReport& rep) {
  rep.degeneracy = ord.d;
  rep.heawood_bound = heawood_degeneracy(g);
  if (ord.d > rep.heawood_bound) {
    throw Error(Errc::degeneracy_exceeds_heawood,
                "degeneracy " + std::to_string(ord.d) + " exceeds " +
                    std::to_string(rep.heawood_bound) + " allowed by genus " + std::to_string(g));
  }
}

// Injectively colors the arcs of d leaving x_set with color_arcs_deterministic,
// using a peeled coloring of the clique graph of the out-neighborhoods and a
// separating family with r = max(r_min, out-degree).
inline PartialEdgeColoring color_class_deterministic(const OrientedGraph& d,
                                                     std::span<const Vertex> x_set,
                                                     std::size_t r_min, std::size_t g,
                                                     std::uint64_t seed, ClassReport& rep) {
  rep.x_size = x_set.size();
  rep.max_out_degree = max_out_degree_over(d, x_set);
  for (Vertex x : x_set) rep.arcs += d.out_degree(x);
  if (rep.max_out_degree == 0) return {};

  const NeighborhoodHypergraph nh = neighborhood_hypergraph(d, x_set);
  const PeelColoring peel = peel_color_clique_graph(nh.hypergraph);
  const GenusDiagnostics diag = check_genus_bounds(nh.hypergraph, peel, g);
  rep.warnings = diag.warnings;

  VertexColoring hcol;
  hcol.colors.assign(d.n(), 1);
  for (std::size_t i = 0; i < nh.to_host.size(); ++i) {
    hcol.colors[nh.to_host[i]] = peel.coloring.colors[i];
  }
  rep.hcol_colors = static_cast<std::size_t>(std::max<Color>(1, peel.coloring.max_color()));
  rep.family_r = std::max(r_min, rep.max_out_degree);
  rep.family_k = std::max(rep.hcol_colors, rep.family_r);
  const SeparatingFamily fam = build_separating_family(rep.family_k, rep.family_r, seed);
  rep.family_size = fam.sets.size();
  PartialEdgeColoring out = color_arcs_deterministic(d, x_set, hcol, fam);
  rep.colors = out.num_colors();
  return out;
}

inline std::vector<Vertex> prefix(const VertexOrdering& ord, std::size_t count) {
  count = std::min(count, ord.order.size());
  return {ord.order.begin(), ord.order.begin() + static_cast<std::ptrdiff_t>(count)};
}

inline VertexColoring all_unique(std::size_t n) {
  VertexColoring c;
  c.colors.resize(n);
  for (std::size_t v = 0; v < n; ++v) c.colors[v] = static_cast<Color>(v) + 1;
  return c;
}

// log2(a + 2^b) without overflow.
inline double log2_sum_pow(double a, double b) {
  if (a <= 0) return b;
  const double la = std::log2(a);
  const double hi = std::max(la, b);
  const double lo = std::min(la, b);
  return hi + std::log2(1 + std::exp2(lo - hi));
}

}  // namespace detail

/// Injective edge-coloring of a graph of asserted Euler genus g >= 2. The
/// first ceil(6g/ln g) - 1 vertices of the degeneracy ordering form V1 and
/// every edge inside V1 gets its own color. Arcs leaving V2 are colored per
/// class of a first-fit proper coloring by the deterministic arc procedure.
inline std::pair<EdgeColoring, PipelineReport> injective_color_genus(const UndirectedGraph& g,
                                                                     GenusParameter genus,
                                                                     std::uint64_t seed) {
  detail::require_genus(genus);
  PipelineReport rep;
  const VertexOrdering ord = degeneracy_order(g);
  detail::require_heawood(ord, genus.g, rep);

  const double lg = std::log(static_cast<double>(genus.g));
  const std::size_t split =
      static_cast<std::size_t>(std::ceil(6 * static_cast<double>(genus.g) / lg)) - 1;
  const std::size_t v1_size = std::min(split, g.n());
  rep.v1_size = v1_size;
  rep.v2_size = g.n() - v1_size;

  const OrientedGraph d = orient_by_ordering(g, ord);
  const VertexColoring phi = greedy_color(g, ord);
  const std::size_t class_cap = static_cast<std::size_t>(std::ceil(lg)) + 6;

  std::map<Color, std::vector<Vertex>> classes;
  for (std::size_t i = v1_size; i < g.n(); ++i) {
    const Vertex v = ord.order[i];
    if (static_cast<std::size_t>(phi[v]) > class_cap || d.out_degree(v) + 1 > class_cap) {
      throw Error(Errc::degeneracy_exceeds_heawood,
                  "vertex " + std::to_string(v) + " past V1 has " +
                      std::to_string(d.out_degree(v)) + " earlier neighbors and color " +
                      std::to_string(phi[v]) + "; genus " + std::to_string(genus.g) +
                      " allows at most " + std::to_string(class_cap) + " classes");
    }
    classes[phi[v]].push_back(v);
  }

  std::map<Edge, std::pair<Color, Color>> raw;
  for (const auto& [cls, xs] : classes) {
    ClassReport cr;
    cr.cls = cls;
    const PartialEdgeColoring part = detail::color_class_deterministic(
        d, xs, 2, genus.g, derive_seed(seed, static_cast<std::uint64_t>(cls)), cr);
    for (const auto& [e, color] : part) raw[e] = {cls, color};
    for (const auto& w : cr.warnings) rep.warnings.push_back("class " + std::to_string(cls) + ": " + w);
    rep.classes.push_back(std::move(cr));
  }

  std::vector<char> in_v1(g.n(), 0);
  for (std::size_t i = 0; i < v1_size; ++i) in_v1[ord.order[i]] = 1;
  Color fresh = 0;
  for (const Edge& e : g.edges()) {
    if (in_v1[e.u] && in_v1[e.v]) raw[e] = {0, ++fresh};
  }
  rep.v1_edges = static_cast<std::size_t>(fresh);
  rep.fresh_colors = rep.v1_edges;
  rep.v1_edge_limit = 6 * static_cast<double>(genus.g) + 36 * static_cast<double>(genus.g) / lg;
  rep.v1_edges_ok = 2 * static_cast<double>(rep.v1_edges) < rep.v1_edge_limit;
  if (!rep.v1_edges_ok) rep.warnings.push_back("2|E(G[V1])| reaches 6g + 36g/ln g");

  EdgeColoring out = canonicalize(raw);
  rep.colors_used = out.num_colors();
  rep.verified = verify_injective(g, out);
  return {std::move(out), std::move(rep)};
}

/// Oriented coloring of an oriented graph of asserted Euler genus g >= 2.
/// The first 6g vertices of the degeneracy ordering form V1. The remaining
/// graph G' (edges inside V1 dropped) is injectively colored, turned into an
/// oriented coloring via color-set pairs, and V1 is recolored with fresh
/// colors.
inline std::pair<VertexColoring, PipelineReport> oriented_color_genus(const OrientedGraph& d,
                                                                      GenusParameter genus,
                                                                      std::uint64_t seed) {
  detail::require_genus(genus);
  PipelineReport rep;
  const UndirectedGraph g = d.underlying();
  const VertexOrdering ord = degeneracy_order(g);
  detail::require_heawood(ord, genus.g, rep);

  const std::size_t six_g = 6 * genus.g;
  if (g.n() <= six_g) {
    rep.small_n = true;
    rep.v1_size = g.n();
    VertexColoring out = detail::all_unique(g.n());
    rep.colors_used = out.num_colors();
    rep.log2_bound = std::log2(static_cast<double>(six_g));
    rep.bound_ok = rep.colors_used <= six_g;
    rep.verified = verify_oriented_coloring(d, out);
    return {std::move(out), std::move(rep)};
  }

  const std::vector<Vertex> v1 = detail::prefix(ord, six_g);
  rep.v1_size = v1.size();
  rep.v2_size = g.n() - v1.size();
  std::vector<char> in_v1(g.n(), 0);
  for (Vertex v : v1) in_v1[v] = 1;

  const UndirectedGraph g_rest = filter_edges(g, [&](const Edge& e) { return !(in_v1[e.u] && in_v1[e.v]); });
  const OrientedGraph aux = orient_by_ordering(g_rest, ord);
  const VertexColoring phi = greedy_color(g_rest, ord);

  std::map<Color, std::vector<Vertex>> classes;
  for (std::size_t i = v1.size(); i < g.n(); ++i) {
    const Vertex v = ord.order[i];
    if (aux.out_degree(v) > 6 || phi[v] > 7) {
      throw Error(Errc::degeneracy_exceeds_heawood,
                  "vertex " + std::to_string(v) + " past V1 has out-degree " +
                      std::to_string(aux.out_degree(v)) + " and color " +
                      std::to_string(phi[v]) + "; genus " + std::to_string(genus.g) +
                      " allows 6 and 7");
    }
    classes[phi[v]].push_back(v);
  }

  std::map<Edge, std::pair<Color, Color>> raw;
  for (const auto& [cls, xs] : classes) {
    ClassReport cr;
    cr.cls = cls;
    const PartialEdgeColoring part = detail::color_class_deterministic(
        aux, xs, 6, genus.g, derive_seed(seed, static_cast<std::uint64_t>(cls)), cr);
    for (const auto& [e, color] : part) raw[e] = {cls, color};
    for (const auto& w : cr.warnings) rep.warnings.push_back("class " + std::to_string(cls) + ": " + w);
    rep.classes.push_back(std::move(cr));
  }
  const EdgeColoring inj = canonicalize(raw);
  rep.injective_colors = inj.num_colors();

  const OrientedGraph d_rest = filter_arcs(d, [&](const Arc& a) { return !(in_v1[a.tail] && in_v1[a.head]); });
  const VertexColoring base = oriented_from_injective(d_rest, inj);
  VertexColoring out = add_unique_colors(d, v1, base);
  rep.colors_used = out.num_colors();
  rep.log2_bound = detail::log2_sum_pow(static_cast<double>(six_g),
                                        2 * static_cast<double>(rep.injective_colors));
  rep.bound_ok = std::log2(static_cast<double>(rep.colors_used)) <= rep.log2_bound + 1e-12;
  rep.verified = verify_oriented_coloring(d, out);
  return {std::move(out), std::move(rep)};
}

struct DipathOptions {
  std::size_t d_budget = 2;
  std::size_t k_budget = 8;
  bool unverified_full = false;
  OracleBudget oracle;  // for the exact substitute when chi_2 < 5
};

/// C in the bound C (k ln k + g + 1).
inline constexpr double kDipathConstant = 1 << 20;

/// Oriented coloring through a 2-dipath coloring of G' and a homomorphism into
/// a full graph, with V1 recolored by fresh colors.
inline std::pair<VertexColoring, PipelineReport> oriented_color_genus_via_2dipath(
    const OrientedGraph& d, GenusParameter genus, std::uint64_t seed,
    const DipathOptions& opt = {}) {
  detail::require_genus(genus);
  PipelineReport rep;
  const UndirectedGraph g = d.underlying();
  const VertexOrdering ord = degeneracy_order(g);
  detail::require_heawood(ord, genus.g, rep);

  const std::vector<Vertex> v1 = detail::prefix(ord, 6 * genus.g);
  rep.v1_size = v1.size();
  rep.v2_size = g.n() - v1.size();
  rep.small_n = rep.v2_size == 0;
  std::vector<char> in_v1(g.n(), 0);
  for (Vertex v : v1) in_v1[v] = 1;

  const OrientedGraph d_rest = filter_arcs(d, [&](const Arc& a) { return !(in_v1[a.tail] && in_v1[a.head]); });
  const VertexColoring psi = greedy_2dipath(d_rest);
  rep.dipath_colors = psi.num_colors();

  VertexColoring base;
  const bool exact_fits = d_rest.n() <= opt.oracle.max_vertices && d_rest.m() <= opt.oracle.max_edges;
  if (rep.dipath_colors < 5 && exact_fits) {
    rep.exact_substitute = true;
    base = exact_oriented_coloring(d_rest, opt.oracle);
  } else {
    const VertexOrdering ord_rest = degeneracy_order(d_rest.underlying());
    const std::size_t k = std::max<std::size_t>(5, rep.dipath_colors);
    const std::size_t dd = std::max<std::size_t>(2, ord_rest.d);
    rep.full_k = k;
    rep.full_d = dd;
    rep.full_n = full_graph_part_size(k, dd);
    FullGraph h = FullGraph::random(k, dd, 1, 0);
    if (dd <= opt.d_budget && k <= opt.k_budget) {
      h = build_full_graph(k, dd, seed);
    } else if (opt.unverified_full) {
      h = sample_full_graph(k, dd, seed);
      rep.warnings.push_back("full graph sampled without certification");
    } else {
      throw Error(Errc::budget_exceeded,
                  "certifying a (" + std::to_string(k) + "," + std::to_string(dd) + "," +
                      std::to_string(rep.full_n) + ")-full graph exceeds the budget d <= " +
                      std::to_string(opt.d_budget) + ", k <= " + std::to_string(opt.k_budget) +
                      "; pass --unverified-full to sample one");
    }
    rep.full_certified = h.certified();
    const Homomorphism hom = homomorphism_to_full(d_rest, ord_rest, psi, h);
    if (!verify_homomorphism(d_rest, h, hom)) {
      throw Error(Errc::no_witness, "homomorphism does not preserve arcs");
    }
    base = coloring_from_homomorphism(hom);
  }

  VertexColoring out = add_unique_colors(d, v1, base);
  rep.colors_used = out.num_colors();
  const double k = static_cast<double>(std::max<std::size_t>(5, rep.dipath_colors));
  const double bound = kDipathConstant * (k * std::log(k) + static_cast<double>(genus.g) + 1);
  rep.log2_bound = std::log2(bound);
  rep.bound_ok = static_cast<double>(rep.colors_used) <= bound;
  rep.verified = verify_oriented_coloring(d, out);
  return {std::move(out), std::move(rep)};
}

}  // namespace injcol
