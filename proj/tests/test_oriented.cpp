#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "brute_force.hpp"
#include "injcol/generators.hpp"
#include "injcol/injective.hpp"
#include "injcol/oracles.hpp"
#include "injcol/oriented.hpp"

namespace {

using namespace injcol;

OrientedGraph arcs(std::size_t n, std::vector<Arc> list) { return OrientedGraph(n, list); }

TEST(OrientedFromInjectiveTest, single_arc_and_path) {
  const OrientedGraph one = arcs(2, {{0, 1}});
  EdgeColoring c1;
  c1.assign(make_edge(0, 1), 1);
  const auto pairs = oriented_color_pairs(one, c1);
  EXPECT_EQ(pairs[0], (OrientedColorPair{{1}, {}}));
  EXPECT_EQ(pairs[1], (OrientedColorPair{{}, {1}}));
  EXPECT_TRUE(verify_oriented_coloring(one, oriented_from_injective(one, c1)));

  const OrientedGraph p = arcs(3, {{0, 1}, {1, 2}});
  EdgeColoring c2;
  c2.assign(make_edge(0, 1), 1);
  c2.assign(make_edge(1, 2), 2);
  const auto pp = oriented_color_pairs(p, c2);
  EXPECT_EQ(pp[0], (OrientedColorPair{{1}, {}}));
  EXPECT_EQ(pp[1], (OrientedColorPair{{2}, {1}}));
  EXPECT_EQ(pp[2], (OrientedColorPair{{}, {2}}));
  EXPECT_TRUE(verify_oriented_coloring(p, oriented_from_injective(p, c2)));
}

TEST(OrientedFromInjectiveTest, rejects_non_injective) {
  const OrientedGraph t = arcs(3, {{0, 1}, {1, 2}, {2, 0}});
  EdgeColoring mono;
  for (const Edge& e : t.underlying().edges()) mono.assign(e, 1);
  try {
    oriented_from_injective(t, mono);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_injective_coloring);
  }
  EdgeColoring missing;
  missing.assign(make_edge(0, 1), 1);
  EXPECT_THROW(oriented_from_injective(t, missing), Error);
}

TEST(OrientedFromInjectiveTest, every_orientation_of_random_graphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const UndirectedGraph g = random_degenerate_graph(60, 3, seed);
    const EdgeColoring c = injective_color_degenerate(g, seed);
    for (std::uint64_t o = 0; o < 3; ++o) {
      const OrientedGraph d = random_orientation(g, derive_seed(seed, o));
      const VertexColoring oc = oriented_from_injective(d, c);
      EXPECT_TRUE(verify_oriented_coloring(d, oc));
      EXPECT_TRUE(verify_2dipath(d, oc));
      EXPECT_LE(std::log2(static_cast<double>(oc.num_colors())), 2.0 * static_cast<double>(c.num_colors()));
    }
  }
}

TEST(VerifyOrientedTest, examples) {
  EXPECT_TRUE(verify_oriented_coloring(arcs(2, {{0, 1}}), VertexColoring{{1, 2}}));
  EXPECT_FALSE(verify_oriented_coloring(arcs(3, {{0, 1}, {1, 2}}), VertexColoring{{1, 2, 1}}));
  const OrientedGraph d = random_orientation(random_degenerate_graph(30, 4, 2), 2);
  VertexColoring unique;
  for (int v = 0; v < 30; ++v) unique.colors.push_back(v + 1);
  EXPECT_TRUE(verify_oriented_coloring(d, unique));
}

TEST(VerifyOrientedTest, matches_definition_on_random_colorings) {
  Rng rng(17);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const OrientedGraph d = random_orientation(random_degenerate_graph(6, 2, seed), seed);
    std::vector<int> col(6);
    for (int& c : col) c = 1 + static_cast<int>(rng() % 4);
    const VertexColoring vc{col};
    EXPECT_EQ(verify_oriented_coloring(d, vc), brute::oriented_by_definition(d.arcs(), col));
    EXPECT_EQ(verify_2dipath(d, vc), brute::dipath_by_definition(d.arcs(), col));
    if (verify_oriented_coloring(d, vc)) {
      EXPECT_TRUE(verify_2dipath(d, vc));
    }
  }
}

TEST(VerifyDipathTest, examples) {
  const OrientedGraph p = arcs(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(verify_2dipath(p, VertexColoring{{1, 2, 3}}));
  EXPECT_FALSE(verify_2dipath(p, VertexColoring{{1, 2, 1}}));
  EXPECT_TRUE(verify_2dipath(arcs(4, {{0, 1}, {0, 2}, {0, 3}}), VertexColoring{{1, 2, 2, 2}}));
}

TEST(AddUniqueColorsTest, examples) {
  const OrientedGraph one = arcs(3, {{0, 1}});
  const VertexColoring base{{1, 2, 1}};
  EXPECT_EQ(add_unique_colors(one, std::vector<Vertex>{}, base).colors, base.colors);
  const VertexColoring out = add_unique_colors(one, std::vector<Vertex>{2}, base);
  EXPECT_EQ(out.colors[0], 1);
  EXPECT_EQ(out.colors[1], 2);
  EXPECT_EQ(out.colors[2], 3);
  EXPECT_TRUE(verify_oriented_coloring(one, out));

  const OrientedGraph tri = arcs(3, {{0, 1}, {1, 2}, {2, 0}});
  const VertexColoring flat{{1, 1, 1}};
  const VertexColoring t = add_unique_colors(tri, std::vector<Vertex>{0, 1, 2}, flat);
  EXPECT_EQ(t.num_colors(), 3u);
  EXPECT_TRUE(verify_oriented_coloring(tri, t));

  try {
    add_unique_colors(tri, std::vector<Vertex>{0}, flat);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_base_coloring);
  }
}

TEST(GreedyDipathTest, examples) {
  EXPECT_EQ(greedy_2dipath(arcs(2, {{0, 1}})).num_colors(), 2u);
  EXPECT_EQ(greedy_2dipath(arcs(3, {{0, 1}, {1, 2}})).num_colors(), 3u);
  EXPECT_EQ(greedy_2dipath(arcs(4, {{0, 1}, {0, 2}, {0, 3}})).num_colors(), 2u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const OrientedGraph d = random_orientation(random_degenerate_graph(40, 2, seed), seed);
    EXPECT_TRUE(verify_2dipath(d, greedy_2dipath(d)));
  }
}

TEST(SignVectorTest, examples) {
  const OrientedGraph d = arcs(3, {{0, 1}, {2, 0}});
  EXPECT_EQ(sign_vector(d, std::vector<Vertex>{1}, 0), (SignVector{1}));
  EXPECT_EQ(sign_vector(d, std::vector<Vertex>{1, 2}, 0), (SignVector{1, -1}));
  try {
    sign_vector(d, std::vector<Vertex>{2}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_adjacent);
  }
}

TEST(FullGraphTest, part_sizes) {
  EXPECT_EQ(full_graph_part_size(5, 2), 104u);  // 64 ln 5 = 103.004...
  EXPECT_EQ(full_graph_part_size(6, 2), 115u);
}

TEST(FullGraphTest, build_and_verify) {
  const FullGraph h = build_full_graph(5, 2, 0);
  EXPECT_EQ(h.part_size(), full_graph_part_size(5, 2));
  EXPECT_TRUE(h.certified());
  EXPECT_TRUE(verify_full(h));
  // Exactly one arc per cross pair, none inside a part.
  for (Vertex u = 0; u < static_cast<Vertex>(h.n()); u += 37) {
    for (Vertex v = 0; v < static_cast<Vertex>(h.n()); ++v) {
      if (u == v) continue;
      if (h.part_of(u) == h.part_of(v)) {
        EXPECT_FALSE(h.has_arc(u, v));
      } else {
        EXPECT_NE(h.has_arc(u, v), h.has_arc(v, u));
      }
    }
  }
}

TEST(FullGraphTest, invalid_parameters) {
  try {
    build_full_graph(4, 2, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_parameters);
  }
  EXPECT_THROW(build_full_graph(5, 1, 0), Error);
}

TEST(FullGraphTest, verifier_rejects_weak_graphs) {
  const FullGraph tiny = FullGraph::from_rule(5, 2, 1, [](Vertex u, Vertex v) { return (u + v) % 2 == 0; });
  EXPECT_FALSE(verify_full(tiny));
  // Part 0 sends every arc outward, so no x in part 0 has an in-arc.
  const std::size_t n = full_graph_part_size(5, 2);
  const FullGraph outward = FullGraph::from_rule(5, 2, n, [n](Vertex u, Vertex v) {
    if (static_cast<std::size_t>(u) < n) return true;
    return ((u * 7919) ^ (v * 104729)) % 2 == 0;
  });
  EXPECT_FALSE(verify_full(outward));
}

TEST(FullGraphTest, verifier_matches_brute_force_on_small_graphs) {
  // k = 5, d = 2, N = 4: enumerate every part, every ordered pair outside it,
  // and every sign pattern directly.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const FullGraph h = FullGraph::from_rule(5, 2, 4, [seed](Vertex u, Vertex v) {
      return (mix64(seed * 1000003 + static_cast<std::uint64_t>(u) * 131 + static_cast<std::uint64_t>(v)) & 1u) != 0;
    });
    bool full = true;
    for (std::size_t part = 0; part < 5 && full; ++part) {
      for (Vertex a = 0; a < 20 && full; ++a) {
        for (Vertex b = 0; b < 20 && full; ++b) {
          if (a == b || h.part_of(a) == part || h.part_of(b) == part) continue;
          for (int q = 0; q < 4 && full; ++q) {
            bool found = false;
            for (Vertex x = h.part_begin(part); x < h.part_begin(part) + 4; ++x) {
              const bool sa = (q & 1) ? h.has_arc(x, a) : h.has_arc(a, x);
              const bool sb = (q & 2) ? h.has_arc(x, b) : h.has_arc(b, x);
              found = found || (sa && sb);
            }
            full = found;
          }
        }
      }
    }
    EXPECT_EQ(verify_full(h), full) << "seed " << seed;
  }
}

TEST(HomomorphismTest, path_and_edgeless) {
  const FullGraph h = build_full_graph(5, 2, 3);
  const OrientedGraph p = arcs(3, {{0, 1}, {1, 2}});
  const UndirectedGraph up = p.underlying();
  const Homomorphism hom = homomorphism_to_full(p, degeneracy_order(up), VertexColoring{{1, 2, 3}}, h);
  EXPECT_TRUE(verify_homomorphism(p, h, hom));

  const OrientedGraph empty = arcs(4, {});
  const Homomorphism he = homomorphism_to_full(empty, degeneracy_order(empty.underlying()), VertexColoring{{1, 1, 2, 5}}, h);
  EXPECT_TRUE(verify_homomorphism(empty, h, he));
  EXPECT_EQ(h.part_of(he.map[3]), 4u);
}

TEST(HomomorphismTest, verifier_examples) {
  const OrientedGraph p = arcs(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(verify_homomorphism(p, p, Homomorphism{{0, 1, 2}}));
  EXPECT_FALSE(verify_homomorphism(p, p, Homomorphism{{1, 1, 2}}));
  EXPECT_FALSE(verify_homomorphism(p, p, Homomorphism{{1, 0, 2}}));
}

TEST(HomomorphismTest, random_two_degenerate_graphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const UndirectedGraph g = random_degenerate_graph(30, 2, seed);
    const OrientedGraph d = random_orientation(g, seed);
    const VertexColoring psi = greedy_2dipath(d);
    const std::size_t k = std::max<std::size_t>(5, psi.num_colors());
    if (k > 8) continue;
    const FullGraph h = build_full_graph(k, 2, seed);
    const Homomorphism hom = homomorphism_to_full(d, degeneracy_order(g), psi, h);
    EXPECT_TRUE(verify_homomorphism(d, h, hom));
    const VertexColoring c = coloring_from_homomorphism(hom);
    EXPECT_TRUE(verify_oriented_coloring(d, c));
    EXPECT_LE(c.num_colors(), k * h.part_size());
  }
}

TEST(HomomorphismTest, rejects_bad_psi) {
  const FullGraph h = build_full_graph(5, 2, 3);
  const OrientedGraph p = arcs(3, {{0, 1}, {1, 2}});
  try {
    homomorphism_to_full(p, degeneracy_order(p.underlying()), VertexColoring{{1, 2, 1}}, h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_2dipath);
  }
}

}  // namespace
