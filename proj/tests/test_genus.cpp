#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "injcol/generators.hpp"
#include "injcol/genus.hpp"
#include "injcol/oracles.hpp"

namespace {

using namespace injcol;

template <class Fn>
void expect_code(Errc code, Fn fn) {
  try {
    fn();
    ADD_FAILURE() << "no error thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(HeawoodTest, values) {
  EXPECT_EQ(heawood_degeneracy(2), 6u);
  EXPECT_EQ(heawood_degeneracy(4), 7u);
  EXPECT_EQ(heawood_degeneracy(10), 10u);
}

TEST(InjectiveGenusTest, k8_fresh_colors) {
  const UndirectedGraph k8 = complete_graph(8);
  auto [c, rep] = injective_color_genus(k8, GenusParameter{genus_of_complete(8)}, 0);
  EXPECT_TRUE(rep.verified);
  EXPECT_TRUE(verify_injective(k8, c));
  EXPECT_GE(c.num_colors(), 28u);
  EXPECT_EQ(rep.fresh_colors, rep.v1_edges);
}

TEST(InjectiveGenusTest, grid_with_g2) {
  const UndirectedGraph g = grid(5, 5);
  auto [c, rep] = injective_color_genus(g, GenusParameter{2}, 1);
  EXPECT_TRUE(rep.verified);
  EXPECT_TRUE(verify_injective(g, c));
  EXPECT_TRUE(rep.v1_edges_ok);
  EXPECT_EQ(rep.v1_size + rep.v2_size, g.n());
}

TEST(InjectiveGenusTest, larger_planar_inputs_use_the_class_procedure) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const UndirectedGraph g = random_planar_graph(12, 12, 0.8, seed);
    auto [c, rep] = injective_color_genus(g, GenusParameter{2 + seed % 2}, seed);
    EXPECT_TRUE(rep.verified);
    EXPECT_TRUE(verify_injective(g, c));
    EXPECT_FALSE(rep.classes.empty());
    EXPECT_TRUE(rep.v1_edges_ok);
    EXPECT_TRUE(rep.warnings.empty());
    const double cap = std::ceil(std::log(static_cast<double>(2 + seed % 2))) + 6;
    EXPECT_LE(static_cast<double>(rep.classes.size()), cap);
  }
}

TEST(InjectiveGenusTest, errors) {
  expect_code(Errc::genus_too_small, [] { injective_color_genus(path(3), GenusParameter{1}, 0); });
  expect_code(Errc::degeneracy_exceeds_heawood,
              [] { injective_color_genus(complete_graph(12), GenusParameter{2}, 0); });
}

TEST(OrientedGenusTest, k8_small_n_branch) {
  const OrientedGraph d = random_orientation(complete_graph(8), 3);
  auto [c, rep] = oriented_color_genus(d, GenusParameter{4}, 0);
  EXPECT_TRUE(rep.small_n);
  EXPECT_EQ(c.num_colors(), 8u);
  EXPECT_TRUE(verify_oriented_coloring(d, c));
}

TEST(OrientedGenusTest, random_hundred_vertex_graph) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const UndirectedGraph g = random_planar_graph(10, 10, 0.75, seed);
    const OrientedGraph d = random_orientation(g, seed);
    auto [c, rep] = oriented_color_genus(d, GenusParameter{2}, seed);
    EXPECT_FALSE(rep.small_n);
    EXPECT_EQ(rep.v1_size, 12u);
    EXPECT_TRUE(rep.verified);
    EXPECT_TRUE(verify_oriented_coloring(d, c));
    EXPECT_TRUE(rep.bound_ok);
    for (const ClassReport& cr : rep.classes) {
      EXPECT_LE(cr.max_out_degree, 6u);
      EXPECT_LE(cr.cls, 7);
    }
  }
}

TEST(OrientedGenusTest, errors) {
  const OrientedGraph d = random_orientation(path(4), 0);
  expect_code(Errc::genus_too_small, [&] { oriented_color_genus(d, GenusParameter{0}, 0); });
  const OrientedGraph dense = random_orientation(complete_graph(14), 0);
  expect_code(Errc::degeneracy_exceeds_heawood, [&] { oriented_color_genus(dense, GenusParameter{2}, 0); });
}

TEST(DipathGenusTest, path_in_sparse_graph) {
  // A long directed path with a few extra vertices; g = 2 puts 12 vertices in V1.
  std::vector<Arc> arcs;
  for (int v = 0; v + 1 < 40; ++v) arcs.push_back(Arc{v, v + 1});
  const OrientedGraph d(40, arcs);
  DipathOptions opt;
  opt.d_budget = 2;
  auto [c, rep] = oriented_color_genus_via_2dipath(d, GenusParameter{2}, 0, opt);
  EXPECT_TRUE(rep.verified);
  EXPECT_TRUE(verify_oriented_coloring(d, c));
  EXPECT_TRUE(rep.full_certified);
  EXPECT_EQ(rep.full_k, 5u);
  EXPECT_EQ(rep.full_d, 2u);
  EXPECT_LE(c.num_colors(), 6 * 2 + 5 * full_graph_part_size(5, 2));
  EXPECT_TRUE(rep.bound_ok);
}

TEST(DipathGenusTest, budget_and_unverified_flag) {
  const UndirectedGraph g = random_degenerate_graph(60, 3, 4);
  const OrientedGraph d = random_orientation(g, 4);
  expect_code(Errc::budget_exceeded, [&] { oriented_color_genus_via_2dipath(d, GenusParameter{2}, 0); });
  DipathOptions opt;
  opt.unverified_full = true;
  auto [c, rep] = oriented_color_genus_via_2dipath(d, GenusParameter{2}, 0, opt);
  EXPECT_FALSE(rep.full_certified);
  EXPECT_TRUE(rep.verified);
  EXPECT_TRUE(verify_oriented_coloring(d, c));
}

TEST(DipathGenusTest, exact_substitute_for_tiny_remainders) {
  const OrientedGraph d(3, std::vector<Arc>{Arc{0, 1}});
  auto [c, rep] = oriented_color_genus_via_2dipath(d, GenusParameter{2}, 0);
  EXPECT_TRUE(rep.exact_substitute);
  EXPECT_TRUE(verify_oriented_coloring(d, c));
}

}  // namespace
