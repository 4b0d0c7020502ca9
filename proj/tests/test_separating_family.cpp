#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "injcol/separating_family.hpp"

namespace {

using namespace injcol;

TEST(SeparatingFamilyTest, sizes) {
  EXPECT_EQ(separating_family_size(2, 2), 8u);
  EXPECT_EQ(separating_family_size(5, 2), 18u);
  EXPECT_EQ(separating_family_size(12, 3), 61u);
}

TEST(SeparatingFamilyTest, verifier_examples) {
  EXPECT_TRUE(verify_separating_family(SeparatingFamily{2, 2, {{1}, {2}}}));
  EXPECT_FALSE(verify_separating_family(SeparatingFamily{2, 2, {{1, 2}}}));
  EXPECT_FALSE(verify_separating_family(SeparatingFamily{3, 2, {}}));
  EXPECT_FALSE(verify_separating_family(SeparatingFamily{3, 2, {{1, 4}}}));
}

TEST(SeparatingFamilyTest, built_families_separate_exhaustively) {
  for (std::size_t r = 2; r <= 3; ++r) {
    for (std::size_t k = r; k <= 12; ++k) {
      const SeparatingFamily f = build_separating_family(k, r, 1000 * k + r);
      EXPECT_LE(f.sets.size(), separating_family_size(k, r));
      EXPECT_TRUE(verify_separating_family(f));
      for (std::size_t len = 2; len <= r; ++len) {
        EXPECT_TRUE(brute::separates(k, len, f.sets)) << "k=" << k << " r=" << r << " len=" << len;
      }
    }
  }
}

TEST(SeparatingFamilyTest, verifier_matches_brute_force_on_random_families) {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 3 + trial % 5;
    const std::size_t r = 2 + trial % 2;
    SeparatingFamily f{k, r, {}};
    const std::size_t count = 2 + trial % 9;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<int> s;
      for (int e = 1; e <= static_cast<int>(k); ++e) {
        if (coin(rng, 0.4)) s.push_back(e);
      }
      f.sets.push_back(s);
    }
    EXPECT_EQ(verify_separating_family(f), brute::separates(k, r, f.sets)) << "trial " << trial;
  }
}

TEST(SeparatingFamilyTest, deterministic_given_seed) {
  EXPECT_EQ(build_separating_family(9, 3, 42), build_separating_family(9, 3, 42));
}

TEST(SeparatingFamilyTest, invalid_parameters) {
  try {
    build_separating_family(1, 2, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_parameters);
  }
  EXPECT_THROW(build_separating_family(5, 1, 0), Error);
}

}  // namespace
