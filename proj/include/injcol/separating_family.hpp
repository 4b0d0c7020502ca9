#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "injcol/error.hpp"
#include "injcol/random.hpp"

namespace injcol {

/// Subsets P_1..P_m of {1..k} such that for every sequence of r distinct
/// elements some P_i contains the first and none of the rest.
struct SeparatingFamily {
  std::size_t k = 0;
  std::size_t r = 0;
  std::vector<std::vector<int>> sets;  // sorted, elements in 1..k

  friend bool operator==(const SeparatingFamily&, const SeparatingFamily&) = default;
};

/// ceil(e * r^2 * ln k)
inline std::size_t separating_family_size(std::size_t k, std::size_t r) {
  const double rr = static_cast<double>(r);
  return static_cast<std::size_t>(
      std::ceil(std::numbers::e * rr * rr * std::log(static_cast<double>(k))));
}

inline constexpr int kMaxConstructionAttempts = 64;

namespace detail {

// Is there a set of at most `budget` elements meeting every set in `sets`?
inline bool has_small_transversal(const std::vector<const std::vector<int>*>& sets,
                                  std::vector<char>& chosen, std::size_t budget) {
  const std::vector<int>* unhit = nullptr;
  for (const auto* s : sets) {
    const bool hit = std::any_of(s->begin(), s->end(), [&](int e) { return chosen[e] != 0; });
    if (!hit && (unhit == nullptr || s->size() < unhit->size())) unhit = s;
  }
  if (unhit == nullptr) return true;
  if (budget == 0) return false;
  for (int e : *unhit) {
    chosen[e] = 1;
    const bool found = has_small_transversal(sets, chosen, budget - 1);
    chosen[e] = 0;
    if (found) return true;
  }
  return false;
}

}  // namespace detail

/// Exact check of the separation property. For each candidate first element
/// a, the sets containing a (with a removed) must admit no transversal of
/// size r-1; such a transversal is exactly a tuple (a, a_2..a_r) that no set
/// separates. Tuples shorter than r extend to length r because k >= r.
inline bool verify_separating_family(const SeparatingFamily& f) {
  if (f.k == 0 || f.r == 0) return false;
  for (const auto& s : f.sets) {
    for (int e : s) {
      if (e < 1 || static_cast<std::size_t>(e) > f.k) return false;
    }
  }
  const std::size_t length = std::min(f.r, f.k);
  std::vector<char> chosen(f.k + 1, 0);
  for (int a = 1; static_cast<std::size_t>(a) <= f.k; ++a) {
    std::vector<std::vector<int>> rest;
    bool singleton = false;
    for (const auto& s : f.sets) {
      if (!std::binary_search(s.begin(), s.end(), a)) continue;
      std::vector<int> others;
      for (int e : s) {
        if (e != a) others.push_back(e);
      }
      if (others.empty()) {
        singleton = true;
        break;
      }
      rest.push_back(std::move(others));
    }
    if (singleton) continue;
    if (rest.empty()) return false;
    std::vector<const std::vector<int>*> ptrs;
    for (const auto& s : rest) ptrs.push_back(&s);
    if (detail::has_small_transversal(ptrs, chosen, length - 1)) return false;
  }
  return true;
}

/// Draws ceil(e r^2 ln k) random subsets, each element kept with probability
/// 1/r, and redraws from a derived seed until the family verifies.
inline SeparatingFamily build_separating_family(std::size_t k, std::size_t r,
                                                std::uint64_t seed) {
  if (r < 2 || k < r) {
    throw Error(Errc::invalid_parameters, "separating family needs k >= r >= 2 (k=" +
                                              std::to_string(k) + ", r=" + std::to_string(r) +
                                              ")");
  }
  const std::size_t size = separating_family_size(k, r);
  const double p = 1.0 / static_cast<double>(r);
  for (int attempt = 0; attempt < kMaxConstructionAttempts; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    SeparatingFamily f{k, r, {}};
    f.sets.resize(size);
    for (auto& s : f.sets) {
      for (int j = 1; static_cast<std::size_t>(j) <= k; ++j) {
        if (coin(rng, p)) s.push_back(j);
      }
    }
    if (verify_separating_family(f)) return f;
  }
  throw Error(Errc::construction_failed, "no separating family after " +
                                             std::to_string(kMaxConstructionAttempts) +
                                             " attempts");
}

}  // namespace injcol
