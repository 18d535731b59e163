#pragma once

#include <functional>
#include <random>
#include <vector>

#include "depcalc/poset.hpp"
#include "oracles.hpp"

namespace support {

using depcalc::FinitePoset;

inline std::function<bool(int, int)> less_of(const FinitePoset& p) {
  return [&p](int i, int j) { return p.less(std::size_t(i), std::size_t(j)); };
}

inline FinitePoset from_rel(const oracle::Rel& r) {
  std::vector<depcalc::Pair> pairs;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[i][j]) pairs.emplace_back(i, j);
  return FinitePoset::from_pairs(r.size(), pairs);
}

// Labels a, b, c, d as 0, 1, 2, 3.
inline FinitePoset z() { return FinitePoset::from_pairs(4, {{0, 1}, {2, 1}, {2, 3}}); }

// a < b, a < c < d.
inline FinitePoset expression_poset() { return FinitePoset::from_pairs(4, {{0, 1}, {0, 2}, {2, 3}}); }

inline std::mt19937& rng() {
  static std::mt19937 g(20240613u);
  return g;
}

// Random order: relate i < j (i < j as indices) with probability p, then
// relabel by a random permutation.
inline FinitePoset random_poset(std::size_t n, double p = 0.35) {
  std::bernoulli_distribution coin(p);
  std::vector<depcalc::Element> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng());
  std::vector<depcalc::Pair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng())) pairs.emplace_back(perm[i], perm[j]);
  return FinitePoset::from_pairs(n, pairs);
}

inline std::size_t uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

}  // namespace support
