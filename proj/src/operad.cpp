#include "depcalc/operad.hpp"

#include <algorithm>
#include <string>

#include "depcalc/expression.hpp"

namespace depcalc {

namespace {

bool is_permutation_of(std::span<const Element> tau, std::size_t n) {
  if (tau.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Element x : tau) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

FinitePoset act(std::span<const Element> tau, const FinitePoset& p) {
  if (!is_permutation_of(tau, p.size())) {
    throw ArityError("act: not a permutation of " + std::to_string(p.size()) + " elements");
  }
  std::vector<Pair> moved;
  for (const auto& [a, b] : p.pairs()) moved.emplace_back(tau[a], tau[b]);
  return FinitePoset::from_pairs(p.size(), moved);
}

Permutation block_permutation(std::span<const Element> tau, std::span<const std::size_t> sizes) {
  if (!is_permutation_of(tau, sizes.size())) throw ArityError("block_permutation: bad permutation");
  const std::size_t blocks = sizes.size();
  std::vector<std::size_t> size_at(blocks, 0);
  for (std::size_t a = 0; a < blocks; ++a) size_at[tau[a]] = sizes[a];
  std::vector<std::size_t> new_offset(blocks + 1, 0);
  for (std::size_t b = 0; b < blocks; ++b) new_offset[b + 1] = new_offset[b] + size_at[b];

  Permutation out;
  for (std::size_t a = 0; a < blocks; ++a) {
    for (std::size_t r = 0; r < sizes[a]; ++r) out.push_back(new_offset[tau[a]] + r);
  }
  return out;
}

Permutation compose_permutations(std::span<const Element> outer, std::span<const Element> inner) {
  if (outer.size() != inner.size()) throw ArityError("compose_permutations: size mismatch");
  Permutation out(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) out[x] = outer[inner[x]];
  return out;
}

Permutation inverse_permutation(std::span<const Element> tau) {
  if (!is_permutation_of(tau, tau.size())) throw ArityError("inverse_permutation: bad permutation");
  Permutation out(tau.size());
  for (std::size_t x = 0; x < tau.size(); ++x) out[tau[x]] = x;
  return out;
}

namespace {

struct WitnessInput {
  std::vector<std::size_t> position;
  std::size_t pos_i;
  std::size_t pos_j;
};

WitnessInput check_witness_input(const FinitePoset& p, std::span<const Element> extension,
                                 Element i, Element j) {
  if (!is_linear_extension(p, extension)) {
    throw PreconditionError("incomparability_witness: not a linear extension of the poset");
  }
  if (i >= p.size() || j >= p.size() || i == j || p.comparable(i, j)) {
    throw PreconditionError("incomparability_witness: elements must be distinct and incomparable");
  }
  WitnessInput in{std::vector<std::size_t>(p.size()), 0, 0};
  for (std::size_t k = 0; k < extension.size(); ++k) in.position[extension[k]] = k;
  in.pos_i = in.position[i];
  in.pos_j = in.position[j];
  if (in.pos_i > in.pos_j) {
    throw PreconditionError("incomparability_witness: i must come before j in the extension");
  }
  return in;
}

// chain(levels[0]) ⋈ (chain(levels[1]) ⊔ chain(levels[2])) ⋈ chain(levels[3]); every
// chain follows the extension order.
FinitePoset layered_chains(std::size_t n, std::span<const Element> extension,
                           const std::vector<int>& level) {
  // Parallel chains 1 and 2 share a rank; everything else is totally ordered.
  auto rank = [](int l) { return l == 0 ? 0 : (l == 3 ? 2 : 1); };
  std::vector<Pair> rel;
  for (std::size_t a = 0; a < extension.size(); ++a) {
    for (std::size_t b = a + 1; b < extension.size(); ++b) {
      const Element x = extension[a], y = extension[b];
      const int lx = level[x], ly = level[y];
      if (rank(lx) < rank(ly) || lx == ly) rel.emplace_back(x, y);
      else if (rank(lx) > rank(ly)) rel.emplace_back(y, x);
    }
  }
  return FinitePoset::from_pairs(n, rel);
}

}  // namespace

FinitePoset extension_split_witness(const FinitePoset& p, std::span<const Element> extension,
                                    Element i, Element j) {
  const WitnessInput in = check_witness_input(p, extension, i, j);
  std::vector<int> level(p.size());
  for (Element k = 0; k < p.size(); ++k) {
    const std::size_t pos = in.position[k];
    if (pos < in.pos_i) level[k] = 0;
    else if (pos > in.pos_j) level[k] = 3;
    else if (k == i || (k != j && p.less(i, k))) level[k] = 1;
    else level[k] = 2;
  }
  return layered_chains(p.size(), extension, level);
}

FinitePoset incomparability_witness(const FinitePoset& p, std::span<const Element> extension,
                                    Element i, Element j) {
  FinitePoset candidate = extension_split_witness(p, extension, i, j);
  if (is_inclusion(p, candidate)) return candidate;

  std::vector<int> level(p.size());
  for (Element k = 0; k < p.size(); ++k) {
    if (p.less(k, i) || p.less(k, j)) level[k] = 0;
    else if (p.less(i, k) || p.less(j, k)) level[k] = 3;
    else if (k == i) level[k] = 1;
    else level[k] = 2;
  }
  return layered_chains(p.size(), extension, level);
}

std::vector<FinitePoset> expressible_covers(const FinitePoset& p) {
  const Permutation ext = least_linear_extension(p);
  std::vector<std::size_t> position(p.size());
  for (std::size_t k = 0; k < ext.size(); ++k) position[ext[k]] = k;

  std::vector<FinitePoset> covers{FinitePoset::from_pairs(p.size(), [&] {
    std::vector<Pair> rel;
    for (std::size_t a = 0; a + 1 < ext.size(); ++a) rel.emplace_back(ext[a], ext[a + 1]);
    return rel;
  }())};
  for (Element a = 0; a < p.size(); ++a) {
    for (Element b = a + 1; b < p.size(); ++b) {
      if (p.comparable(a, b)) continue;
      if (position[a] < position[b]) covers.push_back(incomparability_witness(p, ext, a, b));
      else covers.push_back(incomparability_witness(p, ext, b, a));
    }
  }
  return covers;
}

FinitePoset intersect(std::span<const FinitePoset> posets) {
  if (posets.empty()) throw PreconditionError("intersect: empty list");
  RelationMatrix m = posets.front().relation();
  for (const auto& q : posets.subspan(1)) {
    if (q.size() != posets.front().size()) throw SizeMismatch("intersect: posets differ in size");
    m = (m.array() && q.relation().array()).matrix();
  }
  return FinitePoset::from_relation(m);
}

CoverFactorization terminal_cover_factorization(const FinitePoset& r, const FinitePoset& p,
                                                std::span<const FinitePoset> parts) {
  if (parts.size() != p.size()) throw PreconditionError("terminal_cover_factorization: arity mismatch");
  for (const auto& part : parts) {
    if (part.empty()) throw PreconditionError("terminal_cover_factorization: empty part");
  }
  if (!is_inclusion(mu(p, parts), r)) {
    throw PreconditionError("terminal_cover_factorization: composite is not contained in R");
  }
  if (!is_expressible(r)) throw PreconditionError("terminal_cover_factorization: R is not expressible");

  std::vector<std::vector<Element>> blocks;
  Element next = 0;
  for (const auto& part : parts) {
    blocks.emplace_back();
    for (std::size_t k = 0; k < part.size(); ++k) blocks.back().push_back(next++);
  }

  CoverFactorization out;
  for (const auto& block : blocks) out.parts.push_back(r.restrict(block));
  std::vector<Pair> outer;
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (a == b) continue;
      bool all_below = true;
      for (Element x : blocks[a]) {
        for (Element y : blocks[b]) all_below = all_below && r.less(x, y);
      }
      if (all_below) outer.emplace_back(a, b);
    }
  }
  out.outer = FinitePoset::from_pairs(p.size(), outer);
  return out;
}

}  // namespace depcalc
