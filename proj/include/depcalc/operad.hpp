#pragma once

#include <span>
#include <vector>

#include "depcalc/poset.hpp"

namespace depcalc {

/// Operadic composition in the operad of finite posets (lexicographic
/// substitution).
inline FinitePoset mu(const FinitePoset& outer, std::span<const FinitePoset> parts) {
  return substitute(outer, parts);
}

/// The one poset structure on a single element.
inline FinitePoset operad_unit() { return FinitePoset::singleton(); }

/// Relabels P along tau: (tau(a), tau(b)) is related iff (a, b) is.
/// Throws ArityError if tau is not a permutation of P's elements.
FinitePoset act(std::span<const Element> tau, const FinitePoset& p);

/// Permutation of a substituted carrier moving block a (of length sizes[a])
/// to block position tau(a), preserving the order inside each block.
Permutation block_permutation(std::span<const Element> tau, std::span<const std::size_t> sizes);

Permutation compose_permutations(std::span<const Element> outer, std::span<const Element> inner);
Permutation inverse_permutation(std::span<const Element> tau);

/// An expressible poset containing P in which i and j stay incomparable.
///
/// `extension` lists P's elements bottom to top and places i before j. The
/// result is a chain, then two parallel chains (one through i, one through
/// j), then a chain. Throws PreconditionError on any violated precondition.
FinitePoset incomparability_witness(const FinitePoset& p, std::span<const Element> extension,
                                    Element i, Element j);

/// The prefix/middle/suffix split taken directly from the elements before i,
/// between i and j, and after j in the extension. It can lose relations of
/// P between the two middle chains; incomparability_witness falls back to a
/// split by P's strict down- and up-sets of {i, j} when that happens.
FinitePoset extension_split_witness(const FinitePoset& p, std::span<const Element> extension,
                                    Element i, Element j);

/// Expressible posets containing P whose intersection is P: the least linear
/// extension, then one witness per incomparable pair {i, j} with i < j,
/// oriented by that extension.
std::vector<FinitePoset> expressible_covers(const FinitePoset& p);

/// Meet in the inclusion order. Throws PreconditionError on an empty list and
/// SizeMismatch when sizes differ.
FinitePoset intersect(std::span<const FinitePoset> posets);

struct CoverFactorization {
  FinitePoset outer;
  std::vector<FinitePoset> parts;
};

/// The largest block-composite Q ∘ (Q_i) lying under the expressible R and
/// above P ∘ (parts): parts_i becomes R restricted to block i, and blocks
/// i < j whenever every element of block i is below every element of block
/// j in R. Requires R expressible, P ∘ (parts) ⊆ R, and nonempty parts.
CoverFactorization terminal_cover_factorization(const FinitePoset& r, const FinitePoset& p,
                                                std::span<const FinitePoset> parts);

}  // namespace depcalc
