#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "depcalc/error.hpp"

namespace depcalc {

using Element = std::size_t;
using Pair = std::pair<Element, Element>;
using Permutation = std::vector<Element>;

/// Dense strict-order relation: entry (i, j) is true iff i < j.
using RelationMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// A strict partial order on the elements {0, ..., size-1}.
///
/// The relation is stored transitively closed, so `less(i, j)` is a lookup.
/// Values are immutable once built; every constructor path validates
/// irreflexivity and closure.
class FinitePoset {
 public:
  /// The empty poset.
  FinitePoset() = default;

  /// Transitive closure of `pairs` on `size` elements.
  /// Throws IndexError for out-of-range indices and CycleError naming the
  /// first input pair that lies on a cycle.
  static FinitePoset from_pairs(std::size_t size, std::span<const Pair> pairs);
  static FinitePoset from_pairs(std::size_t size, std::initializer_list<Pair> pairs) {
    return from_pairs(size, std::span<const Pair>(pairs.begin(), pairs.size()));
  }

  /// Closes `relation` and validates it the same way as from_pairs.
  static FinitePoset from_relation(const RelationMatrix& relation);

  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);
  static FinitePoset singleton() { return antichain(1); }

  std::size_t size() const { return static_cast<std::size_t>(lt_.rows()); }
  bool empty() const { return size() == 0; }

  bool less(Element i, Element j) const { return lt_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); }
  bool comparable(Element i, Element j) const { return less(i, j) || less(j, i); }

  const RelationMatrix& relation() const { return lt_; }

  /// All pairs (i, j) with i < j, in lexicographic order.
  std::vector<Pair> pairs() const;
  std::size_t relation_count() const { return static_cast<std::size_t>(lt_.count()); }

  /// Full sub-poset on `elements`; element k of the result is elements[k].
  FinitePoset restrict(std::span<const Element> elements) const;

  std::vector<Element> maximal_elements() const;
  std::vector<Element> minimal_elements() const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.size() == b.size() && a.lt_ == b.lt_;
  }

 private:
  explicit FinitePoset(RelationMatrix closed) : lt_(std::move(closed)) {}

  RelationMatrix lt_ = RelationMatrix(0, 0);
};

/// An injective, order-preserving and order-reflecting map of elements.
struct Embedding {
  std::vector<Element> mapping;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// P ⊔ Q: Q's elements shifted by |P|, no cross relations.
FinitePoset disjoint_union(const FinitePoset& p, const FinitePoset& q);

/// P ⋈ Q: as disjoint_union, plus p < q for every p from P and q from Q.
FinitePoset join(const FinitePoset& p, const FinitePoset& q);

/// Lexicographic substitution P ∘ (parts). Block a occupies a contiguous index
/// range in the order of P's elements. Throws ArityError if the part count
/// differs from |P|.
FinitePoset substitute(const FinitePoset& outer, std::span<const FinitePoset> parts);

/// Identity-on-elements inclusion lt(P) ⊆ lt(Q); false when sizes differ.
bool is_inclusion(const FinitePoset& p, const FinitePoset& q);

/// Every full embedding of `pattern` into `target`, in lexicographic order
/// of the mapping.
std::vector<Embedding> full_embeddings(const FinitePoset& pattern, const FinitePoset& target);

/// Every linear extension, as the element sequence listed from bottom to top,
/// in lexicographic order.
std::vector<Permutation> linear_extensions(const FinitePoset& p);

/// The lexicographically least linear extension (repeatedly take the least
/// minimal element of what remains).
Permutation least_linear_extension(const FinitePoset& p);

/// True iff `order` is a permutation listing P's elements consistently with P.
bool is_linear_extension(const FinitePoset& p, std::span<const Element> order);

/// All nonempty chains i1 < ... < ik, ordered by length then lexicographically.
std::vector<std::vector<Element>> chains(const FinitePoset& p);

/// Largest n accepted by enumerate_posets / for_each_poset.
inline constexpr std::size_t kEnumerationLimit = 6;

/// Calls `visit` once for every labeled strict partial order on n elements.
/// The order is deterministic. Throws SizeError when n > kEnumerationLimit.
void for_each_poset(std::size_t n, const std::function<void(const FinitePoset&)>& visit);
std::vector<FinitePoset> enumerate_posets(std::size_t n);

/// Components of the undirected comparability graph, each sorted, ordered by
/// least element.
std::vector<std::vector<Element>> connected_components(const FinitePoset& p);

/// Cover pairs (Hasse diagram), in lexicographic order.
std::vector<Pair> transitive_reduction(const FinitePoset& p);

}  // namespace depcalc
