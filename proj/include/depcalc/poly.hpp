#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "depcalc/poset.hpp"

namespace depcalc {

/// A finite polynomial functor: an ordered list of positions, position I
/// carrying the direction set {0, ..., directions(I)-1}.
class FinitePolynomial {
 public:
  FinitePolynomial() = default;
  explicit FinitePolynomial(std::vector<std::size_t> directions) : directions_(std::move(directions)) {}

  /// The identity functor y: one position with one direction.
  static FinitePolynomial y() { return FinitePolynomial({1}); }
  /// y^d.
  static FinitePolynomial representable(std::size_t d) { return FinitePolynomial({d}); }

  std::size_t position_count() const { return directions_.size(); }
  std::size_t directions(std::size_t position) const { return directions_.at(position); }
  const std::vector<std::size_t>& direction_counts() const { return directions_; }

  friend bool operator==(const FinitePolynomial&, const FinitePolynomial&) = default;

 private:
  std::vector<std::size_t> directions_;
};

/// Multiset of direction counts, sorted in decreasing order. Two finite
/// polynomials are isomorphic iff their signatures are equal.
using PolySignature = std::vector<std::size_t>;

PolySignature signature(const FinitePolynomial& p);

/// Sum notation, e.g. "y^2 + 2y + 1" (terms by decreasing exponent).
std::string to_string(const PolySignature& s);

/// p ⊗ q: positions (I, J) in lexicographic order, directions p[I] × q[J]
/// encoded row-major.
FinitePolynomial dirichlet(const FinitePolynomial& p, const FinitePolynomial& q);

/// p ◁ q: positions (I, f) with f : p[I] -> q(1), I-major then f in
/// lexicographic order (f(0) most significant); directions are pairs (i, j)
/// with j in q[f(i)], ordered by i then j.
FinitePolynomial compose(const FinitePolynomial& p, const FinitePolynomial& q);

/// A position of p ◁ q, decoded.
struct ComposePosition {
  std::size_t outer;
  std::vector<std::size_t> choice;  // choice[i] = f(i), a position of q

  friend bool operator==(const ComposePosition&, const ComposePosition&) = default;
};

std::size_t encode_compose_position(const FinitePolynomial& p, const FinitePolynomial& q,
                                    const ComposePosition& pos);
ComposePosition decode_compose_position(const FinitePolynomial& p, const FinitePolynomial& q,
                                        std::size_t index);

/// Direction (i, j) of p ◁ q at `pos`, as its index in the composite.
std::size_t encode_compose_direction(const FinitePolynomial& q, const ComposePosition& pos,
                                     std::size_t i, std::size_t j);

/// A morphism of polynomials: positions forward, directions backward.
/// on_directions[I][t] is the source direction at I that target direction t
/// of on_positions[I] pulls back to.
struct PolyMorphism {
  FinitePolynomial source;
  FinitePolynomial target;
  std::vector<std::size_t> on_positions;
  std::vector<std::vector<std::size_t>> on_directions;

  friend bool operator==(const PolyMorphism&, const PolyMorphism&) = default;
};

/// Every mapped position exists and each direction pullback is a total
/// function into the source position's directions.
bool is_valid(const PolyMorphism& m);

/// p ⊗ q -> p ◁ q, (I, J) |-> (I, const_J); directions pull back identically.
PolyMorphism comparitor(const FinitePolynomial& p, const FinitePolynomial& q);

/// (p ◁ q) ⊗ (r ◁ s) -> (p ⊗ r) ◁ (q ⊗ s), ((I,J),(K,L)) |-> ((I,K), J × L).
PolyMorphism interchanger(const FinitePolynomial& p, const FinitePolynomial& q,
                          const FinitePolynomial& r, const FinitePolynomial& s);

/// Poset-indexed product: strategy profiles over parts[ell_1] ◁ ... ◁
/// parts[ell_n] in which the stage-k position is a function of the
/// directions chosen at the stages j with ell_j < ell_k in P. Directions are
/// the complete direction histories of the profile. Throws ArityError,
/// InvalidExtension, and SizeError when a part exceeds
/// kPolyPartPositionLimit positions or the result grows past a fixed budget.
FinitePolynomial boxtimes_poly(const FinitePoset& p, std::span<const FinitePolynomial> parts,
                               std::span<const Element> extension);

/// boxtimes_poly over the least linear extension.
FinitePolynomial boxtimes_poly(const FinitePoset& p, std::span<const FinitePolynomial> parts);

/// Largest part size boxtimes_poly accepts, in positions.
inline constexpr std::size_t kPolyPartPositionLimit = 4;

}  // namespace depcalc
