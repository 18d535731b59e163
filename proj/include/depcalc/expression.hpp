#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "depcalc/poset.hpp"

namespace depcalc {

/// A physical duoidal expression: a term over the shared unit `e`, variables,
/// the parallel product `ox` and the sequential product `tri`.
///
/// Normal form: Otimes/Tri have at least two children, never a child of the
/// same kind; Unit only as the whole expression; Otimes children sorted by
/// least variable. Each variable occurs once.
class Expression {
 public:
  enum class Kind { Unit, Var, Otimes, Tri };

  static Expression unit() { return Expression(Kind::Unit, 0, {}); }
  static Expression var(Element index) { return Expression(Kind::Var, index, {}); }
  static Expression otimes(std::vector<Expression> children) {
    return Expression(Kind::Otimes, 0, std::move(children));
  }
  static Expression tri(std::vector<Expression> children) {
    return Expression(Kind::Tri, 0, std::move(children));
  }

  Kind kind() const { return kind_; }
  Element index() const { return index_; }
  const std::vector<Expression>& children() const { return children_; }

  /// Variables in left-to-right order.
  std::vector<Element> variables() const;

  friend bool operator==(const Expression&, const Expression&) = default;

 private:
  Expression(Kind kind, Element index, std::vector<Expression> children)
      : kind_(kind), index_(index), children_(std::move(children)) {}

  Kind kind_;
  Element index_;
  std::vector<Expression> children_;
};

/// Canonical representative of an expression's equivalence class.
Expression normalize(const Expression& e);

bool is_normal(const Expression& e);

/// s-expression text: `e`, `x3`, `(ox a b ...)`, `(tri a b ...)`.
std::string to_string(const Expression& e);

/// Parses the text produced by to_string. The result is not normalized.
/// Throws ParseError.
Expression parse_expression(std::string_view text);

/// Four elements inducing exactly a < b, c < b, c < d.
struct Obstruction {
  Element a, b, c, d;

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

std::string to_string(const Obstruction& z);

/// The zig-zag poset a < b > c < d on {0, 1, 2, 3}.
FinitePoset zigzag();

/// Lexicographically least full embedding of the zig-zag, if any.
std::optional<Obstruction> find_z(const FinitePoset& p);

bool is_expressible(const FinitePoset& p);

using Decomposition = std::variant<Expression, Obstruction>;

/// Normal-form expression over the element indices, or the zig-zag found.
/// Splits connected posets at the top: the elements below every maximal
/// element join the rest.
Decomposition decompose(const FinitePoset& p);

/// The poset an expression denotes; element i is variable i. Requires a
/// normal, linear expression over variables 0..n-1, else MalformedExpression.
FinitePoset evaluate(const Expression& e);

/// Like evaluate, but over the element universe {0..universe-1}; variables
/// may be any subset of it. Elements not mentioned are left isolated.
FinitePoset evaluate_on(const Expression& e, std::size_t universe);

/// Throws MalformedExpression unless variables are distinct and every
/// compound node has at least two children.
void check_linear(const Expression& e);

}  // namespace depcalc
