#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "depcalc/expression.hpp"
#include "depcalc/operad.hpp"
#include "support.hpp"

using namespace depcalc;
using support::less_of;

namespace {

Expression x(Element i) { return Expression::var(i); }
Expression ox(std::vector<Expression> c) { return Expression::otimes(std::move(c)); }
Expression tri(std::vector<Expression> c) { return Expression::tri(std::move(c)); }

// Random binary tree over the given variables with scattered units.
Expression random_tree(std::vector<Element> vars) {
  if (vars.empty()) return Expression::unit();
  if (vars.size() == 1) {
    if (support::uniform(0, 5) == 0) return tri({Expression::unit(), x(vars[0])});
    return x(vars[0]);
  }
  const std::size_t cut = support::uniform(1, vars.size() - 1);
  std::vector<Element> left(vars.begin(), vars.begin() + long(cut)), right(vars.begin() + long(cut), vars.end());
  Expression l = random_tree(left), r = random_tree(right);
  return support::uniform(0, 1) ? ox({l, r}) : tri({l, r});
}

}  // namespace

TEST_CASE("find_z") {
  const auto z = find_z(support::z());
  REQUIRE(z);
  CHECK(*z == Obstruction{0, 1, 2, 3});
  CHECK(to_string(*z) == "(0,1,2,3)");
  CHECK_FALSE(find_z(FinitePoset::chain(4)));
  CHECK_FALSE(find_z(support::expression_poset()));
  CHECK(zigzag() == support::z());
}

TEST_CASE("find_z agrees with the brute-force search and returns a true Z") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_poset(n, [&](const FinitePoset& p) {
      const auto z = find_z(p);
      CHECK(bool(z) == oracle::has_z(int(n), less_of(p)));
      CHECK(is_expressible(p) == !z);
      if (z) {
        const std::vector<Element> four{z->a, z->b, z->c, z->d};
        CHECK(p.restrict(four) == zigzag());
      }
    });
  }
}

TEST_CASE("is_expressible") {
  CHECK(is_expressible(FinitePoset()));
  CHECK_FALSE(is_expressible(support::z()));
  for (const auto& p : enumerate_posets(3)) CHECK(is_expressible(p));
}

TEST_CASE("decompose") {
  const auto d = decompose(support::expression_poset());
  REQUIRE(std::holds_alternative<Expression>(d));
  CHECK(std::get<Expression>(d) == tri({x(0), ox({x(1), tri({x(2), x(3)})})}));
  CHECK(to_string(std::get<Expression>(d)) == "(tri x0 (ox x1 (tri x2 x3)))");

  CHECK(std::get<Expression>(decompose(FinitePoset::singleton())) == x(0));
  CHECK(std::get<Expression>(decompose(FinitePoset())) == Expression::unit());
  CHECK(std::get<Obstruction>(decompose(support::z())) == Obstruction{0, 1, 2, 3});

  // (a ⊗ c) ◁ (b ⊗ d) from the intersection example
  const FinitePoset bowtie = FinitePoset::from_pairs(4, {{0, 1}, {0, 3}, {2, 1}, {2, 3}});
  CHECK(to_string(std::get<Expression>(decompose(bowtie))) == "(tri (ox x0 x2) (ox x1 x3))");
}

TEST_CASE("decompose round trips for n <= 5") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_poset(n, [&](const FinitePoset& p) {
      const auto d = decompose(p);
      CHECK(std::holds_alternative<Expression>(d) == oracle::buildable(int(n), less_of(p)));
      if (const auto* e = std::get_if<Expression>(&d)) {
        CHECK(is_normal(*e));
        CHECK(evaluate(*e) == p);
      }
    });
  }
}

TEST_CASE("evaluate") {
  CHECK(evaluate(tri({x(0), x(1)})) == FinitePoset::chain(2));
  CHECK(evaluate(Expression::unit()) == FinitePoset());
  CHECK(evaluate(ox({tri({x(0), x(1)}), tri({x(2), x(3)})})) ==
        disjoint_union(FinitePoset::chain(2), FinitePoset::chain(2)));
  CHECK(evaluate(tri({x(1), x(0)})) == FinitePoset::from_pairs(2, {{1, 0}}));

  CHECK_THROWS_AS(evaluate(tri({x(0), x(0)})), MalformedExpression);            // not linear
  CHECK_THROWS_AS(evaluate(tri({x(0), tri({x(1), x(2)})})), MalformedExpression);  // not flat
  CHECK_THROWS_AS(evaluate(ox({x(1), x(0)})), MalformedExpression);            // unsorted
  CHECK_THROWS_AS(evaluate(tri({x(0), x(2)})), MalformedExpression);            // gap
  CHECK_THROWS_AS(evaluate(tri({x(0)})), MalformedExpression);                  // one child
  CHECK_THROWS_AS(evaluate(tri({x(0), Expression::unit()})), MalformedExpression);

  CHECK(evaluate_on(tri({x(2), x(0)}), 4) == FinitePoset::from_pairs(4, {{2, 0}}));
  CHECK_THROWS_AS(evaluate_on(x(4), 4), MalformedExpression);
}

TEST_CASE("normalize") {
  const Expression e = tri({Expression::unit(), tri({x(2), ox({x(1), ox({Expression::unit(), x(0)})})})});
  const Expression n = normalize(e);
  CHECK(n == tri({x(2), ox({x(0), x(1)})}));
  CHECK(is_normal(n));
  CHECK_FALSE(is_normal(e));
  CHECK(normalize(n) == n);
  CHECK(normalize(ox({Expression::unit(), Expression::unit()})) == Expression::unit());
  CHECK(normalize(tri({x(3)})) == x(3));
}

TEST_CASE("normal forms are canonical") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::map<std::vector<Pair>, Expression> seen;
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Element> vars(n);
      for (std::size_t k = 0; k < n; ++k) vars[k] = k;
      std::shuffle(vars.begin(), vars.end(), support::rng());
      const Expression e = normalize(random_tree(vars));
      const FinitePoset p = evaluate(e);
      auto [it, fresh] = seen.emplace(p.pairs(), e);
      CHECK(it->second == e);
      CHECK(std::get<Expression>(decompose(p)) == e);
    }
  }
}

TEST_CASE("small expressions cover every expressible poset on 2 and 3 elements") {
  const std::vector<Expression> small{
      ox({x(0), x(1)}),         tri({x(0), x(1)}),         ox({x(0), x(1), x(2)}),
      ox({x(0), tri({x(1), x(2)})}), tri({x(0), ox({x(1), x(2)})}), tri({ox({x(0), x(1)}), x(2)}),
      tri({x(0), x(1), x(2)})};
  std::vector<FinitePoset> denoted;
  for (const auto& e : small) denoted.push_back(evaluate(e));
  for (std::size_t a = 0; a < denoted.size(); ++a)
    for (std::size_t b = a + 1; b < denoted.size(); ++b) CHECK_FALSE(denoted[a] == denoted[b]);

  for (std::size_t n = 2; n <= 3; ++n) {
    for_each_poset(n, [&](const FinitePoset& p) {
      bool found = false;
      for (const auto& q : denoted) {
        if (q.size() != n) continue;
        Permutation tau(n);
        for (std::size_t k = 0; k < n; ++k) tau[k] = k;
        do found = found || act(tau, q) == p;
        while (std::next_permutation(tau.begin(), tau.end()));
      }
      CHECK(found);
    });
  }
}

TEST_CASE("expression text") {
  const Expression e = tri({x(0), ox({x(1), tri({x(2), x(3)})})});
  CHECK(to_string(e) == "(tri x0 (ox x1 (tri x2 x3)))");
  CHECK(parse_expression("(tri x0 (ox x1 (tri x2 x3)))") == e);
  CHECK(parse_expression("  ( tri\tx0   x12 ) ") == tri({x(0), x(12)}));
  CHECK(parse_expression("e") == Expression::unit());
  CHECK(to_string(Expression::unit()) == "e");
  CHECK(parse_expression("(ox x1 (ox x0 e))") == ox({x(1), ox({x(0), Expression::unit()})}));

  for (const char* bad : {"", "(", "(tri x0", "(foo x0 x1)", "x", "xa", "(tri x0 x1))", "x0 x1", "()"}) {
    CHECK_THROWS_AS(parse_expression(bad), ParseError);
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    for_each_poset(n, [&](const FinitePoset& p) {
      const auto dec = decompose(p);
      if (const auto* d = std::get_if<Expression>(&dec)) {
        CHECK(parse_expression(to_string(*d)) == *d);
      }
    });
  }
}

TEST_CASE("variables") {
  const Expression e = tri({x(3), ox({x(1), x(2)}), Expression::unit()});
  CHECK(e.variables() == std::vector<Element>{3, 1, 2});
  CHECK_THROWS_AS(check_linear(ox({x(1), x(1)})), MalformedExpression);
}
