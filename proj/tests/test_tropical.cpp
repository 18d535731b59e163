#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "depcalc/expression.hpp"
#include "depcalc/tropical.hpp"
#include "support.hpp"

using namespace depcalc;
using support::less_of;

namespace {

Runtime random_runtime() {
  return Runtime(long(support::uniform(0, 40)), long(support::uniform(1, 12)));
}

std::vector<Runtime> random_runtimes(std::size_t n) {
  std::vector<Runtime> a;
  for (std::size_t i = 0; i < n; ++i) a.push_back(random_runtime());
  return a;
}

// Parallel is max, sequential is sum.
Runtime fold(const Expression& e, const std::vector<Runtime>& a) {
  switch (e.kind()) {
    case Expression::Kind::Unit: return 0;
    case Expression::Kind::Var: return a[e.index()];
    case Expression::Kind::Otimes: {
      Runtime m = 0;
      for (const auto& c : e.children()) m = std::max(m, fold(c, a));
      return m;
    }
    case Expression::Kind::Tri: {
      Runtime s = 0;
      for (const auto& c : e.children()) s += fold(c, a);
      return s;
    }
  }
  return 0;
}

}  // namespace

TEST_CASE("zig-zag schedule") {
  const std::vector<Runtime> a{1, 3, 4, 1};
  const FinitePoset z = support::z();
  CHECK(boxtimes(z, a) == 7);
  const auto s = schedule(z, a);
  CHECK(s.start == std::vector<Runtime>{0, 4, 0, 4});
  CHECK(s.finish == std::vector<Runtime>{1, 7, 4, 5});
  CHECK(s.makespan == 7);
  CHECK(s.critical_chain == std::vector<Element>{2, 1});
}

TEST_CASE("two 2-chains in parallel") {
  const FinitePoset p = disjoint_union(FinitePoset::chain(2), FinitePoset::chain(2));
  CHECK(boxtimes(p, std::vector<Runtime>{1, 3, 4, 1}) == 5);
  CHECK(check_interchange<Runtime>(1, 3, 4, 1));
  CHECK(std::max<Runtime>(1 + 3, 4 + 1) == 5);
  CHECK(std::max<Runtime>(1, 4) + std::max<Runtime>(3, 1) == 7);
}

TEST_CASE("empty and arity") {
  CHECK(boxtimes(FinitePoset(), std::vector<Runtime>{}) == 0);
  CHECK(schedule(FinitePoset(), std::vector<Runtime>{}).critical_chain.empty());
  CHECK_THROWS_AS(boxtimes(FinitePoset::chain(2), std::vector<Runtime>{1}), ArityError);
  CHECK(boxtimes(FinitePoset::antichain(3), std::vector<Runtime>{2, 5, 1}) == 5);
  CHECK(boxtimes(FinitePoset::chain(3), std::vector<Runtime>{2, 5, 1}) == 8);
}

TEST_CASE("boxtimes is the heaviest chain") {
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = support::uniform(0, 6);
    const FinitePoset p = support::random_poset(n, 0.4);
    const auto a = random_runtimes(n);
    const Runtime want = oracle::heaviest_chain<Runtime>(int(n), less_of(p), a);
    CHECK(boxtimes(p, a) == want);
    CHECK(boxtimes<double>(p, std::vector<double>(a.begin(), a.end())) == doctest::Approx(double(want)));
  }
}

TEST_CASE("composition law") {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t k = support::uniform(1, 3);
    const FinitePoset outer = support::random_poset(k);
    std::vector<FinitePoset> parts;
    std::vector<Runtime> inner_values, leaves;
    for (std::size_t b = 0; b < k; ++b) {
      parts.push_back(support::random_poset(support::uniform(0, 3)));
      const auto a = random_runtimes(parts.back().size());
      leaves.insert(leaves.end(), a.begin(), a.end());
      inner_values.push_back(boxtimes(parts.back(), a));
    }
    CHECK(boxtimes(substitute(outer, parts), leaves) == boxtimes(outer, inner_values));
  }
}

TEST_CASE("monotone under inclusion") {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = support::uniform(1, 6);
    const FinitePoset p = support::random_poset(n, 0.3);
    std::vector<Pair> more = p.pairs();
    const auto ext = least_linear_extension(p);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (support::uniform(0, 2) == 0) more.emplace_back(ext[x], ext[y]);
    const FinitePoset q = FinitePoset::from_pairs(n, more);
    const auto a = random_runtimes(n);
    CHECK(boxtimes(p, a) <= boxtimes(q, a));
  }
}

TEST_CASE("interchange inequality") {
  for (int trial = 0; trial < 2000; ++trial) {
    const Runtime a = random_runtime(), b = random_runtime(), c = random_runtime(), d = random_runtime();
    CHECK(check_interchange(a, b, c, d));
    CHECK(std::max(a + b, c + d) <= std::max(a, c) + std::max(b, d));
  }
}

TEST_CASE("agrees with folding an expression") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_poset(n, [&](const FinitePoset& p) {
      const auto d = decompose(p);
      if (const auto* e = std::get_if<Expression>(&d)) {
        const auto a = random_runtimes(n);
        CHECK(boxtimes(p, a) == fold(*e, a));
      }
    });
  }
}

TEST_CASE("schedules are consistent") {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = support::uniform(1, 7);
    const FinitePoset p = support::random_poset(n, 0.4);
    const auto a = random_runtimes(n);
    const auto s = schedule(p, a);
    CHECK(s.makespan == boxtimes(p, a));
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(s.finish[j] == s.start[j] + a[j]);
      Runtime ready = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (p.less(i, j)) {
          CHECK(s.finish[i] <= s.start[j]);
          ready = std::max(ready, s.finish[i]);
        }
      CHECK(s.start[j] == ready);
    }
    Runtime along = 0;
    for (std::size_t k = 0; k < s.critical_chain.size(); ++k) {
      along += a[s.critical_chain[k]];
      if (k > 0) CHECK(p.less(s.critical_chain[k - 1], s.critical_chain[k]));
    }
    CHECK(along == s.makespan);
  }
}

TEST_CASE("runtime text") {
  CHECK(parse_runtime("3") == 3);
  CHECK(parse_runtime(" 1.25 ") == Runtime(5, 4));
  CHECK(parse_runtime("7/4") == Runtime(7, 4));
  CHECK(parse_runtime(".5") == Runtime(1, 2));
  CHECK(parse_runtime("6/4") == Runtime(3, 2));
  for (const char* bad : {"", "-1", "1/0", "a", "1.", "1/2/3", "1e3", "1.2.3", "/2"}) {
    CHECK_THROWS_AS(parse_runtime(bad), ParseError);
  }
  CHECK(parse_runtimes("1, 3,4/2") == std::vector<Runtime>{1, 3, 2});
  CHECK(parse_runtimes("").empty());
  CHECK_THROWS_AS(parse_runtimes("1,,2"), ParseError);

  CHECK(format_runtime(7) == "7");
  CHECK(format_runtime(Runtime(5, 4)) == "1.25");
  CHECK(format_runtime(Runtime(1, 3)) == "1/3");
  CHECK(format_runtime(Runtime(1, 20)) == "0.05");
  for (int trial = 0; trial < 500; ++trial) {
    const Runtime r = random_runtime();
    CHECK(parse_runtime(format_runtime(r)) == r);
  }
}

TEST_CASE("gantt") {
  const FinitePoset z = support::z();
  const auto s = schedule(z, std::vector<Runtime>{1, 3, 4, 1});
  const std::string chart = render_gantt(s, 1);
  CHECK(chart ==
        "  |+------| t = 0..7, 1 column = 1\n"
        "0 |#......| 0 -> 1\n"
        "1 |....###| 4 -> 7\n"
        "2 |####...| 0 -> 4\n"
        "3 |....#..| 4 -> 5\n");
  const std::vector<std::string> labels{"a", "b", "c", "d"};
  CHECK(render_gantt(s, 2, labels).find("c |##..| 0 -> 4") != std::string::npos);
  CHECK_THROWS_AS(render_gantt(s, 0), PreconditionError);
}
