#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "depcalc/poset.hpp"
#include "support.hpp"

using namespace depcalc;
using support::less_of;
using support::z;

namespace {

FinitePoset ac(std::size_t n) { return FinitePoset::antichain(n); }
FinitePoset ch(std::size_t n) { return FinitePoset::chain(n); }

std::vector<Pair> rel_pairs(const FinitePoset& p) { return p.pairs(); }

}  // namespace

TEST_CASE("from_pairs closes and validates") {
  const FinitePoset p = z();
  CHECK(p.size() == 4);
  CHECK(rel_pairs(p) == std::vector<Pair>{{0, 1}, {2, 1}, {2, 3}});
  CHECK(FinitePoset::from_pairs(3, {}) == ac(3));
  CHECK(FinitePoset::from_pairs(3, {{0, 1}, {1, 2}}).less(0, 2));
  CHECK_THROWS_AS(FinitePoset::from_pairs(2, {{0, 1}, {1, 0}}), CycleError);
  CHECK_THROWS_AS(FinitePoset::from_pairs(2, {{0, 0}}), CycleError);
  CHECK_THROWS_AS(FinitePoset::from_pairs(2, {{0, 2}}), IndexError);

  // the message names the first pair on a cycle
  try {
    FinitePoset::from_pairs(4, {{3, 2}, {0, 1}, {1, 2}, {2, 0}});
    FAIL("expected CycleError");
  } catch (const CycleError& e) {
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
}

TEST_CASE("closure is idempotent") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for_each_poset(n, [](const FinitePoset& p) {
      const auto pr = p.pairs();
      CHECK(FinitePoset::from_pairs(p.size(), pr) == p);
      CHECK(FinitePoset::from_relation(p.relation()) == p);
    });
  }
}

TEST_CASE("disjoint union and join") {
  CHECK(disjoint_union(ac(1), ac(1)) == ac(2));
  CHECK(join(ac(1), ac(1)) == ch(2));
  CHECK(rel_pairs(disjoint_union(ch(2), ch(2))) == std::vector<Pair>{{0, 1}, {2, 3}});
  CHECK(rel_pairs(join(ac(2), ac(2))) == std::vector<Pair>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(join(ac(0), z()) == z());
  CHECK(disjoint_union(z(), ac(0)) == z());
}

TEST_CASE("monoidal laws hold on the nose") {
  std::vector<FinitePoset> small;
  for (std::size_t n = 0; n <= 2; ++n) {
    for (auto& p : enumerate_posets(n)) small.push_back(p);
  }
  small.push_back(z());
  for (const auto& p : small) {
    CHECK(disjoint_union(p, FinitePoset()) == p);
    CHECK(disjoint_union(FinitePoset(), p) == p);
    CHECK(join(p, FinitePoset()) == p);
    CHECK(join(FinitePoset(), p) == p);
    for (const auto& q : small) {
      for (const auto& r : small) {
        CHECK(disjoint_union(disjoint_union(p, q), r) == disjoint_union(p, disjoint_union(q, r)));
        CHECK(join(join(p, q), r) == join(p, join(q, r)));
      }
    }
  }
}

TEST_CASE("disjoint union is symmetric up to the block swap") {
  for (int trial = 0; trial < 50; ++trial) {
    const FinitePoset p = support::random_poset(support::uniform(0, 3));
    const FinitePoset q = support::random_poset(support::uniform(0, 3));
    // element x of p ⊔ q sits at x + |q| in q ⊔ p, and vice versa
    const FinitePoset pq = disjoint_union(p, q), qp = disjoint_union(q, p);
    std::vector<Pair> moved;
    for (auto [a, b] : pq.pairs()) {
      auto swap = [&](Element x) { return x < p.size() ? x + q.size() : x - p.size(); };
      moved.emplace_back(swap(a), swap(b));
    }
    CHECK(FinitePoset::from_pairs(qp.size(), moved) == qp);
  }
}

TEST_CASE("interchange inclusion after interleaving") {
  for (int trial = 0; trial < 80; ++trial) {
    FinitePoset ps[4];
    for (auto& x : ps) x = support::random_poset(support::uniform(0, 2));
    const auto& [p, q, r, s] = ps;
    const FinitePoset lhs = disjoint_union(join(p, q), join(r, s));
    const FinitePoset rhs = join(disjoint_union(p, r), disjoint_union(q, s));
    // lhs blocks are p,q,r,s; rhs blocks are p,r,q,s
    std::vector<Element> to(lhs.size());
    const std::size_t P = p.size(), Q = q.size(), R = r.size();
    for (Element x = 0; x < lhs.size(); ++x) {
      if (x < P) to[x] = x;
      else if (x < P + Q) to[x] = x + R;
      else if (x < P + Q + R) to[x] = x - Q;
      else to[x] = x;
    }
    std::vector<Pair> moved;
    for (auto [a, b] : lhs.pairs()) moved.emplace_back(to[a], to[b]);
    CHECK(is_inclusion(FinitePoset::from_pairs(lhs.size(), moved), rhs));
  }
}

TEST_CASE("substitute") {
  const FinitePoset p1 = ch(2), p2 = z();
  const std::vector<FinitePoset> two{p1, p2};
  CHECK(substitute(ac(2), two) == disjoint_union(p1, p2));
  CHECK(substitute(ch(2), two) == join(p1, p2));
  CHECK(substitute(z(), std::vector<FinitePoset>(4, ac(1))) == z());
  CHECK_THROWS_AS(substitute(z(), two), ArityError);

  // lexicographic rule, checked pair by pair
  for (int trial = 0; trial < 60; ++trial) {
    const FinitePoset outer = support::random_poset(support::uniform(0, 3));
    std::vector<FinitePoset> parts;
    std::vector<std::size_t> block;
    for (std::size_t a = 0; a < outer.size(); ++a) {
      parts.push_back(support::random_poset(support::uniform(0, 3)));
      for (std::size_t k = 0; k < parts.back().size(); ++k) block.push_back(a);
    }
    const FinitePoset m = substitute(outer, parts);
    REQUIRE(m.size() == block.size());
    std::vector<std::size_t> start(outer.size() + 1, 0);
    for (std::size_t a = 0; a < outer.size(); ++a) start[a + 1] = start[a] + parts[a].size();
    for (Element x = 0; x < m.size(); ++x) {
      for (Element y = 0; y < m.size(); ++y) {
        const auto a = block[x], b = block[y];
        const bool want = outer.less(a, b) || (a == b && parts[a].less(x - start[a], y - start[a]));
        CHECK(m.less(x, y) == want);
      }
    }
  }
}

TEST_CASE("substitute is associative and unital") {
  for (int trial = 0; trial < 60; ++trial) {
    const FinitePoset outer = support::random_poset(support::uniform(0, 3));
    std::vector<FinitePoset> qs;
    std::vector<std::vector<FinitePoset>> rs;
    std::vector<FinitePoset> flat;
    for (std::size_t a = 0; a < outer.size(); ++a) {
      qs.push_back(support::random_poset(support::uniform(0, 2)));
      rs.emplace_back();
      for (std::size_t k = 0; k < qs.back().size(); ++k) {
        rs.back().push_back(support::random_poset(support::uniform(0, 2)));
        flat.push_back(rs.back().back());
      }
    }
    std::vector<FinitePoset> inner;
    for (std::size_t a = 0; a < outer.size(); ++a) inner.push_back(substitute(qs[a], rs[a]));
    CHECK(substitute(substitute(outer, qs), flat) == substitute(outer, inner));
    CHECK(substitute(outer, std::vector<FinitePoset>(outer.size(), ac(1))) == outer);
    const std::vector<FinitePoset> just{outer};
    CHECK(substitute(ac(1), just) == outer);
  }
}

TEST_CASE("is_inclusion") {
  CHECK(is_inclusion(ac(2), ch(2)));
  CHECK(is_inclusion(z(), z()));
  CHECK_FALSE(is_inclusion(ch(2), ac(2)));
  CHECK_FALSE(is_inclusion(ac(2), ac(3)));
}

TEST_CASE("full embeddings") {
  const auto self = full_embeddings(z(), z());
  REQUIRE_FALSE(self.empty());
  CHECK(self.front().mapping == std::vector<Element>{0, 1, 2, 3});
  CHECK(full_embeddings(z(), ch(4)).empty());
  CHECK(full_embeddings(z(), support::expression_poset()).empty());

  // brute force over all injections
  for (int trial = 0; trial < 40; ++trial) {
    const FinitePoset pat = support::random_poset(support::uniform(0, 3), 0.5);
    const FinitePoset tgt = support::random_poset(support::uniform(0, 5), 0.5);
    std::set<std::vector<Element>> want;
    std::vector<Element> idx(tgt.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    if (pat.size() <= tgt.size()) {
      // every permutation prefix of length |pat|
      std::set<std::vector<Element>> seen;
      do {
        std::vector<Element> m(idx.begin(), idx.begin() + long(pat.size()));
        if (!seen.insert(m).second) continue;
        bool ok = true;
        for (Element i = 0; i < pat.size(); ++i)
          for (Element j = 0; j < pat.size(); ++j) ok = ok && pat.less(i, j) == tgt.less(m[i], m[j]);
        if (ok) want.insert(m);
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
    std::vector<std::vector<Element>> got;
    for (const auto& e : full_embeddings(pat, tgt)) got.push_back(e.mapping);
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(std::set<std::vector<Element>>(got.begin(), got.end()) == want);
    CHECK(got.size() == want.size());
  }
}

TEST_CASE("linear extensions") {
  CHECK(linear_extensions(ch(3)).size() == 1);
  CHECK(linear_extensions(ac(2)).size() == 2);
  CHECK(linear_extensions(z()).size() == oracle::linear_extensions(4, less_of(z())).size());
  CHECK(linear_extensions(z()).size() == 5);
  CHECK(least_linear_extension(z()) == Permutation{0, 2, 1, 3});

  for (std::size_t n = 0; n <= 4; ++n) {
    for_each_poset(n, [&](const FinitePoset& p) {
      const auto got = linear_extensions(p);
      const auto want = oracle::linear_extensions(int(n), less_of(p));
      REQUIRE(got.size() == want.size());
      CHECK_FALSE(got.empty());
      for (std::size_t k = 0; k < got.size(); ++k) {
        CHECK(std::equal(got[k].begin(), got[k].end(), want[k].begin()));
        CHECK(is_linear_extension(p, got[k]));
        std::vector<Pair> seq;
        for (std::size_t x = 0; x + 1 < n; ++x) seq.emplace_back(got[k][x], got[k][x + 1]);
        CHECK(is_inclusion(p, FinitePoset::from_pairs(n, seq)));
      }
      CHECK(got.front() == least_linear_extension(p));
    });
  }
  CHECK_FALSE(is_linear_extension(ch(2), Permutation{1, 0}));
  CHECK_FALSE(is_linear_extension(ch(2), Permutation{0}));
  CHECK_FALSE(is_linear_extension(ac(2), Permutation{0, 0}));
}

TEST_CASE("chains") {
  using C = std::vector<std::vector<Element>>;
  CHECK(chains(ac(2)) == C{{0}, {1}});
  CHECK(chains(ch(2)) == C{{0}, {1}, {0, 1}});
  CHECK(chains(z()) == C{{0}, {1}, {2}, {3}, {0, 1}, {2, 1}, {2, 3}});

  for (int trial = 0; trial < 40; ++trial) {
    const FinitePoset p = support::random_poset(support::uniform(0, 5));
    std::set<std::vector<Element>> want;
    for (const auto& c : oracle::chains(int(p.size()), less_of(p))) want.insert({c.begin(), c.end()});
    const auto got = chains(p);
    CHECK(std::set<std::vector<Element>>(got.begin(), got.end()) == want);
    CHECK(got.size() == want.size());
  }
}

TEST_CASE("enumeration matches the relation-subset oracle") {
  for (int n = 0; n <= 4; ++n) {
    const auto want = oracle::all_posets(n);
    const auto got = enumerate_posets(std::size_t(n));
    CHECK(got.size() == want.size());
    std::set<std::vector<Pair>> seen;
    for (const auto& p : got) {
      CHECK(seen.insert(p.pairs()).second);
      for (Element i = 0; i < p.size(); ++i) {
        CHECK_FALSE(p.less(i, i));
        for (Element j = 0; j < p.size(); ++j)
          for (Element k = 0; k < p.size(); ++k)
            if (p.less(i, j) && p.less(j, k)) CHECK(p.less(i, k));
      }
    }
    for (const auto& r : want) CHECK(seen.contains(support::from_rel(r).pairs()));
  }
  CHECK(enumerate_posets(0).size() == 1);
  CHECK(enumerate_posets(2).size() == 3);
  CHECK(enumerate_posets(4).size() == 219);
  CHECK_THROWS_AS(enumerate_posets(kEnumerationLimit + 1), SizeError);
  for (int n = 0; n <= 4; ++n) CHECK(oracle::count_one_point_extensions(n) == oracle::all_posets(n + 1).size());
  std::size_t six = 0;
  for_each_poset(6, [&](const FinitePoset&) { ++six; });
  CHECK(six == oracle::count_one_point_extensions(5));
  CHECK(six == 130023);

  // deterministic order
  CHECK(enumerate_posets(3) == enumerate_posets(3));
}

TEST_CASE("connected components") {
  using C = std::vector<std::vector<Element>>;
  CHECK(connected_components(ac(3)) == C{{0}, {1}, {2}});
  CHECK(connected_components(z()) == C{{0, 1, 2, 3}});
  CHECK(connected_components(disjoint_union(ch(2), ch(2))) == C{{0, 1}, {2, 3}});
  CHECK(connected_components(FinitePoset()).empty());
}

TEST_CASE("transitive reduction") {
  CHECK(transitive_reduction(ch(3)) == std::vector<Pair>{{0, 1}, {1, 2}});
  CHECK(transitive_reduction(ac(4)).empty());
  CHECK(transitive_reduction(join(ac(1), ac(2))) == std::vector<Pair>{{0, 1}, {0, 2}});

  for (std::size_t n = 0; n <= 4; ++n) {
    for_each_poset(n, [&](const FinitePoset& p) {
      const auto covers = transitive_reduction(p);
      CHECK(FinitePoset::from_pairs(n, covers) == p);
      // dropping any cover loses the closure
      for (std::size_t k = 0; k < covers.size(); ++k) {
        auto fewer = covers;
        fewer.erase(fewer.begin() + long(k));
        CHECK_FALSE(FinitePoset::from_pairs(n, fewer) == p);
      }
    });
  }
}

TEST_CASE("restrict and extremal elements") {
  const FinitePoset p = z();
  const std::vector<Element> keep{2, 1, 3};
  const FinitePoset r = p.restrict(keep);
  CHECK(r.pairs() == std::vector<Pair>{{0, 1}, {0, 2}});
  CHECK(p.maximal_elements() == std::vector<Element>{1, 3});
  CHECK(p.minimal_elements() == std::vector<Element>{0, 2});
  CHECK(p.relation_count() == 3);
  const std::vector<Element> bad{4};
  CHECK_THROWS_AS(p.restrict(bad), IndexError);
}
