#pragma once

#include <algorithm>
#include <concepts>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "depcalc/diagram.hpp"
#include "depcalc/poly.hpp"
#include "depcalc/tropical.hpp"

namespace depcalc {

/// A value domain with an n-ary product for every poset and a predicate for
/// the structure maps between values.
template <class A>
concept DependenceAlgebra = requires(const A& alg, const FinitePoset& p, const std::vector<typename A::Value>& vs,
                                     const typename A::Value& v) {
  { alg.unit() } -> std::convertible_to<typename A::Value>;
  { alg.box(p, vs) } -> std::convertible_to<typename A::Value>;
  { alg.holds(v, v) } -> std::same_as<bool>;
  { alg.equivalent(v, v) } -> std::same_as<bool>;
  { alg.format(v) } -> std::convertible_to<std::string>;
};

/// Runtimes under max-plus: a structure map a -> b exists iff a <= b.
struct TropicalAlgebra {
  using Value = Runtime;

  Value unit() const { return Value(0); }
  Value box(const FinitePoset& p, const std::vector<Value>& vs) const { return boxtimes(p, vs); }
  bool holds(const Value& from, const Value& to) const { return from <= to; }
  bool equivalent(const Value& a, const Value& b) const { return a == b; }
  std::string format(const Value& v) const { return format_runtime(v); }
};

/// Finite polynomials. The structure maps are cartesian, and a cartesian
/// map p -> q exists iff every direction count of p occurs in q.
struct PolyAlgebra {
  using Value = FinitePolynomial;

  Value unit() const { return FinitePolynomial::y(); }
  /// Chains and antichains fold compose and dirichlet directly, so the
  /// binary products accept parts of any size.
  Value box(const FinitePoset& p, const std::vector<Value>& vs) const {
    const std::size_t n = p.size();
    const bool antichain = p.relation_count() == 0;
    const bool chain = p.relation_count() == n * (n - 1) / 2;
    if ((!chain && !antichain) || vs.size() != n) return boxtimes_poly(p, vs);
    Value acc = unit();
    for (Element i : least_linear_extension(p)) acc = chain ? compose(acc, vs[i]) : dirichlet(acc, vs[i]);
    return acc;
  }
  bool holds(const Value& from, const Value& to) const {
    const PolySignature b = signature(to);
    return std::all_of(from.direction_counts().begin(), from.direction_counts().end(),
                       [&](std::size_t d) { return std::find(b.begin(), b.end(), d) != b.end(); });
  }
  bool equivalent(const Value& a, const Value& b) const { return signature(a) == signature(b); }
  std::string format(const Value& v) const { return to_string(signature(v)); }
};

static_assert(DependenceAlgebra<TropicalAlgebra>);
static_assert(DependenceAlgebra<PolyAlgebra>);

template <class V>
using Decoration = std::map<std::string, V>;

/// Per-instance values of an edge poset. Throws MissingAssignment.
template <class V>
std::vector<V> instance_values(const EdgePoset& e, const Decoration<V>& d) {
  std::vector<V> out;
  for (const Instance& inst : e.instances) {
    auto it = d.find(inst.name);
    if (it == d.end()) throw MissingAssignment("no value assigned to generator '" + inst.name + "'");
    out.push_back(it->second);
  }
  return out;
}

/// The algebra's product over the diagram's edge poset.
template <DependenceAlgebra A>
typename A::Value decorate(const PartialPolygraph& g, const StringDiagram& diag,
                           const Decoration<typename A::Value>& d, const A& alg) {
  const EdgePoset e = edge_poset(g, diag);
  return alg.box(e.poset, instance_values(e, d));
}

struct TensorSample {
  StringDiagram left;
  StringDiagram right;
};
/// `second` after `first`.
struct ComposeSample {
  StringDiagram first;
  StringDiagram second;
};
/// (a then b) beside (c then d), against (a beside c) then (b beside d).
struct InterchangeSample {
  StringDiagram a, b, c, d;
};
using LawSample = std::variant<TensorSample, ComposeSample, InterchangeSample>;

struct LawCheck {
  std::size_t sample;
  std::string law;
  bool passed;
  std::string detail;
};

struct LawReport {
  std::vector<LawCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.passed; });
  }
};

/// Productor equality for tensors; compositor map and edge-poset inclusion
/// for composites; for interchange samples both layerings agree and the lax
/// interchanger holds between the two bracketings of the four values.
template <DependenceAlgebra A>
LawReport check_decoration_laws(const PartialPolygraph& g, const Decoration<typename A::Value>& d,
                                const A& alg, const std::vector<LawSample>& samples) {
  using V = typename A::Value;
  LawReport report;
  const FinitePoset par = FinitePoset::antichain(2), seq = FinitePoset::chain(2);
  auto value = [&](const StringDiagram& s) { return decorate(g, s, d, alg); };
  auto record = [&](std::size_t k, std::string law, bool ok, const V& lhs, const V& rhs, const char* rel) {
    report.checks.push_back({k, std::move(law), ok, alg.format(lhs) + " " + rel + " " + alg.format(rhs)});
  };

  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (const auto* t = std::get_if<TensorSample>(&samples[k])) {
      const V whole = value(tensor(t->left, t->right));
      const V split = alg.box(par, {value(t->left), value(t->right)});
      record(k, "productor", alg.equivalent(whole, split), whole, split, "==");
    } else if (const auto* c = std::get_if<ComposeSample>(&samples[k])) {
      const StringDiagram gf = compose(c->first, c->second);
      const V whole = value(gf);
      const V chained = alg.box(seq, {value(c->first), value(c->second)});
      record(k, "compositor", alg.holds(whole, chained), whole, chained, "->");
      const FinitePoset joined = join(edge_poset(g, c->first).poset, edge_poset(g, c->second).poset);
      const bool inside = is_inclusion(edge_poset(g, gf).poset, joined);
      report.checks.push_back({k, "compositor-inclusion", inside, inside ? "contained in join" : "not contained in join"});
    } else {
      const auto& s = std::get<InterchangeSample>(samples[k]);
      const V rows = value(tensor(compose(s.a, s.b), compose(s.c, s.d)));
      const V cols = value(compose(tensor(s.a, s.c), tensor(s.b, s.d)));
      record(k, "interchange-routes", alg.equivalent(rows, cols), rows, cols, "==");

      const V va = value(s.a), vb = value(s.b), vc = value(s.c), vd = value(s.d);
      const V lhs = alg.box(par, {alg.box(seq, {va, vb}), alg.box(seq, {vc, vd})});
      const V rhs = alg.box(seq, {alg.box(par, {va, vc}), alg.box(par, {vb, vd})});
      record(k, "interchanger", alg.holds(lhs, rhs), lhs, rhs, "->");
    }
  }
  return report;
}

/// Edge poset of paths laid side by side: a disjoint union of chains.
/// Throws InvalidPaths unless every generator is unary, each path is
/// composable, and the start and end lists are valid.
FinitePoset path_poset(const PartialPolygraph& graph, const std::vector<std::vector<std::string>>& paths);

/// The same paths as a layered diagram (one generator per path per layer).
StringDiagram paths_diagram(const PartialPolygraph& graph, const std::vector<std::vector<std::string>>& paths);

template <DependenceAlgebra A>
typename A::Value path_decoration(const PartialPolygraph& graph, const Decoration<typename A::Value>& d,
                                  const A& alg, const std::vector<std::vector<std::string>>& paths) {
  const FinitePoset p = path_poset(graph, paths);
  std::vector<typename A::Value> values;
  for (const auto& path : paths) {
    for (const auto& name : path) {
      auto it = d.find(name);
      if (it == d.end()) throw MissingAssignment("no value assigned to generator '" + name + "'");
      values.push_back(it->second);
    }
  }
  return alg.box(p, values);
}

}  // namespace depcalc
