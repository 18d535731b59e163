#include "depcalc/structure_map.hpp"

#include <algorithm>
#include <numeric>

namespace depcalc {

StructureMapProof StructureMapProof::equiv(Expression source, Expression target) {
  return StructureMapProof(Kind::Equiv, {}, std::move(source), std::move(target));
}

StructureMapProof StructureMapProof::compose(StructureMapProof first, StructureMapProof second) {
  std::vector<StructureMapProof> ch;
  ch.push_back(std::move(first));
  ch.push_back(std::move(second));
  return StructureMapProof(Kind::Compose, std::move(ch), Expression::unit(), Expression::unit());
}

StructureMapProof StructureMapProof::otimes_par(std::vector<StructureMapProof> parts) {
  return StructureMapProof(Kind::OtimesPar, std::move(parts), Expression::unit(), Expression::unit());
}

StructureMapProof StructureMapProof::tri_par(std::vector<StructureMapProof> parts) {
  return StructureMapProof(Kind::TriPar, std::move(parts), Expression::unit(), Expression::unit());
}

StructureMapProof StructureMapProof::interchanger(StructureMapProof a, StructureMapProof b,
                                                  StructureMapProof c, StructureMapProof d) {
  std::vector<StructureMapProof> ch;
  ch.push_back(std::move(a));
  ch.push_back(std::move(b));
  ch.push_back(std::move(c));
  ch.push_back(std::move(d));
  return StructureMapProof(Kind::InterchangerSubst, std::move(ch), Expression::unit(),
                           Expression::unit());
}

namespace {

enum class End { Source, Target };

Expression endpoint(const StructureMapProof& p, End end) {
  using K = StructureMapProof::Kind;
  const auto& ch = p.children();
  auto of = [end](const StructureMapProof& c) {
    return end == End::Source ? c.source() : c.target();
  };
  switch (p.kind()) {
    case K::Equiv:
      return normalize(end == End::Source ? p.raw_source() : p.raw_target());
    case K::Compose:
      return end == End::Source ? ch.front().source() : ch.back().target();
    case K::OtimesPar:
    case K::TriPar: {
      std::vector<Expression> parts;
      for (const auto& c : ch) parts.push_back(of(c));
      return normalize(p.kind() == K::OtimesPar ? Expression::otimes(std::move(parts))
                                                : Expression::tri(std::move(parts)));
    }
    case K::InterchangerSubst: {
      const Expression a = of(ch[0]), b = of(ch[1]), c = of(ch[2]), d = of(ch[3]);
      if (end == End::Source) {
        return normalize(Expression::otimes({Expression::tri({a, b}), Expression::tri({c, d})}));
      }
      return normalize(Expression::tri({Expression::otimes({a, c}), Expression::otimes({b, d})}));
    }
  }
  return Expression::unit();
}

}  // namespace

Expression StructureMapProof::source() const { return endpoint(*this, End::Source); }
Expression StructureMapProof::target() const { return endpoint(*this, End::Target); }

std::size_t StructureMapProof::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children_) n += c.node_count();
  return n;
}

const char* kind_name(StructureMapProof::Kind kind) {
  switch (kind) {
    case StructureMapProof::Kind::Equiv: return "Equiv";
    case StructureMapProof::Kind::Compose: return "Compose";
    case StructureMapProof::Kind::OtimesPar: return "OtimesPar";
    case StructureMapProof::Kind::TriPar: return "TriPar";
    case StructureMapProof::Kind::InterchangerSubst: return "InterchangerSubst";
  }
  return "?";
}

namespace {

using Subset = std::vector<Element>;

Expression relabel(const Expression& e, const Subset& labels) {
  switch (e.kind()) {
    case Expression::Kind::Unit:
      return e;
    case Expression::Kind::Var:
      return Expression::var(labels[e.index()]);
    default: {
      std::vector<Expression> ch;
      for (const auto& c : e.children()) ch.push_back(relabel(c, labels));
      return e.kind() == Expression::Kind::Otimes ? Expression::otimes(std::move(ch))
                                                  : Expression::tri(std::move(ch));
    }
  }
}

// Normal-form expression of the full sub-poset on `set`, over global labels.
// Relabeling along an increasing map keeps the normal form.
Expression expression_of(const FinitePoset& p, const Subset& set) {
  const auto d = decompose(p.restrict(set));
  return relabel(std::get<Expression>(d), set);
}

Subset members(const Subset& set, const std::vector<Element>& local) {
  Subset out;
  for (Element l : local) out.push_back(set[l]);
  return out;
}

bool same_on(const FinitePoset& p, const FinitePoset& q, const Subset& set) {
  return p.restrict(set) == q.restrict(set);
}

// Both posets live on the same universe; only `set` is examined. Requires
// p|set ⊆ q|set with both sides expressible.
StructureMapProof derive_on(const FinitePoset& p, const FinitePoset& q, const Subset& set) {
  if (set.size() <= 1 || same_on(p, q, set)) {
    return StructureMapProof::identity(expression_of(p, set));
  }

  const FinitePoset qs = q.restrict(set);
  const auto q_components = connected_components(qs);
  if (q_components.size() > 1) {
    std::vector<StructureMapProof> parts;
    for (const auto& comp : q_components) parts.push_back(derive_on(p, q, members(set, comp)));
    return StructureMapProof::otimes_par(std::move(parts));
  }

  const Expression pe = expression_of(p, set);
  if (pe.kind() == Expression::Kind::Tri) {
    std::vector<StructureMapProof> parts;
    for (const auto& factor : pe.children()) {
      Subset f = factor.variables();
      std::sort(f.begin(), f.end());
      parts.push_back(derive_on(p, q, f));
    }
    return StructureMapProof::tri_par(std::move(parts));
  }

  // P = P1 ⊔ P2 and Q = Q1 ⋈ Q2: factor through the interchanger.
  const Expression qe = expression_of(q, set);
  Subset p1 = pe.children().front().variables();
  Subset q1 = qe.children().front().variables();
  std::sort(p1.begin(), p1.end());
  std::sort(q1.begin(), q1.end());
  auto in = [](const Subset& s, Element x) { return std::binary_search(s.begin(), s.end(), x); };

  // block(x) = 2 * (x in P2) + (x in Q2), i.e. the P_{i,j} it belongs to.
  const std::size_t n = p.size();
  std::vector<int> block(n, -1);
  std::array<Subset, 4> cells;
  for (Element x : set) {
    block[x] = (in(p1, x) ? 0 : 2) + (in(q1, x) ? 0 : 1);
    cells[block[x]].push_back(x);
  }

  RelationMatrix lifted = RelationMatrix::Constant(Eigen::Index(n), Eigen::Index(n), false);
  RelationMatrix lowered = lifted;
  for (Element x : set) {
    for (Element y : set) {
      const auto ix = Eigen::Index(x), iy = Eigen::Index(y);
      const int bx = block[x], by = block[y];
      if (bx == by) {
        lifted(ix, iy) = p.less(x, y);
        lowered(ix, iy) = q.less(x, y);
      }
      // (P11 ⋈ P12) ⊔ (P21 ⋈ P22)
      if (bx / 2 == by / 2 && bx % 2 == 0 && by % 2 == 1) lifted(ix, iy) = true;
      // (Q11 ⊔ Q21) ⋈ (Q12 ⊔ Q22)
      if (bx % 2 == 0 && by % 2 == 1) lowered(ix, iy) = true;
    }
  }
  const FinitePoset middle_source = FinitePoset::from_relation(lifted);
  const FinitePoset middle_target = FinitePoset::from_relation(lowered);

  StructureMapProof result = StructureMapProof::interchanger(
      derive_on(p, q, cells[0]), derive_on(p, q, cells[1]), derive_on(p, q, cells[2]),
      derive_on(p, q, cells[3]));
  if (!same_on(middle_target, q, set)) {
    result = StructureMapProof::compose(std::move(result), derive_on(middle_target, q, set));
  }
  if (!same_on(p, middle_source, set)) {
    result = StructureMapProof::compose(derive_on(p, middle_source, set), std::move(result));
  }
  return result;
}

}  // namespace

StructureMapProof derive_structure_map(const FinitePoset& p, const FinitePoset& q) {
  if (auto z = find_z(p)) throw NotExpressible("source poset is not expressible", *z);
  if (auto z = find_z(q)) throw NotExpressible("target poset is not expressible", *z);
  if (!is_inclusion(p, q)) {
    throw NotInclusion(p.size() != q.size() ? "posets have different sizes"
                                            : "source relation is not contained in target");
  }
  Subset all(p.size());
  std::iota(all.begin(), all.end(), Element{0});
  return derive_on(p, q, all);
}

namespace {

Subset sorted_variables(const Expression& e) {
  Subset v = e.variables();
  std::sort(v.begin(), v.end());
  return v;
}

bool disjoint_children(const StructureMapProof& proof) {
  Subset all;
  for (const auto& c : proof.children()) {
    const Subset v = c.source().variables();
    all.insert(all.end(), v.begin(), v.end());
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

bool verify_node(const StructureMapProof& proof) {
  using K = StructureMapProof::Kind;
  for (const auto& c : proof.children()) {
    if (!verify_node(c)) return false;
  }
  switch (proof.kind()) {
    case K::Equiv:
      check_linear(proof.raw_source());
      check_linear(proof.raw_target());
      if (normalize(proof.raw_source()) != normalize(proof.raw_target())) return false;
      break;
    case K::Compose:
      if (proof.children().size() != 2) return false;
      if (proof.children()[0].target() != proof.children()[1].source()) return false;
      break;
    case K::OtimesPar:
    case K::TriPar:
      if (proof.children().empty() || !disjoint_children(proof)) return false;
      break;
    case K::InterchangerSubst:
      if (proof.children().size() != 4 || !disjoint_children(proof)) return false;
      break;
  }
  const Expression s = proof.source(), t = proof.target();
  const Subset vs = sorted_variables(s);
  if (vs != sorted_variables(t)) return false;
  const std::size_t universe = vs.empty() ? 0 : vs.back() + 1;
  return is_inclusion(evaluate_on(s, universe), evaluate_on(t, universe));
}

void print(const StructureMapProof& proof, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += kind_name(proof.kind());
  out += ": ";
  if (proof.kind() == StructureMapProof::Kind::Equiv) {
    out += to_string(proof.raw_source()) + " => " + to_string(proof.raw_target());
  } else {
    out += to_string(proof.source()) + " => " + to_string(proof.target());
  }
  out += '\n';
  for (const auto& c : proof.children()) print(c, depth + 1, out);
}

}  // namespace

bool verify_proof(const StructureMapProof& proof) {
  try {
    return verify_node(proof);
  } catch (const Error&) {
    return false;
  }
}

std::string to_string(const StructureMapProof& proof) {
  std::string out;
  print(proof, 0, out);
  return out;
}

}  // namespace depcalc
