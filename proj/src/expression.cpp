#include "depcalc/expression.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace depcalc {

namespace {

void collect_variables(const Expression& e, std::vector<Element>& out) {
  if (e.kind() == Expression::Kind::Var) {
    out.push_back(e.index());
    return;
  }
  for (const auto& c : e.children()) collect_variables(c, out);
}

Element least_variable(const Expression& e) {
  const auto vars = e.variables();
  return *std::min_element(vars.begin(), vars.end());
}

}  // namespace

std::vector<Element> Expression::variables() const {
  std::vector<Element> out;
  collect_variables(*this, out);
  return out;
}

Expression normalize(const Expression& e) {
  using K = Expression::Kind;
  if (e.kind() == K::Unit || e.kind() == K::Var) return e;

  std::vector<Expression> flat;
  for (const auto& child : e.children()) {
    Expression c = normalize(child);
    if (c.kind() == K::Unit) continue;
    if (c.kind() == e.kind()) {
      flat.insert(flat.end(), c.children().begin(), c.children().end());
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) return Expression::unit();
  if (flat.size() == 1) return flat.front();
  if (e.kind() == K::Otimes) {
    std::stable_sort(flat.begin(), flat.end(), [](const Expression& a, const Expression& b) {
      return least_variable(a) < least_variable(b);
    });
    return Expression::otimes(std::move(flat));
  }
  return Expression::tri(std::move(flat));
}

bool is_normal(const Expression& e) { return normalize(e) == e; }

std::string to_string(const Expression& e) {
  switch (e.kind()) {
    case Expression::Kind::Unit:
      return "e";
    case Expression::Kind::Var:
      return "x" + std::to_string(e.index());
    case Expression::Kind::Otimes:
    case Expression::Kind::Tri: {
      std::string out = e.kind() == Expression::Kind::Otimes ? "(ox" : "(tri";
      for (const auto& c : e.children()) out += " " + to_string(c);
      return out + ")";
    }
  }
  return {};
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Expression parse() {
    Expression e = term();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Expression term() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (text_[pos_] == '(') {
      ++pos_;
      const std::string_view op = word();
      if (op != "ox" && op != "tri") fail("unknown operator '" + std::string(op) + "'");
      std::vector<Expression> children;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) fail("missing ')'");
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        children.push_back(term());
      }
      return op == "ox" ? Expression::otimes(std::move(children))
                        : Expression::tri(std::move(children));
    }
    const std::string_view w = word();
    if (w == "e") return Expression::unit();
    if (w.size() >= 2 && w[0] == 'x' &&
        std::all_of(w.begin() + 1, w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return Expression::var(std::stoull(std::string(w.substr(1))));
    }
    fail("unexpected token '" + std::string(w) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

std::string to_string(const Obstruction& z) {
  std::ostringstream os;
  os << "(" << z.a << "," << z.b << "," << z.c << "," << z.d << ")";
  return os.str();
}

FinitePoset zigzag() { return FinitePoset::from_pairs(4, {{0, 1}, {2, 1}, {2, 3}}); }

std::optional<Obstruction> find_z(const FinitePoset& p) {
  const std::size_t n = p.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      for (Element c = 0; c < n; ++c) {
        if (!p.less(c, b) || p.comparable(a, c)) continue;
        for (Element d = 0; d < n; ++d) {
          if (p.less(c, d) && !p.comparable(a, d) && !p.comparable(b, d)) {
            return Obstruction{a, b, c, d};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_expressible(const FinitePoset& p) { return !find_z(p).has_value(); }

namespace {

// Assumes the full sub-poset on `set` has no zig-zag.
Expression decompose_set(const FinitePoset& p, const std::vector<Element>& set) {
  if (set.empty()) return Expression::unit();
  if (set.size() == 1) return Expression::var(set.front());

  const FinitePoset sub = p.restrict(set);
  const auto components = connected_components(sub);
  if (components.size() > 1) {
    std::vector<Expression> children;
    for (const auto& comp : components) {
      std::vector<Element> members;
      for (Element local : comp) members.push_back(set[local]);
      children.push_back(decompose_set(p, members));
    }
    return Expression::otimes(std::move(children));
  }

  const auto maxima = sub.maximal_elements();
  std::vector<Element> bottom, top;
  for (Element x = 0; x < sub.size(); ++x) {
    const bool below_all = std::all_of(maxima.begin(), maxima.end(),
                                       [&](Element m) { return sub.less(x, m); });
    (below_all ? bottom : top).push_back(set[x]);
  }
  for (Element lo : bottom) {
    for (Element hi : top) {
      if (!p.less(lo, hi)) throw std::logic_error("decompose: split is not a join");
    }
  }
  if (bottom.empty()) throw std::logic_error("decompose: empty bottom in connected poset");
  return Expression::tri({decompose_set(p, bottom), decompose_set(p, top)});
}

void add_relations(const Expression& e, RelationMatrix& m) {
  if (e.kind() != Expression::Kind::Tri) {
    for (const auto& c : e.children()) add_relations(c, m);
    return;
  }
  const auto& ch = e.children();
  for (std::size_t k = 0; k < ch.size(); ++k) {
    add_relations(ch[k], m);
    const auto lower = ch[k].variables();
    for (std::size_t l = k + 1; l < ch.size(); ++l) {
      for (Element hi : ch[l].variables()) {
        for (Element lo : lower) m(static_cast<Eigen::Index>(lo), static_cast<Eigen::Index>(hi)) = true;
      }
    }
  }
}

}  // namespace

Decomposition decompose(const FinitePoset& p) {
  if (auto z = find_z(p)) return *z;
  std::vector<Element> all(p.size());
  for (Element i = 0; i < p.size(); ++i) all[i] = i;
  return normalize(decompose_set(p, all));
}

void check_linear(const Expression& e) {
  using K = Expression::Kind;
  auto vars = e.variables();
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
    throw MalformedExpression("variable x" + std::to_string(*std::adjacent_find(vars.begin(), vars.end())) +
                              " occurs more than once");
  }
  auto check_arity = [](const Expression& node, auto&& self) -> void {
    if ((node.kind() == K::Otimes || node.kind() == K::Tri) && node.children().size() < 2) {
      throw MalformedExpression("compound node with fewer than two children");
    }
    for (const auto& c : node.children()) self(c, self);
  };
  check_arity(e, check_arity);
}

FinitePoset evaluate_on(const Expression& e, std::size_t universe) {
  check_linear(e);
  for (Element v : e.variables()) {
    if (v >= universe) throw MalformedExpression("variable x" + std::to_string(v) + " outside the universe");
  }
  RelationMatrix m = RelationMatrix::Constant(static_cast<Eigen::Index>(universe),
                                              static_cast<Eigen::Index>(universe), false);
  add_relations(e, m);
  return FinitePoset::from_relation(m);
}

FinitePoset evaluate(const Expression& e) {
  check_linear(e);
  if (!is_normal(e)) throw MalformedExpression("expression is not in normal form: " + to_string(e));
  auto vars = e.variables();
  std::sort(vars.begin(), vars.end());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] != i) throw MalformedExpression("variables are not exactly x0..x" + std::to_string(vars.size() - 1));
  }
  return evaluate_on(e, vars.size());
}

}  // namespace depcalc
