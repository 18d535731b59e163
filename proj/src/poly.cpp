#include "depcalc/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace depcalc {

PolySignature signature(const FinitePolynomial& p) {
  PolySignature s = p.direction_counts();
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

std::string to_string(const PolySignature& s) {
  if (s.empty()) return "0";
  std::map<std::size_t, std::size_t, std::greater<>> terms;
  for (std::size_t d : s) ++terms[d];
  std::string out;
  for (const auto& [exponent, coefficient] : terms) {
    if (!out.empty()) out += " + ";
    const bool show_coefficient = coefficient != 1 || exponent == 0;
    if (show_coefficient) out += std::to_string(coefficient);
    if (exponent >= 1) out += "y";
    if (exponent >= 2) out += "^" + std::to_string(exponent);
  }
  return out;
}

FinitePolynomial dirichlet(const FinitePolynomial& p, const FinitePolynomial& q) {
  std::vector<std::size_t> d;
  for (std::size_t a : p.direction_counts()) {
    for (std::size_t b : q.direction_counts()) d.push_back(a * b);
  }
  return FinitePolynomial(std::move(d));
}

namespace {

std::size_t power(std::size_t base, std::size_t exponent) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exponent; ++k) r *= base;
  return r;
}

}  // namespace

FinitePolynomial compose(const FinitePolynomial& p, const FinitePolynomial& q) {
  std::vector<std::size_t> d;
  const std::size_t m = q.position_count();
  for (std::size_t outer = 0; outer < p.position_count(); ++outer) {
    const std::size_t arity = p.directions(outer);
    const std::size_t count = power(m, arity);
    for (std::size_t code = 0; code < count; ++code) {
      std::size_t total = 0, rest = code;
      for (std::size_t i = arity; i-- > 0;) {
        total += q.directions(rest % m);
        rest /= m;
      }
      d.push_back(total);
    }
  }
  return FinitePolynomial(std::move(d));
}

std::size_t encode_compose_position(const FinitePolynomial& p, const FinitePolynomial& q,
                                    const ComposePosition& pos) {
  const std::size_t m = q.position_count();
  std::size_t index = 0;
  for (std::size_t outer = 0; outer < pos.outer; ++outer) index += power(m, p.directions(outer));
  if (pos.choice.size() != p.directions(pos.outer)) throw IndexError("compose position: wrong arity");
  std::size_t code = 0;
  for (std::size_t c : pos.choice) {
    if (c >= m) throw IndexError("compose position: choice out of range");
    code = code * m + c;
  }
  return index + code;
}

ComposePosition decode_compose_position(const FinitePolynomial& p, const FinitePolynomial& q,
                                        std::size_t index) {
  const std::size_t m = q.position_count();
  for (std::size_t outer = 0; outer < p.position_count(); ++outer) {
    const std::size_t arity = p.directions(outer);
    const std::size_t count = power(m, arity);
    if (index < count) {
      ComposePosition pos{outer, std::vector<std::size_t>(arity)};
      for (std::size_t i = arity; i-- > 0;) {
        pos.choice[i] = index % m;
        index /= m;
      }
      return pos;
    }
    index -= count;
  }
  throw IndexError("compose position index out of range");
}

std::size_t encode_compose_direction(const FinitePolynomial& q, const ComposePosition& pos,
                                     std::size_t i, std::size_t j) {
  std::size_t offset = 0;
  for (std::size_t k = 0; k < i; ++k) offset += q.directions(pos.choice.at(k));
  if (j >= q.directions(pos.choice.at(i))) throw IndexError("compose direction out of range");
  return offset + j;
}

bool is_valid(const PolyMorphism& m) {
  if (m.on_positions.size() != m.source.position_count()) return false;
  if (m.on_directions.size() != m.source.position_count()) return false;
  for (std::size_t pos = 0; pos < m.on_positions.size(); ++pos) {
    const std::size_t image = m.on_positions[pos];
    if (image >= m.target.position_count()) return false;
    if (m.on_directions[pos].size() != m.target.directions(image)) return false;
    for (std::size_t back : m.on_directions[pos]) {
      if (back >= m.source.directions(pos)) return false;
    }
  }
  return true;
}

PolyMorphism comparitor(const FinitePolynomial& p, const FinitePolynomial& q) {
  PolyMorphism m{dirichlet(p, q), compose(p, q), {}, {}};
  for (std::size_t outer = 0; outer < p.position_count(); ++outer) {
    for (std::size_t inner = 0; inner < q.position_count(); ++inner) {
      const ComposePosition image{outer, std::vector<std::size_t>(p.directions(outer), inner)};
      m.on_positions.push_back(encode_compose_position(p, q, image));
      std::vector<std::size_t> back(p.directions(outer) * q.directions(inner));
      for (std::size_t i = 0; i < p.directions(outer); ++i) {
        for (std::size_t j = 0; j < q.directions(inner); ++j) {
          back[encode_compose_direction(q, image, i, j)] = i * q.directions(inner) + j;
        }
      }
      m.on_directions.push_back(std::move(back));
    }
  }
  return m;
}

PolyMorphism interchanger(const FinitePolynomial& p, const FinitePolynomial& q,
                          const FinitePolynomial& r, const FinitePolynomial& s) {
  const FinitePolynomial pq = compose(p, q), rs = compose(r, s);
  const FinitePolynomial pr = dirichlet(p, r), qs = dirichlet(q, s);
  PolyMorphism m{dirichlet(pq, rs), compose(pr, qs), {}, {}};

  for (std::size_t a = 0; a < pq.position_count(); ++a) {
    const ComposePosition left = decode_compose_position(p, q, a);
    for (std::size_t b = 0; b < rs.position_count(); ++b) {
      const ComposePosition right = decode_compose_position(r, s, b);
      const std::size_t di = p.directions(left.outer), dk = r.directions(right.outer);

      ComposePosition image{left.outer * r.position_count() + right.outer,
                            std::vector<std::size_t>(di * dk)};
      for (std::size_t i = 0; i < di; ++i) {
        for (std::size_t k = 0; k < dk; ++k) {
          image.choice[i * dk + k] = left.choice[i] * s.position_count() + right.choice[k];
        }
      }
      m.on_positions.push_back(encode_compose_position(pr, qs, image));

      std::vector<std::size_t> back(m.target.directions(m.on_positions.back()));
      const std::size_t right_width = rs.directions(b);
      for (std::size_t i = 0; i < di; ++i) {
        for (std::size_t k = 0; k < dk; ++k) {
          const std::size_t dj = q.directions(left.choice[i]);
          const std::size_t dl = s.directions(right.choice[k]);
          for (std::size_t j = 0; j < dj; ++j) {
            for (std::size_t l = 0; l < dl; ++l) {
              const std::size_t target_dir = encode_compose_direction(qs, image, i * dk + k, j * dl + l);
              const std::size_t left_dir = encode_compose_direction(q, left, i, j);
              const std::size_t right_dir = encode_compose_direction(s, right, k, l);
              back[target_dir] = left_dir * right_width + right_dir;
            }
          }
        }
      }
      m.on_directions.push_back(std::move(back));
    }
  }
  return m;
}

namespace {

constexpr std::size_t kPositionBudget = 2'000'000;

using Key = std::vector<std::size_t>;

// A profile assigns to stage k a position for every history of directions
// at its predecessor stages. Predecessor sets are down-closed, so those
// histories never depend on the other stages.
class ProfileEnumerator {
 public:
  ProfileEnumerator(const FinitePoset& p, std::span<const FinitePolynomial> parts,
                    std::span<const Element> extension)
      : parts_(parts), order_(extension), pred_(extension.size()), choice_(extension.size()) {
    for (std::size_t k = 0; k < order_.size(); ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        if (p.less(order_[j], order_[k])) pred_[k].push_back(j);
      }
    }
    all_.resize(order_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) all_[k] = k;
  }

  FinitePolynomial run() {
    stage(0);
    return FinitePolynomial(std::move(result_));
  }

 private:
  const FinitePolynomial& part(std::size_t k) const { return parts_[order_[k]]; }

  std::size_t position(std::size_t k, const Key& dirs) const {
    Key key;
    for (std::size_t j : pred_[k]) key.push_back(dirs[j]);
    return choice_[k].at(key);
  }

  // Calls visit with every assignment of directions to `stages`, each stage
  // ranging over the directions of the position its own history selects.
  template <class Visit>
  void histories(const std::vector<std::size_t>& stages, std::size_t at, Key& dirs, Visit&& visit) const {
    if (at == stages.size()) {
      visit(dirs);
      return;
    }
    const std::size_t j = stages[at];
    const std::size_t d = part(j).directions(position(j, dirs));
    for (std::size_t x = 0; x < d; ++x) {
      dirs[j] = x;
      histories(stages, at + 1, dirs, visit);
    }
  }

  void stage(std::size_t k) {
    Key dirs(order_.size(), 0);
    if (k == order_.size()) {
      if (result_.size() >= kPositionBudget) throw SizeError("boxtimes_poly: too many positions");
      std::size_t count = 0;
      histories(all_, 0, dirs, [&](const Key&) { ++count; });
      result_.push_back(count);
      return;
    }
    std::vector<Key> domain;
    histories(pred_[k], 0, dirs, [&](const Key& d) {
      Key key;
      for (std::size_t j : pred_[k]) key.push_back(d[j]);
      domain.push_back(std::move(key));
    });

    const std::size_t m = part(k).position_count();
    if (m == 0 && !domain.empty()) return;
    double functions = 1;
    for (std::size_t x = 0; x < domain.size(); ++x) functions *= double(m);
    if (functions > double(kPositionBudget)) throw SizeError("boxtimes_poly: too many positions");

    std::vector<std::size_t> assignment(domain.size(), 0);
    for (;;) {
      choice_[k].clear();
      for (std::size_t x = 0; x < domain.size(); ++x) choice_[k][domain[x]] = assignment[x];
      stage(k + 1);

      std::size_t pos = assignment.size();
      while (pos > 0 && ++assignment[pos - 1] == m) assignment[--pos] = 0;
      if (pos == 0) break;
    }
    choice_[k].clear();
  }

  std::span<const FinitePolynomial> parts_;
  std::span<const Element> order_;
  std::vector<std::vector<std::size_t>> pred_;
  std::vector<std::size_t> all_;
  std::vector<std::map<Key, std::size_t>> choice_;
  std::vector<std::size_t> result_;
};

}  // namespace

FinitePolynomial boxtimes_poly(const FinitePoset& p, std::span<const FinitePolynomial> parts,
                               std::span<const Element> extension) {
  if (parts.size() != p.size()) {
    throw ArityError("boxtimes_poly: expected " + std::to_string(p.size()) + " parts, got " +
                     std::to_string(parts.size()));
  }
  if (!is_linear_extension(p, extension)) throw InvalidExtension("boxtimes_poly: not a linear extension");
  for (const auto& part : parts) {
    if (part.position_count() > kPolyPartPositionLimit) {
      throw SizeError("boxtimes_poly: parts are limited to " + std::to_string(kPolyPartPositionLimit) +
                      " positions");
    }
  }
  return ProfileEnumerator(p, parts, extension).run();
}

FinitePolynomial boxtimes_poly(const FinitePoset& p, std::span<const FinitePolynomial> parts) {
  const Permutation ext = least_linear_extension(p);
  return boxtimes_poly(p, parts, ext);
}

}  // namespace depcalc
