#include "depcalc/poset.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <string>

namespace depcalc {

namespace {

using Index = Eigen::Index;

Index idx(std::size_t i) { return static_cast<Index>(i); }

// Warshall saturation in place.
void close(RelationMatrix& m) {
  const Index n = m.rows();
  for (Index k = 0; k < n; ++k) {
    for (Index i = 0; i < n; ++i) {
      if (!m(i, k)) continue;
      m.row(i) = m.row(i).array() || m.row(k).array();
    }
  }
}

std::string pair_text(Element i, Element j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

}  // namespace

FinitePoset FinitePoset::from_pairs(std::size_t size, std::span<const Pair> pairs) {
  RelationMatrix m = RelationMatrix::Constant(idx(size), idx(size), false);
  for (const auto& [i, j] : pairs) {
    if (i >= size || j >= size) {
      throw IndexError("relation " + pair_text(i, j) + " out of range for " +
                       std::to_string(size) + " elements");
    }
    m(idx(i), idx(j)) = true;
  }
  close(m);
  if (m.diagonal().any()) {
    for (const auto& [i, j] : pairs) {
      if (m(idx(i), idx(i)) && m(idx(j), idx(i))) {
        throw CycleError("relation " + pair_text(i, j) + " lies on a cycle");
      }
    }
  }
  return FinitePoset(std::move(m));
}

FinitePoset FinitePoset::from_relation(const RelationMatrix& relation) {
  if (relation.rows() != relation.cols()) {
    throw SizeMismatch("relation matrix is not square");
  }
  std::vector<Pair> ps;
  for (Index i = 0; i < relation.rows(); ++i) {
    for (Index j = 0; j < relation.cols(); ++j) {
      if (relation(i, j)) ps.emplace_back(i, j);
    }
  }
  return from_pairs(static_cast<std::size_t>(relation.rows()), ps);
}

FinitePoset FinitePoset::chain(std::size_t n) {
  RelationMatrix m = RelationMatrix::Constant(idx(n), idx(n), false);
  for (Index i = 0; i < idx(n); ++i) {
    for (Index j = i + 1; j < idx(n); ++j) m(i, j) = true;
  }
  return FinitePoset(std::move(m));
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  return FinitePoset(RelationMatrix::Constant(idx(n), idx(n), false));
}

std::vector<Pair> FinitePoset::pairs() const {
  std::vector<Pair> out;
  for (Element i = 0; i < size(); ++i) {
    for (Element j = 0; j < size(); ++j) {
      if (less(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

FinitePoset FinitePoset::restrict(std::span<const Element> elements) const {
  const Index k = idx(elements.size());
  RelationMatrix m(k, k);
  for (Index a = 0; a < k; ++a) {
    if (elements[a] >= size()) throw IndexError("restriction element out of range");
    for (Index b = 0; b < k; ++b) {
      m(a, b) = less(elements[a], elements[b]);
    }
  }
  if (m.diagonal().any()) throw IndexError("restriction repeats an element");
  return FinitePoset(std::move(m));
}

std::vector<Element> FinitePoset::maximal_elements() const {
  std::vector<Element> out;
  for (Element i = 0; i < size(); ++i) {
    if (!lt_.row(idx(i)).any()) out.push_back(i);
  }
  return out;
}

std::vector<Element> FinitePoset::minimal_elements() const {
  std::vector<Element> out;
  for (Element i = 0; i < size(); ++i) {
    if (!lt_.col(idx(i)).any()) out.push_back(i);
  }
  return out;
}

FinitePoset disjoint_union(const FinitePoset& p, const FinitePoset& q) {
  const std::array<FinitePoset, 2> parts{p, q};
  return substitute(FinitePoset::antichain(2), parts);
}

FinitePoset join(const FinitePoset& p, const FinitePoset& q) {
  const std::array<FinitePoset, 2> parts{p, q};
  return substitute(FinitePoset::chain(2), parts);
}

FinitePoset substitute(const FinitePoset& outer, std::span<const FinitePoset> parts) {
  if (parts.size() != outer.size()) {
    throw ArityError("substitution needs " + std::to_string(outer.size()) + " parts, got " +
                     std::to_string(parts.size()));
  }
  std::vector<Index> offset(parts.size() + 1, 0);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    offset[a + 1] = offset[a] + idx(parts[a].size());
  }
  RelationMatrix m = RelationMatrix::Constant(offset.back(), offset.back(), false);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    const Index na = idx(parts[a].size());
    m.block(offset[a], offset[a], na, na) = parts[a].relation();
    for (std::size_t b = 0; b < parts.size(); ++b) {
      if (outer.less(a, b)) {
        m.block(offset[a], offset[b], na, idx(parts[b].size())).setConstant(true);
      }
    }
  }
  return FinitePoset::from_relation(m);
}

bool is_inclusion(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size()) return false;
  return !(p.relation().array() && !q.relation().array()).any();
}

namespace {

void extend_embeddings(const FinitePoset& pattern, const FinitePoset& target,
                       std::vector<Element>& mapping, std::vector<bool>& used,
                       std::vector<Embedding>& out) {
  const std::size_t k = mapping.size();
  if (k == pattern.size()) {
    out.push_back(Embedding{mapping});
    return;
  }
  for (Element t = 0; t < target.size(); ++t) {
    if (used[t]) continue;
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) {
      ok = pattern.less(a, k) == target.less(mapping[a], t) &&
           pattern.less(k, a) == target.less(t, mapping[a]);
    }
    if (!ok) continue;
    used[t] = true;
    mapping.push_back(t);
    extend_embeddings(pattern, target, mapping, used, out);
    mapping.pop_back();
    used[t] = false;
  }
}

void extend_linear(const FinitePoset& p, std::vector<Element>& prefix, std::vector<bool>& placed,
                   std::vector<Permutation>& out) {
  if (prefix.size() == p.size()) {
    out.push_back(prefix);
    return;
  }
  for (Element x = 0; x < p.size(); ++x) {
    if (placed[x]) continue;
    bool ready = true;
    for (Element y = 0; y < p.size() && ready; ++y) {
      ready = !(p.less(y, x) && !placed[y]);
    }
    if (!ready) continue;
    placed[x] = true;
    prefix.push_back(x);
    extend_linear(p, prefix, placed, out);
    prefix.pop_back();
    placed[x] = false;
  }
}

}  // namespace

std::vector<Embedding> full_embeddings(const FinitePoset& pattern, const FinitePoset& target) {
  std::vector<Embedding> out;
  if (pattern.size() > target.size()) return out;
  std::vector<Element> mapping;
  std::vector<bool> used(target.size(), false);
  extend_embeddings(pattern, target, mapping, used, out);
  return out;
}

std::vector<Permutation> linear_extensions(const FinitePoset& p) {
  std::vector<Permutation> out;
  std::vector<Element> prefix;
  std::vector<bool> placed(p.size(), false);
  extend_linear(p, prefix, placed, out);
  return out;
}

Permutation least_linear_extension(const FinitePoset& p) {
  Permutation order;
  std::vector<bool> placed(p.size(), false);
  while (order.size() < p.size()) {
    for (Element x = 0; x < p.size(); ++x) {
      if (placed[x]) continue;
      bool ready = true;
      for (Element y = 0; y < p.size() && ready; ++y) {
        ready = !(p.less(y, x) && !placed[y]);
      }
      if (ready) {
        placed[x] = true;
        order.push_back(x);
        break;
      }
    }
  }
  return order;
}

bool is_linear_extension(const FinitePoset& p, std::span<const Element> order) {
  if (order.size() != p.size()) return false;
  std::vector<std::size_t> position(p.size(), p.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= p.size() || position[order[k]] != p.size()) return false;
    position[order[k]] = k;
  }
  for (const auto& [i, j] : p.pairs()) {
    if (position[i] > position[j]) return false;
  }
  return true;
}

std::vector<std::vector<Element>> chains(const FinitePoset& p) {
  std::vector<std::vector<Element>> out;
  std::vector<std::vector<Element>> frontier;
  for (Element i = 0; i < p.size(); ++i) frontier.push_back({i});
  while (!frontier.empty()) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    std::vector<std::vector<Element>> next;
    for (const auto& c : frontier) {
      for (Element j = 0; j < p.size(); ++j) {
        if (p.less(c.back(), j)) {
          next.push_back(c);
          next.back().push_back(j);
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

void for_each_poset(std::size_t n, const std::function<void(const FinitePoset&)>& visit) {
  if (n > kEnumerationLimit) {
    throw SizeError("poset enumeration is limited to " + std::to_string(kEnumerationLimit) +
                    " elements");
  }
  // Grow one element at a time: the new element's strict down-set must be
  // down-closed, its up-set up-closed, and the two must be fully related.
  std::function<void(const RelationMatrix&)> grow = [&](const RelationMatrix& m) {
    const std::size_t k = static_cast<std::size_t>(m.rows());
    if (k == n) {
      visit(FinitePoset::from_relation(m));
      return;
    }
    const unsigned subsets = 1u << k;
    auto below = [&](unsigned set, std::size_t x) { return (set >> x) & 1u; };
    for (unsigned down = 0; down < subsets; ++down) {
      bool closed = true;
      for (std::size_t x = 0; x < k && closed; ++x) {
        for (std::size_t y = 0; y < k && closed; ++y) {
          if (below(down, x) && m(idx(y), idx(x)) && !below(down, y)) closed = false;
        }
      }
      if (!closed) continue;
      for (unsigned up = 0; up < subsets; ++up) {
        if (up & down) continue;
        bool ok = true;
        for (std::size_t x = 0; x < k && ok; ++x) {
          for (std::size_t y = 0; y < k && ok; ++y) {
            if (below(up, x) && m(idx(x), idx(y)) && !below(up, y)) ok = false;
            if (below(down, x) && below(up, y) && !m(idx(x), idx(y))) ok = false;
          }
        }
        if (!ok) continue;
        RelationMatrix grown = RelationMatrix::Constant(idx(k + 1), idx(k + 1), false);
        grown.topLeftCorner(idx(k), idx(k)) = m;
        for (std::size_t x = 0; x < k; ++x) {
          grown(idx(x), idx(k)) = below(down, x);
          grown(idx(k), idx(x)) = below(up, x);
        }
        grow(grown);
      }
    }
  };
  grow(RelationMatrix(0, 0));
}

std::vector<FinitePoset> enumerate_posets(std::size_t n) {
  std::vector<FinitePoset> out;
  for_each_poset(n, [&](const FinitePoset& p) { out.push_back(p); });
  return out;
}

std::vector<std::vector<Element>> connected_components(const FinitePoset& p) {
  std::vector<std::size_t> label(p.size(), p.size());
  std::vector<std::vector<Element>> out;
  for (Element s = 0; s < p.size(); ++s) {
    if (label[s] != p.size()) continue;
    std::vector<Element> component;
    std::vector<Element> stack{s};
    label[s] = out.size();
    while (!stack.empty()) {
      const Element x = stack.back();
      stack.pop_back();
      component.push_back(x);
      for (Element y = 0; y < p.size(); ++y) {
        if (label[y] == p.size() && p.comparable(x, y)) {
          label[y] = out.size();
          stack.push_back(y);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

std::vector<Pair> transitive_reduction(const FinitePoset& p) {
  std::vector<Pair> covers;
  for (const auto& [i, j] : p.pairs()) {
    bool implied = false;
    for (Element k = 0; k < p.size() && !implied; ++k) {
      implied = p.less(i, k) && p.less(k, j);
    }
    if (!implied) covers.emplace_back(i, j);
  }
  return covers;
}

}  // namespace depcalc
