#include "depcalc/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace depcalc {

namespace {

std::string show(std::span<const std::string> list) {
  std::string out = "[";
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (k) out += ", ";
    out += list[k];
  }
  return out + "]";
}

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

void append(TypeList& to, const TypeList& from) { to.insert(to.end(), from.begin(), from.end()); }

}  // namespace

PartialPolygraph::PartialPolygraph(TypeList types, std::vector<std::pair<std::string, std::string>> compat,
                                   std::map<std::string, Generator> generators)
    : types_(std::move(types)), generators_(std::move(generators)) {
  for (std::size_t k = 0; k < types_.size(); ++k) {
    if (!index_.emplace(types_[k], k).second) throw InvalidDiagram("duplicate vertex type '" + types_[k] + "'");
  }
  compat_.assign(types_.size(), std::vector<bool>(types_.size(), false));
  for (const auto& [a, b] : compat) {
    if (!has_type(a) || !has_type(b)) throw InvalidDiagram("compat names unknown type in (" + a + ", " + b + ")");
    compat_[index_.at(a)][index_.at(b)] = true;
    compat_[index_.at(b)][index_.at(a)] = true;
  }
  for (const auto& [name, gen] : generators_) {
    if (!valid_list(gen.src)) throw InvalidDiagram("generator '" + name + "' has invalid source list " + show(gen.src));
    if (!valid_list(gen.tgt)) throw InvalidDiagram("generator '" + name + "' has invalid target list " + show(gen.tgt));
  }
}

PartialPolygraph PartialPolygraph::total(TypeList types, std::map<std::string, Generator> generators) {
  std::vector<std::pair<std::string, std::string>> compat;
  for (const auto& a : types) {
    for (const auto& b : types) compat.emplace_back(a, b);
  }
  return PartialPolygraph(std::move(types), std::move(compat), std::move(generators));
}

std::vector<std::pair<std::string, std::string>> PartialPolygraph::compat_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t a = 0; a < types_.size(); ++a) {
    for (std::size_t b = a; b < types_.size(); ++b) {
      if (compat_[a][b]) out.emplace_back(types_[a], types_[b]);
    }
  }
  return out;
}

const Generator& PartialPolygraph::generator(const std::string& name) const {
  auto it = generators_.find(name);
  if (it == generators_.end()) throw InvalidDiagram("unknown generator '" + name + "'");
  return it->second;
}

bool PartialPolygraph::compatible(const std::string& a, const std::string& b) const {
  auto ia = index_.find(a), ib = index_.find(b);
  return ia != index_.end() && ib != index_.end() && compat_[ia->second][ib->second];
}

bool PartialPolygraph::valid_list(std::span<const std::string> list) const {
  for (const auto& t : list) {
    if (!has_type(t)) return false;
  }
  for (std::size_t k = 0; k + 1 < list.size(); ++k) {
    if (!compatible(list[k], list[k + 1])) return false;
  }
  return true;
}

namespace {

struct LayerTypes {
  TypeList in;
  TypeList out;
};

// Empty optional and a message on unknown names.
std::optional<LayerTypes> layer_types(const PartialPolygraph& g, const Layer& layer, std::string& why) {
  LayerTypes t;
  for (const Cell& cell : layer) {
    bool ok = std::visit(overloaded{
                             [&](const GenCell& c) {
                               if (!g.has_generator(c.name)) {
                                 why = "unknown generator '" + c.name + "'";
                                 return false;
                               }
                               append(t.in, g.generator(c.name).src);
                               append(t.out, g.generator(c.name).tgt);
                               return true;
                             },
                             [&](const IdCell& c) {
                               if (!g.has_type(c.type)) {
                                 why = "unknown type '" + c.type + "'";
                                 return false;
                               }
                               t.in.push_back(c.type);
                               t.out.push_back(c.type);
                               return true;
                             },
                             [&](const SwapCell& c) {
                               if (!g.compatible(c.first, c.second)) {
                                 why = "swap of incompatible wires " + c.first + ", " + c.second;
                                 return false;
                               }
                               t.in.insert(t.in.end(), {c.first, c.second});
                               t.out.insert(t.out.end(), {c.second, c.first});
                               return true;
                             },
                         },
                         cell);
    if (!ok) return std::nullopt;
  }
  return t;
}

std::vector<TypeList> stages_or_throw(const PartialPolygraph& g, const StringDiagram& d) {
  if (DiagramCheck c = validate_diagram(g, d); !c) {
    throw InvalidDiagram("stage " + std::to_string(c.stage) + ": " + c.message);
  }
  std::vector<TypeList> stages{d.input};
  std::string why;
  for (const Layer& layer : d.layers) stages.push_back(layer_types(g, layer, why)->out);
  return stages;
}

Layer identity_layer(const TypeList& types) {
  Layer out;
  for (const auto& t : types) out.push_back(IdCell{t});
  return out;
}

}  // namespace

DiagramCheck validate_diagram(const PartialPolygraph& g, const StringDiagram& d) {
  auto fail = [](std::size_t stage, std::string message) { return DiagramCheck{false, stage, std::move(message)}; };
  TypeList current = d.input;
  if (!g.valid_list(current)) return fail(0, "invalid input list " + show(current));
  for (std::size_t k = 0; k < d.layers.size(); ++k) {
    std::string why;
    auto t = layer_types(g, d.layers[k], why);
    if (!t) return fail(k, why);
    if (t->in != current) {
      return fail(k, "layer " + std::to_string(k) + " expects " + show(t->in) + " but receives " + show(current));
    }
    current = std::move(t->out);
    if (!g.valid_list(current)) return fail(k + 1, "invalid list " + show(current));
  }
  if (current != d.output) {
    return fail(d.layers.size(), "diagram ends with " + show(current) + " but declares output " + show(d.output));
  }
  return {};
}

EdgePoset edge_poset(const PartialPolygraph& g, const StringDiagram& d) {
  stages_or_throw(g, d);
  EdgePoset out;
  std::vector<Pair> rel;
  std::vector<std::optional<Element>> producer(d.input.size());
  for (std::size_t k = 0; k < d.layers.size(); ++k) {
    std::vector<std::optional<Element>> next;
    std::size_t wire = 0;
    for (std::size_t c = 0; c < d.layers[k].size(); ++c) {
      const Cell& cell = d.layers[k][c];
      if (const auto* gen = std::get_if<GenCell>(&cell)) {
        const Element self = out.instances.size();
        out.instances.push_back({k, c, gen->name});
        const Generator& shape = g.generator(gen->name);
        for (std::size_t i = 0; i < shape.src.size(); ++i, ++wire) {
          if (producer[wire]) rel.emplace_back(*producer[wire], self);
        }
        next.insert(next.end(), shape.tgt.size(), self);
      } else if (std::holds_alternative<IdCell>(cell)) {
        next.push_back(producer[wire++]);
      } else {
        next.push_back(producer[wire + 1]);
        next.push_back(producer[wire]);
        wire += 2;
      }
    }
    producer = std::move(next);
  }
  out.poset = FinitePoset::from_pairs(out.instances.size(), rel);
  return out;
}

std::size_t count_generators(const Layer& layer) {
  return static_cast<std::size_t>(std::count_if(layer.begin(), layer.end(),
                                                [](const Cell& c) { return std::holds_alternative<GenCell>(c); }));
}

std::size_t generator_count(const StringDiagram& d) {
  std::size_t n = 0;
  for (const Layer& layer : d.layers) n += count_generators(layer);
  return n;
}

StringDiagram tensor(const StringDiagram& left, const StringDiagram& right) {
  StringDiagram out;
  out.input = left.input;
  append(out.input, right.input);
  out.output = left.output;
  append(out.output, right.output);
  const std::size_t depth = std::max(left.layers.size(), right.layers.size());
  for (std::size_t k = 0; k < depth; ++k) {
    Layer layer = k < left.layers.size() ? left.layers[k] : identity_layer(left.output);
    Layer rest = k < right.layers.size() ? right.layers[k] : identity_layer(right.output);
    layer.insert(layer.end(), rest.begin(), rest.end());
    out.layers.push_back(std::move(layer));
  }
  return out;
}

StringDiagram compose(const StringDiagram& first, const StringDiagram& second) {
  if (first.output != second.input) {
    throw InvalidDiagram("cannot compose: " + show(first.output) + " does not match " + show(second.input));
  }
  StringDiagram out{first.input, second.output, first.layers};
  out.layers.insert(out.layers.end(), second.layers.begin(), second.layers.end());
  return out;
}

StringDiagram identity_diagram(TypeList types) { return StringDiagram{types, types, {}}; }

StringDiagram insert_identity_layer(const PartialPolygraph& g, const StringDiagram& d, std::size_t at) {
  const auto stages = stages_or_throw(g, d);
  if (at > d.layers.size()) throw IndexError("insert_identity_layer: layer out of range");
  StringDiagram out = d;
  out.layers.insert(out.layers.begin() + static_cast<std::ptrdiff_t>(at), identity_layer(stages[at]));
  return out;
}

SlideResult slide_generator(const PartialPolygraph& g, const StringDiagram& d, std::size_t layer,
                            std::size_t position) {
  stages_or_throw(g, d);
  if (layer + 1 >= d.layers.size() || position >= d.layers[layer].size()) {
    throw PreconditionError("slide_generator: no following layer");
  }
  const auto* gen = std::get_if<GenCell>(&d.layers[layer][position]);
  if (!gen) throw PreconditionError("slide_generator: cell is not a generator");
  for (const Cell& cell : d.layers[layer + 1]) {
    if (!std::holds_alternative<IdCell>(cell)) {
      throw PreconditionError("slide_generator: following layer is not identity-only");
    }
  }

  std::string why;
  Layer before(d.layers[layer].begin(), d.layers[layer].begin() + static_cast<std::ptrdiff_t>(position));
  const std::size_t offset = layer_types(g, before, why)->out.size();
  const Generator& shape = g.generator(gen->name);

  Layer lower = before;
  for (const auto& t : shape.src) lower.push_back(IdCell{t});
  lower.insert(lower.end(), d.layers[layer].begin() + static_cast<std::ptrdiff_t>(position) + 1,
               d.layers[layer].end());

  const Layer& ids = d.layers[layer + 1];
  Layer upper(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(offset));
  upper.push_back(*gen);
  upper.insert(upper.end(), ids.begin() + static_cast<std::ptrdiff_t>(offset + shape.tgt.size()), ids.end());

  SlideResult out{d, {}};
  out.diagram.layers[layer] = std::move(lower);
  out.diagram.layers[layer + 1] = std::move(upper);

  std::size_t slid = 0, right = 0;
  for (std::size_t k = 0; k < layer; ++k) slid += count_generators(d.layers[k]);
  for (std::size_t c = 0; c < d.layers[layer].size(); ++c) {
    if (!std::holds_alternative<GenCell>(d.layers[layer][c])) continue;
    if (c < position) ++slid;
    if (c > position) ++right;
  }
  // The slid instance now follows the rest of its old layer.
  for (Element k = 0; k < generator_count(d); ++k) {
    if (k < slid || k > slid + right) out.moved.push_back(k);
    else if (k == slid) out.moved.push_back(slid + right);
    else out.moved.push_back(k - 1);
  }
  return out;
}

namespace {

class Router {
 public:
  Router(const PartialPolygraph& g, std::vector<WireSource> wires, TypeList types)
      : g_(g), wires_(std::move(wires)), types_(std::move(types)) {}

  // Bubble sort by rank; each adjacent transposition is its own layer.
  void arrange(const std::vector<std::size_t>& rank_of_wire, std::vector<Layer>& layers) {
    std::vector<std::size_t> rank = rank_of_wire;
    for (bool swapped = true; swapped;) {
      swapped = false;
      for (std::size_t i = 0; i + 1 < rank.size(); ++i) {
        if (rank[i] <= rank[i + 1]) continue;
        if (!g_.compatible(types_[i], types_[i + 1])) {
          throw InvalidDiagram("wires of types " + types_[i] + " and " + types_[i + 1] + " cannot cross");
        }
        Layer layer = identity_layer(TypeList(types_.begin(), types_.begin() + static_cast<std::ptrdiff_t>(i)));
        layer.push_back(SwapCell{types_[i], types_[i + 1]});
        for (std::size_t k = i + 2; k < types_.size(); ++k) layer.push_back(IdCell{types_[k]});
        layers.push_back(std::move(layer));
        std::swap(rank[i], rank[i + 1]);
        std::swap(types_[i], types_[i + 1]);
        std::swap(wires_[i], wires_[i + 1]);
        swapped = true;
      }
    }
  }

  std::vector<WireSource>& wires() { return wires_; }
  TypeList& types() { return types_; }

 private:
  const PartialPolygraph& g_;
  std::vector<WireSource> wires_;
  TypeList types_;
};

}  // namespace

LayeredNetwork layer_network(const PartialPolygraph& g, const Network& net) {
  const std::size_t n = net.nodes.size();
  auto type_of = [&](const WireSource& s) -> const std::string& {
    if (!s.node) {
      if (s.port >= net.input.size()) throw InvalidDiagram("boundary input " + std::to_string(s.port) + " out of range");
      return net.input[s.port];
    }
    if (*s.node >= n) throw InvalidDiagram("wire from unknown node " + std::to_string(*s.node));
    const auto& tgt = g.generator(net.nodes[*s.node].generator).tgt;
    if (s.port >= tgt.size()) throw InvalidDiagram("node " + std::to_string(*s.node) + " has no output " + std::to_string(s.port));
    return tgt[s.port];
  };

  std::set<std::pair<std::size_t, std::size_t>> used;  // (node + 1 or 0, port)
  auto use = [&](const WireSource& s) {
    if (!used.emplace(s.node ? *s.node + 1 : 0, s.port).second) throw InvalidDiagram("wire used twice");
  };
  std::vector<std::vector<std::size_t>> deps(n);
  for (std::size_t u = 0; u < n; ++u) {
    const Generator& shape = g.generator(net.nodes[u].generator);
    if (net.nodes[u].inputs.size() != shape.src.size()) {
      throw InvalidDiagram("node " + std::to_string(u) + " needs " + std::to_string(shape.src.size()) + " inputs");
    }
    for (std::size_t i = 0; i < shape.src.size(); ++i) {
      const WireSource& s = net.nodes[u].inputs[i];
      if (type_of(s) != shape.src[i]) throw InvalidDiagram("type mismatch at input " + std::to_string(i) + " of node " + std::to_string(u));
      use(s);
      if (s.node) deps[u].push_back(*s.node);
    }
  }
  std::size_t wire_total = net.input.size();
  for (const auto& node : net.nodes) wire_total += g.generator(node.generator).tgt.size();
  for (const auto& s : net.outputs) {
    type_of(s);
    use(s);
  }
  if (used.size() != wire_total) throw InvalidDiagram("network leaves a wire unused");

  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    std::size_t pick = n;
    for (std::size_t u = 0; u < n && pick == n; ++u) {
      if (!placed[u] && std::all_of(deps[u].begin(), deps[u].end(), [&](std::size_t v) { return placed[v]; })) pick = u;
    }
    if (pick == n) throw InvalidDiagram("network has a cycle");
    placed[pick] = true;
    order.push_back(pick);
  }

  std::vector<WireSource> start;
  for (std::size_t i = 0; i < net.input.size(); ++i) start.push_back(WireSource::boundary(i));
  Router router(g, start, net.input);
  LayeredNetwork out;
  out.diagram.input = net.input;

  for (std::size_t u : order) {
    const auto& needed = net.nodes[u].inputs;
    const Generator& shape = g.generator(net.nodes[u].generator);
    auto& wires = router.wires();
    auto slot = [&](const WireSource& w) {
      return static_cast<std::size_t>(std::find(needed.begin(), needed.end(), w) - needed.begin());
    };
    std::size_t insert_at = 0;
    bool seen_first = needed.empty();
    for (const auto& w : wires) {
      if (!needed.empty() && w == needed.front()) seen_first = true;
      if (!seen_first && slot(w) == needed.size()) ++insert_at;
    }
    if (needed.empty()) insert_at = wires.size();

    std::vector<std::size_t> rank(wires.size());
    std::size_t before = 0, after = 0;
    for (std::size_t k = 0; k < wires.size(); ++k) {
      const std::size_t s = slot(wires[k]);
      if (s < needed.size()) rank[k] = insert_at + s;
      else if (before < insert_at) rank[k] = before++;
      else rank[k] = insert_at + needed.size() + after++;
    }
    router.arrange(rank, out.diagram.layers);

    auto& types = router.types();
    Layer layer = identity_layer(TypeList(types.begin(), types.begin() + static_cast<std::ptrdiff_t>(insert_at)));
    layer.push_back(GenCell{net.nodes[u].generator});
    for (std::size_t k = insert_at + needed.size(); k < types.size(); ++k) layer.push_back(IdCell{types[k]});
    out.diagram.layers.push_back(std::move(layer));
    out.node_of_instance.push_back(u);

    std::vector<WireSource> produced;
    for (std::size_t p = 0; p < shape.tgt.size(); ++p) produced.push_back(WireSource::of(u, p));
    const auto first = static_cast<std::ptrdiff_t>(insert_at);
    const auto last = static_cast<std::ptrdiff_t>(insert_at + needed.size());
    wires.erase(wires.begin() + first, wires.begin() + last);
    wires.insert(wires.begin() + first, produced.begin(), produced.end());
    types.erase(types.begin() + first, types.begin() + last);
    types.insert(types.begin() + first, shape.tgt.begin(), shape.tgt.end());
  }

  std::vector<std::size_t> rank;
  for (const auto& w : router.wires()) {
    rank.push_back(static_cast<std::size_t>(std::find(net.outputs.begin(), net.outputs.end(), w) - net.outputs.begin()));
  }
  router.arrange(rank, out.diagram.layers);
  out.diagram.output = router.types();

  if (DiagramCheck c = validate_diagram(g, out.diagram); !c) {
    throw InvalidDiagram("layering is invalid at stage " + std::to_string(c.stage) + ": " + c.message);
  }
  return out;
}

Realization realize_poset(const FinitePoset& p) {
  const std::size_t n = p.size();
  const auto covers = transitive_reduction(p);
  std::vector<std::size_t> lower(n, 0), upper(n, 0);
  for (const auto& [a, b] : covers) {
    ++upper[a];
    ++lower[b];
  }

  std::map<std::string, Generator> generators;
  Network net;
  std::vector<std::size_t> next_port(n, 0);
  for (Element i = 0; i < n; ++i) {
    const std::size_t s = lower[i] == 0 ? 1 : 0, t = upper[i] == 0 ? 1 : 0;
    generators["e" + std::to_string(i)] = Generator{TypeList(s + lower[i], "w"), TypeList(t + upper[i], "w")};
    NetworkNode node{"e" + std::to_string(i), {}};
    if (s) {
      node.inputs.push_back(WireSource::boundary(net.input.size()));
      net.input.push_back("w");
    }
    net.nodes.push_back(std::move(node));
    if (t) net.outputs.push_back(WireSource::of(i, next_port[i]++));
  }
  for (const auto& [a, b] : covers) net.nodes[b].inputs.push_back(WireSource::of(a, next_port[a]++));

  Realization out{PartialPolygraph::total({"w"}, std::move(generators)), {}};
  out.layered = layer_network(out.polygraph, net);
  return out;
}

}  // namespace depcalc
