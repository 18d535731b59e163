#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "depcalc/poset.hpp"

namespace depcalc {

using TypeList = std::vector<std::string>;

struct Generator {
  TypeList src;
  TypeList tgt;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Vertex types, a symmetric compatibility relation on them, and generators
/// whose source and target lists are valid.
class PartialPolygraph {
 public:
  PartialPolygraph() = default;

  /// Throws InvalidDiagram on duplicate or unknown types and on generators
  /// with an invalid source or target list.
  PartialPolygraph(TypeList types, std::vector<std::pair<std::string, std::string>> compat,
                   std::map<std::string, Generator> generators);

  /// Every pair of types compatible, including each type with itself.
  static PartialPolygraph total(TypeList types, std::map<std::string, Generator> generators);

  const TypeList& types() const { return types_; }
  const std::map<std::string, Generator>& generators() const { return generators_; }
  /// Compatible pairs (a, b) with a <= b in type order.
  std::vector<std::pair<std::string, std::string>> compat_pairs() const;

  bool has_type(const std::string& t) const { return index_.contains(t); }
  bool has_generator(const std::string& name) const { return generators_.contains(name); }
  /// Throws InvalidDiagram for an unknown name.
  const Generator& generator(const std::string& name) const;

  bool compatible(const std::string& a, const std::string& b) const;
  /// Known types with consecutive entries compatible.
  bool valid_list(std::span<const std::string> list) const;

 private:
  TypeList types_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<bool>> compat_;
  std::map<std::string, Generator> generators_;
};

struct GenCell {
  std::string name;
  friend bool operator==(const GenCell&, const GenCell&) = default;
};
struct IdCell {
  std::string type;
  friend bool operator==(const IdCell&, const IdCell&) = default;
};
/// Crossing of two adjacent wires: (first, second) in, (second, first) out.
struct SwapCell {
  std::string first;
  std::string second;
  friend bool operator==(const SwapCell&, const SwapCell&) = default;
};

using Cell = std::variant<GenCell, IdCell, SwapCell>;
using Layer = std::vector<Cell>;

struct StringDiagram {
  TypeList input;
  TypeList output;
  std::vector<Layer> layers;

  friend bool operator==(const StringDiagram&, const StringDiagram&) = default;
};

/// Stage k is the wire list entering layer k; stage layers.size() is the
/// output boundary.
struct DiagramCheck {
  bool valid = true;
  std::size_t stage = 0;
  std::string message;

  explicit operator bool() const { return valid; }
};

DiagramCheck validate_diagram(const PartialPolygraph& g, const StringDiagram& d);

struct Instance {
  std::size_t layer;
  std::size_t position;  // cell index within the layer
  std::string name;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct EdgePoset {
  FinitePoset poset;
  std::vector<Instance> instances;  // element k is instances[k]
};

/// Generator instances ordered by layer then position, related when an output
/// wire of one reaches an input of the other. Throws InvalidDiagram.
EdgePoset edge_poset(const PartialPolygraph& g, const StringDiagram& d);

std::size_t count_generators(const Layer& layer);
std::size_t generator_count(const StringDiagram& d);

/// Side by side; the shorter diagram is padded with identity layers. The
/// result may be invalid when the two boundaries meet incompatibly.
StringDiagram tensor(const StringDiagram& left, const StringDiagram& right);

/// `first` then `second`. Throws InvalidDiagram when the boundaries differ.
StringDiagram compose(const StringDiagram& first, const StringDiagram& second);

/// Identity diagram with no layers.
StringDiagram identity_diagram(TypeList types);

/// Moves the generator at (layer, position) into the identity-only layer
/// that follows it. `moved[k]` is the new index of old instance k. Throws
/// PreconditionError when the cell is not a generator or the next layer
/// holds anything but identities.
struct SlideResult {
  StringDiagram diagram;
  std::vector<Element> moved;
};
SlideResult slide_generator(const PartialPolygraph& g, const StringDiagram& d, std::size_t layer,
                            std::size_t position);

/// Identity layer inserted before layer `at` (at == layers.size() appends).
StringDiagram insert_identity_layer(const PartialPolygraph& g, const StringDiagram& d, std::size_t at);

// Wiring networks.

/// Where a wire comes from: a boundary input, or output `port` of node `node`.
struct WireSource {
  std::optional<std::size_t> node;
  std::size_t port = 0;

  static WireSource boundary(std::size_t i) { return {std::nullopt, i}; }
  static WireSource of(std::size_t node, std::size_t port) { return {node, port}; }
  friend bool operator==(const WireSource&, const WireSource&) = default;
};

struct NetworkNode {
  std::string generator;
  std::vector<WireSource> inputs;
};

struct Network {
  TypeList input;
  std::vector<NetworkNode> nodes;
  std::vector<WireSource> outputs;
};

struct LayeredNetwork {
  StringDiagram diagram;
  std::vector<std::size_t> node_of_instance;
};

/// One generator per layer in topological order (smallest node first), with
/// bubble-sorted transpositions bringing each node's inputs together. Every
/// wire must be used exactly once. Throws InvalidDiagram on cycles, type
/// mismatches, incompatible swaps, or an invalid stage.
LayeredNetwork layer_network(const PartialPolygraph& g, const Network& net);

/// A diagram whose edge poset is `p`: element i becomes generator "e<i>" with
/// one open input if minimal, one open output if maximal, and one internal
/// wire per cover relation. All wires have type "w".
struct Realization {
  PartialPolygraph polygraph;
  LayeredNetwork layered;
};
Realization realize_poset(const FinitePoset& p);

}  // namespace depcalc
