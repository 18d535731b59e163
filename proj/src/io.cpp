#include "depcalc/io.hpp"

#include <fstream>
#include <sstream>

namespace depcalc {

namespace {

// Wraps nlohmann type errors so callers only see ParseError.
template <class F>
auto parsing(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

TypeList type_list(const Json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array()) throw ParseError(std::string("missing list '") + field + "'");
  return j.at(field).get<TypeList>();
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Json poset_to_json(const FinitePoset& p) {
  Json rel = Json::array();
  for (const auto& [a, b] : p.pairs()) rel.push_back({a, b});
  return Json{{"elements", p.size()}, {"relations", rel}};
}

FinitePoset poset_from_json(const Json& j) {
  return parsing("poset", [&] {
    if (!j.is_object() || !j.contains("elements")) throw ParseError("poset: missing 'elements'");
    if (!j.at("elements").is_number_unsigned()) throw ParseError("poset: 'elements' must be a nonnegative integer");
    const auto n = j.at("elements").get<std::size_t>();
    std::vector<Pair> rel;
    if (j.contains("relations")) {
      for (const Json& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_number_unsigned() || !r[1].is_number_unsigned()) {
          throw ParseError("poset: relation " + r.dump() + " is not a pair of indices");
        }
        rel.emplace_back(r[0].get<std::size_t>(), r[1].get<std::size_t>());
      }
    }
    return FinitePoset::from_pairs(n, rel);
  });
}

std::string poset_to_dot(const FinitePoset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n";
  for (Element i = 0; i < p.size(); ++i) os << "  " << i << " [label=\"" << i << "\"];\n";
  for (const auto& [a, b] : transitive_reduction(p)) os << "  " << a << " -> " << b << ";\n";
  os << "}\n";
  return os.str();
}

Json poly_to_json(const FinitePolynomial& p) { return Json{{"positions", p.direction_counts()}}; }

FinitePolynomial poly_from_json(const Json& j) {
  return parsing("polynomial", [&] {
    if (!j.is_object() || !j.contains("positions") || !j.at("positions").is_array()) {
      throw ParseError("polynomial: missing list 'positions'");
    }
    std::vector<std::size_t> d;
    for (const Json& x : j.at("positions")) {
      if (!x.is_number_unsigned()) throw ParseError("polynomial: direction count " + x.dump() + " is not a nonnegative integer");
      d.push_back(x.get<std::size_t>());
    }
    return FinitePolynomial(std::move(d));
  });
}

Json polygraph_to_json(const PartialPolygraph& g) {
  Json compat = Json::array();
  for (const auto& [a, b] : g.compat_pairs()) compat.push_back({a, b});
  Json gens = Json::object();
  for (const auto& [name, gen] : g.generators()) gens[name] = {{"src", gen.src}, {"tgt", gen.tgt}};
  return Json{{"types", g.types()}, {"compat", compat}, {"generators", gens}};
}

PartialPolygraph polygraph_from_json(const Json& j) {
  return parsing("polygraph", [&] {
    if (!j.is_object()) throw ParseError("polygraph: expected an object");
    TypeList types = type_list(j, "types");
    std::vector<std::pair<std::string, std::string>> compat;
    if (j.contains("compat")) {
      for (const Json& c : j.at("compat")) {
        if (!c.is_array() || c.size() != 2) throw ParseError("polygraph: compat entry " + c.dump() + " is not a pair");
        compat.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
      }
    }
    std::map<std::string, Generator> gens;
    if (j.contains("generators")) {
      for (const auto& [name, body] : j.at("generators").items()) gens[name] = {type_list(body, "src"), type_list(body, "tgt")};
    }
    return PartialPolygraph(std::move(types), std::move(compat), std::move(gens));
  });
}

Json diagram_to_json(const StringDiagram& d) {
  Json layers = Json::array();
  for (const Layer& layer : d.layers) {
    Json cells = Json::array();
    for (const Cell& cell : layer) {
      if (const auto* g = std::get_if<GenCell>(&cell)) cells.push_back({{"gen", g->name}});
      else if (const auto* i = std::get_if<IdCell>(&cell)) cells.push_back({{"id", i->type}});
      else {
        const auto& s = std::get<SwapCell>(cell);
        cells.push_back({{"swap", {s.first, s.second}}});
      }
    }
    layers.push_back(cells);
  }
  return Json{{"input", d.input}, {"output", d.output}, {"layers", layers}};
}

StringDiagram diagram_from_json(const Json& j) {
  return parsing("diagram", [&] {
    if (!j.is_object()) throw ParseError("diagram: expected an object");
    StringDiagram d{type_list(j, "input"), type_list(j, "output"), {}};
    if (j.contains("layers")) {
      for (const Json& layer : j.at("layers")) {
        Layer cells;
        for (const Json& c : layer) {
          if (!c.is_object() || c.size() != 1) throw ParseError("diagram: cell " + c.dump() + " must have exactly one key");
          if (c.contains("gen")) cells.push_back(GenCell{c.at("gen").get<std::string>()});
          else if (c.contains("id")) cells.push_back(IdCell{c.at("id").get<std::string>()});
          else if (c.contains("swap")) {
            const Json& s = c.at("swap");
            if (!s.is_array() || s.size() != 2) throw ParseError("diagram: swap needs two types");
            cells.push_back(SwapCell{s[0].get<std::string>(), s[1].get<std::string>()});
          } else {
            throw ParseError("diagram: unknown cell " + c.dump());
          }
        }
        d.layers.push_back(std::move(cells));
      }
    }
    return d;
  });
}

}  // namespace depcalc
