#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "depcalc/diagram.hpp"
#include "depcalc/poly.hpp"
#include "depcalc/poset.hpp"

namespace depcalc {

using Json = nlohmann::json;

/// Whole file as JSON. Throws ParseError when unreadable or malformed.
Json read_json_file(const std::filesystem::path& path);

/// {"elements": n, "relations": [[i, j], ...]} with every pair i < j of the
/// closed relation.
Json poset_to_json(const FinitePoset& p);
/// Relations may be any generating set; the closure is taken on load.
/// Throws ParseError, IndexError, CycleError.
FinitePoset poset_from_json(const Json& j);

/// Hasse diagram: one node per element, one edge per cover pair.
std::string poset_to_dot(const FinitePoset& p, const std::string& name = "P");

Json poly_to_json(const FinitePolynomial& p);
FinitePolynomial poly_from_json(const Json& j);

Json polygraph_to_json(const PartialPolygraph& g);
PartialPolygraph polygraph_from_json(const Json& j);

Json diagram_to_json(const StringDiagram& d);
StringDiagram diagram_from_json(const Json& j);

}  // namespace depcalc
