#include "depcalc/decoration.hpp"

namespace depcalc {

namespace {

struct PathEnds {
  TypeList start;
  TypeList end;
};

PathEnds check_paths(const PartialPolygraph& graph, const std::vector<std::vector<std::string>>& paths) {
  PathEnds ends;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const auto& path = paths[k];
    if (path.empty()) throw InvalidPaths("path " + std::to_string(k) + " is empty");
    std::string at;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (!graph.has_generator(path[i])) throw InvalidPaths("unknown generator '" + path[i] + "'");
      const Generator& e = graph.generator(path[i]);
      if (e.src.size() != 1 || e.tgt.size() != 1) throw InvalidPaths("generator '" + path[i] + "' is not an edge");
      if (i == 0) ends.start.push_back(e.src[0]);
      else if (e.src[0] != at) {
        throw InvalidPaths("path " + std::to_string(k) + ": '" + path[i] + "' does not start at " + at);
      }
      at = e.tgt[0];
    }
    ends.end.push_back(at);
  }
  if (!graph.valid_list(ends.start)) throw InvalidPaths("paths start on an invalid list");
  if (!graph.valid_list(ends.end)) throw InvalidPaths("paths end on an invalid list");
  return ends;
}

}  // namespace

FinitePoset path_poset(const PartialPolygraph& graph, const std::vector<std::vector<std::string>>& paths) {
  check_paths(graph, paths);
  FinitePoset p;
  for (const auto& path : paths) p = disjoint_union(p, FinitePoset::chain(path.size()));
  return p;
}

StringDiagram paths_diagram(const PartialPolygraph& graph, const std::vector<std::vector<std::string>>& paths) {
  const PathEnds ends = check_paths(graph, paths);
  StringDiagram d{ends.start, ends.end, {}};
  std::size_t depth = 0;
  for (const auto& path : paths) depth = std::max(depth, path.size());
  for (std::size_t k = 0; k < depth; ++k) {
    Layer layer;
    for (std::size_t p = 0; p < paths.size(); ++p) {
      if (k < paths[p].size()) layer.push_back(GenCell{paths[p][k]});
      else layer.push_back(IdCell{ends.end[p]});
    }
    d.layers.push_back(std::move(layer));
  }
  return d;
}

}  // namespace depcalc
