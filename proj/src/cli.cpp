#include "depcalc/cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "depcalc/decoration.hpp"
#include "depcalc/expression.hpp"
#include "depcalc/io.hpp"
#include "depcalc/operad.hpp"
#include "depcalc/structure_map.hpp"

namespace depcalc {

namespace {

// Inline JSON if the argument looks like an object, otherwise a file path.
Json load_json(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') {
    try {
      return Json::parse(arg);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("inline JSON: ") + e.what());
    }
  }
  return read_json_file(arg);
}

FinitePoset load_poset(const std::string& arg) { return poset_from_json(load_json(arg)); }
FinitePolynomial load_poly(const std::string& arg) { return poly_from_json(load_json(arg)); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

std::string poset_text(const FinitePoset& p) {
  std::string out = std::to_string(p.size()) + " elements; covers";
  const auto covers = transitive_reduction(p);
  if (covers.empty()) out += " none";
  for (std::size_t k = 0; k < covers.size(); ++k) {
    out += (k ? ", " : " ") + std::to_string(covers[k].first) + "<" + std::to_string(covers[k].second);
  }
  return out + "\n";
}

void emit_poset(std::ostream& out, const FinitePoset& p, const std::string& format, const std::string& name = "P") {
  if (format == "dot") out << poset_to_dot(p, name);
  else if (format == "text") out << poset_text(p);
  else out << poset_to_json(p).dump() << "\n";
}

Json proof_to_json(const StructureMapProof& proof) {
  Json children = Json::array();
  for (const auto& c : proof.children()) children.push_back(proof_to_json(c));
  return Json{{"kind", kind_name(proof.kind())},
              {"source", to_string(proof.source())},
              {"target", to_string(proof.target())},
              {"children", children}};
}

Json obstruction_json(const Obstruction& z) { return Json::array({z.a, z.b, z.c, z.d}); }

template <class V>
Decoration<V> parse_assignment(const std::string& text, const std::function<V(const std::string&)>& value) {
  Decoration<V> d;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("assignment '" + item + "' is not name=value");
    if (!d.emplace(item.substr(0, eq), value(item.substr(eq + 1))).second) {
      throw ParseError("generator '" + item.substr(0, eq) + "' assigned twice");
    }
  }
  return d;
}

FinitePolynomial parse_poly_value(const std::string& text) {
  std::vector<std::size_t> d;
  for (const auto& part : split(text, ':')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("polynomial value '" + text + "' must be direction counts separated by ':'");
    }
    d.push_back(std::stoul(part));
  }
  if (d.empty()) throw ParseError("empty polynomial value");
  return FinitePolynomial(std::move(d));
}

void emit_poly(std::ostream& out, const FinitePolynomial& p, bool json, bool verbose) {
  if (json) {
    Json j = poly_to_json(p);
    j["signature"] = signature(p);
    out << j.dump() << "\n";
    return;
  }
  out << "signature: " << to_string(signature(p)) << "\n";
  out << "positions: " << p.position_count() << "\n";
  if (verbose) {
    for (std::size_t k = 0; k < p.position_count(); ++k) {
      out << "  position " << k << ": " << p.directions(k) << " directions\n";
    }
  }
}

struct Options {
  std::string format;
  std::vector<std::string> files;
  std::string expression;
  std::string runtimes;
  bool gantt = false;
  std::string resolution = "1";
  bool verbose = false;
  std::string extension;
  std::string polygraph;
  std::string diagram;
  std::string algebra = "tropical";
  std::string assign;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Dependence calculus on finite posets, polynomials, and string diagrams.", "depcalc");
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto format_option = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format (default: " + allowed.front() + ")")
        ->check(CLI::IsMember(allowed));
    sub->preparse_callback([&o, first = allowed.front()](std::size_t) { o.format = first; });
  };
  auto on = [&](CLI::App* sub, std::function<int()> f) {
    sub->callback([&action, f = std::move(f)] { action = f; });
  };

  auto* check = app.add_subcommand("check", "Test a poset for expressibility");
  check->add_option("poset", o.files, "Poset JSON file")->required()->expected(1);
  format_option(check, {"text", "json"});
  on(check, [&] {
    const FinitePoset p = load_poset(o.files[0]);
    const auto z = find_z(p);
    if (o.format == "json") {
      Json j{{"expressible", !z}};
      if (z) j["obstruction"] = obstruction_json(*z);
      out << j.dump() << "\n";
    } else if (z) {
      out << "not expressible: obstruction " << to_string(*z) << "\n";
    } else {
      out << "expressible\n";
    }
    return z ? kExitNegative : kExitOk;
  });

  auto* decomp = app.add_subcommand("decompose", "Write an expressible poset as an expression");
  decomp->add_option("poset", o.files, "Poset JSON file")->required()->expected(1);
  format_option(decomp, {"text", "json"});
  on(decomp, [&] {
    const Decomposition d = decompose(load_poset(o.files[0]));
    const bool ok = std::holds_alternative<Expression>(d);
    if (o.format == "json") {
      Json j{{"expressible", ok}};
      if (ok) j["expression"] = to_string(std::get<Expression>(d));
      else j["obstruction"] = obstruction_json(std::get<Obstruction>(d));
      out << j.dump() << "\n";
    } else if (ok) {
      out << to_string(std::get<Expression>(d)) << "\n";
    } else {
      out << "not expressible: obstruction " << to_string(std::get<Obstruction>(d)) << "\n";
    }
    return ok ? kExitOk : kExitNegative;
  });

  auto* eval = app.add_subcommand("eval", "Evaluate an expression such as \"(tri x0 (ox x1 x2))\"");
  eval->add_option("expression", o.expression, "Expression text")->required();
  format_option(eval, {"json", "dot", "text"});
  on(eval, [&] {
    emit_poset(out, evaluate(normalize(parse_expression(o.expression))), o.format);
    return kExitOk;
  });

  auto* derive = app.add_subcommand("derive", "Derive the structure map between two expressible posets");
  derive->add_option("posets", o.files, "Source and target poset files")->required()->expected(2);
  format_option(derive, {"text", "json"});
  on(derive, [&] {
    const FinitePoset p = load_poset(o.files[0]), q = load_poset(o.files[1]);
    try {
      const StructureMapProof proof = derive_structure_map(p, q);
      const bool verified = verify_proof(proof);
      if (o.format == "json") {
        out << Json{{"proof", proof_to_json(proof)}, {"verified", verified}}.dump() << "\n";
      } else {
        out << to_string(proof) << "verified: " << (verified ? "yes" : "no") << "\n";
      }
      return verified ? kExitOk : kExitNegative;
    } catch (const NotExpressible& e) {
      if (o.format == "json") out << Json{{"error", e.what()}, {"obstruction", obstruction_json(e.obstruction())}}.dump() << "\n";
      else out << e.what() << "\n";
      return kExitNegative;
    } catch (const NotInclusion& e) {
      if (o.format == "json") out << Json{{"error", e.what()}}.dump() << "\n";
      else out << e.what() << "\n";
      return kExitNegative;
    }
  });

  auto* covers = app.add_subcommand("covers", "Expressible posets whose intersection is the input");
  covers->add_option("poset", o.files, "Poset JSON file")->required()->expected(1);
  format_option(covers, {"json", "dot", "text"});
  on(covers, [&] {
    const auto cs = expressible_covers(load_poset(o.files[0]));
    if (o.format == "json") {
      Json arr = Json::array();
      for (const auto& c : cs) arr.push_back(poset_to_json(c));
      out << Json{{"covers", arr}}.dump() << "\n";
    } else {
      for (std::size_t k = 0; k < cs.size(); ++k) emit_poset(out, cs[k], o.format, "C" + std::to_string(k));
    }
    return kExitOk;
  });

  auto* inter = app.add_subcommand("intersect", "Intersect posets on the same elements");
  inter->add_option("posets", o.files, "Poset JSON files")->required();
  format_option(inter, {"json", "dot", "text"});
  on(inter, [&] {
    std::vector<FinitePoset> ps;
    for (const auto& f : o.files) ps.push_back(load_poset(f));
    emit_poset(out, intersect(ps), o.format);
    return kExitOk;
  });

  auto* trop = app.add_subcommand("tropical", "Makespan, schedule, and critical chain");
  trop->add_option("--poset", o.files, "Poset JSON file")->required()->expected(1);
  trop->add_option("--runtimes", o.runtimes, "Comma-separated runtimes, e.g. 1,3/2,0.5")->required();
  trop->add_flag("--gantt", o.gantt, "Append a text Gantt chart");
  trop->add_option("--resolution", o.resolution, "Time units per Gantt column");
  format_option(trop, {"text", "json"});
  on(trop, [&] {
    const FinitePoset p = load_poset(o.files[0]);
    const auto s = schedule(p, parse_runtimes(o.runtimes));
    if (o.format == "json") {
      Json start = Json::array(), finish = Json::array();
      for (std::size_t i = 0; i < p.size(); ++i) {
        start.push_back(format_runtime(s.start[i]));
        finish.push_back(format_runtime(s.finish[i]));
      }
      out << Json{{"makespan", format_runtime(s.makespan)},
                  {"start", start},
                  {"finish", finish},
                  {"critical_chain", s.critical_chain}}
                 .dump()
          << "\n";
      return kExitOk;
    }
    out << "makespan: " << format_runtime(s.makespan) << "\n";
    out << "element  start  finish\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
      const std::string e = std::to_string(i), a = format_runtime(s.start[i]);
      out << e << std::string(9 - std::min<std::size_t>(8, e.size()), ' ') << a
          << std::string(7 - std::min<std::size_t>(6, a.size()), ' ') << format_runtime(s.finish[i]) << "\n";
    }
    out << "critical chain:";
    for (std::size_t k = 0; k < s.critical_chain.size(); ++k) out << (k ? " -> " : " ") << s.critical_chain[k];
    out << "\n";
    if (o.gantt) out << "\n" << render_gantt(s, parse_runtime(o.resolution));
    return kExitOk;
  });

  auto* poly = app.add_subcommand("poly", "Finite polynomial functors");
  poly->require_subcommand(1);
  auto poly_sub = [&](const char* name, const char* help) {
    auto* sub = poly->add_subcommand(name, help);
    sub->add_flag("--verbose", o.verbose, "Print every position");
    format_option(sub, {"text", "json"});
    return sub;
  };
  auto* ox = poly_sub("ox", "Dirichlet product of polynomials, left to right");
  ox->add_option("polys", o.files, "Polynomial JSON files")->required();
  on(ox, [&] {
    FinitePolynomial acc = FinitePolynomial::y();
    for (const auto& f : o.files) acc = dirichlet(acc, load_poly(f));
    emit_poly(out, acc, o.format == "json", o.verbose);
    return kExitOk;
  });
  auto* tri = poly_sub("tri", "Composition product of polynomials, left to right");
  tri->add_option("polys", o.files, "Polynomial JSON files")->required();
  on(tri, [&] {
    FinitePolynomial acc = FinitePolynomial::y();
    for (const auto& f : o.files) acc = compose(acc, load_poly(f));
    emit_poly(out, acc, o.format == "json", o.verbose);
    return kExitOk;
  });
  auto* box = poly_sub("boxtimes", "Poset-indexed product: a poset file, then one polynomial per element");
  box->add_option("files", o.files, "Poset file followed by polynomial files")->required();
  box->add_option("--extension", o.extension, "Linear extension, e.g. 0,2,1 (default: least)");
  on(box, [&] {
    const FinitePoset p = load_poset(o.files[0]);
    std::vector<FinitePolynomial> parts;
    for (std::size_t k = 1; k < o.files.size(); ++k) parts.push_back(load_poly(o.files[k]));
    FinitePolynomial r;
    if (o.extension.empty()) {
      r = boxtimes_poly(p, parts);
    } else {
      Permutation ext;
      for (const auto& x : split(o.extension, ',')) {
        if (x.empty() || x.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad extension entry '" + x + "'");
        ext.push_back(std::stoul(x));
      }
      r = boxtimes_poly(p, parts, ext);
    }
    emit_poly(out, r, o.format == "json", o.verbose);
    return kExitOk;
  });

  auto* diagram = app.add_subcommand("diagram", "Layered string diagrams over a partial polygraph");
  diagram->require_subcommand(1);
  auto diagram_sub = [&](const char* name, const char* help) {
    auto* sub = diagram->add_subcommand(name, help);
    sub->add_option("--polygraph", o.polygraph, "Polygraph JSON file")->required();
    sub->add_option("diagram", o.diagram, "Diagram JSON file")->required();
    return sub;
  };
  auto* edges = diagram_sub("edge-poset", "Dependency poset of the generator instances");
  format_option(edges, {"json", "dot", "text"});
  on(edges, [&] {
    const EdgePoset e = edge_poset(polygraph_from_json(load_json(o.polygraph)), diagram_from_json(load_json(o.diagram)));
    if (o.format == "json") {
      Json j = poset_to_json(e.poset), inst = Json::array();
      for (const auto& i : e.instances) inst.push_back({{"layer", i.layer}, {"position", i.position}, {"name", i.name}});
      j["instances"] = inst;
      out << j.dump() << "\n";
    } else {
      emit_poset(out, e.poset, o.format);
      if (o.format == "text") {
        for (std::size_t k = 0; k < e.instances.size(); ++k) {
          out << "  " << k << ": " << e.instances[k].name << " (layer " << e.instances[k].layer << ", position "
              << e.instances[k].position << ")\n";
        }
      }
    }
    return kExitOk;
  });
  auto* deco = diagram_sub("decorate", "Decorate a diagram in a dependence algebra");
  deco->add_option("--algebra", o.algebra, "tropical or poly")->check(CLI::IsMember({"tropical", "poly"}));
  deco->add_option("--assign", o.assign, "Values per generator: f=1,g=3/2 (poly: f=1:0 lists direction counts)")->required();
  format_option(deco, {"text", "json"});
  on(deco, [&] {
    const PartialPolygraph g = polygraph_from_json(load_json(o.polygraph));
    const StringDiagram d = diagram_from_json(load_json(o.diagram));
    std::string value;
    if (o.algebra == "tropical") {
      const auto a = parse_assignment<Runtime>(o.assign, [](const std::string& s) { return parse_runtime(s); });
      value = format_runtime(decorate(g, d, a, TropicalAlgebra{}));
    } else {
      const auto a = parse_assignment<FinitePolynomial>(o.assign, parse_poly_value);
      const FinitePolynomial v = decorate(g, d, a, PolyAlgebra{});
      if (o.format == "json") {
        Json j = poly_to_json(v);
        j["signature"] = signature(v);
        out << Json{{"algebra", o.algebra}, {"value", j}}.dump() << "\n";
        return kExitOk;
      }
      value = to_string(signature(v));
    }
    if (o.format == "json") out << Json{{"algebra", o.algebra}, {"value", value}}.dump() << "\n";
    else out << value << "\n";
    return kExitOk;
  });
  auto* valid = diagram_sub("validate", "Check every stage of a diagram");
  format_option(valid, {"text", "json"});
  on(valid, [&] {
    const DiagramCheck c = validate_diagram(polygraph_from_json(load_json(o.polygraph)), diagram_from_json(load_json(o.diagram)));
    if (o.format == "json") {
      Json j{{"valid", c.valid}};
      if (!c) {
        j["stage"] = c.stage;
        j["message"] = c.message;
      }
      out << j.dump() << "\n";
    } else if (c) {
      out << "valid\n";
    } else {
      out << "invalid at stage " << c.stage << ": " << c.message << "\n";
    }
    return c ? kExitOk : kExitNegative;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "depcalc: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "depcalc: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace depcalc
