#include "cordial/app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"

#include "cordial/compose.hpp"
#include "cordial/construct.hpp"
#include "cordial/core.hpp"
#include "cordial/fixtures.hpp"
#include "cordial/io.hpp"
#include "cordial/search.hpp"

namespace cordial::cli {

namespace {

using io::json;

struct InputError : Error {
  using Error::Error;
};

// Negative verdicts that still carry a machine-readable reason.
struct Refusal {
  std::string reason;  // "infeasible", "budget", ...
  std::string message;
  json detail = json::object();
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool json_output = false;
};

std::string read_input(Context& ctx, const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << ctx.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

template <typename T, typename F>
T parse_file(Context& ctx, const std::string& path, F&& parse) {
  const std::string text = read_input(ctx, path);
  try {
    return parse(io::parse_json_text(text));
  } catch (const io::ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string label_string(const VertexLabeling& f) {
  std::string s;
  for (std::size_t v = 0; v < f.size(); ++v) s.push_back(f[v] ? '1' : '0');
  return s;
}

void emit(Context& ctx, const json& doc) { ctx.out << doc.dump(2) << "\n"; }

int refuse(Context& ctx, const Refusal& r) {
  if (ctx.json_output) {
    json doc = r.detail;
    doc["status"] = "refused";
    doc["reason"] = r.reason;
    doc["message"] = r.message;
    emit(ctx, doc);
  } else {
    ctx.out << r.reason << ": " << r.message << "\n";
  }
  return kNegative;
}

// ---------------------------------------------------------------- commands

int cmd_construct(Context& ctx, int dim, const std::string& format) {
  const LabeledCube cube = construct_cordial(dim);
  emit(ctx, format == "digraph" ? io::to_json(cube.expand()) : io::to_json(cube));
  return kSuccess;
}

int cmd_lambda(Context& ctx, const std::string& path) {
  const LabeledDigraph g = parse_file<LabeledDigraph>(ctx, path, io::parse_labeled_digraph);
  const LambdaTriple t = lambda(g);
  if (ctx.json_output) {
    json doc = io::to_json(t);
    doc["friendly"] = is_friendly(g.labeling);
    doc["cordial_pair"] = is_23_cordial_pair(g.graph, g.labeling);
    emit(ctx, doc);
  } else {
    ctx.out << t.to_string() << "\n";
  }
  return kSuccess;
}

int cmd_check(Context& ctx, const std::string& path, std::uint64_t budget) {
  const io::GraphDocument doc = parse_file<io::GraphDocument>(ctx, path, io::parse_graph_document);
  const std::uint64_t total = friendly_labeling_count(doc.graph.vertex_count());
  if (total > budget) {
    return refuse(ctx, {"budget",
                        (total == std::numeric_limits<std::uint64_t>::max()
                             ? std::string("more than 2^64")
                             : std::to_string(total)) +
                            " friendly labelings exceed the budget of " +
                            std::to_string(budget),
                        json{{"budget", budget}, {"friendly_labelings", total}}});
  }
  CordialSearchResult result;
  try {
    result = find_cordial_labeling(doc.graph);
  } catch (const DomainError& e) {
    throw InputError(path + ": " + e.what());
  }
  if (ctx.json_output) {
    json out = {{"cordial", result.witness.has_value()},
                {"labelings_examined", result.labelings_examined},
                {"friendly_labelings", total}};
    if (result.witness) {
      out["witness"] = label_string(*result.witness);
      out["lambda"] = io::to_json(lambda(doc.graph, *result.witness));
    }
    emit(ctx, out);
  } else if (result.witness) {
    ctx.out << "cordial: labels " << label_string(*result.witness) << " give "
            << lambda(doc.graph, *result.witness).to_string() << " (labeling "
            << result.labelings_examined << " of " << total << ")\n";
  } else {
    ctx.out << "not cordial: no friendly labeling of " << result.labelings_examined
            << " admits (2,3)-cordial\n";
  }
  return result.witness ? kSuccess : kNegative;
}

VertexBijection resolve_bijection(Context& ctx, const std::string& name_or_path, std::size_t size) {
  if (name_or_path == "identity") return VertexBijection::identity(size);
  const BijectionTable table = fixtures::bijections();
  if (table.contains(name_or_path)) return table.at(name_or_path).map;
  if (!std::filesystem::exists(name_or_path) && name_or_path != "-") {
    throw InputError("unknown bijection '" + name_or_path + "' (neither a fixture name nor a file)");
  }
  return parse_file<NamedBijection>(ctx, name_or_path, [&](const json& j) {
           return io::parse_bijection(j);
         }).map;
}

int cmd_phi(Context& ctx, const std::string& first, const std::string& second,
            const std::string& bijection) {
  const LabeledDigraph a = parse_file<LabeledDigraph>(ctx, first, io::parse_labeled_digraph);
  const LabeledDigraph b = parse_file<LabeledDigraph>(ctx, second, io::parse_labeled_digraph);
  const VertexBijection map = resolve_bijection(ctx, bijection, a.labeling.size());
  std::size_t value = 0;
  try {
    value = phi(a, b, map);
  } catch (const DimensionError& e) {
    throw InputError(e.what());
  }
  if (ctx.json_output) {
    emit(ctx, {{"phi", value}, {"vertices", a.labeling.size()}});
  } else {
    ctx.out << value << "\n";
  }
  return kSuccess;
}

int cmd_phi_table(Context& ctx) {
  const PhiTable table = phi_table(fixtures::phi_table_cubes(), fixtures::bijections());
  const bool matches = table.values == fixtures::reference_phi_table();
  if (ctx.json_output) {
    emit(ctx, {{"names", table.names}, {"values", table.values}, {"matches_reference", matches}});
    return kSuccess;
  }
  ctx.out << std::left << std::setw(5) << "Phi";
  for (const std::string& name : table.names) ctx.out << std::right << std::setw(4) << name;
  ctx.out << "\n";
  for (std::size_t i = 0; i < table.names.size(); ++i) {
    ctx.out << std::left << std::setw(5) << table.names[i] << std::right;
    for (std::size_t j = 0; j < table.names.size(); ++j) {
      if (j < i) {
        ctx.out << std::setw(4) << "";
      } else {
        ctx.out << std::setw(4) << table.values[i][j];
      }
    }
    ctx.out << "\n";
  }
  ctx.out << "matches reference table: " << (matches ? "yes" : "no") << "\n";
  return kSuccess;
}

int cmd_assemble(Context& ctx, const std::string& path, bool balance, bool emit_graph) {
  const CubeArrangement arr = parse_file<CubeArrangement>(ctx, path, io::parse_arrangement);
  PartialOrientedCube partial;
  try {
    partial = assemble(arr);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
  const LambdaTriple fixed = partial.fixed_lambda();
  json summary = {{"vertices", partial.vertex_count},
                  {"fixed_arcs", partial.fixed_arcs.size()},
                  {"inter_slot_edges", partial.inter_slot_edges},
                  {"inter_slot_zeros", partial.inter_slot_zeros},
                  {"free_edges", partial.free_edges.size()},
                  {"fixed_lambda", io::to_json(fixed)}};

  std::optional<BalancedCube> balanced;
  if (balance || emit_graph) {
    try {
      balanced = balance_free_arcs(partial);
    } catch (const InfeasibleError& e) {
      json detail = summary;
      detail["best"] = io::to_json(e.best());
      return refuse(ctx, {"infeasible", e.what(), detail});
    }
  }

  if (emit_graph) {
    auto cube = as_labeled_cube(balanced->graph);
    emit(ctx, cube ? io::to_json(*cube) : io::to_json(balanced->graph));
    return kSuccess;
  }
  if (balanced) {
    summary["lambda"] = io::to_json(balanced->lambda);
    summary["cordial_pair"] = is_23_cordial_pair(balanced->graph.graph, balanced->graph.labeling);
  }
  if (ctx.json_output) {
    emit(ctx, summary);
    return kSuccess;
  }
  ctx.out << "vertices:         " << partial.vertex_count << "\n"
          << "inter-slot edges: " << partial.inter_slot_edges << "\n"
          << "inter-slot zeros: " << partial.inter_slot_zeros << "\n"
          << "free edges:       " << partial.free_edges.size() << "\n"
          << "fixed lambda:     " << fixed.to_string() << "\n";
  if (balanced) {
    ctx.out << "balanced lambda:  " << balanced->lambda.to_string() << "\n"
            << "(2,3)-cordial:    "
            << (is_23_cordial_pair(balanced->graph.graph, balanced->graph.labeling) ? "yes"
                                                                                    : "no")
            << "\n";
  }
  return kSuccess;
}

int cmd_classify(Context& ctx, int dim, unsigned jobs) {
  const ClassificationReport report = classify_cordiality(dim, jobs);
  if (ctx.json_output) {
    emit(ctx, io::to_json(report));
    return kSuccess;
  }
  ctx.out << "dimension " << report.dimension << ": " << report.total_orientations
          << " orientations, " << report.isomorphism_class_count << " isomorphism classes, "
          << report.non_cordial_class_representatives.size()
          << " without a (2,3)-cordial labeling\n";
  std::optional<OrientedHypercube> v, v_reversed;
  if (dim == 3) {
    v = canonical_form(fixtures::cube_v());
    v_reversed = canonical_form(reverse(fixtures::cube_v()));
  }
  for (const OrientedHypercube& rep : report.non_cordial_class_representatives) {
    ctx.out << "  " << io::to_hex(rep.orientation());
    if (v && rep == *v) ctx.out << "  (class of V)";
    if (v_reversed && rep == *v_reversed) ctx.out << "  (class of V reversed)";
    ctx.out << "\n";
  }
  return kSuccess;
}

int cmd_orientability(Context& ctx, const std::string& path, bool keep_isolated,
                      std::uint64_t budget) {
  const UndirectedGraph g = parse_file<UndirectedGraph>(ctx, path, io::parse_undirected_graph);
  OrientationSearchResult result;
  try {
    result = find_23_orientation(g, {keep_isolated, budget});
  } catch (const BudgetError& e) {
    return refuse(ctx, {"budget", e.what(), json{{"budget", budget}}});
  }
  if (ctx.json_output) {
    json doc = {{"orientable", result.witness.has_value()},
                {"keep_isolated", keep_isolated},
                {"searched_vertices", result.searched_vertices},
                {"orientations_examined", result.orientations_examined}};
    if (result.witness) {
      json arcs = json::array();
      for (const Arc& a : result.witness->digraph.arcs()) {
        arcs.push_back({result.witness->original_vertex[a.tail],
                        result.witness->original_vertex[a.head]});
      }
      json labels = json::object();
      for (std::size_t v = 0; v < result.witness->labeling.size(); ++v) {
        labels[std::to_string(result.witness->original_vertex[v])] = result.witness->labeling[v];
      }
      doc["arcs"] = std::move(arcs);
      doc["labels"] = std::move(labels);
      doc["lambda"] = io::to_json(lambda(result.witness->digraph, result.witness->labeling));
    }
    emit(ctx, doc);
  } else if (result.witness) {
    const OrientationWitness& w = *result.witness;
    ctx.out << "orientable: lambda " << lambda(w.digraph, w.labeling).to_string() << "\n";
    for (const Arc& a : w.digraph.arcs()) {
      ctx.out << "  " << w.original_vertex[a.tail] << " -> " << w.original_vertex[a.head] << "\n";
    }
    ctx.out << "  labels";
    for (std::size_t v = 0; v < w.labeling.size(); ++v) {
      ctx.out << " " << w.original_vertex[v] << "=" << w.labeling[v];
    }
    ctx.out << "\n";
  } else {
    ctx.out << "not orientable: " << result.orientations_examined << " orientations of "
            << result.searched_vertices << " vertices"
            << (keep_isolated ? "" : " (isolated vertices removed)") << " examined\n";
  }
  return result.witness ? kSuccess : kNegative;
}

int cmd_fixtures_list(Context& ctx) {
  json doc = {{"cubes", fixtures::cube_names()},
              {"bijections", json::array()},
              {"arrangements", fixtures::arrangement_names()},
              {"graphs", fixtures::graph_names()}};
  doc["cubes"].push_back("V");
  const BijectionTable bijections = fixtures::bijections();
  for (const auto& [name, entry] : bijections.entries()) doc["bijections"].push_back(name);
  if (ctx.json_output) {
    emit(ctx, doc);
    return kSuccess;
  }
  for (const auto& [kind, names] : doc.items()) {
    ctx.out << kind << ":";
    for (const auto& n : names) ctx.out << " " << n.get<std::string>();
    ctx.out << "\n";
  }
  return kSuccess;
}

int cmd_fixtures_export(Context& ctx, const std::string& name) {
  const auto cubes = fixtures::cube_names();
  const auto arrangements = fixtures::arrangement_names();
  const auto graphs = fixtures::graph_names();
  const BijectionTable bijections = fixtures::bijections();
  auto listed = [](const std::vector<std::string>& names, const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };
  if (name == "V") {
    emit(ctx, io::to_json(fixtures::cube_v()));
  } else if (listed(cubes, name) || name == "C") {
    emit(ctx, io::to_json(fixtures::cube(name)));
  } else if (listed(arrangements, name)) {
    emit(ctx, io::to_json(fixtures::arrangement(name)));
  } else if (listed(graphs, name)) {
    emit(ctx, io::to_json(fixtures::graph(name)));
  } else if (bijections.contains(name)) {
    const NamedBijection& b = bijections.at(name);
    json doc = {{"forward", io::to_json(b.map)}};
    if (!b.from.empty()) doc["from"] = b.from;
    if (!b.to.empty()) doc["to"] = b.to;
    emit(ctx, doc);
  } else {
    throw InputError("unknown fixture '" + name + "'");
  }
  return kSuccess;
}

int cmd_export_dot(Context& ctx, const std::string& path) {
  io::GraphDocument doc = parse_file<io::GraphDocument>(ctx, path, io::parse_graph_document);
  VertexLabeling labeling =
      doc.labeling ? *doc.labeling : VertexLabeling(doc.graph.vertex_count());
  ctx.out << io::to_dot(LabeledDigraph(std::move(doc.graph), std::move(labeling)));
  return kSuccess;
}

int cmd_explore(Context& ctx, int dim, std::uint64_t samples, std::uint64_t seed,
                std::uint64_t attempts) {
  const ExplorationReport r = explore_random(dim, samples, seed, attempts);
  if (ctx.json_output) {
    json doc = {{"dimension", r.dimension},
                {"seed", r.seed},
                {"samples", r.samples},
                {"cordial_found", r.cordial_found}};
    doc["first_unresolved"] = r.first_unresolved ? io::to_json(*r.first_unresolved) : json();
    emit(ctx, doc);
  } else {
    ctx.out << "dimension " << r.dimension << ", seed " << r.seed << ": labeling found for "
            << r.cordial_found << " of " << r.samples << " random orientations\n";
    if (r.first_unresolved) {
      ctx.out << "  first unresolved: " << io::to_hex(r.first_unresolved->orientation()) << "\n";
    }
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Construct, compose, check and classify (2,3)-cordial oriented hypercubes",
               "cordial-cli"};
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json_output, "Machine-readable JSON output");

  std::function<int()> action;

  int dim = 0;
  std::string format = "cube";
  auto* construct = app.add_subcommand("construct", "Emit a (2,3)-cordial labeled Q_N (N % 3 == 0)");
  construct->add_option("--dim", dim, "Dimension N")->required();
  construct->add_option("--format", format, "cube (compact) or digraph")
      ->check(CLI::IsMember({"cube", "digraph"}));
  construct->callback([&] { action = [&] { return cmd_construct(ctx, dim, format); }; });

  std::string file, file2;
  auto* lambda_cmd = app.add_subcommand("lambda", "Print the (alpha,beta,gamma) triple");
  lambda_cmd->add_option("file", file, "Labeled graph file or -")->required();
  lambda_cmd->callback([&] { action = [&] { return cmd_lambda(ctx, file); }; });

  std::uint64_t budget = std::uint64_t{1} << 24;
  auto* check = app.add_subcommand("check", "Search every friendly labeling for a cordial one");
  check->add_option("file", file, "Graph file or -")->required();
  check->add_option("--budget", budget, "Maximum friendly labelings to search");
  check->callback([&] { action = [&] { return cmd_check(ctx, file, budget); }; });

  std::string bijection = "identity";
  auto* phi_cmd = app.add_subcommand("phi", "Count label agreements across a bijection");
  phi_cmd->add_option("file1", file, "First labeled graph")->required();
  phi_cmd->add_option("file2", file2, "Second labeled graph")->required();
  phi_cmd->add_option("--bijection", bijection, "Fixture bijection name or bijection file");
  phi_cmd->callback([&] { action = [&] { return cmd_phi(ctx, file, file2, bijection); }; });

  auto* table = app.add_subcommand("phi-table", "Phi between the six cubes ~A, A, ~B, B, ~C, C");
  table->callback([&] { action = [&] { return cmd_phi_table(ctx); }; });

  bool balance = false;
  bool emit_graph = false;
  auto* assemble_cmd = app.add_subcommand("assemble", "Assemble a cube-of-cubes arrangement");
  assemble_cmd->add_option("file", file, "Arrangement file or -")->required();
  assemble_cmd->add_flag("--balance", balance, "Orient free edges to balance lambda");
  assemble_cmd->add_flag("--emit", emit_graph, "Print the balanced labeled graph");
  assemble_cmd->callback(
      [&] { action = [&] { return cmd_assemble(ctx, file, balance, emit_graph); }; });

  unsigned jobs = 1;
  auto* classify = app.add_subcommand("classify", "Classify all oriented Q_dim up to isomorphism");
  classify->add_option("--dim", dim, "Dimension 1, 2 or 3")->required()->check(CLI::Range(1, 3));
  classify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  classify->callback([&] { action = [&] { return cmd_classify(ctx, dim, jobs); }; });

  bool keep_isolated = false;
  auto* orient = app.add_subcommand("orientability", "Search for a (2,3)-cordial orientation");
  orient->add_option("file", file, "Undirected graph file or -")->required();
  orient->add_flag("--keep-isolated", keep_isolated, "Do not drop isolated vertices");
  orient->add_option("--budget", budget, "Maximum orientations x labelings");
  orient->callback(
      [&] { action = [&] { return cmd_orientability(ctx, file, keep_isolated, budget); }; });

  std::string fixture_name;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Published example objects");
  fixtures_cmd->require_subcommand(1);
  auto* fixtures_list = fixtures_cmd->add_subcommand("list", "List fixture names");
  fixtures_list->callback([&] { action = [&] { return cmd_fixtures_list(ctx); }; });
  auto* fixtures_export = fixtures_cmd->add_subcommand("export", "Print a fixture as JSON");
  fixtures_export->add_option("name", fixture_name, "Fixture name")->required();
  fixtures_export->callback([&] { action = [&] { return cmd_fixtures_export(ctx, fixture_name); }; });

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering with induced arc labels");
  dot->add_option("file", file, "Graph file or -")->required();
  dot->callback([&] { action = [&] { return cmd_export_dot(ctx, file); }; });

  std::uint64_t samples = 100;
  std::uint64_t seed = 1;
  std::uint64_t attempts = 20000;
  auto* explore = app.add_subcommand("explore", "Random orientations, searched for cordial labelings");
  explore->add_option("--dim", dim, "Dimension")->required()->check(CLI::Range(1, 10));
  explore->add_option("--samples", samples, "Number of random orientations");
  explore->add_option("--seed", seed, "Random seed");
  explore->add_option("--attempts", attempts, "Random labelings tried per orientation");
  explore->callback(
      [&] { action = [&] { return cmd_explore(ctx, dim, samples, seed, attempts); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error[input]: " << e.what() << "\n";
    return kBadInput;
  } catch (const ArgumentError& e) {
    err << "error[argument]: " << e.what() << "\n";
    return kBadInput;
  } catch (const ConfigurationError& e) {
    err << "error[configuration]: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace cordial::cli
