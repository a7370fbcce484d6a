#include "cordial/io.hpp"

#include <algorithm>
#include <sstream>

#include "cordial/fixtures.hpp"

namespace cordial::io {

namespace {

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + "/" + key, "missing field");
  return *it;
}

std::uint64_t as_index(const json& value, const std::string& where) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
    throw ParseError(where, "expected a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

const std::string& as_string(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where, "expected a string");
  return value.get_ref<const std::string&>();
}

const json& as_array(const json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where, "expected an array");
  return value;
}

Vertex as_vertex(const json& value, std::size_t vertex_count, const std::string& where) {
  const std::uint64_t v = as_index(value, where);
  if (v >= vertex_count) {
    throw ParseError(where, "vertex " + std::to_string(v) + " out of range (vertex count " +
                                std::to_string(vertex_count) + ")");
  }
  return static_cast<Vertex>(v);
}

std::pair<Vertex, Vertex> as_pair(const json& value, std::size_t vertex_count,
                                  const std::string& where) {
  if (!value.is_array() || value.size() != 2) throw ParseError(where, "expected [u, v]");
  return {as_vertex(value[0], vertex_count, where + "/0"),
          as_vertex(value[1], vertex_count, where + "/1")};
}

// Wraps library errors raised while building an object from a parsed field.
template <typename F>
auto build(const std::string& where, F&& make) {
  try {
    return make();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(where.empty() ? "/" : where, e.what());
  }
}

int parse_dimension(const json& doc) {
  const std::uint64_t dim = as_index(field(doc, "dim", ""), "/dim");
  if (dim < 1 || dim > static_cast<std::uint64_t>(OrientedHypercube::kMaxDimension)) {
    throw ParseError("/dim", "dimension must be in [1, " +
                                 std::to_string(OrientedHypercube::kMaxDimension) + "]");
  }
  return static_cast<int>(dim);
}

VertexLabeling labels_from_bits(const std::vector<bool>& bits) {
  std::vector<std::uint8_t> out(bits.begin(), bits.end());
  return VertexLabeling(std::move(out));
}

// A named cube fixture, or a fixture arrangement assembled and balanced.
LabeledDigraph fixture_cube(const std::string& name) {
  const auto arrangements = fixtures::arrangement_names();
  if (std::find(arrangements.begin(), arrangements.end(), name) != arrangements.end()) {
    return balance_free_arcs(assemble(fixtures::arrangement(name))).graph;
  }
  return fixtures::cube(name).expand();
}

std::vector<bool> bits_of(const VertexLabeling& labeling) {
  return {labeling.bits().begin(), labeling.bits().end()};
}

}  // namespace

std::string to_hex(const std::vector<bool>& bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (bits.size() + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t k = 4 * d + b;
      if (k < bits.size() && bits[k]) nibble |= 1U << b;
    }
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

std::vector<bool> from_hex(const std::string& hex, std::size_t bit_count, const std::string& where) {
  const std::size_t digits = (bit_count + 3) / 4;
  if (hex.size() != digits) {
    throw ParseError(where, "expected " + std::to_string(digits) + " hex digits for " +
                                std::to_string(bit_count) + " bits, got " +
                                std::to_string(hex.size()));
  }
  std::vector<bool> bits(bit_count, false);
  for (std::size_t d = 0; d < digits; ++d) {
    const char c = hex[digits - 1 - d];
    unsigned nibble = 0;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      nibble = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw ParseError(where, std::string("invalid hex digit '") + c + "'");
    }
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t k = 4 * d + b;
      const bool set = (nibble >> b) & 1U;
      if (k < bit_count) {
        bits[k] = set;
      } else if (set) {
        throw ParseError(where, "hex value has bits beyond position " + std::to_string(bit_count));
      }
    }
  }
  return bits;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    if (auto pos = message.find("syntax error"); pos != std::string::npos) {
      message = message.substr(pos);
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column),
                     message);
  }
}

GraphDocument parse_graph_document(const json& doc) {
  if (!doc.is_object()) throw ParseError("/", "expected an object");
  GraphDocument out;
  if (doc.contains("dim")) {
    const int dim = parse_dimension(doc);
    const std::string& hex = as_string(field(doc, "orientation", ""), "/orientation");
    out.cube = OrientedHypercube(dim, from_hex(hex, OrientedHypercube::edge_count(dim),
                                               "/orientation"));
    out.graph = hypercube_digraph(*out.cube);
    if (doc.contains("labels")) {
      const std::string& labels = as_string(doc["labels"], "/labels");
      out.labeling =
          labels_from_bits(from_hex(labels, OrientedHypercube::vertex_count(dim), "/labels"));
    }
    return out;
  }

  const json& vertices = as_array(field(doc, "vertices", ""), "/vertices");
  const std::size_t n = vertices.size();
  std::vector<std::uint8_t> labels(n, 0);
  std::vector<bool> seen(n, false);
  bool any_label = false;
  bool all_labels = true;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "/vertices/" + std::to_string(i);
    const Vertex id = as_vertex(field(vertices[i], "id", where), n, where + "/id");
    if (seen[id]) throw ParseError(where + "/id", "duplicate vertex id " + std::to_string(id));
    seen[id] = true;
    if (vertices[i].contains("label")) {
      const std::uint64_t label = as_index(vertices[i]["label"], where + "/label");
      if (label > 1) throw ParseError(where + "/label", "label must be 0 or 1");
      labels[id] = static_cast<std::uint8_t>(label);
      any_label = true;
    } else {
      all_labels = false;
    }
  }
  if (any_label && !all_labels) throw ParseError("/vertices", "some vertices lack a label");

  const json& arcs_json = as_array(field(doc, "arcs", ""), "/arcs");
  std::vector<Arc> arcs;
  arcs.reserve(arcs_json.size());
  for (std::size_t k = 0; k < arcs_json.size(); ++k) {
    auto [tail, head] = as_pair(arcs_json[k], n, "/arcs/" + std::to_string(k));
    arcs.push_back({tail, head});
  }
  out.graph = build("/arcs", [&] { return Digraph(n, std::move(arcs)); });
  if (any_label) out.labeling = VertexLabeling(std::move(labels));
  return out;
}

LabeledDigraph parse_labeled_digraph(const json& doc) {
  GraphDocument parsed = parse_graph_document(doc);
  if (!parsed.labeling) {
    throw ParseError(doc.contains("dim") ? "/labels" : "/vertices", "vertex labels are required");
  }
  return LabeledDigraph(std::move(parsed.graph), std::move(*parsed.labeling));
}

OrientedHypercube parse_oriented_hypercube(const json& doc) {
  GraphDocument parsed = parse_graph_document(doc);
  if (parsed.cube) return *parsed.cube;
  auto cube = as_oriented_hypercube(parsed.graph);
  if (!cube) throw ParseError("/arcs", "digraph is not an oriented hypercube");
  return *cube;
}

LabeledCube parse_labeled_cube(const json& doc) {
  LabeledDigraph graph = parse_labeled_digraph(doc);
  auto cube = as_labeled_cube(graph);
  if (!cube) throw ParseError("/arcs", "digraph is not an oriented hypercube");
  return *cube;
}

json to_json(const LabeledDigraph& graph) {
  json vertices = json::array();
  for (std::size_t v = 0; v < graph.labeling.size(); ++v) {
    vertices.push_back({{"id", v}, {"label", graph.labeling[v]}});
  }
  json arcs = json::array();
  for (const Arc& a : graph.graph.arcs()) arcs.push_back({a.tail, a.head});
  return {{"vertices", std::move(vertices)}, {"arcs", std::move(arcs)}};
}

json to_json(const OrientedHypercube& cube) {
  return {{"dim", cube.dimension()}, {"orientation", to_hex(cube.orientation())}};
}

json to_json(const LabeledCube& cube) {
  json out = to_json(cube.cube);
  out["labels"] = to_hex(bits_of(cube.labeling));
  return out;
}

json to_json(const LambdaTriple& t) {
  return {{"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma}, {"balanced", t.is_balanced()}};
}

json to_json(const UndirectedGraph& graph) {
  json edges = json::array();
  for (const UndirectedEdge& e : graph.edges()) edges.push_back({e.u, e.v});
  return {{"vertex_count", graph.vertex_count()}, {"edges", std::move(edges)}};
}

json to_json(const ClassificationReport& report) {
  json reps = json::array();
  for (const OrientedHypercube& rep : report.non_cordial_class_representatives) {
    reps.push_back(to_json(rep));
  }
  return {{"dimension", report.dimension},
          {"total_orientations", report.total_orientations},
          {"isomorphism_class_count", report.isomorphism_class_count},
          {"non_cordial_class_representatives", std::move(reps)}};
}

json to_json(const VertexBijection& bijection) { return bijection.forward(); }

json to_json(const CubeArrangement& arr) {
  json slots = json::array();
  for (const Slot& s : arr.slots) slots.push_back({{"cube", s.cube}, {"complemented", s.complemented}});
  json meta_arcs = json::array();
  for (const MetaArc& a : arr.meta_arcs) {
    meta_arcs.push_back({{"from", a.from}, {"to", a.to}, {"bijection", a.bijection}});
  }
  json bijections = json::object();
  for (const auto& [name, b] : arr.bijections.entries()) {
    json entry = {{"forward", to_json(b.map)}};
    if (!b.from.empty()) entry["from"] = b.from;
    if (!b.to.empty()) entry["to"] = b.to;
    bijections[name] = std::move(entry);
  }
  json cubes = json::object();
  for (const auto& [name, graph] : arr.cubes) {
    auto cube = as_labeled_cube(graph);
    // The compact form reorders arcs, so it is only used when that is a no-op.
    cubes[name] = cube && cube->expand() == graph ? to_json(*cube) : to_json(graph);
  }
  return {{"meta_dimension", arr.meta_dimension},
          {"slots", std::move(slots)},
          {"meta_arcs", std::move(meta_arcs)},
          {"bijections", std::move(bijections)},
          {"cubes", std::move(cubes)}};
}

UndirectedGraph parse_undirected_graph(const json& doc) {
  const std::uint64_t n = as_index(field(doc, "vertex_count", ""), "/vertex_count");
  const json& edges_json = as_array(field(doc, "edges", ""), "/edges");
  std::vector<UndirectedEdge> edges;
  for (std::size_t k = 0; k < edges_json.size(); ++k) {
    auto [u, v] = as_pair(edges_json[k], n, "/edges/" + std::to_string(k));
    edges.push_back({u, v});
  }
  return build("/edges", [&] { return UndirectedGraph(n, std::move(edges)); });
}

NamedBijection parse_bijection(const json& doc, const std::string& where) {
  NamedBijection out;
  const json* forward = &doc;
  std::string forward_where = where;
  if (doc.is_object()) {
    forward = &field(doc, "forward", where);
    forward_where = where + "/forward";
    if (doc.contains("from")) out.from = as_string(doc["from"], where + "/from");
    if (doc.contains("to")) out.to = as_string(doc["to"], where + "/to");
  }
  as_array(*forward, forward_where);
  std::vector<Vertex> images;
  for (std::size_t v = 0; v < forward->size(); ++v) {
    images.push_back(as_vertex((*forward)[v], forward->size(),
                               forward_where + "/" + std::to_string(v)));
  }
  out.map = build(forward_where, [&] { return VertexBijection(std::move(images)); });
  return out;
}

CubeArrangement parse_arrangement(const json& doc) {
  CubeArrangement arr;
  const std::uint64_t j = as_index(field(doc, "meta_dimension", ""), "/meta_dimension");
  if (j < 1 || j > 16) throw ParseError("/meta_dimension", "must be in [1, 16]");
  arr.meta_dimension = static_cast<int>(j);

  const json& slots = as_array(field(doc, "slots", ""), "/slots");
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const std::string where = "/slots/" + std::to_string(s);
    Slot slot;
    slot.cube = as_string(field(slots[s], "cube", where), where + "/cube");
    if (slots[s].contains("complemented")) {
      if (!slots[s]["complemented"].is_boolean()) {
        throw ParseError(where + "/complemented", "expected a boolean");
      }
      slot.complemented = slots[s]["complemented"].get<bool>();
    }
    arr.slots.push_back(std::move(slot));
  }

  if (doc.contains("bijections")) {
    const json& table = doc["bijections"];
    if (!table.is_object()) throw ParseError("/bijections", "expected an object");
    for (const auto& [name, entry] : table.items()) {
      arr.bijections.add(name, parse_bijection(entry, "/bijections/" + name));
    }
  }

  const json& meta_arcs = as_array(field(doc, "meta_arcs", ""), "/meta_arcs");
  const BijectionTable fixture_bijections = fixtures::bijections();
  for (std::size_t k = 0; k < meta_arcs.size(); ++k) {
    const std::string where = "/meta_arcs/" + std::to_string(k);
    MetaArc arc;
    arc.from = static_cast<Vertex>(as_index(field(meta_arcs[k], "from", where), where + "/from"));
    arc.to = static_cast<Vertex>(as_index(field(meta_arcs[k], "to", where), where + "/to"));
    if (meta_arcs[k].contains("bijection")) {
      const json& b = meta_arcs[k]["bijection"];
      if (b.is_array()) {
        arc.bijection = "meta_arc_" + std::to_string(k);
        arr.bijections.add(arc.bijection, parse_bijection(b, where + "/bijection"));
      } else {
        arc.bijection = as_string(b, where + "/bijection");
      }
    }
    if (!arr.bijections.contains(arc.bijection)) {
      if (arc.bijection == "identity") {
        // Sized once the slot cubes are known.
      } else if (fixture_bijections.contains(arc.bijection)) {
        arr.bijections.add(arc.bijection, fixture_bijections.at(arc.bijection));
      } else {
        throw ParseError(where + "/bijection", "unknown bijection '" + arc.bijection + "'");
      }
    }
    arr.meta_arcs.push_back(std::move(arc));
  }

  if (doc.contains("cubes")) {
    const json& cubes = doc["cubes"];
    if (!cubes.is_object()) throw ParseError("/cubes", "expected an object");
    for (const auto& [name, entry] : cubes.items()) {
      try {
        if (entry.is_string()) {
          arr.cubes.emplace(name, fixture_cube(entry.get_ref<const std::string&>()));
        } else {
          arr.cubes.emplace(name, parse_labeled_digraph(entry));
        }
      } catch (const ParseError& e) {
        throw ParseError("/cubes/" + name + (e.where() == "/" ? "" : e.where()),
                         std::string(e.what()).substr(e.where().size() + 2));
      } catch (const Error& e) {
        throw ParseError("/cubes/" + name, e.what());
      }
    }
  }
  for (std::size_t s = 0; s < arr.slots.size(); ++s) {
    const std::string& name = arr.slots[s].cube;
    if (arr.cubes.contains(name)) continue;
    try {
      arr.cubes.emplace(name, fixture_cube(name));
    } catch (const Error& e) {
      throw ParseError("/slots/" + std::to_string(s) + "/cube", e.what());
    }
  }

  if (!arr.bijections.contains("identity") && !arr.slots.empty()) {
    const bool used = std::any_of(arr.meta_arcs.begin(), arr.meta_arcs.end(),
                                  [](const MetaArc& a) { return a.bijection == "identity"; });
    if (used) {
      const std::size_t size = arr.cubes.at(arr.slots[0].cube).labeling.size();
      arr.bijections.add("identity", {"", "", VertexBijection::identity(size)});
    }
  }
  return arr;
}

std::string to_dot(const LabeledDigraph& graph, const std::string& name) {
  const ArcLabeling labels = induce_arc_labeling(graph.graph, graph.labeling);
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < graph.labeling.size(); ++v) {
    out << "  " << v << " [label=\"" << v << ":" << graph.labeling[v] << "\"];\n";
  }
  for (std::size_t k = 0; k < graph.graph.arc_count(); ++k) {
    const Arc& a = graph.graph.arcs()[k];
    const int g = labels[k];
    out << "  " << a.tail << " -> " << a.head << " [label=\"" << (g > 0 ? "+" : "") << g << "\"";
    if (g == 0) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cordial::io
