#pragma once

// JSON and DOT encodings.
//
//   labeled digraph   {"vertices": [{"id": 0, "label": 1}, ...], "arcs": [[0, 1], ...]}
//   hypercube         {"dim": n, "orientation": "<hex>", "labels": "<hex>"}
//   undirected graph  {"vertex_count": n, "edges": [[0, 1], ...]}
//   arrangement       {"meta_dimension": j, "slots": [...], "meta_arcs": [...],
//                      "bijections": {...}, "cubes": {...}}
//
// A hex string encodes a bit vector b_0..b_{m-1} as the integer sum b_k 2^k,
// most significant digit first, zero-padded to ceil(m/4) digits. Orientation
// bits follow the canonical edge order, label bits the vertex ids.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cordial/compose.hpp"
#include "cordial/core.hpp"
#include "cordial/search.hpp"

namespace cordial::io {

using json = nlohmann::json;

/// Malformed input. `where` is "line L, column C" for syntax errors or a
/// JSON pointer such as "/arcs/3" for schema errors.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& message)
      : Error(where + ": " + message), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

std::string to_hex(const std::vector<bool>& bits);
std::vector<bool> from_hex(const std::string& hex, std::size_t bit_count,
                           const std::string& where = "");

json parse_json_text(const std::string& text);

/// Any graph file: either encoding, labels optional.
struct GraphDocument {
  Digraph graph;
  std::optional<VertexLabeling> labeling;
  std::optional<OrientedHypercube> cube;  // set for the hypercube encoding
};

GraphDocument parse_graph_document(const json& doc);
/// Requires labels.
LabeledDigraph parse_labeled_digraph(const json& doc);
/// Either encoding; any labels are ignored.
OrientedHypercube parse_oriented_hypercube(const json& doc);
LabeledCube parse_labeled_cube(const json& doc);

json to_json(const LabeledDigraph& graph);
json to_json(const OrientedHypercube& cube);
json to_json(const LabeledCube& cube);
json to_json(const LambdaTriple& triple);
json to_json(const UndirectedGraph& graph);
json to_json(const ClassificationReport& report);
json to_json(const VertexBijection& bijection);
json to_json(const CubeArrangement& arrangement);

UndirectedGraph parse_undirected_graph(const json& doc);
/// Bare permutation array or {"from": ..., "to": ..., "forward": [...]}.
NamedBijection parse_bijection(const json& doc, const std::string& where = "");
/// Slot cubes missing from "cubes" and bijections missing from
/// "bijections" are resolved against the fixture library.
CubeArrangement parse_arrangement(const json& doc);

/// Graphviz digraph: one node per vertex (labelled with its {0,1} label) and
/// one edge statement per arc carrying the induced arc label.
std::string to_dot(const LabeledDigraph& graph, const std::string& name = "G");

}  // namespace cordial::io
