#include "cordial/fixtures.hpp"

#include <utility>

namespace cordial::fixtures {

namespace {

// Arcs as drawn, 1-based drawing vertex numbers (a_i -> a_j).
using DrawnArcs = std::vector<std::pair<int, int>>;

OrientedHypercube from_drawing(const DrawnArcs& drawn) {
  std::vector<Arc> arcs;
  for (auto [tail, head] : drawn) {
    arcs.push_back({static_cast<Vertex>(tail - 1), static_cast<Vertex>(head - 1)});
  }
  const Digraph graph(OrientedHypercube::vertex_count(3), std::move(arcs));
  auto cube = as_oriented_hypercube(graph);
  if (!cube) throw StructureError("transcribed arcs do not form an oriented cube");
  return *cube;
}

// Front face, back face, then the four front-to-back edges.
const DrawnArcs kCubeC = {{1, 2}, {4, 3}, {3, 1}, {2, 4}, {5, 6}, {6, 8},
                           {8, 7}, {7, 5}, {1, 5}, {2, 6}, {3, 7}, {4, 8}};
const DrawnArcs kCubeB = {{1, 2}, {4, 3}, {3, 1}, {2, 4}, {5, 6}, {8, 6},
                           {8, 7}, {7, 5}, {1, 5}, {2, 6}, {3, 7}, {4, 8}};
const DrawnArcs kCubeV = {{2, 1}, {3, 4}, {1, 3}, {2, 4}, {5, 6}, {8, 6},
                           {8, 7}, {5, 7}, {5, 1}, {2, 6}, {7, 3}, {8, 4}};

std::string bijection_for(const std::string& a, const std::string& b, std::size_t slot_size) {
  if (a == b || slot_size != 8) return "identity";
  return a < b ? a + b : b + a;
}

// Meta-cube of dimension j over `slots`, every meta-arc low -> high.
CubeArrangement meta_cube(int j, std::vector<Slot> slots, std::size_t slot_size) {
  CubeArrangement arr;
  arr.meta_dimension = j;
  arr.slots = std::move(slots);
  arr.bijections = bijections();
  if (slot_size != 8) {
    arr.bijections = BijectionTable{};
    arr.bijections.add("identity", {"", "", VertexBijection::identity(slot_size)});
  }
  for (std::size_t k = 0; k < OrientedHypercube::edge_count(j); ++k) {
    auto [low, axis] = OrientedHypercube::edge_endpoints(j, k);
    const Vertex high = low | (Vertex{1} << axis);
    arr.meta_arcs.push_back(
        {low, high, bijection_for(arr.slots[low].cube, arr.slots[high].cube, slot_size)});
  }
  return arr;
}

CubeArrangement of_base_cubes(int j, std::vector<Slot> slots) {
  CubeArrangement arr = meta_cube(j, std::move(slots), 8);
  for (const Slot& s : arr.slots) arr.cubes.emplace(s.cube, cube(s.cube).expand());
  return arr;
}

LabeledDigraph assembled(const std::string& name) {
  return balance_free_arcs(assemble(arrangement(name))).graph;
}

}  // namespace

LabeledCube cube(const std::string& name) {
  if (name == "C1") {
    return LabeledCube(OrientedHypercube(1, {false}), VertexLabeling({0, 1}));
  }
  if (name == "C2") {
    // a1 (top-left) = 0, a2 = 1, a3 (bottom-left) = 2, a4 = 3.
    const Digraph g(4, {{0, 1}, {1, 3}, {2, 3}, {2, 0}});
    return LabeledCube(*as_oriented_hypercube(g), VertexLabeling({1, 1, 0, 0}));
  }
  if (name == "C3" || name == "C") {
    return LabeledCube(from_drawing(kCubeC), VertexLabeling({1, 0, 0, 1, 1, 0, 0, 1}));
  }
  if (name == "A") {
    return LabeledCube(from_drawing(kCubeC), VertexLabeling({0, 1, 0, 1, 1, 0, 1, 0}));
  }
  if (name == "B") {
    return LabeledCube(from_drawing(kCubeB), VertexLabeling({1, 0, 1, 1, 0, 1, 0, 0}));
  }
  throw ConfigurationError("unknown cube fixture '" + name + "'");
}

std::vector<std::string> cube_names() { return {"C1", "C2", "C3", "A", "B"}; }

OrientedHypercube cube_v() { return from_drawing(kCubeV); }

BijectionTable bijections() {
  // Each drawing joins same-positioned vertices.
  BijectionTable table;
  table.add("AB", {"A", "B", VertexBijection::identity(8)});
  table.add("AC", {"A", "C", VertexBijection::identity(8)});
  table.add("BC", {"B", "C", VertexBijection::identity(8)});
  table.add("identity", {"", "", VertexBijection::identity(8)});
  return table;
}

std::vector<TableCube> phi_table_cubes() {
  std::vector<TableCube> out;
  for (const std::string base : {"A", "B", "C"}) {
    const LabeledDigraph c = cube(base).expand();
    out.push_back({"~" + base, base, true, c});
    out.push_back({base, base, false, c});
  }
  return out;
}

std::vector<std::vector<std::size_t>> reference_phi_table() {
  return {
      {8, 0, 2, 6, 4, 4},
      {0, 8, 6, 2, 4, 4},
      {2, 6, 8, 0, 4, 4},
      {6, 2, 0, 8, 4, 4},
      {4, 4, 4, 4, 8, 0},
      {4, 4, 4, 4, 0, 8},
  };
}

CubeArrangement arrangement(const std::string& name) {
  if (name == "fig5_4D") return of_base_cubes(1, {{"A", false}, {"B", false}});
  if (name == "fig7a_4D") return of_base_cubes(1, {{"A", false}, {"C", false}});
  if (name == "fig7b_4D") return of_base_cubes(1, {{"C", false}, {"B", false}});
  if (name == "fig8a_6D") {
    return of_base_cubes(3, {{"A", true}, {"C", true}, {"A", false}, {"A", true},
                             {"C", false}, {"C", false}, {"A", true}, {"C", true}});
  }
  if (name == "fig8b_6D") {
    return of_base_cubes(3, {{"B", true}, {"A", true}, {"B", false}, {"C", true},
                             {"B", false}, {"A", true}, {"B", true}, {"C", false}});
  }
  if (name == "fig9_7D") {
    CubeArrangement arr = meta_cube(1, {{"fig8a_6D", false}, {"fig8b_6D", false}}, 64);
    arr.cubes.emplace("fig8a_6D", assembled("fig8a_6D"));
    arr.cubes.emplace("fig8b_6D", assembled("fig8b_6D"));
    return arr;
  }
  throw ConfigurationError("unknown arrangement fixture '" + name + "'");
}

std::vector<std::string> arrangement_names() {
  return {"fig5_4D", "fig7a_4D", "fig7b_4D", "fig8a_6D", "fig8b_6D", "fig9_7D"};
}

UndirectedGraph graph(const std::string& name) {
  if (name == "X6") return x_graph(6);
  if (name == "X7") return x_graph(7);
  throw ConfigurationError("unknown graph fixture '" + name + "'");
}

std::vector<std::string> graph_names() { return {"X6", "X7"}; }

}  // namespace cordial::fixtures
