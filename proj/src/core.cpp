#include "cordial/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cordial {

namespace {

void require_matching(const Digraph& graph, const VertexLabeling& labeling) {
  if (graph.vertex_count() != labeling.size()) {
    throw DimensionError("labeling has " + std::to_string(labeling.size()) +
                         " entries but the digraph has " +
                         std::to_string(graph.vertex_count()) + " vertices");
  }
}

void require_dimension(int dimension) {
  if (dimension < 1 || dimension > OrientedHypercube::kMaxDimension) {
    throw ArgumentError("hypercube dimension " + std::to_string(dimension) +
                        " outside [1, " +
                        std::to_string(OrientedHypercube::kMaxDimension) + "]");
  }
}

}  // namespace

Digraph::Digraph(std::size_t vertex_count, std::vector<Arc> arcs)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)) {
  for (const Arc& a : arcs_) {
    if (a.tail >= vertex_count_ || a.head >= vertex_count_) {
      throw StructureError("arc (" + std::to_string(a.tail) + "," +
                           std::to_string(a.head) + ") has an endpoint >= " +
                           std::to_string(vertex_count_));
    }
    if (a.tail == a.head) {
      throw StructureError("self-loop at vertex " + std::to_string(a.tail));
    }
  }
  std::vector<Arc> sorted = arcs_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw StructureError("duplicate arc (" + std::to_string(dup->tail) + "," +
                         std::to_string(dup->head) + ")");
  }
}

VertexLabeling::VertexLabeling(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::size_t v = 0; v < bits_.size(); ++v) {
    if (bits_[v] > 1) {
      throw ArgumentError("vertex label " + std::to_string(bits_[v]) + " at vertex " +
                          std::to_string(v) + " is not 0 or 1");
    }
  }
}

std::size_t VertexLabeling::ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

bool LambdaTriple::is_balanced() const {
  auto [lo, hi] = std::minmax({alpha, beta, gamma});
  return hi - lo <= 1;
}

std::string LambdaTriple::to_string() const {
  return "(" + std::to_string(alpha) + "," + std::to_string(beta) + "," +
         std::to_string(gamma) + ")";
}

LabeledDigraph::LabeledDigraph(Digraph g, VertexLabeling f)
    : graph(std::move(g)), labeling(std::move(f)) {
  require_matching(graph, labeling);
}

OrientedHypercube::OrientedHypercube(int dimension) : dimension_(dimension) {
  require_dimension(dimension);
  orientation_.assign(edge_count(dimension), false);
}

OrientedHypercube::OrientedHypercube(int dimension, std::vector<bool> orientation)
    : dimension_(dimension), orientation_(std::move(orientation)) {
  require_dimension(dimension);
  if (orientation_.size() != edge_count(dimension)) {
    throw DimensionError("orientation has " + std::to_string(orientation_.size()) +
                         " bits; Q_" + std::to_string(dimension) + " has " +
                         std::to_string(edge_count(dimension)) + " edges");
  }
}

std::size_t OrientedHypercube::edge_index(int dimension, Vertex low, int axis) {
  const Vertex below = low & ((Vertex{1} << axis) - 1);
  const Vertex above = low >> (axis + 1);
  const std::size_t rank = (static_cast<std::size_t>(above) << axis) | below;
  return (static_cast<std::size_t>(axis) << (dimension - 1)) + rank;
}

std::pair<Vertex, int> OrientedHypercube::edge_endpoints(int dimension, std::size_t index) {
  const std::size_t per_axis = std::size_t{1} << (dimension - 1);
  const int axis = static_cast<int>(index / per_axis);
  const auto rank = static_cast<Vertex>(index % per_axis);
  const Vertex below = rank & ((Vertex{1} << axis) - 1);
  const Vertex above = rank >> axis;
  return {(above << (axis + 1)) | below, axis};
}

Arc OrientedHypercube::arc(std::size_t index) const {
  auto [low, axis] = edge_endpoints(dimension_, index);
  const Vertex high = low | (Vertex{1} << axis);
  return orientation_[index] ? Arc{high, low} : Arc{low, high};
}

LabeledCube::LabeledCube(OrientedHypercube h, VertexLabeling f)
    : cube(std::move(h)), labeling(std::move(f)) {
  if (labeling.size() != cube.vertex_count()) {
    throw DimensionError("labeling has " + std::to_string(labeling.size()) +
                         " entries but Q_" + std::to_string(cube.dimension()) + " has " +
                         std::to_string(cube.vertex_count()) + " vertices");
  }
}

LabeledDigraph LabeledCube::expand() const { return {hypercube_digraph(cube), labeling}; }

Digraph hypercube_digraph(const OrientedHypercube& cube) {
  std::vector<Arc> arcs;
  arcs.reserve(cube.edge_count());
  for (std::size_t k = 0; k < cube.edge_count(); ++k) arcs.push_back(cube.arc(k));
  return Digraph(cube.vertex_count(), std::move(arcs));
}

std::optional<OrientedHypercube> as_oriented_hypercube(const Digraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n < 2 || (n & (n - 1)) != 0) return std::nullopt;
  const int dimension = std::countr_zero(n);
  if (dimension > OrientedHypercube::kMaxDimension) return std::nullopt;
  if (graph.arc_count() != OrientedHypercube::edge_count(dimension)) return std::nullopt;

  std::vector<bool> orientation(graph.arc_count(), false);
  std::vector<bool> seen(graph.arc_count(), false);
  for (const Arc& a : graph.arcs()) {
    const Vertex diff = a.tail ^ a.head;
    if (std::popcount(diff) != 1) return std::nullopt;
    const int axis = std::countr_zero(diff);
    const Vertex low = std::min(a.tail, a.head);
    const std::size_t k = OrientedHypercube::edge_index(dimension, low, axis);
    if (seen[k]) return std::nullopt;
    seen[k] = true;
    orientation[k] = a.tail != low;
  }
  return OrientedHypercube(dimension, std::move(orientation));
}

std::optional<LabeledCube> as_labeled_cube(const LabeledDigraph& graph) {
  auto cube = as_oriented_hypercube(graph.graph);
  if (!cube) return std::nullopt;
  return LabeledCube(std::move(*cube), graph.labeling);
}

ArcLabeling induce_arc_labeling(const Digraph& graph, const VertexLabeling& labeling) {
  require_matching(graph, labeling);
  ArcLabeling out;
  out.labels.reserve(graph.arc_count());
  for (const Arc& a : graph.arcs()) {
    out.labels.push_back(static_cast<std::int8_t>(labeling[a.head] - labeling[a.tail]));
  }
  return out;
}

LambdaTriple lambda(const Digraph& graph, const VertexLabeling& labeling) {
  require_matching(graph, labeling);
  LambdaTriple t;
  for (const Arc& a : graph.arcs()) {
    switch (labeling[a.head] - labeling[a.tail]) {
      case 1: ++t.alpha; break;
      case -1: ++t.beta; break;
      default: ++t.gamma; break;
    }
  }
  return t;
}

LambdaTriple lambda(const LabeledDigraph& graph) { return lambda(graph.graph, graph.labeling); }

LambdaTriple lambda(const LabeledCube& cube) {
  LambdaTriple t;
  for (std::size_t k = 0; k < cube.cube.edge_count(); ++k) {
    const Arc a = cube.cube.arc(k);
    switch (cube.labeling[a.head] - cube.labeling[a.tail]) {
      case 1: ++t.alpha; break;
      case -1: ++t.beta; break;
      default: ++t.gamma; break;
    }
  }
  return t;
}

bool is_friendly(const VertexLabeling& labeling) {
  const auto ones = static_cast<long long>(labeling.ones());
  const auto zeros = static_cast<long long>(labeling.zeros());
  return zeros - ones >= -1 && zeros - ones <= 1;
}

bool is_23_cordial_pair(const Digraph& graph, const VertexLabeling& labeling) {
  const LambdaTriple t = lambda(graph, labeling);
  return is_friendly(labeling) && t.is_balanced();
}

Digraph reverse(const Digraph& graph) {
  std::vector<Arc> arcs;
  arcs.reserve(graph.arc_count());
  for (const Arc& a : graph.arcs()) arcs.push_back({a.head, a.tail});
  return Digraph(graph.vertex_count(), std::move(arcs));
}

OrientedHypercube reverse(const OrientedHypercube& cube) {
  std::vector<bool> bits = cube.orientation();
  bits.flip();
  return OrientedHypercube(cube.dimension(), std::move(bits));
}

VertexLabeling complement(const VertexLabeling& labeling) {
  std::vector<std::uint8_t> bits = labeling.bits();
  for (auto& b : bits) b ^= 1;
  return VertexLabeling(std::move(bits));
}

bool is_digon_free(const Digraph& graph) {
  std::vector<Arc> sorted = graph.arcs();
  std::sort(sorted.begin(), sorted.end());
  return std::none_of(graph.arcs().begin(), graph.arcs().end(), [&](const Arc& a) {
    return std::binary_search(sorted.begin(), sorted.end(), Arc{a.head, a.tail});
  });
}

}  // namespace cordial
