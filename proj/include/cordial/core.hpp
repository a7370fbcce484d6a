#pragma once

// Digraphs, oriented hypercubes, {0,1} vertex labelings and the arc labels
// they induce.
//
// Hypercube conventions used throughout the library:
//   - vertex id of Q_n is the integer whose bit i is the coordinate on axis i
//   - edges are ordered axis-major: for axis i = 0..n-1, for every vertex u
//     with bit i clear (increasing), the edge {u, u ^ (1 << i)}
//   - orientation bit 0 means u -> u ^ (1 << i), bit 1 the reverse

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cordial/errors.hpp"

namespace cordial {

using Vertex = std::uint32_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Simple directed graph: no self-loops, no repeated arcs. Antiparallel arc
/// pairs (digons) are allowed here and detected by is_digon_free().
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t vertex_count, std::vector<Arc> arcs);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Arc> arcs_;
};

/// Dense {0,1} labeling of a vertex set. Friendliness is a predicate
/// (is_friendly), not an invariant.
class VertexLabeling {
 public:
  VertexLabeling() = default;
  explicit VertexLabeling(std::size_t size) : bits_(size, 0) {}
  explicit VertexLabeling(std::vector<std::uint8_t> bits);

  std::size_t size() const { return bits_.size(); }
  int operator[](std::size_t v) const { return bits_[v]; }
  void set(std::size_t v, int label) { bits_[v] = label ? 1 : 0; }

  std::size_t ones() const;
  std::size_t zeros() const { return size() - ones(); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Induced arc labels in {-1, 0, +1}, index-aligned with a Digraph's arcs.
struct ArcLabeling {
  std::vector<std::int8_t> labels;

  std::size_t size() const { return labels.size(); }
  int operator[](std::size_t k) const { return labels[k]; }
  friend bool operator==(const ArcLabeling&, const ArcLabeling&) = default;
};

/// Counts of arcs labeled +1 (alpha), -1 (beta) and 0 (gamma).
struct LambdaTriple {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t gamma = 0;

  std::size_t total() const { return alpha + beta + gamma; }
  /// Every pairwise difference of the three counts is at most 1.
  bool is_balanced() const;
  /// Counts with alpha and beta exchanged.
  LambdaTriple swapped() const { return {beta, alpha, gamma}; }
  std::string to_string() const;

  friend bool operator==(const LambdaTriple&, const LambdaTriple&) = default;
};

struct LabeledDigraph {
  Digraph graph;
  VertexLabeling labeling;

  LabeledDigraph() = default;
  LabeledDigraph(Digraph g, VertexLabeling f);

  friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;
};

/// Q_n with one orientation bit per edge in canonical edge order.
class OrientedHypercube {
 public:
  static constexpr int kMaxDimension = 24;

  OrientedHypercube() = default;
  /// All edges oriented low -> high.
  explicit OrientedHypercube(int dimension);
  OrientedHypercube(int dimension, std::vector<bool> orientation);

  static std::size_t vertex_count(int dimension) { return std::size_t{1} << dimension; }
  static std::size_t edge_count(int dimension) {
    return dimension == 0 ? 0 : static_cast<std::size_t>(dimension) << (dimension - 1);
  }
  /// Canonical index of the edge {low, low ^ (1 << axis)}; bit `axis` of low must be clear.
  static std::size_t edge_index(int dimension, Vertex low, int axis);
  /// Low endpoint and axis of canonical edge `index`.
  static std::pair<Vertex, int> edge_endpoints(int dimension, std::size_t index);

  int dimension() const { return dimension_; }
  std::size_t vertex_count() const { return vertex_count(dimension_); }
  std::size_t edge_count() const { return edge_count(dimension_); }
  const std::vector<bool>& orientation() const { return orientation_; }
  bool reversed(std::size_t edge) const { return orientation_[edge]; }
  void set_reversed(std::size_t edge, bool value) { orientation_[edge] = value; }

  /// The directed arc realising canonical edge `index`.
  Arc arc(std::size_t index) const;

  friend bool operator==(const OrientedHypercube&, const OrientedHypercube&) = default;

 private:
  int dimension_ = 0;
  std::vector<bool> orientation_;
};

struct LabeledCube {
  OrientedHypercube cube;
  VertexLabeling labeling;

  LabeledCube() = default;
  LabeledCube(OrientedHypercube h, VertexLabeling f);

  LabeledDigraph expand() const;
  friend bool operator==(const LabeledCube&, const LabeledCube&) = default;
};

Digraph hypercube_digraph(const OrientedHypercube& cube);

/// Recognises a digraph whose underlying graph is exactly Q_n under the
/// vertex-id convention, each edge carried by one arc.
std::optional<OrientedHypercube> as_oriented_hypercube(const Digraph& graph);
std::optional<LabeledCube> as_labeled_cube(const LabeledDigraph& graph);

ArcLabeling induce_arc_labeling(const Digraph& graph, const VertexLabeling& labeling);
LambdaTriple lambda(const Digraph& graph, const VertexLabeling& labeling);
LambdaTriple lambda(const LabeledDigraph& graph);
LambdaTriple lambda(const LabeledCube& cube);

bool is_friendly(const VertexLabeling& labeling);
bool is_23_cordial_pair(const Digraph& graph, const VertexLabeling& labeling);

Digraph reverse(const Digraph& graph);
OrientedHypercube reverse(const OrientedHypercube& cube);
VertexLabeling complement(const VertexLabeling& labeling);
bool is_digon_free(const Digraph& graph);

}  // namespace cordial
