#pragma once

// Exhaustive searches: cordial labelings of a fixed digraph, isomorphism
// classes of oriented Q_n (n <= 3) under the hyperoctahedral group, and
// (2,3)-orientations of small undirected graphs.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cordial/core.hpp"

namespace cordial {

/// Automorphism of Q_n: x -> permute_axes(x ^ flip_mask), where bit i of the
/// flipped vertex moves to bit axis_perm[i].
struct SignedPermutation {
  std::vector<int> axis_perm;
  Vertex flip_mask = 0;

  static SignedPermutation identity(int dimension);
  /// All n! * 2^n elements; order is deterministic.
  static std::vector<SignedPermutation> all(int dimension);

  int dimension() const { return static_cast<int>(axis_perm.size()); }
  Vertex apply(Vertex v) const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/// Image of an oriented hypercube: arc u -> v becomes sigma(u) -> sigma(v).
OrientedHypercube apply(const SignedPermutation& sigma, const OrientedHypercube& cube);
VertexLabeling apply(const SignedPermutation& sigma, const VertexLabeling& labeling);

/// Calls `visit` for every friendly labeling of `vertex_count` vertices: the
/// set of 1-labeled vertices runs through all floor(n/2)-subsets in
/// lexicographic order, then (n odd) all ceil(n/2)-subsets. `visit` returns
/// false to stop. Returns the number of labelings visited.
std::uint64_t for_each_friendly_labeling(std::size_t vertex_count,
                                         const std::function<bool(const VertexLabeling&)>& visit);

/// Number of friendly labelings of n vertices.
std::uint64_t friendly_labeling_count(std::size_t vertex_count);

struct CordialSearchResult {
  std::optional<VertexLabeling> witness;
  /// Labelings examined; equals friendly_labeling_count() when witness is empty.
  std::uint64_t labelings_examined = 0;
};

/// First friendly labeling (in enumeration order) making `graph` (2,3)-cordial.
/// Throws DomainError if the digraph contains a digon.
CordialSearchResult find_cordial_labeling(const Digraph& graph);

/// Lexicographically least orientation vector over the hyperoctahedral orbit.
OrientedHypercube canonical_form(const OrientedHypercube& cube);

/// Precomputed edge action of every automorphism of Q_n, for repeated
/// canonicalisation.
class HypercubeSymmetry {
 public:
  explicit HypercubeSymmetry(int dimension);

  int dimension() const { return dimension_; }
  std::size_t group_order() const { return edge_image_.size(); }
  OrientedHypercube canonical_form(const OrientedHypercube& cube) const;

 private:
  int dimension_;
  // For group element g and edge e: image edge index and whether the
  // low/high endpoints swap (which flips the orientation bit).
  std::vector<std::vector<std::size_t>> edge_image_;
  std::vector<std::vector<bool>> edge_flip_;
};

struct ClassificationReport {
  int dimension = 0;
  std::uint64_t total_orientations = 0;
  std::uint64_t isomorphism_class_count = 0;
  /// Canonical representatives without a (2,3)-cordial labeling, sorted.
  std::vector<OrientedHypercube> non_cordial_class_representatives;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Canonical representatives of all isomorphism classes of oriented Q_dim,
/// sorted lexicographically. dim must be 1, 2 or 3. `jobs` worker threads
/// split the orientation space by its high bits; the result does not depend
/// on `jobs`. `visited`, if given, receives the number of orientations seen.
std::vector<OrientedHypercube> enumerate_classes(int dimension, unsigned jobs = 1,
                                                 std::uint64_t* visited = nullptr);

ClassificationReport classify_cordiality(int dimension, unsigned jobs = 1);

struct UndirectedEdge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const UndirectedEdge&, const UndirectedEdge&) = default;
};

class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(std::size_t vertex_count, std::vector<UndirectedEdge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<UndirectedEdge>& edges() const { return edges_; }

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<UndirectedEdge> edges_;
};

/// Three disjoint edges {0,1},{2,3},{4,5} plus n-6 isolated vertices.
UndirectedGraph x_graph(int n);

struct OrientationOptions {
  /// Judge the whole graph instead of the subgraph on non-isolated vertices.
  bool keep_isolated = false;
  /// Maximum orientations x friendly labelings to examine.
  std::uint64_t budget = std::uint64_t{1} << 24;
};

struct OrientationWitness {
  Digraph digraph;                       // on the searched (possibly reduced) vertex set
  VertexLabeling labeling;
  std::vector<Vertex> original_vertex;   // searched vertex -> vertex of the input graph
};

struct OrientationSearchResult {
  std::optional<OrientationWitness> witness;
  std::size_t searched_vertices = 0;
  std::uint64_t orientations_examined = 0;
};

/// Exhaustive search over all orientations and friendly labelings. Throws
/// BudgetError when 2^|E| * (#friendly labelings) exceeds options.budget.
OrientationSearchResult find_23_orientation(const UndirectedGraph& graph,
                                            const OrientationOptions& options = {});

struct ExplorationReport {
  int dimension = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t cordial_found = 0;
  /// Orientation of the first sample where no labeling was found, if any.
  std::optional<OrientedHypercube> first_unresolved;
};

/// Random orientations of Q_dim; each is searched with `attempts` random
/// friendly labelings (or exhaustively when that is cheaper). No
/// completeness claim is made for dimensions above 3.
ExplorationReport explore_random(int dimension, std::uint64_t samples, std::uint64_t seed,
                                 std::uint64_t attempts);

}  // namespace cordial
