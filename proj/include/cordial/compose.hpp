#pragma once

// Agreement counts between labeled cubes and "cube of cubes" assemblies:
// a labeled cube is placed at each vertex of a meta-hypercube and every
// meta-edge is realised by arcs drawn along a vertex bijection.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cordial/core.hpp"

namespace cordial {

class VertexBijection {
 public:
  VertexBijection() = default;
  /// forward[v] is the image of vertex v; must be a permutation.
  explicit VertexBijection(std::vector<Vertex> forward);
  static VertexBijection identity(std::size_t size);

  std::size_t size() const { return forward_.size(); }
  Vertex operator()(Vertex v) const { return forward_[v]; }
  const std::vector<Vertex>& forward() const { return forward_; }
  VertexBijection inverse() const;

  friend bool operator==(const VertexBijection&, const VertexBijection&) = default;

 private:
  std::vector<Vertex> forward_;
};

/// Number of vertices v whose label in `first` equals the label of b(v) in `second`.
std::size_t phi(const VertexLabeling& first, const VertexLabeling& second,
                const VertexBijection& b);
std::size_t phi(const LabeledDigraph& first, const LabeledDigraph& second,
                const VertexBijection& b);

/// A bijection between two named base cubes. Empty `from`/`to` means the
/// bijection is generic and may join any pair of cubes of the right size.
struct NamedBijection {
  std::string from;
  std::string to;
  VertexBijection map;

  friend bool operator==(const NamedBijection&, const NamedBijection&) = default;
};

class BijectionTable {
 public:
  void add(const std::string& name, NamedBijection bijection);
  bool contains(const std::string& name) const { return entries_.contains(name); }
  const NamedBijection& at(const std::string& name) const;
  const std::map<std::string, NamedBijection>& entries() const { return entries_; }

  /// Bijection carrying cube `from` onto cube `to`: a table entry between the
  /// two base cubes (inverted if stored the other way round), or the identity
  /// when both names are equal.
  std::optional<VertexBijection> for_pair(const std::string& from, const std::string& to,
                                          std::size_t size) const;

  friend bool operator==(const BijectionTable&, const BijectionTable&) = default;

 private:
  std::map<std::string, NamedBijection> entries_;
};

/// A cube as it appears in a phi table: a base cube, possibly complemented.
struct TableCube {
  std::string name;  // display name, e.g. "~A"
  std::string base;  // base cube used to look up bijections
  bool complemented = false;
  LabeledDigraph cube;
};

struct PhiTable {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> values;  // symmetric
};

/// Throws ConfigurationError when a cross-cube pair has no bijection.
PhiTable phi_table(const std::vector<TableCube>& cubes, const BijectionTable& bijections);

struct Slot {
  std::string cube;
  bool complemented = false;

  friend bool operator==(const Slot&, const Slot&) = default;
};

/// Edge of the meta-cube. Zero-labeled connector arcs run from -> to, and
/// the named bijection is applied in that direction.
struct MetaArc {
  Vertex from = 0;
  Vertex to = 0;
  std::string bijection = "identity";

  friend bool operator==(const MetaArc&, const MetaArc&) = default;
};

struct CubeArrangement {
  int meta_dimension = 0;
  std::vector<Slot> slots;          // one per meta-vertex
  std::vector<MetaArc> meta_arcs;   // one per meta-edge
  BijectionTable bijections;
  std::map<std::string, LabeledDigraph> cubes;  // every slot's cube by id

  friend bool operator==(const CubeArrangement&, const CubeArrangement&) = default;
};

struct FreeEdge {
  Vertex low = 0;
  Vertex high = 0;

  friend auto operator<=>(const FreeEdge&, const FreeEdge&) = default;
};

/// Labeled cube whose inter-slot edges between unequal labels are still
/// unoriented. Every free edge induces +1 or -1 whichever way it points.
struct PartialOrientedCube {
  std::size_t vertex_count = 0;
  VertexLabeling labeling;
  std::vector<Arc> fixed_arcs;
  std::vector<FreeEdge> free_edges;
  std::size_t inter_slot_edges = 0;
  std::size_t inter_slot_zeros = 0;

  /// Lambda over the fixed arcs only.
  LambdaTriple fixed_lambda() const;
};

/// Expands an arrangement into a partial cube. Slot s occupies vertex ids
/// [s * 2^k, (s + 1) * 2^k). Throws StructureError on invariant violations
/// and ConfigurationError on unknown cubes or bijections.
PartialOrientedCube assemble(const CubeArrangement& arrangement);

/// Raised when no orientation of the free edges balances Lambda.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, LambdaTriple best)
      : Error(what), best_(best) {}
  const LambdaTriple& best() const { return best_; }

 private:
  LambdaTriple best_;
};

struct BalancedCube {
  LabeledDigraph graph;
  LambdaTriple lambda;
};

/// Orients every free edge so the final triple is balanced. The first q free
/// edges (in stored order) point from their 0-labeled end to their 1-labeled
/// end, the rest the other way, with q chosen to minimise the spread.
BalancedCube balance_free_arcs(const PartialOrientedCube& partial);

}  // namespace cordial
