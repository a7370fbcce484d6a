#include "cordial/compose.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace cordial {

VertexBijection::VertexBijection(std::vector<Vertex> forward) : forward_(std::move(forward)) {
  std::vector<bool> hit(forward_.size(), false);
  for (Vertex image : forward_) {
    if (image >= forward_.size() || hit[image]) {
      throw StructureError("bijection is not a permutation of 0.." +
                           std::to_string(forward_.size() == 0 ? 0 : forward_.size() - 1));
    }
    hit[image] = true;
  }
}

VertexBijection VertexBijection::identity(std::size_t size) {
  std::vector<Vertex> forward(size);
  for (std::size_t v = 0; v < size; ++v) forward[v] = static_cast<Vertex>(v);
  return VertexBijection(std::move(forward));
}

VertexBijection VertexBijection::inverse() const {
  std::vector<Vertex> backward(forward_.size());
  for (std::size_t v = 0; v < forward_.size(); ++v) backward[forward_[v]] = static_cast<Vertex>(v);
  return VertexBijection(std::move(backward));
}

std::size_t phi(const VertexLabeling& first, const VertexLabeling& second,
                const VertexBijection& b) {
  if (first.size() != second.size() || b.size() != first.size()) {
    throw DimensionError("phi needs equal sizes, got " + std::to_string(first.size()) + ", " +
                         std::to_string(second.size()) + " and a bijection on " +
                         std::to_string(b.size()));
  }
  std::size_t agree = 0;
  for (std::size_t v = 0; v < first.size(); ++v) {
    if (first[v] == second[b(static_cast<Vertex>(v))]) ++agree;
  }
  return agree;
}

std::size_t phi(const LabeledDigraph& first, const LabeledDigraph& second,
                const VertexBijection& b) {
  return phi(first.labeling, second.labeling, b);
}

void BijectionTable::add(const std::string& name, NamedBijection bijection) {
  entries_.insert_or_assign(name, std::move(bijection));
}

const NamedBijection& BijectionTable::at(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw ConfigurationError("unknown bijection '" + name + "'");
  return it->second;
}

std::optional<VertexBijection> BijectionTable::for_pair(const std::string& from,
                                                        const std::string& to,
                                                        std::size_t size) const {
  if (from == to) return VertexBijection::identity(size);
  for (const auto& [name, entry] : entries_) {
    if (entry.map.size() != size) continue;
    if (entry.from == from && entry.to == to) return entry.map;
    if (entry.from == to && entry.to == from) return entry.map.inverse();
  }
  return std::nullopt;
}

PhiTable phi_table(const std::vector<TableCube>& cubes, const BijectionTable& bijections) {
  PhiTable table;
  const std::size_t n = cubes.size();
  table.values.assign(n, std::vector<std::size_t>(n, 0));
  for (const TableCube& c : cubes) table.names.push_back(c.name);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const TableCube& a = cubes[i];
      const TableCube& b = cubes[j];
      const std::size_t size = a.cube.labeling.size();
      auto map = bijections.for_pair(a.base, b.base, size);
      if (!map) {
        throw ConfigurationError("no bijection between cubes '" + a.base + "' and '" + b.base +
                                 "'");
      }
      const VertexLabeling fa = a.complemented ? complement(a.cube.labeling) : a.cube.labeling;
      const VertexLabeling fb = b.complemented ? complement(b.cube.labeling) : b.cube.labeling;
      table.values[i][j] = table.values[j][i] = phi(fa, fb, *map);
    }
  }
  return table;
}

LambdaTriple PartialOrientedCube::fixed_lambda() const {
  return lambda(Digraph(vertex_count, fixed_arcs), labeling);
}

namespace {

const LabeledDigraph& slot_cube(const CubeArrangement& arrangement, const Slot& slot) {
  auto it = arrangement.cubes.find(slot.cube);
  if (it == arrangement.cubes.end()) {
    throw ConfigurationError("arrangement references unknown cube '" + slot.cube + "'");
  }
  return it->second;
}

// Resolves the bijection of a meta-arc in from -> to direction.
VertexBijection meta_arc_bijection(const CubeArrangement& arrangement, const MetaArc& arc,
                                   std::size_t size) {
  const NamedBijection& entry = arrangement.bijections.at(arc.bijection);
  if (entry.map.size() != size) {
    throw StructureError("bijection '" + arc.bijection + "' acts on " +
                         std::to_string(entry.map.size()) + " vertices, slot cubes have " +
                         std::to_string(size));
  }
  if (entry.from.empty() && entry.to.empty()) return entry.map;

  const std::string& from_cube = arrangement.slots[arc.from].cube;
  const std::string& to_cube = arrangement.slots[arc.to].cube;
  if (entry.from == from_cube && entry.to == to_cube) return entry.map;
  if (entry.from == to_cube && entry.to == from_cube) return entry.map.inverse();
  throw StructureError("bijection '" + arc.bijection + "' joins " + entry.from + " and " +
                       entry.to + " but meta-arc " + std::to_string(arc.from) + "->" +
                       std::to_string(arc.to) + " joins " + from_cube + " and " + to_cube);
}

}  // namespace

PartialOrientedCube assemble(const CubeArrangement& arrangement) {
  const int j = arrangement.meta_dimension;
  if (j < 1 || j > 16) {
    throw StructureError("meta dimension " + std::to_string(j) + " outside [1, 16]");
  }
  const std::size_t meta_vertices = std::size_t{1} << j;
  if (arrangement.slots.size() != meta_vertices) {
    throw StructureError("meta dimension " + std::to_string(j) + " needs " +
                         std::to_string(meta_vertices) + " slots, got " +
                         std::to_string(arrangement.slots.size()));
  }

  const std::size_t slot_size = slot_cube(arrangement, arrangement.slots[0]).labeling.size();
  if (slot_size < 2 || !std::has_single_bit(slot_size)) {
    throw StructureError("slot cubes must have 2^k vertices, got " + std::to_string(slot_size));
  }
  for (const Slot& slot : arrangement.slots) {
    if (slot_cube(arrangement, slot).labeling.size() != slot_size) {
      throw StructureError("slot cube '" + slot.cube + "' differs in size from slot 0");
    }
  }

  // Meta-arcs indexed by canonical meta-edge, each edge exactly once.
  const std::size_t meta_edges = OrientedHypercube::edge_count(j);
  std::vector<const MetaArc*> by_edge(meta_edges, nullptr);
  for (const MetaArc& arc : arrangement.meta_arcs) {
    const Vertex diff = arc.from ^ arc.to;
    if (arc.from >= meta_vertices || arc.to >= meta_vertices || std::popcount(diff) != 1) {
      throw StructureError("meta-arc " + std::to_string(arc.from) + "->" +
                           std::to_string(arc.to) + " is not an edge of the meta-cube");
    }
    const std::size_t k = OrientedHypercube::edge_index(j, std::min(arc.from, arc.to),
                                                         std::countr_zero(diff));
    if (by_edge[k] != nullptr) {
      throw StructureError("meta-edge {" + std::to_string(arc.from) + "," +
                           std::to_string(arc.to) + "} listed twice");
    }
    by_edge[k] = &arc;
  }
  if (std::count(by_edge.begin(), by_edge.end(), nullptr) != 0) {
    throw StructureError("arrangement lists " + std::to_string(arrangement.meta_arcs.size()) +
                         " meta-arcs; the meta-cube has " + std::to_string(meta_edges) +
                         " edges");
  }

  PartialOrientedCube out;
  out.vertex_count = meta_vertices * slot_size;
  std::vector<std::uint8_t> labels;
  labels.reserve(out.vertex_count);

  for (std::size_t s = 0; s < meta_vertices; ++s) {
    const Slot& slot = arrangement.slots[s];
    const LabeledDigraph& cube = slot_cube(arrangement, slot);
    const auto offset = static_cast<Vertex>(s * slot_size);
    for (const Arc& a : cube.graph.arcs()) out.fixed_arcs.push_back({a.tail + offset, a.head + offset});
    for (std::size_t v = 0; v < slot_size; ++v) {
      labels.push_back(static_cast<std::uint8_t>(cube.labeling[v] ^ (slot.complemented ? 1 : 0)));
    }
  }
  out.labeling = VertexLabeling(std::move(labels));

  for (const MetaArc* arc : by_edge) {
    const VertexBijection map = meta_arc_bijection(arrangement, *arc, slot_size);
    const auto from_base = static_cast<Vertex>(arc->from * slot_size);
    const auto to_base = static_cast<Vertex>(arc->to * slot_size);
    for (std::size_t v = 0; v < slot_size; ++v) {
      const Vertex tail = from_base + static_cast<Vertex>(v);
      const Vertex head = to_base + map(static_cast<Vertex>(v));
      ++out.inter_slot_edges;
      if (out.labeling[tail] == out.labeling[head]) {
        out.fixed_arcs.push_back({tail, head});
        ++out.inter_slot_zeros;
      } else {
        out.free_edges.push_back({std::min(tail, head), std::max(tail, head)});
      }
    }
  }
  return out;
}

BalancedCube balance_free_arcs(const PartialOrientedCube& partial) {
  const LambdaTriple fixed = partial.fixed_lambda();
  const std::size_t free = partial.free_edges.size();

  auto spread = [](const LambdaTriple& t) {
    auto [lo, hi] = std::minmax({t.alpha, t.beta, t.gamma});
    return hi - lo;
  };
  auto skew = [](const LambdaTriple& t) {
    return t.alpha > t.beta ? t.alpha - t.beta : t.beta - t.alpha;
  };

  std::size_t best_quota = 0;
  LambdaTriple best{fixed.alpha, fixed.beta + free, fixed.gamma};
  for (std::size_t q = 1; q <= free; ++q) {
    const LambdaTriple t{fixed.alpha + q, fixed.beta + free - q, fixed.gamma};
    if (spread(t) < spread(best) || (spread(t) == spread(best) && skew(t) < skew(best))) {
      best = t;
      best_quota = q;
    }
  }
  if (!best.is_balanced()) {
    throw InfeasibleError("no orientation of the " + std::to_string(free) +
                              " free edges balances fixed arcs " + fixed.to_string() +
                              "; best achievable " + best.to_string(),
                          best);
  }

  std::vector<Arc> arcs = partial.fixed_arcs;
  arcs.reserve(arcs.size() + free);
  for (std::size_t i = 0; i < free; ++i) {
    const FreeEdge& e = partial.free_edges[i];
    const bool low_is_zero = partial.labeling[e.low] == 0;
    const Vertex zero_end = low_is_zero ? e.low : e.high;
    const Vertex one_end = low_is_zero ? e.high : e.low;
    arcs.push_back(i < best_quota ? Arc{zero_end, one_end} : Arc{one_end, zero_end});
  }
  BalancedCube out{LabeledDigraph(Digraph(partial.vertex_count, std::move(arcs)), partial.labeling),
                   LambdaTriple{}};
  out.lambda = lambda(out.graph);
  return out;
}

}  // namespace cordial
