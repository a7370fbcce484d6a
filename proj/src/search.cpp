#include "cordial/search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

namespace cordial {

SignedPermutation SignedPermutation::identity(int dimension) {
  SignedPermutation sigma;
  sigma.axis_perm.resize(static_cast<std::size_t>(dimension));
  std::iota(sigma.axis_perm.begin(), sigma.axis_perm.end(), 0);
  return sigma;
}

std::vector<SignedPermutation> SignedPermutation::all(int dimension) {
  std::vector<SignedPermutation> out;
  SignedPermutation sigma = identity(dimension);
  do {
    for (Vertex mask = 0; mask < (Vertex{1} << dimension); ++mask) {
      sigma.flip_mask = mask;
      out.push_back(sigma);
    }
  } while (std::next_permutation(sigma.axis_perm.begin(), sigma.axis_perm.end()));
  return out;
}

Vertex SignedPermutation::apply(Vertex v) const {
  const Vertex w = v ^ flip_mask;
  Vertex out = 0;
  for (std::size_t i = 0; i < axis_perm.size(); ++i) {
    out |= ((w >> i) & 1U) << axis_perm[i];
  }
  return out;
}

OrientedHypercube apply(const SignedPermutation& sigma, const OrientedHypercube& cube) {
  if (sigma.dimension() != cube.dimension()) {
    throw DimensionError("signed permutation of dimension " + std::to_string(sigma.dimension()) +
                         " applied to Q_" + std::to_string(cube.dimension()));
  }
  OrientedHypercube out(cube.dimension());
  for (std::size_t k = 0; k < cube.edge_count(); ++k) {
    const Arc a = cube.arc(k);
    const Vertex tail = sigma.apply(a.tail);
    const Vertex head = sigma.apply(a.head);
    const Vertex low = std::min(tail, head);
    const auto index =
        OrientedHypercube::edge_index(cube.dimension(), low, std::countr_zero(tail ^ head));
    out.set_reversed(index, tail != low);
  }
  return out;
}

VertexLabeling apply(const SignedPermutation& sigma, const VertexLabeling& labeling) {
  if (labeling.size() != (std::size_t{1} << sigma.dimension())) {
    throw DimensionError("labeling size does not match the signed permutation");
  }
  VertexLabeling out(labeling.size());
  for (std::size_t v = 0; v < labeling.size(); ++v) {
    out.set(sigma.apply(static_cast<Vertex>(v)), labeling[v]);
  }
  return out;
}

std::uint64_t for_each_friendly_labeling(std::size_t vertex_count,
                                         const std::function<bool(const VertexLabeling&)>& visit) {
  std::uint64_t visited = 0;
  std::vector<std::size_t> ones_counts{vertex_count / 2};
  if (vertex_count % 2 == 1) ones_counts.push_back(vertex_count / 2 + 1);

  for (std::size_t r : ones_counts) {
    std::vector<std::size_t> chosen(r);
    std::iota(chosen.begin(), chosen.end(), std::size_t{0});
    while (true) {
      VertexLabeling labeling(vertex_count);
      for (std::size_t v : chosen) labeling.set(v, 1);
      ++visited;
      if (!visit(labeling)) return visited;

      // Next r-subset in lexicographic order.
      std::size_t i = r;
      while (i > 0 && chosen[i - 1] == vertex_count - r + (i - 1)) --i;
      if (i == 0) break;
      ++chosen[i - 1];
      for (std::size_t j = i; j < r; ++j) chosen[j] = chosen[j - 1] + 1;
    }
  }
  return visited;
}

std::uint64_t friendly_labeling_count(std::size_t vertex_count) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::size_t r = vertex_count / 2;
  // C(n, r) by the multiplicative formula; each partial product is an integer.
  __extension__ using Wide = unsigned __int128;
  Wide c = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    c = c * (vertex_count - r + i) / i;
    if (c > kMax) return kMax;
  }
  if (vertex_count % 2 == 1) c *= 2;
  return c > kMax ? kMax : static_cast<std::uint64_t>(c);
}

CordialSearchResult find_cordial_labeling(const Digraph& graph) {
  if (!is_digon_free(graph)) {
    throw DomainError("cordial labelings are only searched on digon-free digraphs");
  }
  CordialSearchResult result;
  result.labelings_examined =
      for_each_friendly_labeling(graph.vertex_count(), [&](const VertexLabeling& f) {
        if (lambda(graph, f).is_balanced()) {
          result.witness = f;
          return false;
        }
        return true;
      });
  return result;
}

HypercubeSymmetry::HypercubeSymmetry(int dimension) : dimension_(dimension) {
  if (dimension < 1 || dimension > 8) {
    throw ArgumentError("symmetry tables are built for dimensions 1..8, got " +
                        std::to_string(dimension));
  }
  const std::size_t edges = OrientedHypercube::edge_count(dimension);
  for (const SignedPermutation& sigma : SignedPermutation::all(dimension)) {
    std::vector<std::size_t> image(edges);
    std::vector<bool> flip(edges);
    for (std::size_t k = 0; k < edges; ++k) {
      auto [low, axis] = OrientedHypercube::edge_endpoints(dimension, k);
      const Vertex a = sigma.apply(low);
      const Vertex b = sigma.apply(low | (Vertex{1} << axis));
      image[k] = OrientedHypercube::edge_index(dimension, std::min(a, b), sigma.axis_perm[axis]);
      flip[k] = a > b;
    }
    edge_image_.push_back(std::move(image));
    edge_flip_.push_back(std::move(flip));
  }
}

OrientedHypercube HypercubeSymmetry::canonical_form(const OrientedHypercube& cube) const {
  if (cube.dimension() != dimension_) {
    throw DimensionError("symmetry table for Q_" + std::to_string(dimension_) +
                         " applied to Q_" + std::to_string(cube.dimension()));
  }
  const std::vector<bool>& bits = cube.orientation();
  std::vector<bool> best = bits;
  std::vector<bool> candidate(bits.size());
  for (std::size_t g = 0; g < edge_image_.size(); ++g) {
    for (std::size_t k = 0; k < bits.size(); ++k) {
      candidate[edge_image_[g][k]] = bits[k] != edge_flip_[g][k];
    }
    if (candidate < best) best = candidate;
  }
  return OrientedHypercube(dimension_, std::move(best));
}

OrientedHypercube canonical_form(const OrientedHypercube& cube) {
  return HypercubeSymmetry(cube.dimension()).canonical_form(cube);
}

namespace {

// Orientation vectors of Q_n (n <= 3) packed so that edge 0 is the most
// significant bit: integer order then equals lexicographic vector order.
using PackedOrientation = std::uint32_t;

struct PackedSymmetry {
  std::size_t edges = 0;
  std::vector<std::vector<std::size_t>> image;
  std::vector<PackedOrientation> flip_mask;  // packed bits of edges whose endpoints swap
};

PackedSymmetry pack_symmetry(int dimension) {
  PackedSymmetry out;
  out.edges = OrientedHypercube::edge_count(dimension);
  for (const SignedPermutation& sigma : SignedPermutation::all(dimension)) {
    std::vector<std::size_t> image(out.edges);
    PackedOrientation flips = 0;
    for (std::size_t k = 0; k < out.edges; ++k) {
      auto [low, axis] = OrientedHypercube::edge_endpoints(dimension, k);
      const Vertex a = sigma.apply(low);
      const Vertex b = sigma.apply(low | (Vertex{1} << axis));
      image[k] = OrientedHypercube::edge_index(dimension, std::min(a, b), sigma.axis_perm[axis]);
      if (a > b) flips |= PackedOrientation{1} << (out.edges - 1 - image[k]);
    }
    out.image.push_back(std::move(image));
    out.flip_mask.push_back(flips);
  }
  return out;
}

PackedOrientation packed_canonical(const PackedSymmetry& sym, PackedOrientation packed) {
  PackedOrientation best = packed;
  for (std::size_t g = 0; g < sym.image.size(); ++g) {
    PackedOrientation moved = 0;
    for (std::size_t k = 0; k < sym.edges; ++k) {
      const PackedOrientation bit = (packed >> (sym.edges - 1 - k)) & 1U;
      moved |= bit << (sym.edges - 1 - sym.image[g][k]);
    }
    best = std::min(best, moved ^ sym.flip_mask[g]);
  }
  return best;
}

OrientedHypercube unpack(int dimension, std::size_t edges, PackedOrientation packed) {
  std::vector<bool> bits(edges);
  for (std::size_t k = 0; k < edges; ++k) bits[k] = ((packed >> (edges - 1 - k)) & 1U) != 0;
  return OrientedHypercube(dimension, std::move(bits));
}

void require_desk_scale(int dimension) {
  if (dimension < 1 || dimension > 3) {
    throw ArgumentError("exhaustive classification is limited to dimensions 1..3, got " +
                        std::to_string(dimension));
  }
}

}  // namespace

std::vector<OrientedHypercube> enumerate_classes(int dimension, unsigned jobs,
                                                 std::uint64_t* visited) {
  require_desk_scale(dimension);
  const PackedSymmetry sym = pack_symmetry(dimension);
  const std::uint64_t space = std::uint64_t{1} << sym.edges;
  const std::uint64_t workers = std::clamp<std::uint64_t>(jobs, 1, space);

  std::vector<std::vector<PackedOrientation>> partial(workers);
  std::vector<std::uint64_t> seen(workers, 0);
  auto work = [&](std::uint64_t w) {
    const std::uint64_t begin = space * w / workers;
    const std::uint64_t end = space * (w + 1) / workers;
    std::vector<PackedOrientation>& out = partial[w];
    for (std::uint64_t packed = begin; packed < end; ++packed) {
      out.push_back(packed_canonical(sym, static_cast<PackedOrientation>(packed)));
      ++seen[w];
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::uint64_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }

  std::vector<PackedOrientation> merged;
  for (const auto& p : partial) merged.insert(merged.end(), p.begin(), p.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  if (visited) *visited = std::accumulate(seen.begin(), seen.end(), std::uint64_t{0});
  std::vector<OrientedHypercube> classes;
  classes.reserve(merged.size());
  for (PackedOrientation packed : merged) classes.push_back(unpack(dimension, sym.edges, packed));
  return classes;
}

ClassificationReport classify_cordiality(int dimension, unsigned jobs) {
  ClassificationReport report;
  report.dimension = dimension;
  const std::vector<OrientedHypercube> classes =
      enumerate_classes(dimension, jobs, &report.total_orientations);
  report.isomorphism_class_count = classes.size();
  for (const OrientedHypercube& rep : classes) {
    if (!find_cordial_labeling(hypercube_digraph(rep)).witness) {
      report.non_cordial_class_representatives.push_back(rep);
    }
  }
  return report;
}

UndirectedGraph::UndirectedGraph(std::size_t vertex_count, std::vector<UndirectedEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  std::vector<std::pair<Vertex, Vertex>> keys;
  keys.reserve(edges_.size());
  for (const UndirectedEdge& e : edges_) {
    if (e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw StructureError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           "} has an endpoint >= " + std::to_string(vertex_count_));
    }
    if (e.u == e.v) throw StructureError("self-loop at vertex " + std::to_string(e.u));
    keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw StructureError("duplicate undirected edge");
  }
}

UndirectedGraph x_graph(int n) {
  if (n < 6) throw ArgumentError("x_graph needs n >= 6, got " + std::to_string(n));
  return UndirectedGraph(static_cast<std::size_t>(n), {{0, 1}, {2, 3}, {4, 5}});
}

OrientationSearchResult find_23_orientation(const UndirectedGraph& graph,
                                            const OrientationOptions& options) {
  // Vertices taking part in the search, renumbered densely.
  std::vector<Vertex> original;
  std::vector<Vertex> renumber(graph.vertex_count(), 0);
  {
    std::vector<bool> keep(graph.vertex_count(), options.keep_isolated);
    for (const UndirectedEdge& e : graph.edges()) keep[e.u] = keep[e.v] = true;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
      if (!keep[v]) continue;
      renumber[v] = static_cast<Vertex>(original.size());
      original.push_back(static_cast<Vertex>(v));
    }
  }

  OrientationSearchResult result;
  result.searched_vertices = original.size();
  const std::size_t edge_count = graph.edges().size();
  const std::uint64_t labelings = friendly_labeling_count(original.size());
  if (edge_count >= 63 || labelings > (options.budget >> edge_count)) {
    throw BudgetError("search needs 2^" + std::to_string(edge_count) + " orientations x " +
                      std::to_string(labelings) + " labelings, over the budget of " +
                      std::to_string(options.budget));
  }

  const std::uint64_t orientations = std::uint64_t{1} << edge_count;
  for (std::uint64_t mask = 0; mask < orientations; ++mask) {
    std::vector<Arc> arcs;
    arcs.reserve(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i) {
      const Vertex u = renumber[graph.edges()[i].u];
      const Vertex v = renumber[graph.edges()[i].v];
      arcs.push_back(((mask >> i) & 1U) ? Arc{v, u} : Arc{u, v});
    }
    Digraph digraph(original.size(), std::move(arcs));
    ++result.orientations_examined;
    CordialSearchResult found = find_cordial_labeling(digraph);
    if (found.witness) {
      result.witness = OrientationWitness{std::move(digraph), std::move(*found.witness), original};
      break;
    }
  }
  return result;
}

ExplorationReport explore_random(int dimension, std::uint64_t samples, std::uint64_t seed,
                                 std::uint64_t attempts) {
  if (dimension < 1 || dimension > 10) {
    throw ArgumentError("random exploration supports dimensions 1..10, got " +
                        std::to_string(dimension));
  }
  ExplorationReport report;
  report.dimension = dimension;
  report.seed = seed;
  report.samples = samples;

  std::mt19937_64 rng(seed);
  const std::size_t vertices = OrientedHypercube::vertex_count(dimension);
  const bool exhaustive = friendly_labeling_count(vertices) <= attempts;

  for (std::uint64_t s = 0; s < samples; ++s) {
    OrientedHypercube cube(dimension);
    for (std::size_t k = 0; k < cube.edge_count(); ++k) cube.set_reversed(k, (rng() & 1U) != 0);
    const Digraph graph = hypercube_digraph(cube);

    bool found = false;
    if (exhaustive) {
      found = find_cordial_labeling(graph).witness.has_value();
    } else {
      std::vector<std::uint8_t> bits(vertices, 0);
      std::fill(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(vertices / 2), 1);
      for (std::uint64_t a = 0; a < attempts && !found; ++a) {
        // Fisher-Yates on raw engine output; std::shuffle is implementation-defined.
        for (std::size_t i = vertices - 1; i > 0; --i) std::swap(bits[i], bits[rng() % (i + 1)]);
        found = lambda(graph, VertexLabeling(bits)).is_balanced();
      }
    }
    if (found) {
      ++report.cordial_found;
    } else if (!report.first_unresolved) {
      report.first_unresolved = cube;
    }
  }
  return report;
}

}  // namespace cordial
