#include "cordial/construct.hpp"

#include "cordial/fixtures.hpp"

namespace cordial {

LabeledCube base_cube() { return fixtures::cube("C3"); }

LabeledCube double_cube(const LabeledCube& cube, DoublingMode mode) {
  const int k = cube.cube.dimension();
  if (k + 1 > OrientedHypercube::kMaxDimension) {
    throw ArgumentError("cannot double a cube of dimension " + std::to_string(k));
  }
  const std::size_t half_edges = std::size_t{1} << (k - 1);  // edges per axis in Q_k
  const std::size_t copy_size = cube.cube.vertex_count();

  // Axis i of Q_{k+1} lists the copy-0 edges of axis i, then the copy-1 ones.
  std::vector<bool> bits;
  bits.reserve(OrientedHypercube::edge_count(k + 1));
  for (int axis = 0; axis < k; ++axis) {
    for (int copy = 0; copy < 2; ++copy) {
      for (std::size_t r = 0; r < half_edges; ++r) {
        bits.push_back(cube.cube.reversed(axis * half_edges + r));
      }
    }
  }
  bits.insert(bits.end(), copy_size, false);

  std::vector<std::uint8_t> labels = cube.labeling.bits();
  const VertexLabeling second =
      mode == DoublingMode::ComplementConnector ? complement(cube.labeling) : cube.labeling;
  labels.insert(labels.end(), second.bits().begin(), second.bits().end());

  return LabeledCube(OrientedHypercube(k + 1, std::move(bits)),
                     VertexLabeling(std::move(labels)));
}

LabeledCube double_cube(const LabeledDigraph& graph, DoublingMode mode) {
  auto cube = as_labeled_cube(graph);
  if (!cube) throw StructureError("digraph is not an oriented hypercube");
  return double_cube(*cube, mode);
}

LabeledCube construct_cordial(int n) {
  if (n < 3 || n % 3 != 0) {
    throw ArgumentError("dimension must be a positive multiple of 3, got " + std::to_string(n));
  }
  if (n > OrientedHypercube::kMaxDimension) {
    throw ArgumentError("dimension " + std::to_string(n) + " exceeds the supported maximum " +
                        std::to_string(OrientedHypercube::kMaxDimension));
  }
  LabeledCube cube = base_cube();
  while (cube.cube.dimension() < n) {
    cube = double_cube(cube, DoublingMode::ComplementConnector);
    cube = double_cube(cube, DoublingMode::ComplementConnector);
    cube = double_cube(cube, DoublingMode::IdentityConnector);
  }
  return cube;
}

}  // namespace cordial
