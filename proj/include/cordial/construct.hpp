#pragma once

// Doubling construction of (2,3)-cordial labeled oriented hypercubes in every
// dimension divisible by three.

#include "cordial/core.hpp"

namespace cordial {

enum class DoublingMode {
  /// Second copy carries the complemented labeling.
  ComplementConnector,
  /// Second copy is an exact duplicate; every connector arc is labeled 0.
  IdentityConnector,
};

/// The labeled oriented Q_3 with Lambda = (4,4,4) used as the induction base.
LabeledCube base_cube();

/// Glues two copies of `cube` along a new highest axis. Copy 0 keeps the ids
/// of `cube`, copy 1 is shifted by 2^k; connector arcs run copy 0 -> copy 1.
LabeledCube double_cube(const LabeledCube& cube, DoublingMode mode);

/// Same as above for a labeled digraph; throws StructureError unless the
/// digraph is an oriented hypercube under the vertex-id convention.
LabeledCube double_cube(const LabeledDigraph& graph, DoublingMode mode);

/// base_cube() followed by (Complement, Complement, Identity) doublings until
/// the requested dimension. Throws ArgumentError unless n is a positive
/// multiple of 3.
LabeledCube construct_cordial(int n);

}  // namespace cordial
