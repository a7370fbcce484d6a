#pragma once

// Transcriptions of the worked example cubes, bijections and assemblies.
//
// Drawn cubes number their vertices a1..a8 as ids 0..7: a1..a4 are the front
// face (top-left, top-right, bottom-left, bottom-right) and a5..a8 the
// matching corners of the back face, so a1-a2 runs along axis 0, a1-a3
// along axis 1 and a1-a5 along axis 2.

#include <string>
#include <vector>

#include "cordial/compose.hpp"
#include "cordial/core.hpp"
#include "cordial/search.hpp"

namespace cordial::fixtures {

/// Labeled cubes "C1", "C2", "C3" (also "C"), "A", "B".
LabeledCube cube(const std::string& name);
std::vector<std::string> cube_names();

/// The oriented cube V (no labeling): ids 0..7 are s1, b3, s3, v1, b1, v2, s2, b2.
OrientedHypercube cube_v();

/// "AB", "AC", "BC" between the named cubes, plus a generic "identity".
BijectionTable bijections();

/// The six cubes ~A, A, ~B, B, ~C, C in table order.
std::vector<TableCube> phi_table_cubes();

/// Reference phi values for phi_table_cubes(), upper triangle mirrored.
std::vector<std::vector<std::size_t>> reference_phi_table();

/// "fig5_4D", "fig7a_4D", "fig7b_4D", "fig8a_6D", "fig8b_6D", "fig9_7D".
/// Slot cubes that are themselves arrangements are assembled and balanced.
CubeArrangement arrangement(const std::string& name);
std::vector<std::string> arrangement_names();

/// "X6", "X7".
UndirectedGraph graph(const std::string& name);
std::vector<std::string> graph_names();

}  // namespace cordial::fixtures
