#pragma once

#include <string>
#include <vector>

#include "cyclecover/graph.hpp"

namespace cyclecover {

// Isaacs flower snark J_m for odd m >= 3. Vertices are grouped by type:
// a_i = i, b_i = m+i, c_i = 2m+i, d_i = 3m+i; edges a_i b_i, b_i c_i,
// b_i d_i, a_i a_{i+1}, c_i d_{i+1}, d_i c_{i+1}, indices mod m.
CubicGraph gen_flower_snark(int m);

// Fixed labeled fixtures: petersen, blanusa1, blanusa2, tietze (= J3),
// prism, k4, k33. Throws GraphError for unknown names.
CubicGraph gen_named(const std::string& name);

std::vector<std::string> gen_named_list();

// Parse an adjacency-list fixture file, one "u v" pair per line, 0-based.
CubicGraph read_adjacency_list(const std::string& path, int n = -1);

}  // namespace cyclecover
