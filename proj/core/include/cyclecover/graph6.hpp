#pragma once

#include <string>
#include <vector>

#include "cyclecover/graph.hpp"

namespace cyclecover {

// graph6 format per the published specification: ASCII, 63-offset 6-bit
// groups, upper-triangle bits in column order (0,1),(0,2),(1,2),(0,3),...
// Only graphs that decode to cubic simple graphs are accepted.
CubicGraph graph6_decode(const std::string& line);

std::string graph6_encode(const CubicGraph& g);

// One graph per non-empty line; optional ">>graph6<<" header is skipped.
std::vector<CubicGraph> read_graph6_file(const std::string& path);

}  // namespace cyclecover
