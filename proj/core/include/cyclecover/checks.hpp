#pragma once

#include <string>
#include <vector>

#include "cyclecover/cover.hpp"

namespace cyclecover {

enum class Verdict { pass, fail, budget };

// A fail verdict always carries replayable witnesses (text describing the
// exact solution element that broke the claim).
struct CheckReport {
    std::string name;
    std::string scope;  // "solution" / "graph" / "corpus"
    Verdict verdict = Verdict::pass;
    std::vector<std::string> witnesses;
    std::vector<std::string> notes;

    bool passed() const { return verdict == Verdict::pass; }
};

// All reorientations of the cover (circuit flips keeping the 2+2 balance)
// leave the parity of the ordered-vertex count unchanged, and the global
// reversal reproduces the classification exactly.
CheckReport check_reorientation_parity(const OrientedCycleCover& ocover);

// No solution has exactly one ordered vertex. Also replays the argument:
// the 20 cycle triples form 10 complementary pairs of nz2 even cycles, every
// vertex is missed by exactly 4 triples, and each even cycle carries an even
// number of ordered vertices.
CheckReport check_ordered_ne_one(
    const std::vector<OrientedCycleCover>& solutions);

// For an all-disordered o6c4c the number of rich edges has the same parity
// as the number of circuits. Throws GraphError if a vertex is ordered.
CheckReport check_euler_parity(const OrientedCycleCover& ocover);

// The four open parity conjectures, each evaluated only on the solutions
// where its hypothesis holds; failures collect witnesses and never abort.
//   1. all-disordered: every perfect matching has evenly many rich edges
//   2. splits into two 6cdcs: every nz2 even cycle has evenly many rich
//      edges; for oriented solutions also evenly many circuits / drd edges
//   3. all edges rich (snark): vertex count is 4k+2
//   4. splits or all-rich: ordered count has the parity of the surface
//      boundary count (both hypothesis scopes evaluated separately)
std::vector<CheckReport> check_conjectures(
    const std::vector<OrientedCycleCover>& corpus);

// 6-cover facts. For the Petersen graph: no 9c6c exists (direct search plus
// the perfect-matching counting argument), the ten 9-circuits form a valid
// 10c6c that admits no orientation. For other snarks: finds an o9c6c.
CheckReport check_six_covers(const CubicGraph& g,
                             long long node_budget = -1);

}  // namespace cyclecover
