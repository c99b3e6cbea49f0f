#pragma once

#include <optional>
#include <vector>

#include "sfvs/graph.hpp"

namespace sfvs {

struct MwcInstance {
    MultiGraph graph;
    VertexSet terminals;
    int k = 0;
};

/// Candidate separators that an optimal terminal-separating deletion set may
/// use: all important (x,y)-separators of size <= k, plus possibly a few
/// extra valid separators picked up by the branching. Each returned set
/// avoids x and y, has size <= k, and separates them. Sorted by size, then
/// lexicographically. Exposed for testing.
std::vector<VertexSet> important_separators(const MultiGraph& g, const VertexSet& x,
                                            const VertexSet& y, int k);

/// Exact terminal separation: a set of at most k non-terminals whose removal
/// leaves every terminal in its own component, or nullopt when none exists.
/// Bounded-depth branching over important separators toward one terminal.
std::optional<VertexSet> solve_mwc(const MwcInstance& inst);

}  // namespace sfvs
