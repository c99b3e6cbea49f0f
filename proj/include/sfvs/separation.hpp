#pragma once

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "sfvs/graph.hpp"

namespace sfvs {

struct PathPacking {
    std::vector<std::vector<VertexId>> paths;
};

using BipartiteEdges = std::vector<std::pair<int, int>>;

/// Maximum matching in a bipartite graph given as an explicit edge relation
/// between two label sets. Alternating-path augmentation.
std::vector<std::pair<int, int>> max_bipartite_matching(const std::vector<int>& left,
                                                        const std::vector<int>& right,
                                                        const BipartiteEdges& edges);

struct VertexCut {
    VertexSet vertices;  // excludes s and t
};

/// Either k+1 internally vertex-disjoint s-t paths or a vertex cut of size
/// <= k. Unit-vertex-capacity flow with at most k+1 augmentations. When s
/// and t are adjacent no cut exists past that edge; if the paths cannot be
/// produced either, the pair is uncuttable and an internal error is raised
/// (callers here never construct that situation).
std::variant<PathPacking, VertexCut> menger_vertex(const MultiGraph& g, VertexId s, VertexId t,
                                                   int k);

struct PathBlocker {
    VertexSet vertices;
};

/// A-path machinery: an A-path has two distinct endpoints in a and internal
/// vertices outside a. Returns either k+1 pairwise vertex-disjoint A-paths
/// or a blocker of size <= 2k whose removal leaves no A-path. Reduction to
/// maximum matching in the auxiliary graph that splits every non-A vertex
/// into an adjacent copy pair; the blocker is read off the structure of
/// vertices missed by some maximum matching.
std::variant<PathPacking, PathBlocker> gallai_packing_or_blocker(const MultiGraph& g,
                                                                 const VertexSet& a, int k);

struct ExpansionResult {
    std::vector<int> x_prime;
    std::vector<int> y_prime;
    std::map<int, std::pair<int, int>> assignment;  // x -> two private y's
};

/// 2-expansion: requires |ys| >= 2|xs|, xs nonempty, and every y with a
/// neighbour in xs. Produces nonempty X' and Y' with N(Y') inside X' and two
/// private Y'-neighbours per member of X'.
ExpansionResult two_expansion(const std::vector<int>& xs, const std::vector<int>& ys,
                              const BipartiteEdges& edges);

}  // namespace sfvs
