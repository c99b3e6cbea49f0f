#pragma once

#include "sfvs/instance.hpp"

namespace sfvs {

/// Instance paired with a known feasible solution z of budget |z|; the
/// engine looks for a budget-k solution avoiding z. The z-invariant is
/// validated on construction and re-validated between rewrites.
struct DisjointInstance {
    EsfvsInstance instance;
    VertexSet z;
};

DisjointInstance make_disjoint_instance(EsfvsInstance instance, VertexSet z);

enum class BubbleClass { solitary, leaf, edge, inner };

/// Components of the graph minus z after removing the S-bridges between
/// them, plus the forest they span (one edge per inter-bubble S-edge) and
/// the degree classification.
struct BubbleDecomposition {
    std::vector<VertexSet> bubbles;
    std::vector<std::pair<int, int>> forest_edges;  // bubble index pairs
    std::vector<EdgeId> forest_edge_ids;            // the S-edge behind each
    std::vector<BubbleClass> classes;
    std::vector<int> degree;  // in the bubble forest

    int bubble_count() const { return static_cast<int>(bubbles.size()); }
};

BubbleDecomposition bubble_decompose(const MultiGraph& g, const VertexSet& z);

struct ReductionResult {
    bool ignore = false;
    DisjointInstance instance;  // meaningful when !ignore
    VertexSet removed;          // deleted into the solution, one k per vertex
};

/// Rewrites the instance with the lowest-numbered applicable rule until
/// none applies, or decides the branch can be discarded. On success the
/// surviving S-edge count obeys the closed-form k'|Z'|^2 bound asserted
/// inside.
ReductionResult reduce(const DisjointInstance& d);

// --- individual rules, exposed for direct testing ------------------------

enum class RuleStatus { not_applicable, changed, ignore };

struct RState {
    MultiGraph g;
    int k = 0;
    VertexSet z;
    VertexSet removed;
};

/// Strips bridges and S-free components to a fixpoint.
RuleStatus remove_bridges_rule(RState& st);

struct OuterAbundantOutcome {
    bool infeasible = false;  // a (k+1)-flower certifies no solution avoids f
    VertexSet x;              // otherwise: greedy-safe deletion set outside f
};

/// Works on a connected, internally S-free set f with >= 10k incident
/// S-edges: single-vertex shortcut, disjoint important cycles through f via
/// terminal contraction and A-path packing, then a 2-expansion against the
/// tough components hanging off the blocker.
OuterAbundantOutcome outer_abundant_step(const MultiGraph& g, int k, const VertexSet& f);

/// Applies the outer-abundant step to a z-vertex carrying >= 10k S-edges.
RuleStatus high_degree_rule(RState& st);

/// Replaces a bubble with exactly two outgoing edges by a single edge,
/// resolving loops and parallel bundles immediately.
RuleStatus two_edge_bubble_rule(RState& st, const BubbleDecomposition& decomp);

/// Discards the branch when edge bubbles outnumber 3(|Z|+k) + |D_i| + |D_l|.
RuleStatus edge_bubble_count_rule(const RState& st, const BubbleDecomposition& decomp);

/// Adds a non-S edge between z-vertices sharing k+1 bubbles attached to
/// both by non-S edges; feasible solutions are unchanged.
RuleStatus saturate_clique_edges_step(RState& st, const BubbleDecomposition& decomp);

/// Threshold counts over leaf bubbles: S-edge to z, S-edge between the
/// associated pair, and bubble-bars.
RuleStatus leaf_threshold_step(const RState& st, const BubbleDecomposition& decomp);

/// Clique-bubble fan: a z-vertex adjacent to >= 10k clique bubbles feeds the
/// outer-abundant step.
RuleStatus clique_bubble_step(RState& st, const BubbleDecomposition& decomp);

/// Closed-form ceiling for surviving S-edges, asserted on every Reduced
/// result.
long long reduced_s_bound(int k, int z_size);

}  // namespace sfvs
