#pragma once

#include <optional>

#include "sfvs/instance.hpp"

namespace sfvs {

/// True iff |t| <= k and no simple cycle of graph minus t contains an S-edge.
/// Feasibility is decided through the bridge criterion: every surviving
/// S-edge must be a bridge (an S-loop is an S-cycle, a parallel S-edge never
/// is a bridge).
bool is_solution(const EsfvsInstance& inst, const VertexSet& t);

/// Ground-truth solver: enumerates vertex subsets in non-decreasing size,
/// lexicographic within a size, and returns the first feasible set. Intended
/// for |V| <= ~20 with small k; deliberately free of pruning.
std::optional<VertexSet> brute_force(const EsfvsInstance& inst);

}  // namespace sfvs
