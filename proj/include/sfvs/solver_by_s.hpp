#pragma once

#include <chrono>
#include <functional>
#include <optional>

#include "sfvs/instance.hpp"

namespace sfvs {

struct SearchLimits {
    std::optional<std::chrono::steady_clock::time_point> deadline;

    void poll() const {
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            throw timeout_error("search deadline exceeded");
    }
};

struct SearchStats {
    long long phase1_nodes = 0;
    long long max_phase1_branches = 0;     // branches emitted by a single node
    long long phase2_calls = 0;
    long long max_phase2_partitions = 0;   // partitions emitted by a single call
    long long phase3_calls = 0;
    long long mwc_calls = 0;
    long long compression_steps = 0;
    long long compression_branches = 0;
    long long reduce_calls = 0;
    long long reduce_ignores = 0;
    // bounds the counters are audited against (filled per solve_by_s entry)
    long long phase1_branch_bound = 0;
    long long phase2_partition_bound = 0;
};

/// Forest snapshot used between the branching phases. Edges of the forest
/// may stand for suppressed paths of the original spanning forest.
struct Forest {
    VertexSet vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;  // normalized u < v, sorted
};

/// Spanning forest of the S-free graph minus r, with (optionally) non-u
/// leaves dropped and non-u degree-2 vertices suppressed. After suppression
/// every vertex of degree <= 2 lies in u, so |vertices| <= 2|u|.
Forest phase1_forest(const MultiGraph& g, const VertexSet& r, const VertexSet& u, bool prune);

/// Streams every choice of <= k_rem forest edges together with every
/// partition of u that refines the forest components and coarsens the
/// components left after removing the chosen edges. Stops early when the
/// callback returns false. Returns the number of partitions emitted.
long long phase2_partitions(
    const Forest& forest, const VertexSet& u, int k_rem,
    const std::function<bool(const VertexSetPartition&,
                             const std::vector<std::pair<VertexId, VertexId>>&)>& emit);

/// Bridge test on the block multigraph followed by terminal separation with
/// one hub per block. Returns the extra deletion set Q on success.
std::optional<VertexSet> phase3_check(const EsfvsInstance& inst, const VertexSet& r,
                                      const VertexSetPartition& partition, int k_rem,
                                      SearchStats* stats);

/// Exact solver, branching over forest structure and endpoint partitions.
/// Every YES witness is re-verified before being returned.
std::optional<VertexSet> solve_by_s(const EsfvsInstance& inst, SearchStats* stats = nullptr,
                                    const SearchLimits* limits = nullptr);

}  // namespace sfvs
