#include "sfvs/solver_by_s.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "sfvs/multiway_cut.hpp"
#include "sfvs/oracle.hpp"

namespace sfvs {

namespace {

std::map<VertexId, std::vector<VertexId>> forest_adjacency(const Forest& f) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (VertexId v : f.vertices) adj[v];
    for (auto [u, v] : f.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

}  // namespace

Forest phase1_forest(const MultiGraph& g, const VertexSet& r, const VertexSet& u, bool prune) {
    MultiGraph base = delete_vertices(drop_s_edges(g), r);
    EdgeSet forest_edges = spanning_forest(base);

    Forest f;
    f.vertices = base.vertex_set();
    for (EdgeId e : forest_edges) {
        const EdgeRec& rec = base.edge(e);
        f.edges.emplace_back(std::min(rec.u, rec.v), std::max(rec.u, rec.v));
    }
    std::sort(f.edges.begin(), f.edges.end());
    if (!prune) return f;

    auto adj = forest_adjacency(f);
    auto drop_edge = [&](VertexId a, VertexId b) {
        auto& la = adj[a];
        la.erase(std::find(la.begin(), la.end(), b));
        auto& lb = adj[b];
        lb.erase(std::find(lb.begin(), lb.end(), a));
    };

    // drop non-u leaves and isolated vertices until none remain
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = f.vertices.begin(); it != f.vertices.end();) {
            VertexId v = *it;
            if (!u.count(v) && adj[v].size() <= 1) {
                if (adj[v].size() == 1) drop_edge(v, adj[v].front());
                adj.erase(v);
                it = f.vertices.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }
    // suppress non-u degree-2 vertices, joining their neighbours
    changed = true;
    while (changed) {
        changed = false;
        for (auto it = f.vertices.begin(); it != f.vertices.end();) {
            VertexId v = *it;
            if (!u.count(v) && adj[v].size() == 2) {
                VertexId a = adj[v][0], b = adj[v][1];
                drop_edge(v, a);
                drop_edge(v, b);
                adj[a].push_back(b);
                adj[b].push_back(a);
                adj.erase(v);
                it = f.vertices.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }

    f.edges.clear();
    for (const auto& [v, nbrs] : adj)
        for (VertexId w : nbrs)
            if (v < w) f.edges.emplace_back(v, w);
    std::sort(f.edges.begin(), f.edges.end());

    for (VertexId v : f.vertices)
        check(u.count(v) || adj[v].size() >= 3, "phase1_forest: low-degree vertex outside u");
    return f;
}

namespace {

// Partition of u by forest components, skipping u-free components.
// Returns block index per u-vertex plus the list of blocks.
struct UPartition {
    std::map<VertexId, int> block_of;
    std::vector<VertexSet> blocks;
};

UPartition u_partition(const Forest& f, const VertexSet& u,
                       const std::vector<std::pair<VertexId, VertexId>>& removed) {
    std::map<VertexId, int> comp;
    std::map<VertexId, std::vector<VertexId>> adj;
    for (VertexId v : f.vertices) adj[v];
    std::set<std::pair<VertexId, VertexId>> removed_set(removed.begin(), removed.end());
    for (auto [a, b] : f.edges) {
        if (removed_set.count({a, b})) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    int ncomp = 0;
    for (VertexId start : f.vertices) {
        if (comp.count(start)) continue;
        std::vector<VertexId> stack{start};
        comp[start] = ncomp;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : adj[v])
                if (!comp.count(w)) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    UPartition out;
    std::map<int, int> block_index;
    for (VertexId v : u) {
        check(comp.count(v) > 0, "u_partition: u vertex missing from forest");
        int c = comp[v];
        auto [it, fresh] = block_index.try_emplace(c, static_cast<int>(out.blocks.size()));
        if (fresh) out.blocks.emplace_back();
        out.blocks[it->second].insert(v);
        out.block_of[v] = it->second;
    }
    return out;
}

// Enumerates set partitions of {0..m-1} as restricted growth strings.
void all_set_partitions(int m, const std::function<bool(const std::vector<int>&)>& emit,
                        bool& keep_going) {
    std::vector<int> rgs(m, 0);
    if (m == 0) {
        keep_going = emit(rgs);
        return;
    }
    while (keep_going) {
        if (!emit(rgs)) {
            keep_going = false;
            return;
        }
        int i = m - 1;
        while (i > 0) {
            int maxp = 0;
            for (int j = 0; j < i; ++j) maxp = std::max(maxp, rgs[j]);
            if (rgs[i] <= maxp) break;
            --i;
        }
        if (i == 0) return;
        ++rgs[i];
        for (int j = i + 1; j < m; ++j) rgs[j] = 0;
    }
}

}  // namespace

long long phase2_partitions(
    const Forest& forest, const VertexSet& u, int k_rem,
    const std::function<bool(const VertexSetPartition&,
                             const std::vector<std::pair<VertexId, VertexId>>&)>& emit) {
    UPartition coarse = u_partition(forest, u, {});
    long long emitted = 0;
    int m = static_cast<int>(forest.edges.size());
    int max_pick = std::max(0, std::min(k_rem, m));
    bool keep_going = true;

    auto emit_for_pick = [&](const std::vector<int>& pick) {
        std::vector<std::pair<VertexId, VertexId>> removed;
        for (int idx : pick) removed.push_back(forest.edges[idx]);
        UPartition fine = u_partition(forest, u, removed);

        // fine blocks grouped by the coarse block containing them
        std::vector<std::vector<int>> fine_in_coarse(coarse.blocks.size());
        for (size_t fb = 0; fb < fine.blocks.size(); ++fb) {
            VertexId repr = *fine.blocks[fb].begin();
            fine_in_coarse[coarse.block_of.at(repr)].push_back(static_cast<int>(fb));
        }

        // per coarse block every way of merging its fine blocks, then the
        // cartesian product across coarse blocks
        std::vector<std::vector<std::vector<VertexSet>>> options(coarse.blocks.size());
        for (size_t b = 0; b < fine_in_coarse.size(); ++b) {
            const auto& fbs = fine_in_coarse[b];
            bool inner = true;
            all_set_partitions(
                static_cast<int>(fbs.size()),
                [&](const std::vector<int>& rgs) {
                    int ngroups =
                        fbs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
                    std::vector<VertexSet> groups(ngroups);
                    for (size_t i = 0; i < fbs.size(); ++i)
                        groups[rgs[i]].insert(fine.blocks[fbs[i]].begin(),
                                              fine.blocks[fbs[i]].end());
                    options[b].push_back(std::move(groups));
                    return true;
                },
                inner);
        }

        std::vector<size_t> cursor(options.size(), 0);
        while (keep_going) {
            VertexSetPartition partition;
            for (size_t b = 0; b < options.size(); ++b)
                for (const VertexSet& grp : options[b][cursor[b]])
                    partition.blocks.push_back(grp);
            ++emitted;
            if (!emit(partition, removed)) {
                keep_going = false;
                return;
            }
            size_t b = 0;
            while (b < options.size() && ++cursor[b] == options[b].size()) {
                cursor[b] = 0;
                ++b;
            }
            if (b == options.size()) return;
        }
    };

    // edge subsets in ascending size, lexicographic within a size
    std::vector<int> pick;
    std::function<void(int, int)> enumerate = [&](int from, int left) {
        if (!keep_going) return;
        if (left == 0) {
            emit_for_pick(pick);
            return;
        }
        for (int idx = from; idx + left <= m; ++idx) {
            pick.push_back(idx);
            enumerate(idx + 1, left - 1);
            pick.pop_back();
            if (!keep_going) return;
        }
    };
    for (int size = 0; size <= max_pick && keep_going; ++size) enumerate(0, size);
    return emitted;
}

std::optional<VertexSet> phase3_check(const EsfvsInstance& inst, const VertexSet& r,
                                      const VertexSetPartition& partition, int k_rem,
                                      SearchStats* stats) {
    if (stats) ++stats->phase3_calls;
    std::map<VertexId, int> block_of;
    for (size_t b = 0; b < partition.blocks.size(); ++b)
        for (VertexId v : partition.blocks[b]) block_of[v] = static_cast<int>(b);

    // block multigraph: one node per block, one edge per surviving S-edge
    MultiGraph block_graph(static_cast<int>(partition.blocks.size()));
    for (const EdgeRec& rec : inst.graph.edges()) {
        if (!rec.in_s) continue;
        if (r.count(rec.u) || r.count(rec.v)) continue;
        auto iu = block_of.find(rec.u), iv = block_of.find(rec.v);
        check(iu != block_of.end() && iv != block_of.end(),
              "phase3_check: S-endpoint outside the partition");
        block_graph.add_edge(iu->second, iv->second, false);
    }
    EdgeSet ok = bridges(block_graph);
    for (const EdgeRec& rec : block_graph.edges())
        if (rec.is_loop() || !ok.count(rec.id)) return std::nullopt;

    // attach one hub per block and separate the hubs
    MultiGraph augmented = inst.graph;
    VertexSet hubs;
    for (const VertexSet& block : partition.blocks) {
        VertexId w = augmented.add_vertex();
        hubs.insert(w);
        for (VertexId v : block) augmented.add_edge(w, v, false);
    }
    MultiGraph arena = delete_vertices(drop_s_edges(augmented), r);
    if (stats) ++stats->mwc_calls;
    return solve_mwc(MwcInstance{arena, hubs, k_rem});
}

namespace {

struct ByS {
    const EsfvsInstance& inst;
    VertexSet vs;  // endpoints of S-edges
    long long branch_bound;     // 2|V(S)| + 1 per node
    long long partition_bound;  // (2|V(S)|)^k (k+1)^(k+1) per phase-2 run
    SearchStats* stats;
    const SearchLimits* limits;

    std::optional<VertexSet> run(VertexSet r) {
        if (limits) limits->poll();
        if (stats) ++stats->phase1_nodes;
        int k = inst.k;
        VertexSet u;
        for (VertexId v : vs)
            if (!r.count(v)) u.insert(v);

        bool at_budget = static_cast<int>(r.size()) == k;
        Forest forest = phase1_forest(inst.graph, r, u, !at_budget);

        long long branches = 1 + (at_budget ? 0 : static_cast<long long>(forest.vertices.size()));
        check(branches <= branch_bound, "phase1 branch bound exceeded");
        if (stats) stats->max_phase1_branches = std::max(stats->max_phase1_branches, branches);

        auto res = enter_phase2(forest, u, r);
        if (res || at_budget) return res;

        for (VertexId f : forest.vertices) {
            VertexSet r2 = r;
            r2.insert(f);
            auto sub = run(std::move(r2));
            if (sub) return sub;
        }
        return std::nullopt;
    }

    std::optional<VertexSet> enter_phase2(const Forest& forest, const VertexSet& u,
                                          const VertexSet& r) {
        if (stats) ++stats->phase2_calls;
        int k_rem = inst.k - static_cast<int>(r.size());
        std::optional<VertexSet> found;
        long long emitted = phase2_partitions(
            forest, u, k_rem,
            [&](const VertexSetPartition& partition, const auto&) {
                if (limits) limits->poll();
                auto q = phase3_check(inst, r, partition, k_rem, stats);
                if (q) {
                    VertexSet full = r;
                    full.insert(q->begin(), q->end());
                    found = std::move(full);
                    return false;
                }
                return true;
            });
        check(emitted <= partition_bound, "phase2 partition bound exceeded");
        if (stats) stats->max_phase2_partitions = std::max(stats->max_phase2_partitions, emitted);
        return found;
    }
};

}  // namespace

std::optional<VertexSet> solve_by_s(const EsfvsInstance& inst, SearchStats* stats,
                                    const SearchLimits* limits) {
    if (inst.k < 0) return std::nullopt;

    EdgeSet s = inst.s_edges();
    if (s.empty()) return VertexSet{};

    // one endpoint per S-edge is always feasible; covers k >= |S| and
    // k >= |V(S)| alike
    VertexSet cover;
    for (EdgeId e : s) {
        const EdgeRec& rec = inst.graph.edge(e);
        cover.insert(std::min(rec.u, rec.v));
    }
    if (static_cast<int>(cover.size()) <= inst.k) {
        check(is_solution(inst, cover), "solve_by_s: cover fast path unsound");
        return cover;
    }

    ByS engine{inst, endpoints(inst.graph, s), 0, 0, stats, limits};
    long long two_vs = 2 * static_cast<long long>(engine.vs.size());
    engine.branch_bound = two_vs + 1;
    long double pb = std::pow((long double)two_vs, (long double)inst.k) *
                     std::pow((long double)(inst.k + 1), (long double)(inst.k + 1));
    engine.partition_bound =
        pb > 4e18L ? std::numeric_limits<long long>::max() : static_cast<long long>(pb) + 1;
    if (stats) {
        stats->phase1_branch_bound = std::max(stats->phase1_branch_bound, engine.branch_bound);
        stats->phase2_partition_bound =
            std::max(stats->phase2_partition_bound, engine.partition_bound);
    }
    auto res = engine.run({});
    if (res) check(is_solution(inst, *res), "solve_by_s: witness fails verification");
    return res;
}

}  // namespace sfvs
