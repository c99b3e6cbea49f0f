#include "sfvs/solver.hpp"

#include <algorithm>

#include "sfvs/oracle.hpp"
#include "sfvs/reduction.hpp"

namespace sfvs {

namespace {

std::optional<SearchLimits> make_limits(const SolveOptions& options) {
    if (!options.timeout_seconds) return std::nullopt;
    SearchLimits limits;
    limits.deadline = std::chrono::steady_clock::now() +
                      std::chrono::microseconds(
                          static_cast<long long>(*options.timeout_seconds * 1e6));
    return limits;
}

// Induced instance on a vertex subset; budget clamped to the subset size.
EsfvsInstance induced_instance(const EsfvsInstance& inst, const VertexSet& keep) {
    VertexSet drop;
    for (VertexId v : inst.graph.vertices())
        if (!keep.count(v)) drop.insert(v);
    return EsfvsInstance{delete_vertices(inst.graph, drop),
                         std::min<int>(inst.k, static_cast<int>(keep.size()))};
}

// Subsets of z, largest first, lexicographic within a size.
std::vector<VertexSet> guess_order(const VertexSet& z) {
    std::vector<VertexId> zs(z.begin(), z.end());
    int n = static_cast<int>(zs.size());
    std::vector<VertexSet> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        VertexSet sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.insert(zs[i]);
        out.push_back(std::move(sub));
    }
    std::stable_sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.size() > b.size();
    });
    return out;
}

std::optional<VertexSet> compress_step(const EsfvsInstance& inst, const VertexSet& z_full,
                                       SearchStats* stats, const SearchLimits* limits) {
    for (const VertexSet& taken : guess_order(z_full)) {
        if (limits) limits->poll();
        if (stats) ++stats->compression_branches;
        int k_branch = inst.k - static_cast<int>(taken.size());
        if (k_branch < 0) continue;

        EsfvsInstance branch{delete_vertices(inst.graph, taken), k_branch};
        VertexSet z_rest;
        for (VertexId v : z_full)
            if (!taken.count(v)) z_rest.insert(v);

        if (stats) ++stats->reduce_calls;
        ReductionResult red = reduce(make_disjoint_instance(branch, z_rest));
        if (red.ignore) {
            if (stats) ++stats->reduce_ignores;
            continue;
        }
        auto core = solve_by_s(red.instance.instance, stats, limits);
        if (!core) continue;

        VertexSet witness = *core;
        witness.insert(red.removed.begin(), red.removed.end());
        witness.insert(taken.begin(), taken.end());
        check(is_solution(inst, witness), "compress_step: assembled witness fails verification");
        return witness;
    }
    return std::nullopt;
}

}  // namespace

std::optional<VertexSet> solve(const EsfvsInstance& inst, const SolveOptions& options,
                               SearchStats* stats) {
    auto limits_holder = make_limits(options);
    const SearchLimits* limits = limits_holder ? &*limits_holder : nullptr;

    if (is_solution(inst, {})) return VertexSet{};
    if (inst.k <= 0) return std::nullopt;

    // one endpoint per S-edge always works; cheap exit for generous budgets
    VertexSet cover;
    for (EdgeId e : inst.s_edges()) {
        const EdgeRec& rec = inst.graph.edge(e);
        cover.insert(std::min(rec.u, rec.v));
    }
    if (static_cast<int>(cover.size()) <= inst.k) {
        check(is_solution(inst, cover), "solve: endpoint cover fails verification");
        return cover;
    }

    if (options.by_s_only) return solve_by_s(inst, stats, limits);

    std::vector<VertexId> order = inst.graph.vertices();
    if (options.permute_seed) {
        std::uint64_t state = *options.permute_seed + 0x9e3779b97f4a7c15ULL;
        auto next = [&state]() {
            std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        };
        for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
            std::swap(order[i], order[next() % (i + 1)]);
    }

    VertexSet prefix;
    VertexSet current;  // solution for the instance induced on prefix
    for (VertexId v : order) {
        if (limits) limits->poll();
        prefix.insert(v);
        if (stats) ++stats->compression_steps;
        EsfvsInstance sub = induced_instance(inst, prefix);

        // the previous solution often still works, with or without v
        if (is_solution(sub, current)) continue;
        VertexSet grown = current;
        grown.insert(v);
        if (static_cast<int>(grown.size()) <= sub.k && is_solution(sub, grown)) {
            current = std::move(grown);
            continue;
        }

        auto compressed = compress_step(sub, grown, stats, limits);
        if (!compressed) return std::nullopt;  // a prefix failure is final
        current = std::move(*compressed);
    }
    check(is_solution(inst, current), "solve: final witness fails verification");
    return current;
}

VertexSet extract_witness(const EsfvsInstance& inst, const SolveOptions& options) {
    require(solve(inst, options).has_value(), "extract_witness: instance has no solution");
    EsfvsInstance cur = inst;
    VertexSet witness;
    while (!is_solution(cur, {})) {
        bool advanced = false;
        for (VertexId v : cur.graph.vertices()) {
            EsfvsInstance next{delete_vertices(cur.graph, {v}), cur.k - 1};
            if (next.k >= 0 && solve(next, options)) {
                witness.insert(v);
                cur = std::move(next);
                advanced = true;
                break;
            }
        }
        check(advanced, "extract_witness: no vertex keeps the decision positive");
    }
    check(is_solution(inst, witness), "extract_witness: witness fails verification");
    return witness;
}

}  // namespace sfvs
