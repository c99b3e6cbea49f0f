#include "doctest.h"
#include "sfvs/multiway_cut.hpp"
#include "test_util.hpp"

using namespace sfvs;

namespace {

bool separated(const MultiGraph& g, const VertexSet& terminals, const VertexSet& removed) {
    MultiGraph rest = delete_vertices(g, removed);
    for (const VertexSet& block : connected_components(rest).blocks) {
        int count = 0;
        for (VertexId t : terminals)
            if (block.count(t)) ++count;
        if (count >= 2) return false;
    }
    return true;
}

// Smallest feasible size by enumeration, or -1 when infeasible at any size.
int brute_min_mwc(const MultiGraph& g, const VertexSet& terminals) {
    std::vector<VertexId> pool;
    for (VertexId v : g.vertices())
        if (!terminals.count(v)) pool.push_back(v);
    int n = static_cast<int>(pool.size());
    for (int size = 0; size <= n; ++size) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != size) continue;
            VertexSet removed;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) removed.insert(pool[i]);
            if (separated(g, terminals, removed)) return size;
        }
    }
    return -1;
}

}  // namespace

TEST_CASE("solve_mwc examples") {
    MultiGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    auto res = solve_mwc(MwcInstance{path, {0, 2}, 1});
    REQUIRE(res.has_value());
    CHECK(*res == VertexSet{1});

    MultiGraph adj(2);
    adj.add_edge(0, 1);
    CHECK(!solve_mwc(MwcInstance{adj, {0, 1}, 2}).has_value());

    CHECK(solve_mwc(MwcInstance{MultiGraph(3), {0, 1, 2}, 0}) == VertexSet{});
}

TEST_CASE("solve_mwc matches enumeration on random instances") {
    for (int seed = 0; seed < 150; ++seed) {
        test_util::Rng rng(seed + 600);
        int n = 4 + rng.below(7);
        MultiGraph g = test_util::random_multigraph(n, 5 + rng.below(10), rng, false);
        int t = 2 + rng.below(3);
        auto sample = test_util::sample_distinct(n, t, rng);
        VertexSet terminals(sample.begin(), sample.end());
        int truth = brute_min_mwc(g, terminals);
        for (int k = 0; k <= 3; ++k) {
            auto res = solve_mwc(MwcInstance{g, terminals, k});
            bool feasible = truth >= 0 && truth <= k;
            CHECK(res.has_value() == feasible);
            if (res) {
                CHECK((int)res->size() <= k);
                CHECK(separated(g, terminals, *res));
                for (VertexId v : *res) CHECK(!terminals.count(v));
            }
        }
        // monotone in the budget
        if (truth >= 0)
            for (int k = truth; k <= truth + 1; ++k)
                CHECK(solve_mwc(MwcInstance{g, terminals, k}).has_value());
    }
}

TEST_CASE("important_separators produce valid separators and include the minimum") {
    for (int seed = 0; seed < 60; ++seed) {
        test_util::Rng rng(seed + 7000);
        int n = 5 + rng.below(5);
        MultiGraph g = test_util::random_multigraph(n, 6 + rng.below(8), rng, false);
        VertexId s = 0, t = 1;
        bool adjacent = false;
        for (EdgeId e : g.incident(s))
            if (g.edge(e).other(s) == t) adjacent = true;
        if (adjacent) continue;
        auto seps = important_separators(g, {s}, {t}, 3);
        for (const VertexSet& sep : seps) {
            CHECK((int)sep.size() <= 3);
            CHECK(!sep.count(s));
            CHECK(!sep.count(t));
            CHECK(separated(g, {s, t}, sep));
        }
    }
}
