// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <vector>

#include "sfvs/multiway_cut.hpp"
#include "sfvs/oracle.hpp"
#include "sfvs/reduction.hpp"
#include "sfvs/separation.hpp"
#include "sfvs/solver.hpp"

using namespace sfvs;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed * 2654435761u + 1) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

EsfvsInstance random_instance(Rng& rng) {
    int n = 3 + rng.below(6);                               // n <= 8
    int max_m = std::min(16, n * (n - 1) / 2);
    int m = rng.below(max_m + 1);
    int s = std::min({m, 6, rng.below(7)});
    int k = rng.below(4);
    return gen_random(n, m, s, k, rng.next());
}

std::vector<VertexSet> all_solutions(const EsfvsInstance& inst) {
    std::vector<VertexId> verts = inst.graph.vertices();
    int n = static_cast<int>(verts.size());
    std::vector<VertexSet> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) > inst.k) continue;
        VertexSet t;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) t.insert(verts[i]);
        if (is_solution(inst, t)) out.push_back(std::move(t));
    }
    return out;
}

// --- criterion 1 ----------------------------------------------------------

void criterion1() {
    int mismatched = 0, bad_witness = 0, yes = 0;
    for (int seed = 0; seed < 500; ++seed) {
        Rng rng(seed + 10);
        EsfvsInstance inst = random_instance(rng);
        auto truth = brute_force(inst);
        auto mine = solve(inst);
        if (truth.has_value() != mine.has_value()) ++mismatched;
        if (mine) {
            ++yes;
            if (!is_solution(inst, *mine)) ++bad_witness;
        }
    }
    report(1, "solve matches brute_force on 500 seeded instances", mismatched == 0 && bad_witness == 0,
           "mismatches=" + std::to_string(mismatched) + " bad_witnesses=" +
               std::to_string(bad_witness) + " yes=" + std::to_string(yes));
}

// --- criterion 2 ----------------------------------------------------------

// An S-vertex sits on a simple cycle iff it carries a loop, a parallel
// bundle, or two incident edges whose far endpoints stay connected without
// it. Polynomial and independent of the bridge-based feasibility check.
bool sfvs_has_bad_cycle(const MultiGraph& g, const VertexSet& s) {
    for (VertexId x : s) {
        if (!g.has_vertex(x)) continue;
        const auto& inc = g.incident(x);
        for (EdgeId e : inc)
            if (g.edge(e).is_loop()) return true;
        MultiGraph rest = delete_vertices(g, {x});
        std::map<VertexId, int> comp;
        int nc = 0;
        for (const VertexSet& block : connected_components(rest).blocks) {
            for (VertexId v : block) comp[v] = nc;
            ++nc;
        }
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j) {
                VertexId u = g.edge(inc[i]).other(x);
                VertexId w = g.edge(inc[j]).other(x);
                if (u == w || comp[u] == comp[w]) return true;
            }
    }
    return false;
}

bool sfvs_brute(const SfvsInstance& inst) {
    std::vector<VertexId> verts = inst.graph.vertices();
    int n = static_cast<int>(verts.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) > inst.k) continue;
        VertexSet t;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) t.insert(verts[i]);
        VertexSet s_left;
        for (VertexId v : inst.s_vertices)
            if (!t.count(v)) s_left.insert(v);
        if (!sfvs_has_bad_cycle(delete_vertices(inst.graph, t), s_left)) return true;
    }
    return false;
}

// deletable = any vertex may go, surviving terminals must separate; that is
// the form the clique construction is equivalent to. strict = non-terminals
// only, the contract of the solver module.
bool multiway_brute(const MultiGraph& g, const VertexSet& terminals, int k, bool deletable) {
    std::vector<VertexId> pool;
    for (VertexId v : g.vertices())
        if (deletable || !terminals.count(v)) pool.push_back(v);
    int n = static_cast<int>(pool.size());
    auto separated = [&](const VertexSet& removed) {
        MultiGraph rest = delete_vertices(g, removed);
        for (const VertexSet& block : connected_components(rest).blocks) {
            int cnt = 0;
            for (VertexId t : terminals)
                if (block.count(t) && !removed.count(t)) ++cnt;
            if (cnt >= 2) return false;
        }
        return true;
    };
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) > k) continue;
        VertexSet removed;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) removed.insert(pool[i]);
        if (separated(removed)) return true;
    }
    return false;
}

void criterion2() {
    int bad_edge_to_vertex = 0, bad_vertex_to_edge = 0, bad_multiway = 0;
    for (int seed = 0; seed < 200; ++seed) {
        Rng rng(seed + 9000);
        // edge -> vertex
        EsfvsInstance inst = random_instance(rng);
        bool base = brute_force(inst).has_value();
        if (sfvs_brute(esfvs_to_sfvs(inst).instance) != base) ++bad_edge_to_vertex;

        // vertex -> edge
        int n = 3 + rng.below(6);
        MultiGraph g = gen_random(n, rng.below(std::min(16, n * (n - 1) / 2) + 1), 0, 0,
                                  rng.next())
                           .graph;
        VertexSet sv;
        for (VertexId v : g.vertices())
            if (rng.below(3) == 0) sv.insert(v);
        SfvsInstance vinst{g, sv, rng.below(4) > n ? n : rng.below(std::min(4, n + 1))};
        if (brute_force(sfvs_to_esfvs(vinst)).has_value() != sfvs_brute(vinst))
            ++bad_vertex_to_edge;

        // terminal separation -> edge variant
        int tn = 4 + rng.below(5);
        MultiGraph tg =
            gen_random(tn, rng.below(std::min(14, tn * (tn - 1) / 2) + 1), 0, 0, rng.next()).graph;
        int tcount = 2 + rng.below(2);
        std::vector<VertexId> terminals;
        for (VertexId v : tg.vertices()) {
            if ((int)terminals.size() < tcount) terminals.push_back(v);
        }
        int k = rng.below(3);
        bool expect = multiway_brute(tg, VertexSet(terminals.begin(), terminals.end()), k, true);
        if (brute_force(multiway_to_esfvs(tg, terminals, k)).has_value() != expect)
            ++bad_multiway;
    }
    report(2, "conversions preserve oracle answers on 200 instances each",
           bad_edge_to_vertex == 0 && bad_vertex_to_edge == 0 && bad_multiway == 0,
           "edge->vertex=" + std::to_string(bad_edge_to_vertex) + " vertex->edge=" +
               std::to_string(bad_vertex_to_edge) + " multiway=" + std::to_string(bad_multiway));
}

// --- criterion 3 ----------------------------------------------------------

int brute_min_vertex_cut(const MultiGraph& g, VertexId s, VertexId t) {
    std::vector<VertexId> pool;
    for (VertexId v : g.vertices())
        if (v != s && v != t) pool.push_back(v);
    int n = static_cast<int>(pool.size());
    auto separated = [&](const VertexSet& cut) {
        MultiGraph rest = delete_vertices(g, cut);
        for (const VertexSet& block : connected_components(rest).blocks)
            if (block.count(s) && block.count(t)) return false;
        return true;
    };
    for (int size = 0; size <= n; ++size)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != size) continue;
            VertexSet cut;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) cut.insert(pool[i]);
            if (separated(cut)) return size;
        }
    return n + 1;
}

int brute_max_packing(const MultiGraph& g, const VertexSet& a) {
    std::function<int(const MultiGraph&, const VertexSet&)> solve_rec =
        [&](const MultiGraph& cur, const VertexSet& acur) -> int {
        if (acur.size() < 2) return 0;
        VertexId first = *acur.begin();
        VertexSet arest = acur;
        arest.erase(first);
        int best = solve_rec(delete_vertices(cur, {first}), arest);
        VertexSet onpath{first};
        std::function<void(VertexId)> dfs = [&](VertexId v) {
            for (EdgeId e : cur.incident(v)) {
                const EdgeRec& rec = cur.edge(e);
                if (rec.is_loop()) continue;
                VertexId w = rec.other(v);
                if (onpath.count(w)) continue;
                if (acur.count(w)) {
                    VertexSet used = onpath;
                    used.insert(w);
                    VertexSet anext;
                    for (VertexId x : acur)
                        if (!used.count(x)) anext.insert(x);
                    best = std::max(best, 1 + solve_rec(delete_vertices(cur, used), anext));
                } else {
                    onpath.insert(w);
                    dfs(w);
                    onpath.erase(w);
                }
            }
        };
        dfs(first);
        return best;
    };
    return solve_rec(g, a);
}

void criterion3() {
    int menger_bad = 0;
    for (int seed = 0; seed < 200; ++seed) {
        Rng rng(seed + 300);
        int n = 4 + rng.below(9);  // n <= 12
        MultiGraph g = gen_random(n, rng.below(std::min(18, n * (n - 1) / 2) + 1), 0, 0,
                                  rng.next())
                           .graph;
        VertexId s = 0, t = 1;
        bool adjacent = false;
        for (EdgeId e : g.incident(s))
            if (g.edge(e).other(s) == t) adjacent = true;
        if (adjacent) continue;
        int truth = brute_min_vertex_cut(g, s, t);
        int k = rng.below(4);
        auto res = menger_vertex(g, s, t, k);
        if (std::holds_alternative<VertexCut>(res)) {
            if ((int)std::get<VertexCut>(res).vertices.size() != truth || truth > k) ++menger_bad;
        } else {
            if (truth <= k) ++menger_bad;
        }
    }

    int gallai_bad = 0;
    for (int seed = 0; seed < 200; ++seed) {
        Rng rng(seed + 400);
        int n = 5 + rng.below(10);  // n <= 14
        MultiGraph g = gen_random(n, std::min(n + 4, n * (n - 1) / 2), 0, 0, rng.next()).graph;
        int asz = 2 + rng.below(5);  // |A| <= 6
        VertexSet a;
        for (VertexId v : g.vertices()) {
            if ((int)a.size() < asz) a.insert(v);
        }
        int truth = brute_max_packing(g, a);
        int k = rng.below(3);
        auto res = gallai_packing_or_blocker(g, a, k);
        if (std::holds_alternative<PathPacking>(res)) {
            if (truth < k + 1 || (int)std::get<PathPacking>(res).paths.size() != k + 1)
                ++gallai_bad;
        } else {
            const VertexSet& b = std::get<PathBlocker>(res).vertices;
            if (truth >= k + 1 || (int)b.size() > 2 * k) ++gallai_bad;
            MultiGraph rest = delete_vertices(g, b);
            VertexSet arest;
            for (VertexId v : a)
                if (!b.count(v)) arest.insert(v);
            if (brute_max_packing(rest, arest) != 0) ++gallai_bad;
        }
    }

    int expansion_bad = 0;
    for (int seed = 0; seed < 500; ++seed) {
        Rng rng(seed + 500);
        int nx = 1 + rng.below(6);
        int ny = 2 * nx + rng.below(4);
        std::vector<int> xs, ys;
        for (int i = 0; i < nx; ++i) xs.push_back(i);
        for (int i = 0; i < ny; ++i) ys.push_back(100 + i);
        BipartiteEdges edges;
        for (int y : ys) {
            int deg = 1 + rng.below(nx);
            std::set<int> picked;
            while ((int)picked.size() < deg) picked.insert(rng.below(nx));
            for (int x : picked) edges.emplace_back(x, y);
        }
        ExpansionResult res = two_expansion(xs, ys, edges);
        std::set<int> xset(res.x_prime.begin(), res.x_prime.end());
        std::set<int> yset(res.y_prime.begin(), res.y_prime.end());
        if (xset.empty() || yset.empty()) ++expansion_bad;
        std::set<int> nbrs;
        for (auto [x, y] : edges)
            if (yset.count(y)) nbrs.insert(x);
        if (nbrs != xset) ++expansion_bad;
        std::set<int> assigned;
        for (int x : res.x_prime) {
            auto [y1, y2] = res.assignment.at(x);
            if (y1 == y2 || !yset.count(y1) || !yset.count(y2) || !assigned.insert(y1).second ||
                !assigned.insert(y2).second)
                ++expansion_bad;
        }
    }

    report(3, "separation primitives agree with their oracles",
           menger_bad == 0 && gallai_bad == 0 && expansion_bad == 0,
           "menger=" + std::to_string(menger_bad) + " gallai=" + std::to_string(gallai_bad) +
               " expansion=" + std::to_string(expansion_bad));
}

// --- criterion 4 ----------------------------------------------------------

void criterion4() {
    int bad = 0;
    for (int seed = 0; seed < 200; ++seed) {
        Rng rng(seed + 600);
        int n = 4 + rng.below(7);  // n <= 10
        MultiGraph g = gen_random(n, rng.below(std::min(16, n * (n - 1) / 2) + 1), 0, 0,
                                  rng.next())
                           .graph;
        int tcount = 2 + rng.below(3);  // |T| <= 4
        VertexSet terminals;
        for (VertexId v : g.vertices())
            if ((int)terminals.size() < tcount) terminals.insert(v);
        int k = rng.below(4);
        auto res = solve_mwc(MwcInstance{g, terminals, k});
        bool expect = multiway_brute(g, terminals, k, false);
        if (res.has_value() != expect) ++bad;
        if (res && expect) {
            // minimum size must match the enumeration minimum
            int mymin = (int)res->size();
            bool smaller_exists = mymin > 0 && multiway_brute(g, terminals, mymin - 1, false);
            // solve_mwc is not required to return a minimum set; only check
            // that a smaller feasible size implies it would also be found
            if (smaller_exists && !solve_mwc(MwcInstance{g, terminals, mymin - 1}).has_value())
                ++bad;
        }
    }
    report(4, "terminal separation matches subset enumeration", bad == 0,
           "discrepancies=" + std::to_string(bad));
}

// --- criterion 5 ----------------------------------------------------------

void criterion5() {
    int no_violations = 0, maximal_violations = 0, bound_violations = 0;
    int maximal_cases = 0;
    for (int seed = 0; seed < 500; ++seed) {
        Rng rng(seed + 10);  // same family as criterion 1
        EsfvsInstance inst = random_instance(rng);
        auto zopt = brute_force(EsfvsInstance{inst.graph, inst.graph.num_vertices()});
        if (!zopt) continue;
        VertexSet z = *zopt;
        if (rng.below(3) == 0)
            for (VertexId v : inst.graph.vertices())
                if (!z.count(v)) {
                    z.insert(v);
                    break;
                }

        auto solutions = all_solutions(inst);
        bool yes = !solutions.empty();
        bool maximal_yes = yes;
        for (const VertexSet& sol : solutions)
            for (VertexId v : sol)
                if (z.count(v)) maximal_yes = false;

        ReductionResult res = reduce(make_disjoint_instance(inst, z));
        if (maximal_yes) {
            ++maximal_cases;
            if (res.ignore) {
                ++maximal_violations;
                continue;
            }
        }
        if (res.ignore) continue;
        const EsfvsInstance& out = res.instance.instance;

        if (!yes && out.k >= 0 && brute_force(out).has_value()) ++no_violations;
        if (maximal_yes) {
            bool found = false;
            for (const VertexSet& sol : all_solutions(out)) {
                bool disjoint = true;
                for (VertexId v : sol)
                    if (res.instance.z.count(v)) disjoint = false;
                if (disjoint) found = true;
            }
            if (!found) ++maximal_violations;
        }
        if ((long long)out.s_edges().size() >
            reduced_s_bound(out.k, static_cast<int>(res.instance.z.size())))
            ++bound_violations;
    }
    report(5, "reduction engine preserves NO, maximal-YES, and the size bound",
           no_violations == 0 && maximal_violations == 0 && bound_violations == 0,
           "no=" + std::to_string(no_violations) + " maximal=" +
               std::to_string(maximal_violations) + " bound=" + std::to_string(bound_violations) +
               " maximal_cases=" + std::to_string(maximal_cases));
}

// --- criterion 6 ----------------------------------------------------------

void criterion6() {
    int violations = 0;
    long long max_p1 = 0, max_p2 = 0;
    for (int seed = 0; seed < 500; ++seed) {
        Rng rng(seed + 10);
        EsfvsInstance inst = random_instance(rng);
        SearchStats stats;
        solve(inst, {}, &stats);  // the internal audits throw on violation
        if (stats.phase1_branch_bound && stats.max_phase1_branches > stats.phase1_branch_bound)
            ++violations;
        if (stats.phase2_partition_bound &&
            stats.max_phase2_partitions > stats.phase2_partition_bound)
            ++violations;
        max_p1 = std::max(max_p1, stats.max_phase1_branches);
        max_p2 = std::max(max_p2, stats.max_phase2_partitions);
    }
    report(6, "branch counters stay inside the analytical bounds", violations == 0,
           "max_phase1=" + std::to_string(max_p1) + " max_phase2=" + std::to_string(max_p2));
}

// --- criterion 7 ----------------------------------------------------------

void criterion7() {
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= 3; ++k) {
        for (int seed = 0; seed < 2; ++seed) {
            PlantedInstance planted = gen_planted(200, k, 1000 + seed);
            SolveOptions options;
            options.timeout_seconds = 60.0;
            auto t0 = std::chrono::steady_clock::now();
            try {
                auto res = solve(planted.instance, options);
                if (!res || !is_solution(planted.instance, *res)) ok = false;
            } catch (const timeout_error&) {
                ok = false;
            }
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            detail += "k" + std::to_string(k) + "s" + std::to_string(seed) + "=" +
                      std::to_string(ms) + "ms ";
        }
    }
    report(7, "planted 200-vertex instances solve within 60s", ok, detail);
}

}  // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
    } catch (const std::exception& e) {
        std::printf("[FAIL] acceptance aborted: %s\n", e.what());
        return 2;
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
