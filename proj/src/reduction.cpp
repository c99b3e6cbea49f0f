#include "sfvs/reduction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "sfvs/oracle.hpp"
#include "sfvs/separation.hpp"

namespace sfvs {

namespace {

bool z_is_solution(const MultiGraph& g, const VertexSet& z) {
    return is_solution(EsfvsInstance{g, static_cast<int>(z.size())}, z);
}

}  // namespace

DisjointInstance make_disjoint_instance(EsfvsInstance instance, VertexSet z) {
    for (VertexId v : z) require(instance.graph.has_vertex(v), "disjoint instance: z outside graph");
    require(z_is_solution(instance.graph, z), "disjoint instance: z is not a solution");
    return DisjointInstance{std::move(instance), std::move(z)};
}

// ---------------------------------------------------------------------------

RuleStatus remove_bridges_rule(RState& st) {
    bool changed = false;
    while (true) {
        EdgeSet br = bridges(st.g);
        if (!br.empty()) {
            st.g = delete_edges(st.g, br);
            changed = true;
        }
        VertexSet doomed;
        for (const VertexSet& block : connected_components(st.g).blocks) {
            bool has_s = false;
            for (VertexId v : block) {
                for (EdgeId e : st.g.incident(v))
                    if (st.g.edge(e).in_s) has_s = true;
                if (has_s) break;
            }
            if (!has_s) doomed.insert(block.begin(), block.end());
        }
        if (doomed.empty() && br.empty()) break;
        if (!doomed.empty()) {
            st.g = delete_vertices(st.g, doomed);
            for (VertexId v : doomed) st.z.erase(v);
            changed = true;
        }
    }
    return changed ? RuleStatus::changed : RuleStatus::not_applicable;
}

// ---------------------------------------------------------------------------

BubbleDecomposition bubble_decompose(const MultiGraph& g, const VertexSet& z) {
    MultiGraph rest = delete_vertices(g, z);
    EdgeSet rest_s = s_edges(rest);
    EdgeSet rest_bridges = bridges(rest);
    for (EdgeId e : rest_s) {
        check(!rest.edge(e).is_loop(), "bubble_decompose: S-loop outside z");
        check(rest_bridges.count(e) > 0, "bubble_decompose: S-edge not a bridge outside z");
    }

    MultiGraph split = delete_edges(rest, rest_s);
    BubbleDecomposition decomp;
    std::map<VertexId, int> bubble_of;
    for (const VertexSet& block : connected_components(split).blocks) {
        for (VertexId v : block) bubble_of[v] = decomp.bubble_count();
        decomp.bubbles.push_back(block);
    }

    std::set<std::pair<int, int>> seen;
    for (EdgeId e : rest_s) {
        const EdgeRec& rec = rest.edge(e);
        int bu = bubble_of.at(rec.u), bv = bubble_of.at(rec.v);
        check(bu != bv, "bubble_decompose: S-edge inside one bubble");
        auto key = std::minmax(bu, bv);
        check(seen.insert(key).second, "bubble_decompose: parallel S-edges between bubbles");
        decomp.forest_edges.emplace_back(key.first, key.second);
        decomp.forest_edge_ids.push_back(e);
    }

    // the bubble graph must be a forest
    std::vector<int> parent(decomp.bubble_count());
    for (int i = 0; i < decomp.bubble_count(); ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (auto [a, b] : decomp.forest_edges) {
        int ra = find(a), rb = find(b);
        check(ra != rb, "bubble_decompose: cycle in the bubble graph");
        parent[rb] = ra;
    }

    decomp.degree.assign(decomp.bubble_count(), 0);
    for (auto [a, b] : decomp.forest_edges) {
        ++decomp.degree[a];
        ++decomp.degree[b];
    }
    for (int d : decomp.degree) {
        if (d == 0)
            decomp.classes.push_back(BubbleClass::solitary);
        else if (d == 1)
            decomp.classes.push_back(BubbleClass::leaf);
        else if (d == 2)
            decomp.classes.push_back(BubbleClass::edge);
        else
            decomp.classes.push_back(BubbleClass::inner);
    }
    return decomp;
}

// ---------------------------------------------------------------------------

OuterAbundantOutcome outer_abundant_step(const MultiGraph& g, int k, const VertexSet& f) {
    check(k >= 1, "outer_abundant_step: budget below one");
    check(!f.empty(), "outer_abundant_step: empty set");
    for (VertexId v : f) check(g.has_vertex(v), "outer_abundant_step: f outside graph");

    VertexSet outside;
    for (VertexId v : g.vertices())
        if (!f.count(v)) outside.insert(v);

    MultiGraph inner = delete_vertices(g, outside);
    check(connected_components(inner).blocks.size() == 1, "outer_abundant_step: f not connected");
    check(s_edges(inner).empty(), "outer_abundant_step: S-edge inside f");
    check(bridges(g).empty(), "outer_abundant_step: bridges not removed first");

    EdgeSet boundary = edge_cut(g, f, outside);
    int boundary_s = 0;
    for (EdgeId e : boundary)
        if (g.edge(e).in_s) ++boundary_s;
    check(boundary_s >= 10 * k, "outer_abundant_step: fewer than 10k incident S-edges");

    // shortcut: a vertex tied to f by >= 2 edges, one of them S, closes an
    // important cycle through f on its own
    for (VertexId v : outside) {
        int cnt = 0;
        bool any_s = false;
        for (EdgeId e : g.incident(v)) {
            const EdgeRec& rec = g.edge(e);
            if (rec.is_loop()) continue;
            if (f.count(rec.other(v))) {
                ++cnt;
                any_s = any_s || rec.in_s;
            }
        }
        if (cnt >= 2 && any_s) return OuterAbundantOutcome{false, {v}};
    }

    // cycles crossing f once with one S boundary edge: contract f into a
    // source/sink pair and ask for disjoint paths
    MultiGraph contracted = delete_vertices(g, f);
    VertexId cs = contracted.add_vertex();
    VertexId ct = contracted.add_vertex();
    for (EdgeId e : boundary) {
        const EdgeRec& rec = g.edge(e);
        VertexId w = f.count(rec.u) ? rec.v : rec.u;
        if (rec.in_s)
            contracted.add_edge(cs, w, false);
        else
            contracted.add_edge(w, ct, false);
    }
    VertexSet type1_blocker;
    auto menger = menger_vertex(contracted, cs, ct, k);
    if (std::holds_alternative<PathPacking>(menger)) return OuterAbundantOutcome{true, {}};
    type1_blocker = std::get<VertexCut>(menger).vertices;

    // cycles crossing f once with two S boundary edges: disjoint paths
    // between the S-attached vertices outside f
    VertexSet attached;
    for (EdgeId e : boundary) {
        const EdgeRec& rec = g.edge(e);
        if (rec.in_s) attached.insert(f.count(rec.u) ? rec.v : rec.u);
    }
    MultiGraph rest = delete_vertices(g, f);
    VertexSet type2_blocker;
    auto gallai = gallai_packing_or_blocker(rest, attached, k);
    if (std::holds_alternative<PathPacking>(gallai)) return OuterAbundantOutcome{true, {}};
    type2_blocker = std::get<PathBlocker>(gallai).vertices;

    VertexSet blocker = type1_blocker;
    blocker.insert(type2_blocker.begin(), type2_blocker.end());
    check(static_cast<int>(blocker.size()) <= 3 * k, "outer_abundant_step: blocker too large");

    // components left after blocker removal: easy ones contain their own
    // S-cycle, tough ones hang off f by a single S-edge
    VertexSet fb = f;
    fb.insert(blocker.begin(), blocker.end());
    MultiGraph remains = delete_vertices(g, fb);
    std::vector<VertexSet> tough;
    int easy = 0;
    for (const VertexSet& block : connected_components(remains).blocks) {
        VertexSet others;
        for (VertexId v : remains.vertices())
            if (!block.count(v)) others.insert(v);
        MultiGraph sub = delete_vertices(remains, others);
        EdgeSet sub_bridges = bridges(sub);
        bool has_cycle = false;
        for (const EdgeRec& rec : sub.edges())
            if (rec.in_s && (rec.is_loop() || !sub_bridges.count(rec.id))) has_cycle = true;
        if (has_cycle) {
            ++easy;
            continue;
        }
        EdgeSet to_f = edge_cut(g, block, f);
        int s_count = 0;
        for (EdgeId e : to_f)
            if (g.edge(e).in_s) ++s_count;
        check(s_count == 0 || (s_count == 1 && to_f.size() == 1),
              "outer_abundant_step: component attachment dichotomy broken");
        if (to_f.size() == 1 && s_count == 1) tough.push_back(block);
    }
    if (easy > k) return OuterAbundantOutcome{true, {}};
    check(static_cast<int>(tough.size()) >= 6 * k, "outer_abundant_step: too few tough components");
    check(!blocker.empty(), "outer_abundant_step: empty blocker with tough components");

    std::vector<int> xs(blocker.begin(), blocker.end());
    std::vector<int> ys;
    BipartiteEdges exp_edges;
    for (size_t h = 0; h < tough.size(); ++h) {
        ys.push_back(static_cast<int>(h));
        VertexSet nbrs = neighborhood(g, tough[h]);
        bool attached_to_blocker = false;
        for (VertexId v : nbrs)
            if (blocker.count(v)) {
                exp_edges.emplace_back(v, static_cast<int>(h));
                attached_to_blocker = true;
            }
        check(attached_to_blocker, "outer_abundant_step: tough component off the blocker");
    }
    ExpansionResult expansion = two_expansion(xs, ys, exp_edges);
    VertexSet x(expansion.x_prime.begin(), expansion.x_prime.end());
    check(!x.empty(), "outer_abundant_step: empty expansion core");
    return OuterAbundantOutcome{false, std::move(x)};
}

// ---------------------------------------------------------------------------

namespace {

int incident_s_count(const MultiGraph& g, VertexId v) {
    int cnt = 0;
    for (EdgeId e : g.incident(v))
        if (g.edge(e).in_s) ++cnt;
    return cnt;
}

RuleStatus apply_outer_abundant(RState& st, const VertexSet& f) {
    OuterAbundantOutcome out = outer_abundant_step(st.g, st.k, f);
    if (out.infeasible) return RuleStatus::ignore;
    for (VertexId v : out.x)
        if (st.z.count(v)) return RuleStatus::ignore;
    st.g = delete_vertices(st.g, out.x);
    st.k -= static_cast<int>(out.x.size());
    st.removed.insert(out.x.begin(), out.x.end());
    return RuleStatus::changed;
}

}  // namespace

RuleStatus high_degree_rule(RState& st) {
    for (VertexId v : st.z) {
        if (incident_s_count(st.g, v) < 10 * st.k) continue;
        return apply_outer_abundant(st, {v});
    }
    return RuleStatus::not_applicable;
}

// ---------------------------------------------------------------------------

RuleStatus two_edge_bubble_rule(RState& st, const BubbleDecomposition& decomp) {
    for (const VertexSet& bubble : decomp.bubbles) {
        VertexSet outside;
        for (VertexId v : st.g.vertices())
            if (!bubble.count(v)) outside.insert(v);
        EdgeSet boundary = edge_cut(st.g, bubble, outside);
        check(boundary.size() >= 2, "two_edge_bubble_rule: bubble hangs on a bridge");
        if (boundary.size() != 2) continue;

        auto it = boundary.begin();
        const EdgeRec e1 = st.g.edge(*it++);
        const EdgeRec e2 = st.g.edge(*it);
        VertexId u = bubble.count(e1.u) ? e1.v : e1.u;
        VertexId v = bubble.count(e2.u) ? e2.v : e2.u;
        bool new_in_s = e1.in_s || e2.in_s;

        MultiGraph without = delete_vertices(st.g, bubble);
        if (u == v) {
            if (new_in_s) return RuleStatus::ignore;  // S-loop; z must hold u
            st.g = std::move(without);                // non-S loop is dropped
            return RuleStatus::changed;
        }
        EdgeSet bundle = edge_cut(without, {u}, {v});
        if (bundle.empty()) {
            without.add_edge(u, v, new_in_s);
            st.g = std::move(without);
            return RuleStatus::changed;
        }
        bool bundle_has_s = new_in_s;
        for (EdgeId e : bundle)
            if (without.edge(e).in_s) bundle_has_s = true;
        if (!bundle_has_s) {
            st.g = std::move(without);  // duplicate non-S edge is dropped
            return RuleStatus::changed;
        }
        bool uz = st.z.count(u) > 0, vz = st.z.count(v) > 0;
        check(uz || vz, "two_edge_bubble_rule: parallel S-pair misses z");
        if (uz && vz) return RuleStatus::ignore;
        VertexId gone = uz ? v : u;
        st.g = delete_vertices(without, {gone});
        st.k -= 1;
        st.removed.insert(gone);
        return RuleStatus::changed;
    }
    return RuleStatus::not_applicable;
}

RuleStatus edge_bubble_count_rule(const RState& st, const BubbleDecomposition& decomp) {
    long long nl = 0, ne = 0, ni = 0;
    for (BubbleClass c : decomp.classes) {
        if (c == BubbleClass::leaf) ++nl;
        if (c == BubbleClass::edge) ++ne;
        if (c == BubbleClass::inner) ++ni;
    }
    long long zsize = static_cast<long long>(st.z.size());
    if (ne >= 3 * (zsize + st.k) + ni + nl) return RuleStatus::ignore;
    return RuleStatus::not_applicable;
}

// ---------------------------------------------------------------------------

namespace {

// Two lowest-id edges from the bubble to z, S-edges first for the primary.
struct AssociatedPair {
    EdgeId e1, e2;
    VertexId v1, v2;  // z-endpoints
    bool e1_in_s;
};

AssociatedPair associated_pair(const MultiGraph& g, const VertexSet& bubble,
                               const VertexSet& z) {
    EdgeSet to_z = edge_cut(g, bubble, z);
    check(to_z.size() >= 2, "leaf bubble with fewer than two edges to z");
    EdgeId primary = -1;
    for (EdgeId e : to_z)
        if (g.edge(e).in_s) {
            primary = e;
            break;
        }
    if (primary == -1) primary = *to_z.begin();
    EdgeId secondary = -1;
    for (EdgeId e : to_z)
        if (e != primary) {
            secondary = e;
            break;
        }
    const EdgeRec& r1 = g.edge(primary);
    const EdgeRec& r2 = g.edge(secondary);
    return AssociatedPair{primary, secondary, z.count(r1.u) ? r1.u : r1.v,
                          z.count(r2.u) ? r2.u : r2.v, r1.in_s};
}

bool has_plain_edge_between(const MultiGraph& g, VertexId a, VertexId b) {
    for (EdgeId e : g.incident(a)) {
        const EdgeRec& rec = g.edge(e);
        if (!rec.is_loop() && rec.other(a) == b) return true;
    }
    return false;
}

bool has_s_edge_between(const MultiGraph& g, VertexId a, VertexId b) {
    for (EdgeId e : g.incident(a)) {
        const EdgeRec& rec = g.edge(e);
        if (!rec.is_loop() && rec.other(a) == b && rec.in_s) return true;
    }
    return false;
}

}  // namespace

RuleStatus saturate_clique_edges_step(RState& st, const BubbleDecomposition& decomp) {
    bool changed = false;
    std::vector<VertexId> zs(st.z.begin(), st.z.end());
    for (size_t i = 0; i < zs.size(); ++i) {
        for (size_t j = i + 1; j < zs.size(); ++j) {
            VertexId v = zs[i], w = zs[j];
            if (has_plain_edge_between(st.g, v, w)) continue;
            int shared = 0;
            for (const VertexSet& bubble : decomp.bubbles) {
                bool to_v = false, to_w = false;
                for (VertexId b : bubble) {
                    for (EdgeId e : st.g.incident(b)) {
                        const EdgeRec& rec = st.g.edge(e);
                        if (rec.in_s || rec.is_loop()) continue;
                        if (rec.other(b) == v) to_v = true;
                        if (rec.other(b) == w) to_w = true;
                    }
                    if (to_v && to_w) break;
                }
                if (to_v && to_w) ++shared;
            }
            if (shared >= st.k + 1) {
                st.g.add_edge(v, w, false);
                changed = true;
            }
        }
    }
    return changed ? RuleStatus::changed : RuleStatus::not_applicable;
}

RuleStatus leaf_threshold_step(const RState& st, const BubbleDecomposition& decomp) {
    long long zsize = static_cast<long long>(st.z.size());
    if (zsize == 0) return RuleStatus::not_applicable;  // thresholds need z-pairs
    long long attached_by_s = 0, pair_in_s = 0, bars = 0;
    for (int i = 0; i < decomp.bubble_count(); ++i) {
        if (decomp.classes[i] != BubbleClass::leaf) continue;
        AssociatedPair ap = associated_pair(st.g, decomp.bubbles[i], st.z);
        if (ap.e1_in_s) ++attached_by_s;
        if (ap.v1 != ap.v2 && has_s_edge_between(st.g, ap.v1, ap.v2)) ++pair_in_s;
    }
    for (auto [a, b] : decomp.forest_edges)
        if (decomp.classes[a] == BubbleClass::leaf && decomp.classes[b] == BubbleClass::leaf)
            ++bars;

    if (attached_by_s >= zsize * zsize * (st.k + 2)) return RuleStatus::ignore;
    if (pair_in_s >= zsize * zsize * (st.k + 1)) return RuleStatus::ignore;
    if (bars >= zsize * zsize * (st.k + 2)) return RuleStatus::ignore;
    return RuleStatus::not_applicable;
}

namespace {

bool is_clique_bubble(const RState& st, const BubbleDecomposition& decomp, int i) {
    if (decomp.classes[i] != BubbleClass::leaf) return false;
    const VertexSet& bubble = decomp.bubbles[i];

    // attached to z only by non-S edges
    EdgeSet to_z = edge_cut(st.g, bubble, st.z);
    for (EdgeId e : to_z)
        if (st.g.edge(e).in_s) return false;

    // the z-neighbourhood is a clique free of S-edges
    VertexSet zn;
    for (VertexId v : neighborhood(st.g, bubble))
        if (st.z.count(v)) zn.insert(v);
    for (auto a = zn.begin(); a != zn.end(); ++a)
        for (auto b = std::next(a); b != zn.end(); ++b) {
            if (!has_plain_edge_between(st.g, *a, *b)) return false;
            if (has_s_edge_between(st.g, *a, *b)) return false;
        }

    // its single bubble neighbour is not a leaf
    for (size_t t = 0; t < decomp.forest_edges.size(); ++t) {
        auto [a, b] = decomp.forest_edges[t];
        if (a == i || b == i) {
            int other = a == i ? b : a;
            return decomp.classes[other] != BubbleClass::leaf;
        }
    }
    return false;
}

}  // namespace

RuleStatus clique_bubble_step(RState& st, const BubbleDecomposition& decomp) {
    std::vector<int> cliques;
    for (int i = 0; i < decomp.bubble_count(); ++i)
        if (is_clique_bubble(st, decomp, i)) cliques.push_back(i);
    if (cliques.empty()) return RuleStatus::not_applicable;

    for (VertexId v : st.z) {
        std::vector<int> fan;
        for (int i : cliques) {
            VertexSet nbrs = neighborhood(st.g, decomp.bubbles[i]);
            if (nbrs.count(v)) fan.push_back(i);
        }
        if (static_cast<int>(fan.size()) < 10 * st.k) continue;
        VertexSet f{v};
        for (int idx = 0; idx < 10 * st.k; ++idx)
            f.insert(decomp.bubbles[fan[idx]].begin(), decomp.bubbles[fan[idx]].end());
        return apply_outer_abundant(st, f);
    }
    return RuleStatus::not_applicable;
}

// ---------------------------------------------------------------------------

long long reduced_s_bound(int k, int z_size) {
    // without budget there is nothing left to hit; without z every S-edge
    // is a bridge and the bridge rule has already removed it
    if (k <= 0 || z_size <= 0) return 0;
    long long kk = k, zz = z_size;
    long long z2 = zz * zz;
    long long dl = std::max<long long>(0, z2 * (kk + 2) - 1) +
                   std::max<long long>(0, z2 * (kk + 1) - 1) + 2 * z2 * (kk + 2) + kk * z2 +
                   std::max<long long>(0, (10 * kk - 1) * zz);
    long long di = std::max<long long>(0, dl - 1);
    long long de = std::max<long long>(0, 3 * (zz + kk) + di + dl - 1);
    long long forest_edges = std::max<long long>(0, dl + di + de - 1);
    return 10 * kk * zz + forest_edges;
}

ReductionResult reduce(const DisjointInstance& d) {
    require(z_is_solution(d.instance.graph, d.z), "reduce: z is not a solution");

    RState st{d.instance.graph, d.instance.k, d.z, {}};
    long long prev_v = -1, prev_e = -1;

    while (true) {
        // rewrites never delete z-vertices except through component removal
        for (auto it = st.z.begin(); it != st.z.end();)
            it = st.g.has_vertex(*it) ? std::next(it) : st.z.erase(it);
        check(z_is_solution(st.g, st.z), "reduce: z stopped being a solution");

        if (prev_v >= 0) {
            bool shrunk = st.g.num_vertices() < prev_v ||
                          (st.g.num_vertices() == prev_v && st.g.num_edges() < prev_e);
            check(shrunk, "reduce: rewrite did not shrink the instance");
        }
        prev_v = st.g.num_vertices();
        prev_e = st.g.num_edges();

        if (remove_bridges_rule(st) == RuleStatus::changed) continue;

        // past this point every S-edge lies on a simple cycle
        if (st.k < 0) return ReductionResult{true, {}, {}};
        if (st.k == 0) {
            if (!s_edges(st.g).empty()) return ReductionResult{true, {}, {}};
            break;
        }
        bool s_loop = false;
        for (const EdgeRec& rec : st.g.edges())
            if (rec.in_s && rec.is_loop()) s_loop = true;
        if (s_loop) return ReductionResult{true, {}, {}};  // z holds the loop vertex

        RuleStatus status = high_degree_rule(st);
        if (status == RuleStatus::ignore) return ReductionResult{true, {}, {}};
        if (status == RuleStatus::changed) continue;

        BubbleDecomposition decomp = bubble_decompose(st.g, st.z);

        status = two_edge_bubble_rule(st, decomp);
        if (status == RuleStatus::ignore) return ReductionResult{true, {}, {}};
        if (status == RuleStatus::changed) continue;

        if (edge_bubble_count_rule(st, decomp) == RuleStatus::ignore)
            return ReductionResult{true, {}, {}};

        saturate_clique_edges_step(st, decomp);  // bubbles unaffected: edges stay inside z

        if (leaf_threshold_step(st, decomp) == RuleStatus::ignore)
            return ReductionResult{true, {}, {}};

        status = clique_bubble_step(st, decomp);
        if (status == RuleStatus::ignore) return ReductionResult{true, {}, {}};
        if (status == RuleStatus::changed) continue;

        break;  // nothing applicable
    }

    check(st.k + static_cast<int>(st.removed.size()) == d.instance.k,
          "reduce: removed set out of sync with budget");
    long long surviving_s = static_cast<long long>(s_edges(st.g).size());
    check(surviving_s <= reduced_s_bound(st.k, static_cast<int>(st.z.size())),
          "reduce: surviving S-edges exceed the closed-form bound");
    if (st.g.num_vertices() > 0 && st.k > 0) {
        // at a fixpoint: forests with any attached bubble have more leaf
        // bubbles than inner ones
        BubbleDecomposition decomp = bubble_decompose(st.g, st.z);
        long long nl = 0, ni = 0, attached = 0;
        for (BubbleClass c : decomp.classes) {
            if (c != BubbleClass::solitary) ++attached;
            if (c == BubbleClass::leaf) ++nl;
            if (c == BubbleClass::inner) ++ni;
        }
        check(attached == 0 || ni < nl, "reduce: bubble class imbalance at fixpoint");
    }

    ReductionResult out;
    out.ignore = false;
    out.instance = DisjointInstance{EsfvsInstance{st.g, st.k}, st.z};
    out.removed = st.removed;
    return out;
}

}  // namespace sfvs
