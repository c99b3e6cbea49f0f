#include "sfvs/separation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace sfvs {

// ---------------------------------------------------------------------------
// bipartite matching (Kuhn)

namespace {

struct Kuhn {
    int nl, nr;
    std::vector<std::vector<int>> adj;  // left -> rights
    std::vector<int> match_l, match_r;  // -1 when free
    std::vector<char> used;

    Kuhn(int nl_, int nr_) : nl(nl_), nr(nr_), adj(nl_), match_l(nl_, -1), match_r(nr_, -1) {}

    bool try_augment(int l) {
        for (int r : adj[l]) {
            if (used[r]) continue;
            used[r] = 1;
            if (match_r[r] == -1 || try_augment(match_r[r])) {
                match_l[l] = r;
                match_r[r] = l;
                return true;
            }
        }
        return false;
    }

    int solve() {
        int size = 0;
        for (int l = 0; l < nl; ++l) {
            used.assign(nr, 0);
            if (try_augment(l)) ++size;
        }
        return size;
    }
};

}  // namespace

std::vector<std::pair<int, int>> max_bipartite_matching(const std::vector<int>& left,
                                                        const std::vector<int>& right,
                                                        const BipartiteEdges& edges) {
    std::map<int, int> lidx, ridx;
    for (size_t i = 0; i < left.size(); ++i) lidx[left[i]] = static_cast<int>(i);
    for (size_t i = 0; i < right.size(); ++i) ridx[right[i]] = static_cast<int>(i);
    Kuhn kuhn(static_cast<int>(left.size()), static_cast<int>(right.size()));
    std::set<std::pair<int, int>> dedup;
    for (auto [x, y] : edges) {
        auto il = lidx.find(x);
        auto ir = ridx.find(y);
        require(il != lidx.end() && ir != ridx.end(),
                "max_bipartite_matching: edge outside the two sides");
        if (dedup.insert({il->second, ir->second}).second)
            kuhn.adj[il->second].push_back(ir->second);
    }
    kuhn.solve();
    std::vector<std::pair<int, int>> out;
    for (int l = 0; l < kuhn.nl; ++l)
        if (kuhn.match_l[l] != -1) out.emplace_back(left[l], right[kuhn.match_l[l]]);
    return out;
}

// ---------------------------------------------------------------------------
// menger_vertex via unit-vertex-capacity flow

namespace {

struct FlowNet {
    struct Arc {
        int to, cap, flow = 0;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> adj;

    explicit FlowNet(int nodes) : adj(nodes) {}

    int add_arc(int from, int to, int cap) {
        int id = static_cast<int>(arcs.size());
        arcs.push_back({to, cap});
        arcs.push_back({from, 0});
        adj[from].push_back(id);
        adj[to].push_back(id + 1);
        return id;
    }

    int residual(int id) const { return arcs[id].cap - arcs[id].flow; }

    // One BFS augmentation of value 1; returns false when no path remains.
    bool augment_unit(int s, int t) {
        std::vector<int> pred_arc(adj.size(), -1);
        std::vector<char> seen(adj.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty() && !seen[t]) {
            int v = q.front();
            q.pop();
            for (int id : adj[v]) {
                if (residual(id) <= 0) continue;
                int to = arcs[id].to;
                if (seen[to]) continue;
                seen[to] = 1;
                pred_arc[to] = id;
                q.push(to);
            }
        }
        if (!seen[t]) return false;
        for (int v = t; v != s;) {
            int id = pred_arc[v];
            arcs[id].flow += 1;
            arcs[id ^ 1].flow -= 1;
            v = arcs[id ^ 1].to;
        }
        return true;
    }

    std::vector<char> residual_reachable(int s) const {
        std::vector<char> seen(adj.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : adj[v]) {
                if (residual(id) <= 0) continue;
                int to = arcs[id].to;
                if (!seen[to]) {
                    seen[to] = 1;
                    q.push(to);
                }
            }
        }
        return seen;
    }

    // Nodes that can still reach t through residual arcs.
    std::vector<char> residual_coreachable(int t) const {
        std::vector<char> seen(adj.size(), 0);
        std::queue<int> q;
        q.push(t);
        seen[t] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : adj[v]) {
                // arc id^1 enters v; usable iff it has residual capacity
                if (residual(id ^ 1) <= 0) continue;
                int from = arcs[id].to;  // tail of id^1
                if (!seen[from]) {
                    seen[from] = 1;
                    q.push(from);
                }
            }
        }
        return seen;
    }

    // Extracts one unit s-t path from the current flow and cancels it. Unit
    // vertex capacities make the walk forced: every split node has at most
    // one positive-flow out-arc beyond the source, and flow cycles are
    // vertex-disjoint from the s-t paths, so a greedy walk cannot stray.
    std::vector<int> take_unit_path(int s, int t) {
        std::vector<int> nodes{s};
        int v = s;
        while (v != t) {
            int chosen = -1;
            for (int id : adj[v]) {
                if ((id & 1) == 0 && arcs[id].flow > 0) {
                    chosen = id;
                    break;
                }
            }
            check(chosen != -1, "take_unit_path: flow conservation broken");
            arcs[chosen].flow -= 1;
            arcs[chosen ^ 1].flow += 1;
            v = arcs[chosen].to;
            nodes.push_back(v);
            check(nodes.size() <= adj.size() + 2, "take_unit_path: walk does not terminate");
        }
        return nodes;
    }
};

}  // namespace

std::variant<PathPacking, VertexCut> menger_vertex(const MultiGraph& g, VertexId s, VertexId t,
                                                   int k) {
    require(g.has_vertex(s) && g.has_vertex(t) && s != t, "menger_vertex: bad terminals");
    require(k >= 0, "menger_vertex: negative budget");

    int bound = g.vertex_id_bound();
    int big = k + 2;
    auto vin = [](VertexId v) { return 2 * v; };
    auto vout = [](VertexId v) { return 2 * v + 1; };
    FlowNet net(2 * bound);
    for (VertexId v : g.vertices())
        net.add_arc(vin(v), vout(v), (v == s || v == t) ? big : 1);

    // arc id -> original edge id, for direct s-t edges only
    std::map<int, EdgeId> direct_arc;
    for (const EdgeRec& rec : g.edges()) {
        if (rec.is_loop()) continue;
        bool direct = (rec.u == s && rec.v == t) || (rec.u == t && rec.v == s);
        int cap = direct ? 1 : big;
        int a1 = net.add_arc(vout(rec.u), vin(rec.v), cap);
        int a2 = net.add_arc(vout(rec.v), vin(rec.u), cap);
        if (direct) {
            direct_arc[a1] = rec.id;
            direct_arc[a2] = rec.id;
        }
    }

    int source = vout(s), sink = vin(t);
    int flow = 0;
    while (flow <= k && net.augment_unit(source, sink)) ++flow;

    if (flow >= k + 1) {
        PathPacking packing;
        for (int i = 0; i < k + 1; ++i) {
            std::vector<int> nodes = net.take_unit_path(source, sink);
            std::vector<VertexId> path{s};
            for (int node : nodes)
                if (node % 2 == 0 && node != vin(t)) path.push_back(node / 2);
            path.push_back(t);
            packing.paths.push_back(std::move(path));
        }
        return packing;
    }

    std::vector<char> reach = net.residual_reachable(source);
    check(!reach[sink], "menger_vertex: flow not maximum");
    VertexCut cut;
    for (VertexId v : g.vertices()) {
        if (v == s || v == t) continue;
        if (reach[vin(v)] && !reach[vout(v)]) cut.vertices.insert(v);
    }
    // a saturated direct s-t arc crossing the cut means no vertex cut exists
    for (auto [arc, eid] : direct_arc) {
        (void)eid;
        int from = net.arcs[arc ^ 1].to;
        if (reach[from] && !reach[net.arcs[arc].to] && net.residual(arc) == 0)
            throw precondition_error("menger_vertex: uncuttable pair");
    }
    check(static_cast<int>(cut.vertices.size()) == flow, "menger_vertex: cut size mismatch");
    return cut;
}

// ---------------------------------------------------------------------------
// general maximum matching (blossom contraction), used by the A-path engine

namespace {

class GeneralMatching {
public:
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> match, parent, base;
    std::vector<char> used, blossom;

    explicit GeneralMatching(int n_) : n(n_), adj(n_), match(n_, -1) {}

    void add_edge(int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    int lca(int a, int b) {
        std::vector<char> mark(n, 0);
        int v = a;
        while (true) {
            v = base[v];
            mark[v] = 1;
            if (match[v] == -1) break;
            v = parent[match[v]];
        }
        int u = b;
        while (true) {
            u = base[u];
            if (mark[u]) return u;
            u = parent[match[u]];
        }
    }

    void mark_path(int v, int b, int child, std::queue<int>& q) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            if (!used[match[v]]) {
                used[match[v]] = 1;
                q.push(match[v]);
            }
            v = parent[match[v]];
        }
    }

    // Alternating search from root; augments and returns true when an
    // exposed vertex is reached. When the matching is already maximum the
    // search fails and used[] holds the evenly-reachable vertices.
    bool search(int root) {
        used.assign(n, 0);
        parent.assign(n, -1);
        base.resize(n);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int curbase = lca(v, to);
                    blossom.assign(n, 0);
                    mark_path(v, curbase, to, q);
                    mark_path(to, curbase, v, q);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) {
                        augment(to);
                        return true;
                    }
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return false;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent[v], ppv = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = ppv;
        }
    }

    int solve() {
        int size = 0;
        for (int v = 0; v < n; ++v)
            if (match[v] == -1 && search(v)) ++size;
        return size;
    }

    // Vertices missed by at least one maximum matching: union of even
    // alternating reachability over all exposed roots. Call after solve().
    std::vector<char> inessential() {
        std::vector<char> out(n, 0);
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            bool augmented = search(v);
            check(!augmented, "inessential: matching was not maximum");
            for (int i = 0; i < n; ++i)
                if (used[i]) out[i] = 1;
        }
        return out;
    }
};

// Auxiliary matching graph for A-paths: A-vertices stay single, every other
// vertex becomes an adjacent copy pair.
struct AuxGraph {
    std::vector<VertexId> verts;     // alive vertices of g
    std::map<VertexId, int> index;   // vertex -> position
    std::vector<char> in_a;
    int n_aux = 0;
    std::vector<int> node_of_single;          // A-vertex position -> aux node
    std::vector<std::pair<int, int>> copies;  // non-A position -> (aux, aux)
    std::vector<int> owner;                   // aux node -> position
    GeneralMatching gm{0};

    AuxGraph(const MultiGraph& g, const VertexSet& a) {
        verts = g.vertices();
        in_a.resize(verts.size());
        node_of_single.assign(verts.size(), -1);
        copies.assign(verts.size(), {-1, -1});
        for (size_t i = 0; i < verts.size(); ++i) {
            index[verts[i]] = static_cast<int>(i);
            in_a[i] = a.count(verts[i]) ? 1 : 0;
        }
        for (size_t i = 0; i < verts.size(); ++i) {
            if (in_a[i]) {
                node_of_single[i] = n_aux++;
                owner.push_back(static_cast<int>(i));
            } else {
                copies[i] = {n_aux, n_aux + 1};
                n_aux += 2;
                owner.push_back(static_cast<int>(i));
                owner.push_back(static_cast<int>(i));
            }
        }
        gm = GeneralMatching(n_aux);
        for (size_t i = 0; i < verts.size(); ++i)
            if (!in_a[i]) gm.add_edge(copies[i].first, copies[i].second);
        std::set<std::pair<VertexId, VertexId>> seen;
        for (const EdgeRec& rec : g.edges()) {
            if (rec.is_loop()) continue;
            auto key = std::minmax(rec.u, rec.v);
            if (!seen.insert(key).second) continue;
            int iu = index[rec.u], iv = index[rec.v];
            if (in_a[iu] && in_a[iv]) {
                gm.add_edge(node_of_single[iu], node_of_single[iv]);
            } else if (in_a[iu]) {
                gm.add_edge(node_of_single[iu], copies[iv].first);
                gm.add_edge(node_of_single[iu], copies[iv].second);
            } else if (in_a[iv]) {
                gm.add_edge(node_of_single[iv], copies[iu].first);
                gm.add_edge(node_of_single[iv], copies[iu].second);
            } else {
                gm.add_edge(copies[iu].first, copies[iv].first);
                gm.add_edge(copies[iu].first, copies[iv].second);
                gm.add_edge(copies[iu].second, copies[iv].first);
                gm.add_edge(copies[iu].second, copies[iv].second);
            }
        }
    }

    VertexId original(int node) const { return verts[owner[node]]; }
};

// Projects the matching to the original graph and collects the components
// that form paths with both endpoints in A.
std::vector<std::vector<VertexId>> project_a_paths(const AuxGraph& aux) {
    int nv = static_cast<int>(aux.verts.size());
    std::vector<std::vector<int>> padj(nv);
    for (int node = 0; node < aux.gm.n; ++node) {
        int mate = aux.gm.match[node];
        if (mate == -1 || mate < node) continue;
        int pu = aux.owner[node], pv = aux.owner[mate];
        if (pu == pv) continue;  // copy-pair edge
        padj[pu].push_back(pv);
        padj[pv].push_back(pu);
    }
    std::vector<std::vector<VertexId>> out;
    std::vector<char> seen(nv, 0);
    for (int i = 0; i < nv; ++i) {
        if (seen[i] || padj[i].empty()) continue;
        // walk the component; paths only, cycles are skipped
        if (padj[i].size() > 1) continue;  // start from an endpoint
        std::vector<int> chain{i};
        seen[i] = 1;
        int prev = -1, cur = i;
        while (true) {
            int nxt = -1;
            for (int cand : padj[cur])
                if (cand != prev) nxt = cand;
            if (nxt == -1) break;
            chain.push_back(nxt);
            seen[nxt] = 1;
            prev = cur;
            cur = nxt;
            if (padj[cur].size() == 1) break;
        }
        if (chain.size() < 2) continue;
        if (aux.in_a[chain.front()] && aux.in_a[chain.back()]) {
            bool internal_ok = true;
            for (size_t j = 1; j + 1 < chain.size(); ++j)
                if (aux.in_a[chain[j]]) internal_ok = false;
            if (internal_ok) {
                std::vector<VertexId> path;
                for (int p : chain) path.push_back(aux.verts[p]);
                out.push_back(std::move(path));
            }
        }
    }
    return out;
}

}  // namespace

std::variant<PathPacking, PathBlocker> gallai_packing_or_blocker(const MultiGraph& g,
                                                                 const VertexSet& a, int k) {
    for (VertexId v : a) require(g.has_vertex(v), "gallai: A outside graph");
    require(k >= 0, "gallai: negative budget");

    AuxGraph aux(g, a);
    int num_plain = 0;
    for (char f : aux.in_a)
        if (!f) ++num_plain;
    int nu = aux.gm.solve();
    int packing_size = nu - num_plain;
    check(packing_size >= 0, "gallai: matching smaller than copy pairs");

    if (packing_size >= k + 1) {
        auto paths = project_a_paths(aux);
        check(static_cast<int>(paths.size()) >= packing_size,
              "gallai: projection lost packing paths");
        PathPacking packing;
        packing.paths.assign(paths.begin(), paths.begin() + (k + 1));
        return packing;
    }

    // Blocker from the structure of inessential vertices of the auxiliary
    // graph: D = missed-by-some-maximum-matching, X = N(D) \ D, C = rest.
    // Take X projected, all A-vertices of C, and all but one A-vertex from
    // every component of the graph induced on D.
    std::vector<char> ines = aux.gm.inessential();
    std::vector<char> in_x(aux.gm.n, 0);
    for (int v = 0; v < aux.gm.n; ++v) {
        if (ines[v]) continue;
        for (int w : aux.gm.adj[v])
            if (ines[w]) in_x[v] = 1;
    }

    PathBlocker blocker;
    for (int v = 0; v < aux.gm.n; ++v)
        if (in_x[v]) blocker.vertices.insert(aux.original(v));

    // components of the induced subgraph on D
    std::vector<int> comp(aux.gm.n, -1);
    int ncomp = 0;
    for (int v = 0; v < aux.gm.n; ++v) {
        if (!ines[v] || comp[v] != -1) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : aux.gm.adj[x]) {
                if (ines[w] && comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    std::vector<VertexId> keeper(ncomp, -1);
    for (size_t i = 0; i < aux.verts.size(); ++i) {
        if (!aux.in_a[i]) continue;
        int node = aux.node_of_single[i];
        VertexId v = aux.verts[i];
        if (ines[node]) {
            int c = comp[node];
            if (keeper[c] == -1)
                keeper[c] = v;  // lowest id survives, the rest go to the blocker
            else
                blocker.vertices.insert(v);
        } else if (!in_x[node]) {
            blocker.vertices.insert(v);  // essential and not next to D
        }
    }

    check(static_cast<int>(blocker.vertices.size()) <= 2 * packing_size,
          "gallai: blocker exceeds twice the packing");
    return blocker;
}

// ---------------------------------------------------------------------------
// 2-expansion

ExpansionResult two_expansion(const std::vector<int>& xs, const std::vector<int>& ys,
                              const BipartiteEdges& edges) {
    require(!xs.empty(), "two_expansion: empty X");
    require(ys.size() >= 2 * xs.size(), "two_expansion: |Y| < 2|X|");

    std::map<int, int> xi, yi;
    for (size_t i = 0; i < xs.size(); ++i) xi[xs[i]] = static_cast<int>(i);
    for (size_t i = 0; i < ys.size(); ++i) yi[ys[i]] = static_cast<int>(i);
    int nx = static_cast<int>(xs.size()), ny = static_cast<int>(ys.size());
    std::vector<std::set<int>> nbr_x(nx);  // x -> y positions
    std::vector<std::set<int>> nbr_y(ny);
    for (auto [x, y] : edges) {
        auto ix = xi.find(x);
        auto iy = yi.find(y);
        require(ix != xi.end() && iy != yi.end(), "two_expansion: edge outside bipartition");
        nbr_x[ix->second].insert(iy->second);
        nbr_y[iy->second].insert(ix->second);
    }
    for (int y = 0; y < ny; ++y)
        require(!nbr_y[y].empty(), "two_expansion: isolated Y vertex");

    std::vector<char> x_active(nx, 1), y_active(ny, 1);
    int active_x = nx;

    while (true) {
        check(active_x > 0, "two_expansion: X exhausted");
        // matching in the graph with X doubled: copies 2i and 2i+1
        Kuhn kuhn(2 * nx, ny);
        for (int x = 0; x < nx; ++x) {
            if (!x_active[x]) continue;
            for (int y : nbr_x[x]) {
                if (!y_active[y]) continue;
                kuhn.adj[2 * x].push_back(y);
                kuhn.adj[2 * x + 1].push_back(y);
            }
        }
        kuhn.solve();

        bool saturated = true;
        for (int x = 0; x < nx && saturated; ++x)
            if (x_active[x] && (kuhn.match_l[2 * x] == -1 || kuhn.match_l[2 * x + 1] == -1))
                saturated = false;

        if (saturated) {
            ExpansionResult res;
            std::set<int> yprime;
            for (int x = 0; x < nx; ++x) {
                if (!x_active[x]) continue;
                int y1 = kuhn.match_l[2 * x], y2 = kuhn.match_l[2 * x + 1];
                res.x_prime.push_back(xs[x]);
                res.assignment[xs[x]] = {ys[y1], ys[y2]};
                yprime.insert(y1);
                yprime.insert(y2);
            }
            // Y' = exactly the privately assigned vertices
            for (int y : yprime) res.y_prime.push_back(ys[y]);
            // postcondition: N(Y') ∩ X = X'
            for (int y : yprime)
                for (int x : nbr_y[y])
                    check(x_active[x], "two_expansion: Y' touches removed X");
            return res;
        }

        // alternating reachability from unmatched X-copies; the reached X
        // vertices form a Hall violator, drop them with their neighbourhood
        std::vector<char> xr(2 * nx, 0), yr(ny, 0);
        std::queue<int> q;
        for (int x = 0; x < nx; ++x) {
            if (!x_active[x]) continue;
            for (int c : {2 * x, 2 * x + 1})
                if (kuhn.match_l[c] == -1 && !xr[c]) {
                    xr[c] = 1;
                    q.push(c);
                }
        }
        check(!q.empty(), "two_expansion: unsaturated without free copies");
        while (!q.empty()) {
            int c = q.front();
            q.pop();
            int x = c / 2;
            for (int y : nbr_x[x]) {
                if (!y_active[y] || yr[y]) continue;
                yr[y] = 1;
                int back = kuhn.match_r[y];
                check(back != -1, "two_expansion: augmenting path missed");
                if (!xr[back]) {
                    xr[back] = 1;
                    q.push(back);
                }
            }
        }
        int removed = 0;
        for (int x = 0; x < nx; ++x) {
            if (!x_active[x]) continue;
            if (xr[2 * x] || xr[2 * x + 1]) {
                x_active[x] = 0;
                --active_x;
                ++removed;
            }
        }
        check(removed > 0, "two_expansion: violator extraction stalled");
        for (int y = 0; y < ny; ++y)
            if (yr[y]) y_active[y] = 0;
    }
}

}  // namespace sfvs
