#include "sfvs/multiway_cut.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace sfvs {

namespace {

// Vertex-capacity flow network over split nodes; terminals get effectively
// unbounded capacity so minimum cuts consist of plain vertices only.
struct SplitFlow {
    struct Arc {
        int to, cap, flow = 0;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> adj;
    int source, sink;

    SplitFlow(const MultiGraph& g, const VertexSet& x, const VertexSet& y, int big)
        : adj(2 * g.vertex_id_bound() + 2) {
        source = 2 * g.vertex_id_bound();
        sink = source + 1;
        for (VertexId v : g.vertices()) {
            bool terminal = x.count(v) || y.count(v);
            add(vin(v), vout(v), terminal ? big : 1);
        }
        std::set<std::pair<VertexId, VertexId>> seen;
        for (const EdgeRec& rec : g.edges()) {
            if (rec.is_loop()) continue;
            auto key = std::minmax(rec.u, rec.v);
            if (!seen.insert(key).second) continue;
            add(vout(rec.u), vin(rec.v), big);
            add(vout(rec.v), vin(rec.u), big);
        }
        for (VertexId v : x) add(source, vin(v), big);
        for (VertexId v : y) add(vout(v), sink, big);
    }

    static int vin(VertexId v) { return 2 * v; }
    static int vout(VertexId v) { return 2 * v + 1; }

    void add(int from, int to, int cap) {
        adj[from].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({to, cap});
        adj[to].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({from, 0});
    }

    int residual(int id) const { return arcs[id].cap - arcs[id].flow; }

    bool augment_unit() {
        std::vector<int> pred(adj.size(), -1);
        std::vector<char> seen(adj.size(), 0);
        std::queue<int> q;
        q.push(source);
        seen[source] = 1;
        while (!q.empty() && !seen[sink]) {
            int v = q.front();
            q.pop();
            for (int id : adj[v]) {
                if (residual(id) <= 0 || seen[arcs[id].to]) continue;
                seen[arcs[id].to] = 1;
                pred[arcs[id].to] = id;
                q.push(arcs[id].to);
            }
        }
        if (!seen[sink]) return false;
        for (int v = sink; v != source;) {
            int id = pred[v];
            arcs[id].flow += 1;
            arcs[id ^ 1].flow -= 1;
            v = arcs[id ^ 1].to;
        }
        return true;
    }

    // Minimum separator pushed toward y: vertices whose split arc crosses
    // into the set of nodes still able to reach the sink in the residual.
    VertexSet pushed_cut(const MultiGraph& g) const {
        std::vector<char> coreach(adj.size(), 0);
        std::queue<int> q;
        q.push(sink);
        coreach[sink] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : adj[v]) {
                // arc id^1 ends at v; its tail can reach the sink if residual
                if (residual(id ^ 1) <= 0) continue;
                int from = arcs[id].to;
                if (!coreach[from]) {
                    coreach[from] = 1;
                    q.push(from);
                }
            }
        }
        VertexSet cut;
        for (VertexId v : g.vertices())
            if (!coreach[vin(v)] && coreach[vout(v)]) {
                check(split_arc_saturated(v), "pushed_cut: crossing split arc not saturated");
                cut.insert(v);
            }
        return cut;
    }

    bool split_arc_saturated(VertexId v) const {
        for (int id : adj[vin(v)])
            if ((id & 1) == 0 && arcs[id].to == vout(v)) return residual(id) == 0;
        return false;
    }
};

int max_flow_capped(SplitFlow& net, int cap) {
    int flow = 0;
    while (flow <= cap && net.augment_unit()) ++flow;
    return flow;
}

void enumerate_separators(const MultiGraph& g, VertexSet x, const VertexSet& y, int k,
                          VertexSet& acc, std::set<VertexSet>& out, int depth) {
    check(depth < 64, "important_separators: runaway recursion");
    if (k < 0) return;
    SplitFlow net(g, x, y, k + 2);
    int flow = max_flow_capped(net, k);
    if (flow > k) return;
    if (flow == 0) {
        out.insert(acc);
        return;
    }
    VertexSet cut = net.pushed_cut(g);
    check(!cut.empty() && static_cast<int>(cut.size()) == flow,
          "important_separators: bad pushed cut");
    VertexId v = *cut.begin();

    // v joins the separator
    acc.insert(v);
    enumerate_separators(delete_vertices(g, {v}), x, y, k - 1, acc, out, depth + 1);
    acc.erase(v);

    // v joins the x-side; the minimum cut grows strictly
    x.insert(v);
    enumerate_separators(g, x, y, k, acc, out, depth + 1);
}

}  // namespace

std::vector<VertexSet> important_separators(const MultiGraph& g, const VertexSet& x,
                                            const VertexSet& y, int k) {
    for (VertexId v : x) require(g.has_vertex(v), "important_separators: unknown x vertex");
    for (VertexId v : y) require(g.has_vertex(v), "important_separators: unknown y vertex");
    std::set<VertexSet> out;
    VertexSet acc;
    enumerate_separators(g, x, y, k, acc, out, 0);
    std::vector<VertexSet> list(out.begin(), out.end());
    std::sort(list.begin(), list.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return list;
}

namespace {

// Lowest-id terminal sharing a component with another terminal, if any.
std::optional<std::pair<VertexId, VertexSet>> find_unseparated(const MultiGraph& g,
                                                               const VertexSet& terminals) {
    VertexSetPartition comps = connected_components(g);
    for (const VertexSet& block : comps.blocks) {
        std::vector<VertexId> here;
        for (VertexId t : terminals)
            if (block.count(t)) here.push_back(t);
        if (here.size() >= 2) {
            VertexSet rest(terminals);
            rest.erase(here.front());
            return std::make_pair(here.front(), rest);
        }
    }
    return std::nullopt;
}

std::optional<VertexSet> solve_rec(const MultiGraph& g, const VertexSet& terminals, int k) {
    auto pending = find_unseparated(g, terminals);
    if (!pending) return VertexSet{};
    if (k <= 0) return std::nullopt;
    auto [t, rest] = *pending;
    for (const VertexSet& sep : important_separators(g, {t}, rest, k)) {
        check(!sep.empty(), "solve_mwc: empty separator for connected terminals");
        auto sub = solve_rec(delete_vertices(g, sep), terminals, k - static_cast<int>(sep.size()));
        if (sub) {
            VertexSet full = *sub;
            full.insert(sep.begin(), sep.end());
            return full;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<VertexSet> solve_mwc(const MwcInstance& inst) {
    for (VertexId t : inst.terminals)
        require(inst.graph.has_vertex(t), "solve_mwc: unknown terminal");
    if (inst.terminals.size() <= 1) return VertexSet{};
    auto res = solve_rec(inst.graph, inst.terminals, inst.k);
    if (!res) return std::nullopt;
    // verify before trusting: disjoint from terminals, within budget, separating
    check(static_cast<int>(res->size()) <= inst.k, "solve_mwc: witness exceeds budget");
    for (VertexId v : *res)
        check(!inst.terminals.count(v), "solve_mwc: witness deletes a terminal");
    MultiGraph rest = delete_vertices(inst.graph, *res);
    check(!find_unseparated(rest, inst.terminals).has_value(),
          "solve_mwc: witness fails to separate");
    return res;
}

}  // namespace sfvs
