#include "sfvs/graph.hpp"

#include <algorithm>
#include <numeric>

namespace sfvs {

VertexId MultiGraph::add_vertex() {
    VertexId v = static_cast<VertexId>(v_alive_.size());
    v_alive_.push_back(1);
    inc_.emplace_back();
    ++n_alive_;
    return v;
}

void MultiGraph::add_vertices(int count) {
    require(count >= 0, "add_vertices: negative count");
    for (int i = 0; i < count; ++i) add_vertex();
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v, bool in_s) {
    require(has_vertex(u) && has_vertex(v), "add_edge: unknown endpoint");
    EdgeId e = static_cast<EdgeId>(edge_recs_.size());
    edge_recs_.push_back(EdgeRec{e, u, v, in_s});
    e_alive_.push_back(1);
    inc_[u].push_back(e);
    if (v != u) inc_[v].push_back(e);
    ++m_alive_;
    return e;
}

void MultiGraph::set_edge_flag(EdgeId e, bool in_s) {
    require(has_edge(e), "set_edge_flag: unknown edge");
    edge_recs_[e].in_s = in_s;
}

const EdgeRec& MultiGraph::edge(EdgeId e) const {
    require(has_edge(e), "edge: unknown identifier");
    return edge_recs_[e];
}

std::vector<VertexId> MultiGraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(n_alive_);
    for (VertexId v = 0; v < static_cast<int>(v_alive_.size()); ++v)
        if (v_alive_[v]) out.push_back(v);
    return out;
}

VertexSet MultiGraph::vertex_set() const {
    VertexSet out;
    for (VertexId v = 0; v < static_cast<int>(v_alive_.size()); ++v)
        if (v_alive_[v]) out.insert(v);
    return out;
}

std::vector<EdgeRec> MultiGraph::edges() const {
    std::vector<EdgeRec> out;
    out.reserve(m_alive_);
    for (EdgeId e = 0; e < static_cast<int>(e_alive_.size()); ++e)
        if (e_alive_[e]) out.push_back(edge_recs_[e]);
    return out;
}

EdgeSet MultiGraph::edge_ids() const {
    EdgeSet out;
    for (EdgeId e = 0; e < static_cast<int>(e_alive_.size()); ++e)
        if (e_alive_[e]) out.insert(e);
    return out;
}

const std::vector<EdgeId>& MultiGraph::incident(VertexId v) const {
    require(has_vertex(v), "incident: unknown vertex");
    return inc_[v];
}

int MultiGraph::degree(VertexId v) const {
    int d = 0;
    for (EdgeId e : incident(v)) d += edge_recs_[e].is_loop() ? 2 : 1;
    return d;
}

MultiGraph delete_vertices(const MultiGraph& g, const VertexSet& x) {
    for (VertexId v : x) require(g.has_vertex(v), "delete_vertices: unknown vertex");
    MultiGraph out = g;
    for (VertexId v : x) {
        for (EdgeId e : out.inc_[v]) {
            if (!out.e_alive_[e]) continue;
            out.e_alive_[e] = 0;
            --out.m_alive_;
            const EdgeRec& rec = out.edge_recs_[e];
            VertexId w = rec.other(v);
            if (w != v) {
                auto& lst = out.inc_[w];
                lst.erase(std::remove(lst.begin(), lst.end(), e), lst.end());
            }
        }
        out.inc_[v].clear();
        out.v_alive_[v] = 0;
        --out.n_alive_;
    }
    return out;
}

MultiGraph delete_edges(const MultiGraph& g, const EdgeSet& es) {
    for (EdgeId e : es) require(g.has_edge(e), "delete_edges: unknown edge");
    MultiGraph out = g;
    for (EdgeId e : es) {
        const EdgeRec& rec = out.edge_recs_[e];
        out.e_alive_[e] = 0;
        --out.m_alive_;
        auto& lu = out.inc_[rec.u];
        lu.erase(std::remove(lu.begin(), lu.end(), e), lu.end());
        if (rec.v != rec.u) {
            auto& lv = out.inc_[rec.v];
            lv.erase(std::remove(lv.begin(), lv.end(), e), lv.end());
        }
    }
    return out;
}

VertexSetPartition connected_components(const MultiGraph& g) {
    VertexSetPartition out;
    std::vector<char> seen(g.vertex_id_bound(), 0);
    for (VertexId start : g.vertices()) {
        if (seen[start]) continue;
        VertexSet block;
        std::vector<VertexId> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            block.insert(v);
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.edge(e).other(v);
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

namespace {

struct BridgeFrame {
    VertexId v;
    EdgeId entry;  // edge used to reach v, -1 at a root
    size_t next;   // cursor into incident list
};

}  // namespace

EdgeSet bridges(const MultiGraph& g) {
    int bound = g.vertex_id_bound();
    std::vector<int> disc(bound, -1), low(bound, -1);
    EdgeSet out;
    int timer = 0;
    for (VertexId root : g.vertices()) {
        if (disc[root] != -1) continue;
        std::vector<BridgeFrame> stack;
        stack.push_back({root, -1, 0});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            BridgeFrame& fr = stack.back();
            const auto& inc = g.incident(fr.v);
            if (fr.next < inc.size()) {
                EdgeId e = inc[fr.next++];
                const EdgeRec& rec = g.edge(e);
                if (rec.is_loop() || e == fr.entry) continue;
                VertexId to = rec.other(fr.v);
                if (disc[to] == -1) {
                    disc[to] = low[to] = timer++;
                    stack.push_back({to, e, 0});
                } else {
                    low[fr.v] = std::min(low[fr.v], disc[to]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    BridgeFrame& par = stack.back();
                    low[par.v] = std::min(low[par.v], low[fr.v]);
                    if (low[fr.v] > disc[par.v]) out.insert(fr.entry);
                }
            }
        }
    }
    return out;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

EdgeSet spanning_forest(const MultiGraph& g) {
    Dsu dsu(g.vertex_id_bound());
    EdgeSet out;
    for (const EdgeRec& rec : g.edges()) {
        if (rec.is_loop()) continue;
        if (dsu.unite(rec.u, rec.v)) out.insert(rec.id);
    }
    return out;
}

VertexSet neighborhood(const MultiGraph& g, const VertexSet& x) {
    VertexSet out;
    for (VertexId v : x) {
        require(g.has_vertex(v), "neighborhood: unknown vertex");
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.edge(e).other(v);
            if (!x.count(w)) out.insert(w);
        }
    }
    return out;
}

EdgeSet edge_cut(const MultiGraph& g, const VertexSet& x, const VertexSet& y) {
    EdgeSet out;
    for (const EdgeRec& rec : g.edges()) {
        bool ux = x.count(rec.u) > 0, uy = y.count(rec.u) > 0;
        bool vx = x.count(rec.v) > 0, vy = y.count(rec.v) > 0;
        if ((ux && vy) || (uy && vx)) out.insert(rec.id);
    }
    return out;
}

VertexSet endpoints(const MultiGraph& g, const EdgeSet& es) {
    VertexSet out;
    for (EdgeId e : es) {
        const EdgeRec& rec = g.edge(e);
        out.insert(rec.u);
        out.insert(rec.v);
    }
    return out;
}

EdgeSet s_edges(const MultiGraph& g) {
    EdgeSet out;
    for (const EdgeRec& rec : g.edges())
        if (rec.in_s) out.insert(rec.id);
    return out;
}

MultiGraph drop_s_edges(const MultiGraph& g) { return delete_edges(g, s_edges(g)); }

MultiGraph suppress_degree2_vertex(const MultiGraph& g, VertexId v) {
    require(g.has_vertex(v), "suppress_degree2_vertex: unknown vertex");
    require(g.degree(v) == 2 && g.incident(v).size() == 2,
            "suppress_degree2_vertex: vertex degree is not 2 (or incident loop)");
    VertexId a = g.edge(g.incident(v)[0]).other(v);
    VertexId b = g.edge(g.incident(v)[1]).other(v);
    require(a != b, "suppress_degree2_vertex: neighbours coincide, not a forest");
    MultiGraph out = delete_vertices(g, {v});
    out.add_edge(a, b, false);
    return out;
}

}  // namespace sfvs
