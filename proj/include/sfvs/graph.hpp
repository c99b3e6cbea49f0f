#pragma once

#include <vector>

#include "sfvs/base.hpp"

namespace sfvs {

struct EdgeRec {
    EdgeId id = -1;
    VertexId u = -1;
    VertexId v = -1;
    bool in_s = false;

    bool is_loop() const { return u == v; }
    VertexId other(VertexId w) const { return w == u ? v : u; }
};

/// Undirected multigraph with loops and parallel edges. Vertex and edge
/// identifiers are dense integers handed out at insertion time; they stay
/// stable under deletion and are never reused. All mutating operations
/// below return new values (deletion works on a copy), so any graph value
/// can be shared freely.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int n) { add_vertices(n); }

    VertexId add_vertex();
    void add_vertices(int count);
    EdgeId add_edge(VertexId u, VertexId v, bool in_s = false);
    /// Construction-time helper; values are treated as immutable once shared.
    void set_edge_flag(EdgeId e, bool in_s);

    bool has_vertex(VertexId v) const {
        return v >= 0 && v < static_cast<int>(v_alive_.size()) && v_alive_[v];
    }
    bool has_edge(EdgeId e) const {
        return e >= 0 && e < static_cast<int>(e_alive_.size()) && e_alive_[e];
    }
    const EdgeRec& edge(EdgeId e) const;

    int num_vertices() const { return n_alive_; }
    int num_edges() const { return m_alive_; }
    int vertex_id_bound() const { return static_cast<int>(v_alive_.size()); }

    std::vector<VertexId> vertices() const;  // ascending
    VertexSet vertex_set() const;
    std::vector<EdgeRec> edges() const;  // ascending id
    EdgeSet edge_ids() const;

    /// Alive edges incident to v; a loop appears once in the list.
    const std::vector<EdgeId>& incident(VertexId v) const;
    /// Loops count twice.
    int degree(VertexId v) const;

private:
    int n_alive_ = 0;
    int m_alive_ = 0;
    std::vector<char> v_alive_;
    std::vector<char> e_alive_;
    std::vector<EdgeRec> edge_recs_;
    std::vector<std::vector<EdgeId>> inc_;

    friend MultiGraph delete_vertices(const MultiGraph&, const VertexSet&);
    friend MultiGraph delete_edges(const MultiGraph&, const EdgeSet&);
};

struct VertexSetPartition {
    std::vector<VertexSet> blocks;  // pairwise disjoint, nonempty
};

/// Blocks are the connected components, ordered by smallest member.
VertexSetPartition connected_components(const MultiGraph& g);

/// Edges whose removal increases the component count. Loops and members of
/// parallel bundles are never bridges.
EdgeSet bridges(const MultiGraph& g);

/// Deterministic spanning forest: edges scanned in ascending id, loops and
/// cycle-closing edges skipped.
EdgeSet spanning_forest(const MultiGraph& g);

/// Induced subgraph on V minus x. Unknown identifiers in x signal a caller bug.
MultiGraph delete_vertices(const MultiGraph& g, const VertexSet& x);
MultiGraph delete_edges(const MultiGraph& g, const EdgeSet& es);

/// N(X): vertices outside x adjacent to x.
VertexSet neighborhood(const MultiGraph& g, const VertexSet& x);

/// E(X,Y): edges with one endpoint in x and the other in y.
EdgeSet edge_cut(const MultiGraph& g, const VertexSet& x, const VertexSet& y);

/// V(E'): all endpoints of the given edges.
VertexSet endpoints(const MultiGraph& g, const EdgeSet& es);

EdgeSet s_edges(const MultiGraph& g);

/// Graph with all S-flagged edges removed.
MultiGraph drop_s_edges(const MultiGraph& g);

/// Forest helper: removes a degree-2 vertex and joins its two distinct
/// neighbours with a fresh non-S edge.
MultiGraph suppress_degree2_vertex(const MultiGraph& g, VertexId v);

}  // namespace sfvs
