#include "sfvs/oracle.hpp"

#include <algorithm>

namespace sfvs {

bool is_solution(const EsfvsInstance& inst, const VertexSet& t) {
    for (VertexId v : t) require(inst.graph.has_vertex(v), "is_solution: unknown vertex");
    if (static_cast<int>(t.size()) > inst.k) return false;
    MultiGraph rest = delete_vertices(inst.graph, t);
    EdgeSet rest_bridges = bridges(rest);
    for (const EdgeRec& rec : rest.edges()) {
        if (!rec.in_s) continue;
        if (rec.is_loop()) return false;
        if (!rest_bridges.count(rec.id)) return false;
    }
    return true;
}

namespace {

bool search(const EsfvsInstance& inst, const std::vector<VertexId>& verts, int size,
            size_t from, VertexSet& cur, VertexSet& out) {
    if (static_cast<int>(cur.size()) == size) {
        if (is_solution(inst, cur)) {
            out = cur;
            return true;
        }
        return false;
    }
    int still_needed = size - static_cast<int>(cur.size());
    for (size_t i = from; i + still_needed <= verts.size(); ++i) {
        cur.insert(verts[i]);
        if (search(inst, verts, size, i + 1, cur, out)) return true;
        cur.erase(verts[i]);
    }
    return false;
}

}  // namespace

std::optional<VertexSet> brute_force(const EsfvsInstance& inst) {
    if (inst.k < 0) return std::nullopt;
    std::vector<VertexId> verts = inst.graph.vertices();
    int max_size = std::min<int>(inst.k, static_cast<int>(verts.size()));
    for (int size = 0; size <= max_size; ++size) {
        VertexSet cur, out;
        if (search(inst, verts, size, 0, cur, out)) return out;
    }
    return std::nullopt;
}

}  // namespace sfvs
