#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "sfvs/graph.hpp"

namespace sfvs {

/// Edge-variant instance: S is the set of edges carrying the in_s flag.
struct EsfvsInstance {
    MultiGraph graph;
    int k = 0;

    EdgeSet s_edges() const { return sfvs::s_edges(graph); }
};

/// Vertex-variant instance. Edges of the graph never carry S-flags here.
struct SfvsInstance {
    MultiGraph graph;
    VertexSet s_vertices;
    int k = 0;
};

/// Same graph and budget; S' = all edges incident to an S-vertex.
EsfvsInstance sfvs_to_esfvs(const SfvsInstance& inst);

struct EsfvsToSfvsResult {
    SfvsInstance instance;
    std::map<EdgeId, VertexId> subdivision_vertex;  // original S-edge -> fresh midpoint
};

/// Every S-edge uv is replaced by a path u-x-v; S becomes the set of
/// midpoints x. Budget unchanged.
EsfvsToSfvsResult esfvs_to_sfvs(const EsfvsInstance& inst);

/// Terminal-separation instance rewritten as an edge-variant instance: a
/// clique of terminal copies plus one S-edge per terminal.
EsfvsInstance multiway_to_esfvs(const MultiGraph& g, const std::vector<VertexId>& terminals,
                                int k);

using ParsedInstance = std::variant<EsfvsInstance, SfvsInstance>;

/// Line-oriented format, `c` comment lines ignored:
///   p esfvs <n> <m> <k>   or   p sfvs <n> <m> <k>
///   e <u> <v> <flag>      (1-based vertices; flag 1 marks S, sfvs requires 0)
///   s <v>                 (sfvs only)
/// Throws parse_error with the offending line number.
ParsedInstance parse_instance(const std::string& text);

std::string serialize(const EsfvsInstance& inst);
std::string serialize(const SfvsInstance& inst);

/// Original 1-based file label for an internal vertex id.
inline int vertex_label(VertexId v) { return v + 1; }

/// Simple random instance: m distinct non-loop edges, s_count of them
/// flagged. Deterministic in the seed.
EsfvsInstance gen_random(int n, int m, int s_count, int k, std::uint64_t seed);

struct PlantedInstance {
    EsfvsInstance instance;
    VertexSet planted;  // feasible by construction, not necessarily minimum
};

/// YES instance with a planted k-vertex hub set hitting every S-cycle.
PlantedInstance gen_planted(int n, int k, std::uint64_t seed);

}  // namespace sfvs
