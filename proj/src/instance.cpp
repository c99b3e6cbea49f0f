#include "sfvs/instance.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace sfvs {

EsfvsInstance sfvs_to_esfvs(const SfvsInstance& inst) {
    MultiGraph out = inst.graph;
    for (const EdgeRec& rec : out.edges()) {
        bool flag = inst.s_vertices.count(rec.u) || inst.s_vertices.count(rec.v);
        out.set_edge_flag(rec.id, flag);
    }
    return EsfvsInstance{std::move(out), inst.k};
}

EsfvsToSfvsResult esfvs_to_sfvs(const EsfvsInstance& inst) {
    MultiGraph out = inst.graph;
    EdgeSet s = inst.s_edges();
    std::vector<EdgeRec> flagged;
    for (EdgeId e : s) flagged.push_back(out.edge(e));
    out = delete_edges(out, s);

    EsfvsToSfvsResult res;
    for (const EdgeRec& rec : flagged) {
        VertexId x = out.add_vertex();
        out.add_edge(rec.u, x, false);
        out.add_edge(x, rec.v, false);
        res.subdivision_vertex[rec.id] = x;
        res.instance.s_vertices.insert(x);
    }
    res.instance.graph = std::move(out);
    res.instance.k = inst.k;
    return res;
}

EsfvsInstance multiway_to_esfvs(const MultiGraph& g, const std::vector<VertexId>& terminals,
                                int k) {
    VertexSet seen;
    for (VertexId t : terminals) {
        require(g.has_vertex(t), "multiway_to_esfvs: unknown terminal");
        require(seen.insert(t).second, "multiway_to_esfvs: duplicate terminal");
    }
    MultiGraph out = g;
    for (const EdgeRec& rec : out.edges()) out.set_edge_flag(rec.id, false);

    std::vector<VertexId> copies;
    for (VertexId t : terminals) {
        VertexId c = out.add_vertex();
        copies.push_back(c);
        out.add_edge(t, c, true);
    }
    for (size_t i = 0; i < copies.size(); ++i)
        for (size_t j = i + 1; j < copies.size(); ++j) out.add_edge(copies[i], copies[j], false);
    return EsfvsInstance{out, k};
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, int line, const char* what) {
    try {
        size_t pos = 0;
        long val = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("trailing");
        if (val < -1000000000L || val > 1000000000L) throw std::out_of_range("range");
        return static_cast<int>(val);
    } catch (const std::exception&) {
        throw parse_error(line, std::string("expected integer for ") + what + ", got '" + tok + "'");
    }
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    bool edge_variant = false;
    int n = 0, m = 0, k = 0;
    int edges_seen = 0;
    MultiGraph g;
    VertexSet s_vertices;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) throw parse_error(lineno, "duplicate problem line");
            if (toks.size() != 5) throw parse_error(lineno, "malformed problem line");
            if (toks[1] == "esfvs")
                edge_variant = true;
            else if (toks[1] == "sfvs")
                edge_variant = false;
            else
                throw parse_error(lineno, "unknown problem tag '" + toks[1] + "'");
            n = parse_int(toks[2], lineno, "n");
            m = parse_int(toks[3], lineno, "m");
            k = parse_int(toks[4], lineno, "k");
            if (n < 0 || m < 0) throw parse_error(lineno, "negative size in problem line");
            if (k < 0) throw parse_error(lineno, "negative budget");
            if (k > n) throw parse_error(lineno, "budget exceeds vertex count");
            g.add_vertices(n);
            have_header = true;
        } else if (toks[0] == "e") {
            if (!have_header) throw parse_error(lineno, "edge before problem line");
            if (toks.size() != 4) throw parse_error(lineno, "malformed edge line");
            int u = parse_int(toks[1], lineno, "endpoint");
            int v = parse_int(toks[2], lineno, "endpoint");
            int flag = parse_int(toks[3], lineno, "flag");
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(lineno, "endpoint out of range");
            if (flag != 0 && flag != 1) throw parse_error(lineno, "edge flag must be 0 or 1");
            if (!edge_variant && flag != 0)
                throw parse_error(lineno, "sfvs edges must carry flag 0");
            if (edges_seen >= m) throw parse_error(lineno, "more edges than declared");
            g.add_edge(u - 1, v - 1, flag == 1);
            ++edges_seen;
        } else if (toks[0] == "s") {
            if (!have_header) throw parse_error(lineno, "s-line before problem line");
            if (edge_variant) throw parse_error(lineno, "s-line not allowed in esfvs");
            if (toks.size() != 2) throw parse_error(lineno, "malformed s-line");
            int v = parse_int(toks[1], lineno, "s-vertex");
            if (v < 1 || v > n) throw parse_error(lineno, "s-vertex out of range");
            s_vertices.insert(v - 1);
        } else {
            throw parse_error(lineno, "unknown line type '" + toks[0] + "'");
        }
    }
    if (!have_header) throw parse_error(lineno, "missing problem line");
    if (edges_seen != m) throw parse_error(lineno, "fewer edges than declared");
    if (edge_variant) return EsfvsInstance{std::move(g), k};
    return SfvsInstance{std::move(g), std::move(s_vertices), k};
}

namespace {

// Compacts alive vertex ids to 1..n in ascending order.
std::map<VertexId, int> label_map(const MultiGraph& g) {
    std::map<VertexId, int> out;
    int next = 1;
    for (VertexId v : g.vertices()) out[v] = next++;
    return out;
}

}  // namespace

std::string serialize(const EsfvsInstance& inst) {
    auto labels = label_map(inst.graph);
    std::ostringstream out;
    out << "p esfvs " << inst.graph.num_vertices() << " " << inst.graph.num_edges() << " "
        << inst.k << "\n";
    for (const EdgeRec& rec : inst.graph.edges())
        out << "e " << labels.at(rec.u) << " " << labels.at(rec.v) << " " << (rec.in_s ? 1 : 0)
            << "\n";
    return out.str();
}

std::string serialize(const SfvsInstance& inst) {
    auto labels = label_map(inst.graph);
    std::ostringstream out;
    out << "p sfvs " << inst.graph.num_vertices() << " " << inst.graph.num_edges() << " " << inst.k
        << "\n";
    for (const EdgeRec& rec : inst.graph.edges())
        out << "e " << labels.at(rec.u) << " " << labels.at(rec.v) << " 0\n";
    for (VertexId v : inst.s_vertices) out << "s " << labels.at(v) << "\n";
    return out.str();
}

namespace {

// Deterministic across platforms: raw engine words with modulo reduction.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
        std::swap(v[i], v[rng.below(i + 1)]);
}

}  // namespace

EsfvsInstance gen_random(int n, int m, int s_count, int k, std::uint64_t seed) {
    require(n >= 0, "gen_random: negative n");
    long max_m = static_cast<long>(n) * (n - 1) / 2;
    require(m >= 0 && m <= max_m, "gen_random: m out of range for simple graph");
    require(s_count >= 0 && s_count <= m, "gen_random: s_count out of range");
    require(k >= 0 && k <= n, "gen_random: k out of range");

    Rng rng(seed);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(max_m);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    shuffle(pairs, rng);

    MultiGraph g(n);
    for (int i = 0; i < m; ++i) g.add_edge(pairs[i].first, pairs[i].second, i < s_count);
    return EsfvsInstance{std::move(g), k};
}

PlantedInstance gen_planted(int n, int k, std::uint64_t seed) {
    require(k >= 0, "gen_planted: negative k");
    require(n >= 2 * k + 2 && n >= 2, "gen_planted: n too small for k hubs");

    Rng rng(seed);
    std::vector<VertexId> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    shuffle(order, rng);
    VertexSet hubs(order.begin(), order.begin() + k);
    std::vector<VertexId> rest(order.begin() + k, order.end());

    MultiGraph g(n);
    // random spanning tree on the non-hub part
    for (size_t i = 1; i < rest.size(); ++i)
        g.add_edge(rest[i], rest[rng.below(static_cast<int>(i))], false);

    // S-edges attach to hubs, and each gets a non-S return edge closing a cycle
    int s_count = 3 * k;
    for (int i = 0; i < s_count; ++i) {
        VertexId h = *std::next(hubs.begin(), i % k);
        VertexId a = rest[rng.below(static_cast<int>(rest.size()))];
        VertexId b = rest[rng.below(static_cast<int>(rest.size()))];
        while (b == a) b = rest[rng.below(static_cast<int>(rest.size()))];
        g.add_edge(h, a, true);
        g.add_edge(h, b, false);
    }

    // noise edges among everyone
    int noise = n / 5;
    for (int i = 0; i < noise; ++i) {
        VertexId u = rng.below(n), v = rng.below(n);
        if (u == v) continue;
        g.add_edge(u, v, false);
    }
    return PlantedInstance{EsfvsInstance{std::move(g), k}, std::move(hubs)};
}

}  // namespace sfvs
