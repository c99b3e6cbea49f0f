#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sfvs/multiway_cut.hpp"
#include "sfvs/oracle.hpp"
#include "sfvs/reduction.hpp"
#include "sfvs/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitUsage = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sfvs::precondition_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

sfvs::EsfvsInstance load_as_edge_variant(const std::string& path) {
    sfvs::ParsedInstance parsed = sfvs::parse_instance(read_file(path));
    if (std::holds_alternative<sfvs::EsfvsInstance>(parsed))
        return std::get<sfvs::EsfvsInstance>(parsed);
    return sfvs::sfvs_to_esfvs(std::get<sfvs::SfvsInstance>(parsed));
}

void print_answer(const std::optional<sfvs::VertexSet>& answer) {
    if (!answer) {
        std::cout << "NO\n";
        return;
    }
    std::cout << "YES\n";
    for (sfvs::VertexId v : *answer) std::cout << sfvs::vertex_label(v) << "\n";
}

sfvs::VertexSet read_vertex_file(const std::string& path, const sfvs::MultiGraph& g) {
    std::istringstream in(read_file(path));
    sfvs::VertexSet out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c") continue;
        int label = 0;
        try {
            label = std::stoi(tok);
        } catch (const std::exception&) {
            throw sfvs::parse_error(lineno, "expected a vertex label");
        }
        if (label < 1 || !g.has_vertex(label - 1))
            throw sfvs::parse_error(lineno, "vertex label out of range");
        out.insert(label - 1);
    }
    return out;
}

// terminal-separation instance: `p mwc <n> <m> <k>`, `e <u> <v>`, `t <v>`
sfvs::MwcInstance parse_mwc(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0, n = 0, m = 0, k = 0, edges_seen = 0;
    bool have_header = false;
    sfvs::MultiGraph g;
    sfvs::VertexSet terminals;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string prob;
            if (have_header) throw sfvs::parse_error(lineno, "duplicate problem line");
            if (!(ls >> prob >> n >> m >> k) || prob != "mwc" || n < 0 || m < 0 || k < 0)
                throw sfvs::parse_error(lineno, "malformed problem line");
            g.add_vertices(n);
            have_header = true;
        } else if (tag == "e") {
            int u = 0, v = 0;
            if (!have_header || !(ls >> u >> v) || u < 1 || u > n || v < 1 || v > n)
                throw sfvs::parse_error(lineno, "malformed edge line");
            if (++edges_seen > m) throw sfvs::parse_error(lineno, "more edges than declared");
            g.add_edge(u - 1, v - 1, false);
        } else if (tag == "t") {
            int v = 0;
            if (!have_header || !(ls >> v) || v < 1 || v > n)
                throw sfvs::parse_error(lineno, "malformed terminal line");
            terminals.insert(v - 1);
        } else {
            throw sfvs::parse_error(lineno, "unknown line type '" + tag + "'");
        }
    }
    if (!have_header) throw sfvs::parse_error(lineno, "missing problem line");
    if (edges_seen != m) throw sfvs::parse_error(lineno, "fewer edges than declared");
    return sfvs::MwcInstance{std::move(g), std::move(terminals), k};
}

int run_solve(const std::string& path, bool by_s, std::optional<std::uint64_t> permute) {
    sfvs::EsfvsInstance inst = load_as_edge_variant(path);
    sfvs::SolveOptions options;
    options.by_s_only = by_s;
    options.permute_seed = permute;
    print_answer(sfvs::solve(inst, options));
    return kExitOk;
}

int run_oracle(const std::string& path) {
    print_answer(sfvs::brute_force(load_as_edge_variant(path)));
    return kExitOk;
}

int run_reduce(const std::string& path, const std::string& zpath) {
    sfvs::EsfvsInstance inst = load_as_edge_variant(path);
    sfvs::VertexSet z = read_vertex_file(zpath, inst.graph);
    sfvs::ReductionResult res = sfvs::reduce(sfvs::make_disjoint_instance(inst, z));
    if (res.ignore) {
        std::cout << "IGNORE\n";
        return kExitOk;
    }
    std::cout << sfvs::serialize(res.instance.instance);
    std::ostringstream removed, zline;
    for (sfvs::VertexId v : res.removed) removed << " " << sfvs::vertex_label(v);
    for (sfvs::VertexId v : res.instance.z) zline << " " << sfvs::vertex_label(v);
    std::cout << "c removed" << removed.str() << "\n";
    std::cout << "c z" << zline.str() << "\n";
    std::cerr << "reduced: n=" << res.instance.instance.graph.num_vertices()
              << " m=" << res.instance.instance.graph.num_edges()
              << " s=" << res.instance.instance.s_edges().size() << " k=" << res.instance.instance.k
              << " removed=" << res.removed.size() << "\n";
    return kExitOk;
}

int run_mwc(const std::string& path) {
    print_answer(sfvs::solve_mwc(parse_mwc(read_file(path))));
    return kExitOk;
}

int run_convert(const std::string& path, bool to_edge) {
    sfvs::ParsedInstance parsed = sfvs::parse_instance(read_file(path));
    if (to_edge) {
        if (std::holds_alternative<sfvs::EsfvsInstance>(parsed))
            std::cout << sfvs::serialize(std::get<sfvs::EsfvsInstance>(parsed));
        else
            std::cout << sfvs::serialize(sfvs::sfvs_to_esfvs(std::get<sfvs::SfvsInstance>(parsed)));
    } else {
        if (std::holds_alternative<sfvs::SfvsInstance>(parsed))
            std::cout << sfvs::serialize(std::get<sfvs::SfvsInstance>(parsed));
        else
            std::cout << sfvs::serialize(
                sfvs::esfvs_to_sfvs(std::get<sfvs::EsfvsInstance>(parsed)).instance);
    }
    return kExitOk;
}

int run_bench(const std::string& dir, double timeout) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::cout << std::left << std::setw(32) << "instance" << std::right << std::setw(6) << "n"
              << std::setw(6) << "m" << std::setw(6) << "|S|" << std::setw(4) << "k"
              << std::setw(9) << "answer" << std::setw(10) << "ms" << std::setw(10) << "p1nodes"
              << std::setw(10) << "p3calls" << "\n";
    for (const auto& file : files) {
        sfvs::EsfvsInstance inst;
        try {
            inst = load_as_edge_variant(file.string());
        } catch (const std::exception&) {
            continue;  // not an instance file
        }
        sfvs::SearchStats stats;
        sfvs::SolveOptions options;
        options.timeout_seconds = timeout;
        std::string answer;
        auto t0 = std::chrono::steady_clock::now();
        try {
            answer = sfvs::solve(inst, options, &stats) ? "YES" : "NO";
        } catch (const sfvs::timeout_error&) {
            answer = "TIMEOUT";
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << std::left << std::setw(32) << file.filename().string() << std::right
                  << std::setw(6) << inst.graph.num_vertices() << std::setw(6)
                  << inst.graph.num_edges() << std::setw(6) << inst.s_edges().size()
                  << std::setw(4) << inst.k << std::setw(9) << answer << std::setw(10) << ms
                  << std::setw(10) << stats.phase1_nodes << std::setw(10) << stats.phase3_calls
                  << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver for subset feedback vertex set (vertex and edge variants)"};
    app.require_subcommand(1);

    std::string file, zfile, dir, gen_kind, out_path;
    bool by_s = false;
    std::uint64_t permute_seed = 0, seed = 0;
    bool have_permute = false;
    double timeout = 60.0;
    int gn = 0, gm = 0, gs = 0, gk = 0;

    auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
    solve_cmd->add_option("file", file)->required();
    solve_cmd->add_flag("--by-s", by_s, "run the endpoint-parameterized core solver directly");
    solve_cmd->add_option("--permute-seed", permute_seed, "permute the compression order")
        ->each([&](const std::string&) { have_permute = true; });

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
    oracle_cmd->add_option("file", file)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "run the reduction engine");
    reduce_cmd->add_option("file", file)->required();
    reduce_cmd->add_option("--z", zfile, "file with one vertex label per line")->required();

    auto* mwc_cmd = app.add_subcommand("mwc", "exact terminal separation");
    mwc_cmd->add_option("file", file)->required();

    auto* gen_cmd = app.add_subcommand("gen", "emit a generated instance on stdout");
    gen_cmd->add_option("kind", gen_kind)->check(CLI::IsMember({"random", "planted"}))->required();
    gen_cmd->add_option("--n", gn)->required();
    gen_cmd->add_option("--m", gm);
    gen_cmd->add_option("--s", gs);
    gen_cmd->add_option("--k", gk)->required();
    gen_cmd->add_option("--seed", seed)->required();

    auto* convert_cmd = app.add_subcommand("convert", "switch between the two variants");
    std::string target;
    convert_cmd->add_option("target", target)
        ->check(CLI::IsMember({"to-edge", "to-vertex"}))
        ->required();
    convert_cmd->add_option("file", file)->required();

    auto* bench_cmd = app.add_subcommand("bench", "solve every instance in a directory");
    bench_cmd->add_option("dir", dir)->required();
    bench_cmd->add_option("--timeout", timeout, "per-instance seconds");

    try {
        app.parse(argc, argv);
        if (solve_cmd->parsed())
            return run_solve(file, by_s,
                             have_permute ? std::optional<std::uint64_t>(permute_seed)
                                          : std::nullopt);
        if (oracle_cmd->parsed()) return run_oracle(file);
        if (reduce_cmd->parsed()) return run_reduce(file, zfile);
        if (mwc_cmd->parsed()) return run_mwc(file);
        if (gen_cmd->parsed()) {
            if (gen_kind == "random")
                std::cout << sfvs::serialize(sfvs::gen_random(gn, gm, gs, gk, seed));
            else
                std::cout << sfvs::serialize(sfvs::gen_planted(gn, gk, seed).instance);
            return kExitOk;
        }
        if (convert_cmd->parsed()) return run_convert(file, target == "to-edge");
        if (bench_cmd->parsed()) return run_bench(dir, timeout);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const sfvs::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const sfvs::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
