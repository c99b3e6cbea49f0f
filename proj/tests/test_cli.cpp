#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_file = std::string(SFVS_TEST_DATA_DIR) + "/../cli_out.tmp";
    std::string cmd = std::string(SFVS_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::remove(out_file.c_str());
    int status = (rc == -1) ? -1 : WEXITSTATUS(rc);
    return RunResult{status, buf.str()};
}

std::string data(const std::string& name) { return std::string(SFVS_TEST_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string(SFVS_TEST_DATA_DIR) + "/../" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string strip_comments(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.empty() || line[0] != 'c') out << line << "\n";
    return out.str();
}

}  // namespace

TEST_CASE("cli solve prints YES and a vertex for the triangle golden file") {
    RunResult res = run_cli("solve " + data("triangle.esfvs"));
    CHECK(res.status == 0);
    CHECK(res.out.substr(0, 4) == "YES\n");
    std::istringstream lines(res.out);
    std::string first, second;
    std::getline(lines, first);
    std::getline(lines, second);
    int v = std::stoi(second);
    CHECK(v >= 1);
    CHECK(v <= 3);
}

TEST_CASE("cli solve reports NO with exit status zero") {
    RunResult res = run_cli("solve " + data("k4_all_s.esfvs"));
    CHECK(res.status == 0);
    CHECK(res.out == "NO\n");
}

TEST_CASE("cli oracle agrees with solve on the goldens") {
    CHECK(run_cli("oracle " + data("triangle.esfvs")).out.substr(0, 3) == "YES");
    CHECK(run_cli("oracle " + data("k4_all_s.esfvs")).out == "NO\n");
}

TEST_CASE("cli exits 2 on parse errors and 3 on usage errors") {
    std::string bad = write_temp("bad.esfvs", "p esfvs 2 1 1\ne 1 9 0\n");
    CHECK(run_cli("solve " + bad).status == 2);
    std::remove(bad.c_str());
    CHECK(run_cli("solve /nonexistent/file").status == 3);
    CHECK(run_cli("frobnicate").status == 3);
}

TEST_CASE("cli convert to the same variant is byte-identical modulo comments") {
    RunResult res = run_cli("convert to-edge " + data("triangle.esfvs"));
    CHECK(res.status == 0);
    CHECK(res.out == strip_comments(read_file(data("triangle.esfvs"))));
}

TEST_CASE("cli convert switches variants and back preserves the answer") {
    RunResult vertexed = run_cli("convert to-vertex " + data("triangle.esfvs"));
    CHECK(vertexed.status == 0);
    std::string vpath = write_temp("triangle.sfvs", vertexed.out);
    RunResult answer = run_cli("solve " + vpath);
    CHECK(answer.out.substr(0, 3) == "YES");
    std::remove(vpath.c_str());
}

TEST_CASE("cli gen is deterministic in the seed") {
    RunResult a = run_cli("gen random --n 8 --m 12 --s 4 --k 2 --seed 9");
    RunResult b = run_cli("gen random --n 8 --m 12 --s 4 --k 2 --seed 9");
    RunResult c = run_cli("gen random --n 8 --m 12 --s 4 --k 2 --seed 10");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    CHECK(run_cli("gen planted --n 30 --k 2 --seed 1").status == 0);
}

TEST_CASE("cli reduce emits a reduced instance or the IGNORE token") {
    // bridge-only S: reduces to an empty S
    std::string inst = write_temp("bridge.esfvs",
                                  "p esfvs 6 7 1\n"
                                  "e 1 2 0\ne 2 3 0\ne 3 1 0\n"
                                  "e 4 5 0\ne 5 6 0\ne 6 4 0\n"
                                  "e 1 4 1\n");
    std::string zfile = write_temp("empty.z", "c no vertices\n");
    RunResult res = run_cli("reduce " + inst + " --z " + zfile);
    CHECK(res.status == 0);
    CHECK(res.out.find("p esfvs") != std::string::npos);

    // ten flagged petals locked on a z-vertex: the branch dies
    std::ostringstream petals;
    petals << "p esfvs 12 21 1\n";
    petals << "e 1 2 0\n";
    for (int i = 3; i <= 12; ++i)
        petals << "e 1 " << i << " 1\ne " << i << " 2 0\n";
    std::string pinst = write_temp("petals.esfvs", petals.str());
    std::string pz = write_temp("petals.z", "1\n2\n");
    RunResult ignored = run_cli("reduce " + pinst + " --z " + pz);
    CHECK(ignored.status == 0);
    CHECK(ignored.out == "IGNORE\n");

    std::remove(inst.c_str());
    std::remove(zfile.c_str());
    std::remove(pinst.c_str());
    std::remove(pz.c_str());
}

TEST_CASE("cli bench tabulates every instance in a directory") {
    std::string dir = std::string(SFVS_TEST_DATA_DIR) + "/../bench_dir";
    std::string mk = "mkdir -p " + dir;
    REQUIRE(std::system(mk.c_str()) == 0);
    std::string g1 = std::string(SFVS_CLI_PATH) + " gen planted --n 40 --k 2 --seed 4 > " + dir +
                     "/a.esfvs";
    std::string g2 = std::string(SFVS_CLI_PATH) + " gen random --n 8 --m 12 --s 4 --k 1 --seed 5 > " +
                     dir + "/b.esfvs";
    REQUIRE(std::system(g1.c_str()) == 0);
    REQUIRE(std::system(g2.c_str()) == 0);
    RunResult res = run_cli("bench " + dir + " --timeout 30");
    CHECK(res.status == 0);
    CHECK(res.out.find("a.esfvs") != std::string::npos);
    CHECK(res.out.find("b.esfvs") != std::string::npos);
    CHECK(res.out.find("answer") != std::string::npos);
    std::string rm = "rm -rf " + dir;
    CHECK(std::system(rm.c_str()) == 0);
}

TEST_CASE("cli mwc solves the three-vertex path") {
    std::string inst = write_temp("path.mwc",
                                  "p mwc 3 2 1\n"
                                  "e 1 2\ne 2 3\n"
                                  "t 1\nt 3\n");
    RunResult res = run_cli("mwc " + inst);
    CHECK(res.status == 0);
    CHECK(res.out == "YES\n2\n");
    std::remove(inst.c_str());
}
