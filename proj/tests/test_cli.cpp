#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dicut/cover.hpp"
#include "dicut/digraph.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "dicut_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path at(const std::string& name) { return work_dir() / name; }

int run(const std::string& args) {
    std::string cmd = std::string(DICUT_CLI_PATH) + " " + args + " >" +
                      (work_dir() / "stdout.txt").string() + " 2>" +
                      (work_dir() / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string last_stdout() {
    std::ifstream in(work_dir() / "stdout.txt");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

}  // namespace

TEST_CASE("gen writes deterministic instances") {
    CHECK(run("gen dstar --out " + at("dstar.edges").string()) == 0);
    dicut::Digraph dstar = dicut::parse_edge_list(slurp(at("dstar.edges")));
    CHECK(dstar.vertex_count() == 49);
    CHECK(dstar.edge_count() == 441);
    std::string labels = slurp(at("dstar.edges.labels"));
    CHECK(labels.find("x1 0\n") == 0);
    CHECK(labels.find("z_1_2_3 14\n") != std::string::npos);

    CHECK(run("gen complete --n 7 --out " + at("k7.edges").string()) == 0);
    CHECK(dicut::parse_edge_list(slurp(at("k7.edges"))).edge_count() == 42);

    CHECK(run("gen d1 --out " + at("d1.edges").string()) == 0);
    CHECK(dicut::parse_edge_list(slurp(at("d1.edges"))).edge_count() == 21);

    std::string random_args = "gen random --nx 8 --ny 8 --k 4 --l 4 --density 0.35 --seed 5";
    CHECK(run(random_args + " --out " + at("r1.edges").string()) == 0);
    CHECK(run(random_args + " --out " + at("r2.edges").string()) == 0);
    CHECK(slurp(at("r1.edges")) == slurp(at("r2.edges")));

    CHECK(run("gen nonsense") == 2);
}

TEST_CASE("check classifies membership") {
    CHECK(run("check " + at("dstar.edges").string() + " --k 3 --l 3 --out " +
              at("dstar.part").string()) == 0);
    std::string part = slurp(at("dstar.part"));
    CHECK(part.size() == 50);  // 49 sides + newline
    CHECK(part.substr(7, 7) == "YYYYYYY");

    CHECK(run("gen complete --n 9 --out " + at("k9.edges").string()) == 0);
    CHECK(run("check " + at("k9.edges").string() + " --k 4 --l 4") == 1);

    write(at("garbage.edges"), "pasta\n");
    CHECK(run("check " + at("garbage.edges").string() + " --k 1 --l 1") == 2);
    CHECK(run("check " + at("missing.edges").string() + " --k 1 --l 1") == 2);
}

TEST_CASE("cover and verify round trip") {
    CHECK(run("cover " + at("dstar.edges").string() + " --out " + at("dstar.cover").string() +
              " --certificate-out " + at("dstar.cert").string()) == 0);
    dicut::CutCover cover = dicut::parse_cover(slurp(at("dstar.cover")));
    CHECK(cover.k == 5);
    CHECK(run("verify " + at("dstar.edges").string() + " " + at("dstar.cover").string()) == 0);

    dicut::GoodColoringCertificate cert = dicut::parse_certificate(slurp(at("dstar.cert")));
    dicut::Digraph dstar = dicut::parse_edge_list(slurp(at("dstar.edges")));
    CHECK(dicut::is_good_coloring(dstar, cert.bipartition, cert.coloring));

    // Covers are byte-deterministic.
    CHECK(run("cover " + at("dstar.edges").string() + " --out " + at("dstar2.cover").string()) == 0);
    CHECK(slurp(at("dstar.cover")) == slurp(at("dstar2.cover")));

    // Breaking one side assignment must surface as a negative verify.
    std::string text = slurp(at("dstar.cover"));
    std::size_t pos = text.find('\n') + 1;
    text[pos] = text[pos] == 'A' ? 'B' : 'A';
    write(at("broken.cover"), text);
    CHECK(run("verify " + at("dstar.edges").string() + " " + at("broken.cover").string()) == 1);
    CHECK(last_stdout().find("uncovered:") != std::string::npos);

    write(at("truncated.cover"), "k 5 n 49\nAB\n");
    CHECK(run("verify " + at("dstar.edges").string() + " " + at("truncated.cover").string()) == 2);

    CHECK(run("cover " + at("k7.edges").string() + " --method coloring --out " +
              at("k7.cover").string()) == 0);
    CHECK(dicut::parse_cover(slurp(at("k7.cover"))).k == 5);
    CHECK(run("verify " + at("k7.edges").string() + " " + at("k7.cover").string()) == 0);

    CHECK(run("cover " + at("d1.edges").string() + " --method theorem3 --k 3 --out " +
              at("d1.cover").string()) == 0);
    CHECK(dicut::parse_cover(slurp(at("d1.cover"))).k <= 6);
    CHECK(run("verify " + at("d1.edges").string() + " " + at("d1.cover").string()) == 0);

    CHECK(run("cover " + at("d1.edges").string() + " --method theorem3") == 2);  // missing --k
    CHECK(run("cover " + at("k9.edges").string() + " --method theorem4") == 1);
}

TEST_CASE("every generated member instance survives gen -> cover -> verify") {
    for (int seed : {1, 2, 3}) {
        std::string inst = at("round" + std::to_string(seed) + ".edges").string();
        CHECK(run("gen random --nx 9 --ny 7 --k 4 --l 4 --density 0.4 --seed " +
                  std::to_string(seed) + " --out " + inst) == 0);
        for (const std::string method : {"auto", "coloring", "theorem3", "theorem4"}) {
            std::string cov = at("round.cover").string();
            std::string extra = method == "theorem3" ? " --k 4" : "";
            CHECK(run("cover " + inst + " --method " + method + extra + " --out " + cov) == 0);
            CHECK(run("verify " + inst + " " + cov) == 0);
        }
    }
}

TEST_CASE("exact reports minima, lower bounds and budget exhaustion") {
    CHECK(run("gen complete --n 4 --out " + at("k4.edges").string()) == 0);
    CHECK(run("exact " + at("k4.edges").string() + " --max-k 5 --out " + at("k4.cover").string()) ==
          0);
    CHECK(last_stdout().find("nu = 4") != std::string::npos);
    CHECK(run("verify " + at("k4.edges").string() + " " + at("k4.cover").string()) == 0);

    CHECK(run("exact " + at("d1.edges").string() + " --max-k 3") == 1);
    CHECK(last_stdout().find("no cover with <= 3 cuts") != std::string::npos);

    CHECK(run("exact " + at("dstar.edges").string() + " --max-k 4 --max-nodes 5000") == 3);
    CHECK(last_stdout().find("timeout") != std::string::npos);

    CHECK(run("exact " + at("k4.edges").string() + " --max-k 2 --export-cnf " +
              at("k4").string()) == 1);
    std::string cnf1 = slurp(at("k4.k1.cnf"));
    std::string cnf2 = slurp(at("k4.k2.cnf"));
    CHECK(cnf1.find("p cnf 16 36\n") != std::string::npos);   // 1*(4+12), 12*3
    CHECK(cnf2.find("p cnf 32 60\n") != std::string::npos);   // 2*(4+12), 12*5
}

TEST_CASE("the exact minimum never exceeds a constructive cover") {
    std::string inst = at("small.edges").string();
    CHECK(run("gen random --nx 4 --ny 3 --k 2 --l 2 --density 0.5 --seed 21 --out " + inst) == 0);
    CHECK(run("exact " + inst + " --max-k 6") == 0);
    std::string out = last_stdout();
    std::size_t pos = out.find("nu = ");
    REQUIRE(pos != std::string::npos);
    int nu = std::stoi(out.substr(pos + 5));
    for (const std::string method : {"coloring", "theorem4"}) {
        std::string cov = at("small.cover").string();
        CHECK(run("cover " + inst + " --method " + method + " --out " + cov) == 0);
        CHECK(nu <= dicut::parse_cover(slurp(cov)).k);
    }
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("") == 2);
    CHECK(run("cover") == 2);
    CHECK(run("exact " + at("k4.edges").string()) == 2);
    CHECK(run("frobnicate x") == 2);
}
