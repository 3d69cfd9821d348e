#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "hz/edgelist.hpp"
#include "hz/families.hpp"
#include "hz/verify.hpp"

using Catch::Matchers::ContainsSubstring;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("hz_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path write_file(const std::string& name, const std::string& content) {
    const auto p = scratch_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const auto err_path = scratch_dir() / ("stderr_" + std::to_string(counter++) + ".txt");
    const std::string cmd =
        std::string(HZ_CLI_PATH) + " " + args + " 2>" + err_path.string();
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = ::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    return r;
}

} // namespace

TEST_CASE("index reports the four indices as JSON") {
    const auto c6 = write_file("c6.el", hz::emit_edge_list(hz::cycle(6)));
    const auto r = run_cli("index " + c6.string());
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == "{\"n\":6,\"m\":6,\"indices\":{\"m1\":24,\"m2\":24,\"f\":48,\"hm\":96}}\n");

    const auto p3 = write_file("p3.el", hz::emit_edge_list(hz::path(3)));
    const auto r2 = run_cli("index " + p3.string());
    REQUIRE(r2.exit_code == 0);
    REQUIRE_THAT(r2.out, ContainsSubstring("\"hm\":18"));
}

TEST_CASE("index fails loudly on malformed and missing input") {
    const auto bad = write_file("bad.el", "3 2\n0 1\nnot an edge\n");
    const auto r = run_cli("index " + bad.string());
    REQUIRE(r.exit_code == 2);
    REQUIRE_THAT(r.err, ContainsSubstring("line 3"));

    const auto missing = run_cli("index " + (scratch_dir() / "does_not_exist.el").string());
    REQUIRE(missing.exit_code == 1);
}

TEST_CASE("gen emits deterministic edge lists with the right shape") {
    const auto r = run_cli("gen comb_t --d 3 --n 3");
    REQUIRE(r.exit_code == 0);
    const hz::Graph g = hz::parse_edge_list(r.out);
    REQUIRE(g.vertex_count() == 9);
    REQUIRE(g.edge_count() == 11);
    REQUIRE(r.out == run_cli("gen comb_t --d 3 --n 3").out);

    const auto spiro = run_cli("gen spiro --n 4 --k 0 --l 2 --d 2");
    REQUIRE(spiro.exit_code == 0);
    const hz::Graph sg = hz::parse_edge_list(spiro.out);
    REQUIRE(sg.vertex_count() == 7);
    REQUIRE(sg.edge_count() == 8);

    const auto bad = run_cli("gen spiro --n 3 --k 0 --l 2 --d 2");
    REQUIRE(bad.exit_code == 2);
    REQUIRE_THAT(bad.err, ContainsSubstring("n >= 4"));

    const auto out_file = scratch_dir() / "gen_out.el";
    const auto r2 = run_cli("gen random --n 7 --extra 2 --seed 9 --out " + out_file.string());
    REQUIRE(r2.exit_code == 0);
    REQUIRE(hz::parse_edge_list(slurp(out_file)) == hz::random_connected(7, 2, 9));
}

TEST_CASE("compose builds bridges and chains from component files") {
    const auto c3 = write_file("c3.el", hz::emit_edge_list(hz::cycle(3)));
    const auto c4 = write_file("c4.el", hz::emit_edge_list(hz::cycle(4)));
    const auto c6 = write_file("c6c.el", hz::emit_edge_list(hz::cycle(6)));

    const auto b1 = run_cli("compose b1 " + c3.string() + ":0 " + c3.string() + ":0");
    REQUIRE(b1.exit_code == 0);
    const hz::Graph g = hz::parse_edge_list(b1.out);
    REQUIRE(g.vertex_count() == 6);
    REQUIRE(g.edge_count() == 7);

    const auto map_path = scratch_dir() / "anchors.json";
    const auto b2 = run_cli("compose b2 " + c6.string() + ":0:3 " + c6.string() + ":0:3" +
                            " --anchor-map " + map_path.string());
    REQUIRE(b2.exit_code == 0);
    REQUIRE(hz::hyper_zagreb(hz::parse_edge_list(b2.out)) == 264);
    const std::string map_json = slurp(map_path);
    REQUIRE_THAT(map_json, ContainsSubstring("\"kind\":\"b2\""));
    REQUIRE_THAT(map_json, ContainsSubstring("\"component\":1"));
    REQUIRE_THAT(map_json, ContainsSubstring("\"w\":9"));

    const auto adjacent = run_cli("compose chain " + c4.string() + ":0:1 " + c4.string() + ":0:2");
    REQUIRE(adjacent.exit_code == 2);
    REQUIRE_THAT(adjacent.err, ContainsSubstring("component 0"));

    const auto chain = run_cli("compose chain " + c4.string() + ":0:2 " + c4.string() + ":0:2");
    REQUIRE(chain.exit_code == 0);
    REQUIRE(hz::hyper_zagreb(hz::parse_edge_list(chain.out)) == 208);

    const auto missing_w = run_cli("compose b2 " + c6.string() + ":0 " + c6.string() + ":0:3");
    REQUIRE(missing_w.exit_code == 2);
    REQUIRE_THAT(missing_w.err, ContainsSubstring("component 0"));
}

TEST_CASE("verify emits CSV, is deterministic, and exits zero when green") {
    const auto r = run_cli("verify comb_t --d 3..5 --n 3..4");
    REQUIRE(r.exit_code == 0);
    REQUIRE_THAT(r.out, ContainsSubstring("structure,params,oracle,"));
    REQUIRE_THAT(r.out, ContainsSubstring("comb_t,d=3;n=3,318,"));
    REQUIRE(r.out == run_cli("verify comb_t --d 3..5 --n 3..4").out);

    const auto oor = run_cli("verify comb_t --d 2..2 --n 3..3 --include-out-of-range");
    REQUIRE(oor.exit_code == 0);
    REQUIRE_THAT(oor.out, ContainsSubstring("comb_t,d=2;n=3,168,246,168,166,false,true,false"));

    const auto skipped = run_cli("verify comb_t --d 2..2 --n 3..3");
    REQUIRE(skipped.exit_code == 0);
    REQUIRE(skipped.out == std::string(hz::kVerifyCsvHeader) + "\n");

    const auto theorems = run_cli("verify theorems --kind b2 --seeds 50");
    REQUIRE(theorems.exit_code == 0);
    std::size_t rows = 0;
    for (char c : theorems.out) rows += c == '\n';
    REQUIRE(rows == 51);  // header + 50 trials
    REQUIRE_THAT(theorems.err, ContainsSubstring("corrected mismatches: 0"));

    const auto ledger_path = scratch_dir() / "ledger.csv";
    const auto lr = run_cli("verify poly --h 1..3 --ledger " + ledger_path.string());
    REQUIRE(lr.exit_code == 0);
    REQUIRE_THAT(slurp(ledger_path),
                 ContainsSubstring("poly_meta,b2_uniform_printed,h=2,230,264,264,false,true"));

    const auto bad = run_cli("verify comb_t --d x..y");
    REQUIRE(bad.exit_code == 2);
    REQUIRE_THAT(bad.err, ContainsSubstring("malformed range"));

    const auto unknown = run_cli("verify bogus");
    REQUIRE(unknown.exit_code == 2);
    REQUIRE_THAT(unknown.err, ContainsSubstring("unknown verify target"));
}

TEST_CASE("output format selection") {
    const auto j = run_cli("verify comb_t --d 3..3 --n 3..3 --format json");
    REQUIRE(j.exit_code == 0);
    REQUIRE(j.out ==
            "[{\"structure\":\"comb_t\",\"params\":\"d=3;n=3\",\"oracle\":318,"
            "\"printed\":358,\"corrected\":318,\"example_formula\":318,"
            "\"printed_matches\":false,\"corrected_matches\":true,\"formula_matches\":true}]\n");
    REQUIRE(run_cli("verify comb_t --format xml").exit_code == 2);
    REQUIRE(run_cli("gen cycle --n 5 --format json").exit_code == 2);
    REQUIRE(run_cli("index --format csv -").exit_code == 2);
}
