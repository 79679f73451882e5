#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "gridknot/grid.hpp"
#include "helpers.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;  // stdout and stderr, merged
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + GRIDKNOT_CLI_PATH + "\" " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

// Temp fixtures shared by every case in this file, built once.
class Fixtures {
public:
    static const Fixtures& get() {
        static Fixtures f;
        return f;
    }

    std::string t5, link, bad, garbage, id_moves, bad_moves, batch_dir;

private:
    Fixtures() {
        fs::path root = fs::temp_directory_path() / "gridknot_cli_fixtures";
        fs::create_directories(root / "batch");
        auto put = [](const fs::path& p, const std::string& text) {
            std::ofstream(p) << text;
            return p.string();
        };
        t5 = put(root / "t5.grid", "name: t5\nX: 4 5 1 2 3\nO: 1 2 3 4 5\n");
        link = put(root / "link.grid", "X: 2 1 4 3\nO: 1 2 3 4\n");
        bad = put(root / "bad.grid", "X: 1 2\n");
        garbage = put(root / "garbage.grid", "hello world\n");
        id_moves = put(root / "id.moves", "rotR\nrotL\n");
        bad_moves = put(root / "bad.moves", "commC 1\n");
        put(root / "batch" / "a_t5.grid", "name: t5\nX: 4 5 1 2 3\nO: 1 2 3 4 5\n");
        put(root / "batch" / "b_link.grid", "X: 2 1 4 3\nO: 1 2 3 4\n");
        batch_dir = (root / "batch").string();
    }
};

std::string corpus_file(const std::string& name) {
    return std::string(GRIDKNOT_CORPUS_DIR) + "/" + name + ".grid";
}

}  // namespace

TEST_CASE("cli requires a subcommand") {
    CHECK(run_cli("").code != 0);
}

TEST_CASE("cli info prints the classical block and cycle gradings") {
    RunResult r = run_cli("info " + Fixtures::get().t5);
    CHECK(r.code == 0);
    CHECK(r.out.find("name: t5\n") != std::string::npos);
    CHECK(r.out.find("tb: 1  r: 0  sl+: 1  sl-: 1") != std::string::npos);
    CHECK(r.out.find("cycle plus: M=2 A=1") != std::string::npos);
    CHECK(r.out.find("cycle minus: M=2 A=1") != std::string::npos);
}

TEST_CASE("cli info emits machine-readable output on request") {
    RunResult r = run_cli("info --json " + corpus_file("pretzel433_L1"));
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("name") == "pretzel433_L1");
    CHECK(j.at("n") == 9);
    CHECK(j.at("tb") == -1);
    CHECK(j.at("r") == 0);
    CHECK(j.at("sl_plus") == -1);
    CHECK(j.at("sl_minus") == -1);
    CHECK(j.at("queries").empty());
    CHECK(j.at("tool_version") == "1.0.0");
}

TEST_CASE("cli theta reports the survivor with its reduction statistics") {
    RunResult r =
        run_cli("theta --sign minus --mode staged " + corpus_file("pretzel433_L1"));
    CHECK(r.code == 0);
    CHECK(r.out.find("mode: staged\n") != std::string::npos);
    CHECK(r.out.find("theta minus: NonNull  (visited 8, layers 2, contractions 3") !=
          std::string::npos);
}

TEST_CASE("cli theta cross-checks against the exhaustive solver on request") {
    RunResult r = run_cli("theta --json --delta1 --oracle " + Fixtures::get().t5);
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.at("queries").size() == 1);
    const json& q = j.at("queries")[0];
    CHECK(q.at("sign") == "plus");
    CHECK(q.at("refine") == "delta1");
    CHECK(q.at("verdict") == "NonNull");
    CHECK(q.at("oracle_agrees") == true);
    CHECK(q.at("stats").at("states_visited") == 5);
}

TEST_CASE("cli theta passes its paranoid self-check on a small survivor") {
    RunResult r = run_cli("theta --paranoid --sign minus " + corpus_file("pretzel433_L1"));
    CHECK(r.code == 0);
}

TEST_CASE("cli theta reports a starved budget as inconclusive") {
    RunResult r = run_cli("theta --max-mem 64 " + corpus_file("pretzel433_L1"));
    CHECK(r.code == 4);
    CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("cli distinguishes parse failures from non-knots") {
    const Fixtures& f = Fixtures::get();
    CHECK(run_cli("info " + f.link).code == 3);
    CHECK(run_cli("info " + f.bad).code == 2);
    CHECK(run_cli("info " + f.garbage).code == 2);
    CHECK(run_cli("info /nonexistent/nowhere.grid").code == 2);
}

TEST_CASE("cli moves replays a script and can compare verdicts") {
    const Fixtures& f = Fixtures::get();
    RunResult r = run_cli("moves " + f.t5 + " " + f.id_moves);
    REQUIRE(r.code == 0);
    gridknot::GridDiagram G = gridknot::parse_grid(r.out);
    CHECK(G.name == "t5");
    CHECK(G.X == std::vector<int>{4, 5, 1, 2, 3});
    CHECK(G.O == std::vector<int>{1, 2, 3, 4, 5});

    RunResult rv = run_cli("moves --check-verdict " + f.t5 + " " + f.id_moves);
    CHECK(rv.code == 0);
    CHECK(rv.out.find("# verdict unchanged: NonNull") != std::string::npos);
}

TEST_CASE("cli moves rejects an illegal step with its position") {
    const Fixtures& f = Fixtures::get();
    RunResult r = run_cli("moves " + f.t5 + " " + f.bad_moves);
    CHECK(r.code == 5);
    CHECK(r.out.find("illegal move at step 1 (commC 1)") != std::string::npos);
}

TEST_CASE("cli moves carries one twist-knot form to the other") {
    RunResult r = run_cli("moves " + corpus_file("e72_G2") + " " +
                          testutil::data_path("g2_to_g3.moves"));
    REQUIRE(r.code == 0);
    gridknot::GridDiagram got = gridknot::parse_grid(r.out);
    gridknot::GridDiagram want = testutil::load_corpus("e72_G3");
    CHECK(got.n == want.n);
    CHECK(got.X == want.X);
    CHECK(got.O == want.O);
}

TEST_CASE("cli batch aggregates per-file status and returns the worst") {
    RunResult r = run_cli("batch --json " + Fixtures::get().batch_dir);
    CHECK(r.code == 3);  // the two-component file dominates
    json arr = json::parse(r.out);
    REQUIRE(arr.size() == 2);
    CHECK(arr[0].at("status") == 0);
    CHECK(arr[0].at("report").at("name") == "t5");
    CHECK(arr[0].at("report").at("queries")[0].at("verdict") == "NonNull");
    CHECK(arr[1].at("status") == 3);
    CHECK(arr[1].at("error").is_string());

    RunResult t = run_cli("batch " + Fixtures::get().batch_dir);
    CHECK(t.code == 3);
    CHECK(t.out.find("n=5 tb=1 r=0 NonNull") != std::string::npos);
    CHECK(t.out.find("status 3") != std::string::npos);
}

TEST_CASE("cli batch refuses a missing directory") {
    RunResult r = run_cli("batch /nonexistent/nowhere");
    CHECK(r.code == 2);
    CHECK(r.out.find("not a directory") != std::string::npos);
}
