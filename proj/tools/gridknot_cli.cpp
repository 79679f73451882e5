// Command-line front end: classical invariants, nullity queries, move-script
// replay, and corpus batch runs over grid-diagram files.
#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gridknot/grid.hpp"
#include "gridknot/invariant.hpp"
#include "gridknot/moves.hpp"
#include "gridknot/nullity.hpp"
#include "gridknot/oracle.hpp"
#include "gridknot/report.hpp"

namespace gk = gridknot;

namespace {

// Exit codes: 0 ok, 1 internal error/self-check failure, 2 parse error,
// 3 not a knot, 4 inconclusive (resource or oracle limit), 5 illegal move.
constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotAKnot = 3;
constexpr int kExitInconclusive = 4;
constexpr int kExitIllegalMove = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gk::ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct QueryFlags {
    std::string sign = "plus";
    bool delta1 = false;
    std::string mode = "interleaved";
    bool oracle = false;
    bool paranoid = false;
    std::int64_t max_mem = gk::NullityOptions{}.max_bytes;

    gk::Sign sign_value() const { return sign == "minus" ? gk::Sign::minus : gk::Sign::plus; }
    gk::Mode mode_value() const {
        return mode == "staged" ? gk::Mode::staged : gk::Mode::interleaved;
    }
};

void add_query_flags(CLI::App* cmd, QueryFlags& q) {
    cmd->add_option("--sign", q.sign, "which distinguished cycle to test")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    cmd->add_flag("--delta1", q.delta1, "test the refined (first-higher-differential) class");
    cmd->add_option("--mode", q.mode, "reduction schedule")
        ->check(CLI::IsMember({"staged", "interleaved"}))
        ->capture_default_str();
    cmd->add_flag("--oracle", q.oracle, "cross-check with the exhaustive solver (small n only)");
    cmd->add_flag("--paranoid", q.paranoid,
                  "for n <= 10, rerun in the other schedule and require equal verdicts");
    cmd->add_option("--max-mem", q.max_mem, "memory budget in bytes for the reduction")
        ->capture_default_str();
}

// Runs one nullity query and appends it to the report.
// Throws on resource/oracle limits; returns false on a paranoid-mode mismatch.
bool run_query(const gk::GridDiagram& G, const QueryFlags& q, gk::Report& rep) {
    gk::Sign sign = q.sign_value();
    gk::Chain seed;
    if (q.delta1) {
        seed = gk::delta1_seed(G, sign);
    } else {
        seed.toggle(gk::theta_cycle(G, sign));
    }

    gk::NullityOptions opts;
    opts.mode = q.mode_value();
    opts.max_bytes = q.max_mem;
    gk::Verdict v = gk::is_null(G, seed, opts);

    gk::QueryReport qr;
    qr.sign = sign;
    qr.refine = q.delta1 ? gk::Refine::delta1 : gk::Refine::theta;
    qr.verdict = gk::result_name(v.result);
    qr.stats = v.stats;

    if (q.oracle) {
        bool bounds = gk::membership(G, seed);
        qr.oracle_agrees = bounds == (v.result == gk::Result::Null);
    }
    rep.queries.push_back(qr);
    rep.mode = q.mode;

    if (q.paranoid && G.n <= 10) {
        gk::NullityOptions other = opts;
        other.mode = opts.mode == gk::Mode::staged ? gk::Mode::interleaved : gk::Mode::staged;
        gk::Verdict v2 = gk::is_null(G, seed, other);
        if (v2.result != v.result) {
            std::cerr << "self-check failed: schedules disagree on " << G.name << " ("
                      << gk::result_name(v.result) << " vs " << gk::result_name(v2.result)
                      << ")\n";
            return false;
        }
    }
    if (qr.oracle_agrees && !*qr.oracle_agrees) {
        std::cerr << "self-check failed: exhaustive solver disagrees on " << G.name << "\n";
        return false;
    }
    return true;
}

int cmd_info(const std::string& file, bool json) {
    gk::GridDiagram G = gk::parse_grid(read_file(file));
    gk::Report rep = gk::make_base_report(G);
    if (json) {
        std::cout << gk::report_to_json(rep);
    } else {
        std::cout << gk::report_to_text(rep);
        for (gk::Sign s : {gk::Sign::plus, gk::Sign::minus}) {
            auto [m, a] = gk::grading_check(G, s);
            std::cout << "cycle " << gk::sign_name(s) << ": M=" << m << " A=" << a << "\n";
        }
    }
    return kExitOk;
}

int cmd_theta(const std::string& file, const QueryFlags& q, bool json) {
    gk::GridDiagram G = gk::parse_grid(read_file(file));
    gk::Report rep = gk::make_base_report(G);
    bool ok = run_query(G, q, rep);
    std::cout << (json ? gk::report_to_json(rep) : gk::report_to_text(rep));
    return ok ? kExitOk : kExitInternal;
}

int cmd_moves(const std::string& file, const std::string& script_file, bool check_verdict) {
    gk::GridDiagram G = gk::parse_grid(read_file(file));
    std::vector<gk::MoveSpec> script = gk::parse_script(read_file(script_file));

    std::string before;
    if (check_verdict) {
        gk::Chain seed;
        seed.toggle(gk::theta_cycle(G, gk::Sign::plus));
        before = gk::result_name(gk::is_null(G, seed).result);
    }
    gk::GridDiagram H = G;
    for (std::size_t k = 0; k < script.size(); k++) {
        try {
            H = gk::apply_move(H, script[k]);
        } catch (const gk::IllegalMoveError& e) {
            std::cerr << "illegal move at step " << k + 1 << " (" << script[k].to_string()
                      << "): " << e.what() << "\n";
            return kExitIllegalMove;
        }
    }
    std::cout << gk::format_grid(H);
    if (check_verdict) {
        gk::Chain seed;
        seed.toggle(gk::theta_cycle(H, gk::Sign::plus));
        std::string after = gk::result_name(gk::is_null(H, seed).result);
        if (after == before)
            std::cout << "# verdict unchanged: " << after << "\n";
        else
            std::cout << "# verdict changed: " << before << " -> " << after << "\n";
    }
    return kExitOk;
}

int classify_exception_exit(const std::exception_ptr& ep) {
    try {
        std::rethrow_exception(ep);
    } catch (const gk::NotAKnotError&) {
        return kExitNotAKnot;
    } catch (const gk::ParseError&) {
        return kExitParse;
    } catch (const gk::ResourceLimitError&) {
        return kExitInconclusive;
    } catch (const gk::OracleLimitError&) {
        return kExitInconclusive;
    } catch (const gk::IllegalMoveError&) {
        return kExitIllegalMove;
    } catch (const std::exception&) {
        return kExitInternal;
    }
}

int cmd_batch(const std::string& dir, const QueryFlags& q, bool json) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    if (!fs::is_directory(dir)) {
        std::cerr << "not a directory: " << dir << "\n";
        return kExitParse;
    }
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".grid")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    int worst = kExitOk;
    nlohmann::json arr = nlohmann::json::array();
    std::ostringstream body;
    for (const std::string& f : files) {
        int code = kExitOk;
        gk::Report rep;
        std::string error;
        try {
            gk::GridDiagram G = gk::parse_grid(read_file(f));
            rep = gk::make_base_report(G);
            if (!run_query(G, q, rep)) code = kExitInternal;
        } catch (const std::exception& e) {
            code = classify_exception_exit(std::current_exception());
            error = e.what();
        }
        worst = std::max(worst, code);
        if (json) {
            nlohmann::json entry{{"file", f}, {"status", code}};
            if (code == kExitOk)
                entry["report"] = nlohmann::json::parse(gk::report_to_json(rep));
            else
                entry["error"] = error;
            arr.push_back(std::move(entry));
        } else {
            body << f << ": ";
            if (code == kExitOk) {
                body << "n=" << rep.n << " tb=" << rep.tb << " r=" << rep.r;
                if (!rep.queries.empty()) body << " " << rep.queries.back().verdict;
                body << "\n";
            } else {
                body << "status " << code << " (" << error << ")\n";
            }
        }
    }
    if (json)
        std::cout << arr.dump(2) << "\n";
    else
        std::cout << body.str();
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid-diagram transverse-knot invariant tool"};
    app.require_subcommand(1);

    std::string file, script_file, dir;
    bool json_info = false, json_theta = false, json_batch = false, check_verdict = false;
    QueryFlags theta_flags, batch_flags;

    CLI::App* info = app.add_subcommand("info", "classical invariants and cycle gradings");
    info->add_option("file", file, "grid-diagram file")->required();
    info->add_flag("--json", json_info, "machine-readable output");

    CLI::App* theta = app.add_subcommand("theta", "nullity verdict for a distinguished cycle");
    theta->add_option("file", file, "grid-diagram file")->required();
    add_query_flags(theta, theta_flags);
    theta->add_flag("--json", json_theta, "machine-readable output");

    CLI::App* moves = app.add_subcommand("moves", "replay a move script");
    moves->add_option("file", file, "grid-diagram file")->required();
    moves->add_option("script", script_file, "move-script file")->required();
    moves->add_flag("--check-verdict", check_verdict,
                    "compare the plus-cycle verdict before and after");

    CLI::App* batch = app.add_subcommand("batch", "run one query over a directory of .grid files");
    batch->add_option("dir", dir, "directory with .grid files")->required();
    add_query_flags(batch, batch_flags);
    batch->add_flag("--json", json_batch, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return cmd_info(file, json_info);
        if (theta->parsed()) return cmd_theta(file, theta_flags, json_theta);
        if (moves->parsed()) return cmd_moves(file, script_file, check_verdict);
        if (batch->parsed()) return cmd_batch(dir, batch_flags, json_batch);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_exception_exit(std::current_exception());
    }
    return kExitOk;
}
