#include "gridknot/report.hpp"

#include <sstream>

#include "json.hpp"

namespace gridknot {

const char* sign_name(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

const char* refine_name(Refine r) { return r == Refine::theta ? "theta" : "delta1"; }

const char* result_name(Result r) { return r == Result::Null ? "Null" : "NonNull"; }

bool operator==(const Report& a, const Report& b) {
    return a.name == b.name && a.n == b.n && a.tb == b.tb && a.r == b.r &&
           a.sl_plus == b.sl_plus && a.sl_minus == b.sl_minus && a.queries == b.queries &&
           a.tool_version == b.tool_version && a.mode == b.mode;
}

Report make_base_report(const GridDiagram& G) {
    Report rep;
    rep.name = G.name;
    rep.n = G.n;
    ClassicalInvariants ci = classical_invariants(G);
    rep.tb = ci.tb;
    rep.r = ci.r;
    rep.sl_plus = ci.sl_plus;
    rep.sl_minus = ci.sl_minus;
    return rep;
}

namespace {

using nlohmann::json;

json stats_to_json(const NullityStats& st) {
    return json{{"states_visited", st.states_visited}, {"layers_built", st.layers_built},
                {"contractions", st.contractions},    {"peak_live", st.peak_live},
                {"peak_bytes", st.peak_bytes},        {"wall_ms", st.wall_ms}};
}

NullityStats stats_from_json(const json& j) {
    NullityStats st;
    st.states_visited = j.at("states_visited").get<std::int64_t>();
    st.layers_built = j.at("layers_built").get<std::int64_t>();
    st.contractions = j.at("contractions").get<std::int64_t>();
    st.peak_live = j.at("peak_live").get<std::int64_t>();
    st.peak_bytes = j.at("peak_bytes").get<std::int64_t>();
    st.wall_ms = j.at("wall_ms").get<double>();
    return st;
}

}  // namespace

std::string report_to_json(const Report& rep) {
    json q = json::array();
    for (const QueryReport& qr : rep.queries) {
        json e{{"sign", sign_name(qr.sign)},
               {"refine", refine_name(qr.refine)},
               {"verdict", qr.verdict},
               {"stats", stats_to_json(qr.stats)}};
        if (qr.oracle_agrees) e["oracle_agrees"] = *qr.oracle_agrees;
        q.push_back(std::move(e));
    }
    json j{{"name", rep.name},         {"n", rep.n},
           {"tb", rep.tb},             {"r", rep.r},
           {"sl_plus", rep.sl_plus},   {"sl_minus", rep.sl_minus},
           {"queries", std::move(q)},  {"tool_version", rep.tool_version},
           {"mode", rep.mode}};
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    json j = json::parse(text);
    Report rep;
    rep.name = j.at("name").get<std::string>();
    rep.n = j.at("n").get<int>();
    rep.tb = j.at("tb").get<int>();
    rep.r = j.at("r").get<int>();
    rep.sl_plus = j.at("sl_plus").get<int>();
    rep.sl_minus = j.at("sl_minus").get<int>();
    rep.tool_version = j.at("tool_version").get<std::string>();
    rep.mode = j.at("mode").get<std::string>();
    for (const json& e : j.at("queries")) {
        QueryReport qr;
        qr.sign = e.at("sign").get<std::string>() == "plus" ? Sign::plus : Sign::minus;
        qr.refine = e.at("refine").get<std::string>() == "theta" ? Refine::theta : Refine::delta1;
        qr.verdict = e.at("verdict").get<std::string>();
        qr.stats = stats_from_json(e.at("stats"));
        if (e.contains("oracle_agrees")) qr.oracle_agrees = e.at("oracle_agrees").get<bool>();
        rep.queries.push_back(std::move(qr));
    }
    return rep;
}

std::string report_to_text(const Report& rep) {
    std::ostringstream os;
    os << "name: " << rep.name << "\n"
       << "n: " << rep.n << "\n"
       << "tb: " << rep.tb << "  r: " << rep.r << "  sl+: " << rep.sl_plus
       << "  sl-: " << rep.sl_minus << "\n";
    if (!rep.mode.empty()) os << "mode: " << rep.mode << "\n";
    for (const QueryReport& qr : rep.queries) {
        os << refine_name(qr.refine) << ' ' << sign_name(qr.sign) << ": " << qr.verdict << "  ("
           << "visited " << qr.stats.states_visited << ", layers " << qr.stats.layers_built
           << ", contractions " << qr.stats.contractions << ", peak live " << qr.stats.peak_live
           << ", peak bytes " << qr.stats.peak_bytes << ", " << qr.stats.wall_ms << " ms)";
        if (qr.oracle_agrees) os << (*qr.oracle_agrees ? "  [oracle agrees]" : "  [ORACLE DISAGREES]");
        os << "\n";
    }
    return os.str();
}

}  // namespace gridknot
