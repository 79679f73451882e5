#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridknot/grid.hpp"
#include "gridknot/invariant.hpp"
#include "gridknot/nullity.hpp"

namespace gridknot {

inline constexpr const char* kToolVersion = "1.0.0";

// One nullity query's outcome within a report.
struct QueryReport {
    Sign sign = Sign::plus;
    Refine refine = Refine::theta;
    std::string verdict;  // "Null" | "NonNull"
    NullityStats stats;
    std::optional<bool> oracle_agrees;  // present only when the oracle ran

    friend bool operator==(const QueryReport&, const QueryReport&) = default;
};

struct Report {
    std::string name;
    int n = 0;
    int tb = 0, r = 0, sl_plus = 0, sl_minus = 0;
    std::vector<QueryReport> queries;
    std::string tool_version = kToolVersion;
    std::string mode;  // "staged" | "interleaved" (empty if no query ran)

    friend bool operator==(const Report&, const Report&);
};

Report make_base_report(const GridDiagram& G);

std::string report_to_json(const Report& rep);
Report report_from_json(const std::string& text);

std::string report_to_text(const Report& rep);

const char* sign_name(Sign s);      // "plus" | "minus"
const char* refine_name(Refine r);  // "theta" | "delta1"
const char* result_name(Result r);  // "Null" | "NonNull"

}  // namespace gridknot
