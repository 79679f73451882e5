#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "gridknot/chain.hpp"
#include "gridknot/grid.hpp"

namespace gridknot {

// Grid number too large for a full state-space sweep.
struct OracleLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleLimits {
    int max_n_membership = 10;  // n! sweep with two retained grading bins
    int max_n_dims = 6;         // full homology table retains every state
};

// All states of G with the given Maslov grading, in lexicographic tuple
// order. Streams the n! permutations; memory is proportional to the bin.
std::vector<State> enumerate_states(const GridDiagram& G, int maslov_grading,
                                    const OracleLimits& limits = {});

// Ground truth for the lazy engine: true iff target (uniform grading d) is
// the degree-0 boundary of some chain in grading d+1. Dense method: sweep
// the two bins, build the boundary matrix in bit-packed columns, eliminate.
bool membership(const GridDiagram& G, const Chain& target, const OracleLimits& limits = {});

// Homology dimension per Maslov grading. full_differential selects the full
// filtered truncation (any X count) instead of the degree-0 piece.
std::map<int, std::int64_t> homology_dims(const GridDiagram& G, bool full_differential = false,
                                          const OracleLimits& limits = {});

}  // namespace gridknot
