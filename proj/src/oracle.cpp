#include "gridknot/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gridknot/rect.hpp"

namespace gridknot {

namespace {

State state_from_perm(const std::vector<int>& perm) {
    State x;
    x.n = static_cast<std::uint8_t>(perm.size());
    for (std::size_t i = 0; i < perm.size(); i++) x.s[i] = static_cast<std::uint8_t>(perm[i]);
    return x;
}

// One pass over all n! states, keeping those whose Maslov grading lies in
// [m_lo, m_hi].  next_permutation yields lexicographic order, so each bin
// comes out sorted.
std::map<int, std::vector<State>> sweep_bins(const GridDiagram& G, int m_lo, int m_hi) {
    std::vector<int> perm(G.n);
    std::iota(perm.begin(), perm.end(), 1);
    std::map<int, std::vector<State>> bins;
    do {
        State x = state_from_perm(perm);
        int m = maslov(x, G);
        if (m >= m_lo && m <= m_hi) bins[m].push_back(x);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return bins;
}

using BitRow = std::vector<std::uint64_t>;

BitRow chain_to_row(const Chain& c, const std::vector<State>& basis, std::size_t words) {
    BitRow row(words, 0);
    for (const State& y : c.states) {
        auto it = std::lower_bound(basis.begin(), basis.end(), y);
        if (it == basis.end() || *it != y)
            throw std::logic_error("boundary state missing from enumerated grading bin");
        std::size_t idx = static_cast<std::size_t>(it - basis.begin());
        row[idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
    return row;
}

int leading_bit(const BitRow& row) {
    for (std::size_t w = 0; w < row.size(); w++)
        if (row[w]) return static_cast<int>(w * 64 + std::countr_zero(row[w]));
    return -1;
}

void xor_into(BitRow& dst, const BitRow& src) {
    for (std::size_t w = 0; w < dst.size(); w++) dst[w] ^= src[w];
}

// Online GF(2) elimination: rows indexed by their leading bit.
struct Eliminator {
    std::vector<BitRow> pivots;  // index = pivot position; empty row = free

    explicit Eliminator(std::size_t dim) : pivots(dim) {}

    // Reduces row in place against the current pivots; if a nonzero residue
    // remains it is adopted as a new pivot and true is returned.
    bool insert(BitRow& row) {
        for (;;) {
            int p = leading_bit(row);
            if (p < 0) return false;
            if (pivots[p].empty()) {
                pivots[p] = row;
                return true;
            }
            xor_into(row, pivots[p]);
        }
    }

    bool in_span(BitRow row) const {
        for (;;) {
            int p = leading_bit(row);
            if (p < 0) return true;
            if (pivots[p].empty()) return false;
            xor_into(row, pivots[p]);
        }
    }

    int rank() const {
        int r = 0;
        for (const BitRow& row : pivots)
            if (!row.empty()) r++;
        return r;
    }
};

}  // namespace

std::vector<State> enumerate_states(const GridDiagram& G, int maslov_grading,
                                    const OracleLimits& limits) {
    if (G.n > limits.max_n_membership)
        throw OracleLimitError("exhaustive state sweep limited to n <= " +
                               std::to_string(limits.max_n_membership));
    auto bins = sweep_bins(G, maslov_grading, maslov_grading);
    auto it = bins.find(maslov_grading);
    return it == bins.end() ? std::vector<State>{} : std::move(it->second);
}

bool membership(const GridDiagram& G, const Chain& target, const OracleLimits& limits) {
    if (G.n > limits.max_n_membership)
        throw OracleLimitError("exhaustive state sweep limited to n <= " +
                               std::to_string(limits.max_n_membership));
    if (target.empty()) return true;
    int m = maslov(target.states.front(), G);
    for (const State& y : target.states)
        if (maslov(y, G) != m) throw std::invalid_argument("membership target is not homogeneous");

    auto bins = sweep_bins(G, m, m + 1);
    const std::vector<State>& basis = bins[m];
    std::size_t words = (basis.size() + 63) / 64;
    Eliminator elim(basis.size());
    for (const State& a : bins[m + 1]) {
        BitRow row = chain_to_row(tilde_boundary(a, G), basis, words);
        elim.insert(row);
    }
    return elim.in_span(chain_to_row(target, basis, words));
}

std::map<int, std::int64_t> homology_dims(const GridDiagram& G, bool full_differential,
                                          const OracleLimits& limits) {
    if (G.n > limits.max_n_dims)
        throw OracleLimitError("full homology sweep limited to n <= " +
                               std::to_string(limits.max_n_dims));
    auto bins = sweep_bins(G, -1000, 1000);

    // rank of the degree-lowering map out of each grading
    std::map<int, int> out_rank;
    for (const auto& [m, states] : bins) {
        auto below = bins.find(m - 1);
        if (below == bins.end()) continue;
        const std::vector<State>& basis = below->second;
        std::size_t words = (basis.size() + 63) / 64;
        Eliminator elim(basis.size());
        for (const State& a : states) {
            Chain b = full_differential ? tilde_boundary_full(a, G) : tilde_boundary(a, G);
            BitRow row = chain_to_row(b, basis, words);
            elim.insert(row);
        }
        out_rank[m] = elim.rank();
    }

    std::map<int, std::int64_t> dims;
    for (const auto& [m, states] : bins) {
        std::int64_t d = static_cast<std::int64_t>(states.size());
        if (auto it = out_rank.find(m); it != out_rank.end()) d -= it->second;
        if (auto it = out_rank.find(m + 1); it != out_rank.end()) d -= it->second;
        if (d != 0) dims[m] = d;
    }
    return dims;
}

}  // namespace gridknot
