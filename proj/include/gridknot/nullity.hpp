#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "gridknot/chain.hpp"
#include "gridknot/grid.hpp"

namespace gridknot {

// The configured memory budget was exhausted before a verdict was reached.
// Deliberately loud: the engine never degrades to a guessed verdict.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mode {
    staged,       // grow the full reachable complex, then cancel
    interleaved,  // cancel each new layer's edges into the previous one as it arrives
};

enum class Result { Null, NonNull };

struct NullityStats {
    std::int64_t states_visited = 0;   // distinct grid states discovered
    std::int64_t layers_built = 0;     // stages with at least one new state
    std::int64_t contractions = 0;     // edge cancellations performed
    std::int64_t peak_live = 0;        // max simultaneously live generators
    std::int64_t peak_bytes = 0;       // accounted allocation high-water mark
    double wall_ms = 0.0;

    friend bool operator==(const NullityStats&, const NullityStats&) = default;
};

struct Verdict {
    Result result = Result::Null;
    NullityStats stats;
};

struct NullityOptions {
    Mode mode = Mode::interleaved;
    // Accounted-allocation cap; exceeding it raises ResourceLimitError.
    // Default: 10^8 edge-equivalents at 16 bytes each.
    std::int64_t max_bytes = 1'600'000'000;
    // Test hook: called once per growth stage with the raw new layer sets
    // (lexicographically sorted); k starts at 1. Layers are defined by the
    // unreduced differential, so they are identical in both modes.
    std::function<void(int k, const std::vector<State>& a_layer, const std::vector<State>& b_layer)>
        layer_hook;
};

// The reduced bipartite complex over the two-element field: a distinguished
// generator a0 (always id 0, always live) whose boundary is the seed, plus
// dense integer ids for the discovered generators. Top-side generators carry
// boundary lists, bottom-side generators carry reverse-adjacency lists; both
// are kept sorted by id and mutually consistent. Edge cancellation is the
// homology-preserving two-generator reduction; the elimination log lets a
// generator that arrives after a neighbor was cancelled be rewritten in the
// current basis. Deterministic pivot choice: smallest (top, bottom) pair
// under the per-generator order keys supplied at creation.
class ConeComplex {
public:
    // Order key compared numerically; for grid states this is the tuple
    // packed most-significant-first so key order equals tuple order.
    using OrderKey = std::pair<std::uint64_t, std::uint64_t>;

    ConeComplex();

    // Registers a generator and returns its id (creation order, starting at 1).
    int add_generator(OrderKey key);
    // Declares the boundary of top-side generator a: ids strictly ascending,
    // all live. Reverse adjacency is updated.
    void set_boundary(int a, std::vector<int> bs);
    void set_seed(std::vector<int> bs);  // boundary of a0
    void toggle_edge(int a, int b);
    bool has_edge(int a, int b) const;
    bool alive(int id) const;
    const std::vector<int>& boundary(int a) const;
    const std::vector<int>& incoming(int b) const;

    // Records subsequent cancellations for late-arrival rewriting.
    void enable_log(bool on) { log_on_ = on; }
    // Rewrites a raw boundary (sorted ids) so it references live generators
    // only, replaying recorded cancellations in chronological order.
    void reduce_against_log(std::vector<int>& bs) const;

    // Cancels the pair (a, b): every other generator adjacent to b has its
    // boundary updated mod 2, a and b are removed. Edges toggled on are
    //  appended to *created (entries with first == 0 are additions to a0's
    // boundary).
    void contract_edge(int a, int b, std::vector<std::pair<int, int>>* created = nullptr);
    // Cancels every edge running from new_top into prev_bottom, smallest
    // pair first, until none remains. Returns true when a0's boundary became
    // empty (early Null).
    bool contract_between(const std::vector<int>& new_top, const std::vector<int>& prev_bottom);
    // Endgame: repeatedly cancel the smallest edge (a != a0, b in a0's
    // boundary). Null when a0's boundary empties; NonNull when none is
    // eligible while it is still nonempty.
    Result contraction_loop();

    std::int64_t live_count() const { return live_; }  // excludes a0
    std::int64_t contractions() const { return contractions_; }
    std::int64_t byte_usage() const;
    // Exceeding the budget raises ResourceLimitError at the next mutation.
    void set_byte_budget(std::int64_t b) { byte_budget_ = b; }

private:
    struct Candidate {
        std::uint64_t ka_hi, ka_lo, kb_hi, kb_lo;
        int a, b;
        bool operator>(const Candidate& o) const {
            return std::tie(ka_hi, ka_lo, kb_hi, kb_lo) > std::tie(o.ka_hi, o.ka_lo, o.kb_hi, o.kb_lo);
        }
    };

    Candidate make_candidate(int a, int b) const;
    void account(std::int64_t delta_ints);
    bool toggle_sorted(std::vector<int>& v, int id);  // true when added
    void erase_sorted(std::vector<int>& v, int id);

    std::vector<OrderKey> key_;
    std::vector<std::uint8_t> alive_;
    std::vector<std::vector<int>> boundary_;  // top side
    std::vector<std::vector<int>> incoming_;  // bottom side
    std::vector<int> elim_index_;             // bottom-side log position, -1 if live
    std::vector<int> log_pivot_b_;
    std::vector<std::vector<int>> log_repl_;
    std::vector<int> scratch_;
    std::int64_t live_ = 0;
    std::int64_t contractions_ = 0;
    std::int64_t edge_ints_ = 0;
    std::int64_t log_ints_ = 0;
    std::int64_t byte_budget_ = -1;  // <0: unlimited
    bool log_on_ = false;
};

// Decide whether the seed chain bounds under the degree-0 differential,
// without materializing the full complex: breadth-first growth of the
// reachable two-grading piece, a distinguished cone generator whose boundary
// is the seed, and homology-preserving edge cancellation over the
// two-element field. The empty seed short-circuits to Null; a seed that is
// not closed throws std::invalid_argument; both modes return the same
// verdict (stats may differ).
Verdict is_null(const GridDiagram& G, const Chain& seed, const NullityOptions& opts = {});

}  // namespace gridknot
