#pragma once

#include <utility>
#include <vector>

#include "gridknot/chain.hpp"
#include "gridknot/grid.hpp"
#include "gridknot/state.hpp"

namespace gridknot {

// A toroidal rectangle, stored as a cyclic run of columns times a cyclic run
// of rows: cells (c0 + a mod n, r0 + b mod n) for 0 <= a < c_len, 0 <= b < r_len.
// Its SW corner is the lattice point (c0, r0). For a rectangle connecting x
// to y, x occupies the SW and NE corners and y the other two; that is the
// orientation for which the induced boundary orientation of each horizontal
// edge runs from the x-point to the y-point.
struct Rect {
    std::uint8_t c0 = 0, r0 = 0;     // SW corner, 0-based lattice coords
    std::uint8_t c_len = 0, r_len = 0;  // extents, in cells (1..n-1)

    bool col_wraps(int n) const { return c0 + c_len > n; }
    bool row_wraps(int n) const { return r0 + r_len > n; }
};

// The rectangles connecting x to y: empty unless the states differ in
// exactly two columns, in which case exactly two (complementary) toroidal
// rectangles are returned.
std::vector<Rect> rectangles(const State& x, const State& y);

// True iff no point of x lies strictly inside r.
bool is_empty(const Rect& r, const State& x);

// (number of X markers, number of O markers) strictly inside r.
std::pair<int, int> marker_counts(const Rect& r, const GridDiagram& G);

// Differential of the fully truncated complex: y appears iff an odd number
// of empty rectangles from x to y contain no marker of either kind. Drops
// the Maslov grading by exactly 1.
Chain tilde_boundary(const State& x, const GridDiagram& G);

// Alexander-degree-k piece: empty rectangles with no O markers and exactly
// k X markers. k = 0 coincides with tilde_boundary; drops A by k.
Chain tilde_boundary_k(const State& x, const GridDiagram& G, int k);

// Full filtered truncation (no O markers, any number of X markers): the sum
// of tilde_boundary_k over all k.
Chain tilde_boundary_full(const State& x, const GridDiagram& G);

// Co-differential: all x with y appearing in tilde_boundary(x). Enumerates
// the same column pairs as the forward direction with the roles swapped;
// never scans the full state space.
std::vector<State> tilde_predecessors(const State& y, const GridDiagram& G);

}  // namespace gridknot
