#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridknot/state.hpp"

namespace gridknot {

// Grid-file or tuple-level failure (bad syntax, tuples that are not
// permutations, an X/O collision, out-of-range grid number).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The tuples are a valid grid but trace more than one closed component.
struct NotAKnotError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An n x n toroidal grid diagram: column i (1-based) carries an X in row
// X[i-1] and an O in row O[i-1]; rows are numbered bottom to top, columns
// left to right. Both tuples are permutations of {1..n} and never collide.
struct GridDiagram {
    int n = 0;
    std::vector<int> X, O;  // size n, 1-based row values, 0-based column index
    std::string name;

    int x_col(int row) const;  // 0-based column of the X in 1-based row
    int o_col(int row) const;
};

// Parse the grid-file format: optional "name: <label>" line, one
// "X: a1 ... an" line, one "O: b1 ... bn" line, '#' comments, arbitrary
// whitespace. Validates everything including the single-component check.
GridDiagram parse_grid(std::string_view text);

// Validate already-built tuples (same checks as parse_grid).
GridDiagram make_grid(std::vector<int> X, std::vector<int> O, std::string name = "");

// Emit the grid-file form of G (bit-identical reparse).
std::string format_grid(const GridDiagram& G);

// Count of pairs (a, b), a in A, b in B, with a strictly dominated by b in
// both coordinates. Points are in doubled coordinates so that half-integer
// marker centers stay integral.
int iota_count(std::span<const std::pair<int, int>> A, std::span<const std::pair<int, int>> B);

enum class MarkerSet { X, O };

// Maslov grading of x with respect to one marker family, evaluated on the
// stored fundamental domain (left and bottom edges included): state points
// at lattice (i, s[i]-1), markers at cell centers.
int maslov(const State& x, const GridDiagram& G, MarkerSet markers = MarkerSet::O);

// Alexander grading; defensively verifies integrality (it can only fail to
// be an integer on a multi-component diagram, which parsing rejects).
int alexander(const State& x, const GridDiagram& G);

struct ClassicalInvariants {
    // Writhe of the planar projection in which vertical segments pass over
    // horizontal ones. The front projection the remaining fields describe is
    // read from the same grid with all crossings reversed (its underlying
    // knot is the mirror of the vertical-over projection's), which is why wr
    // enters tb negated.
    int wr = 0;
    int ne_total = 0, ne_x = 0, ne_o = 0, sw_x = 0, sw_o = 0;  // corner census
    int tb = 0, r = 0;
    int sl_plus = 0, sl_minus = 0;
};

// Classical Legendrian/transverse invariants of the planar diagram cut from
// the stored fundamental domain (no wrap).
ClassicalInvariants classical_invariants(const GridDiagram& G);

// A braid word on `strands` strands; entries are +/-g for the g-th Artin
// generator, read bottom to top.
struct BraidWord {
    int strands = 0;
    std::vector<int> word;

    int exponent_sum() const;
    int closure_components() const;
};

// Braid whose closure is the positive transverse pushoff of G's knot:
// verticals with X above O are rerouted through the top of the grid, making
// every strand ascend; each horizontal jump crosses over the strands it
// passes. Guaranteed contract: exponent_sum - strands = sl_plus, closure a
// single component. The word itself is only pinned up to braid moves.
BraidWord grid_to_braid(const GridDiagram& G);

}  // namespace gridknot
