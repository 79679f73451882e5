#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridknot/grid.hpp"

namespace gridknot {

// A move whose precondition fails on the diagram it is applied to.
struct IllegalMoveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The eight local enlargement types: the letter carried by the doubled
// marker, and the quadrant of the unmarked square relative to the corner
// shared by the three marked squares.
enum class StabType { X_NW, X_SW, X_SE, X_NE, O_NW, O_SW, O_SE, O_NE };

const char* stab_type_name(StabType t);  // "X:NW" etc.

struct MoveSpec {
    enum class Kind { rotL, rotR, rotU, rotD, commC, commR, stab, destab };
    Kind kind{};
    int i = 0;           // commC/commR: 1-based column/row index
    int c = 0, r = 0;    // stab: marked square; destab: circle pair of the corner
    StabType type{};     // stab only

    std::string to_string() const;
};

enum class RotDir { left, right, up, down };

// Cyclic re-cut of the fundamental domain. right/down move the diagram's
// content one step in that direction (column n wraps to column 1, row 1
// wraps to row n); left/up are the inverses.
GridDiagram rotate(const GridDiagram& G, RotDir dir);

// Swap the decorations of columns i and i+1 (1 <= i <= n-1). Legal only if
// the two marker intervals, read in the current planar cut, are nested or
// disjoint with all four endpoints distinct.
GridDiagram commute_columns(const GridDiagram& G, int i);
GridDiagram commute_rows(const GridDiagram& G, int j);

bool can_commute_columns(const GridDiagram& G, int i);
bool can_commute_rows(const GridDiagram& G, int j);

// Enlarge the grid by one at the marked square (c, r) (1-based; the square
// must carry the type's letter). The square's column and row are split in
// two; the 2x2 block left behind gets the doubled letter on the diagonal
// avoiding the type's unmarked quadrant, the other letter diagonally
// opposite that quadrant, and the displaced column/row partners move to the
// half not filled by the block. Topological type is preserved; the effect
// on (tb, r) depends only on the type.
GridDiagram stabilize(const GridDiagram& G, int c, int r, StabType type);

// Inverse: (c, r) names the corner where vertical circle c meets horizontal
// circle r (1-based). Requires the three-marked-square local picture there,
// with the doubled letter on a diagonal; deletes both circles.
GridDiagram destabilize(const GridDiagram& G, int c, int r);

bool can_destabilize(const GridDiagram& G, int c, int r);
// Type of the destabilization available at corner (c, r); throws if none.
StabType destab_type(const GridDiagram& G, int c, int r);

// Apply one parsed move; throws IllegalMoveError with a step-appropriate
// message when the precondition fails.
GridDiagram apply_move(const GridDiagram& G, const MoveSpec& m);

// Move-script text: one move per line ("rotL", "rotR", "rotU", "rotD",
// "commC i", "commR j", "stab c r TYPE", "destab c r"), '#' comments.
std::vector<MoveSpec> parse_script(std::string_view text);

// Uniformly sample a legal move from the transverse set: legal commutations,
// enlargements of the three transverse types at any X square, and available
// destabilizations of those types. If max_n > 0, enlargements are excluded
// while n == max_n so scripted walks stay within a size budget.
std::pair<MoveSpec, GridDiagram> random_transverse_move(const GridDiagram& G,
                                                        std::mt19937_64& rng, int max_n = 0);

}  // namespace gridknot
