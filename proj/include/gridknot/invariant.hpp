#pragma once

#include <utility>

#include "gridknot/chain.hpp"
#include "gridknot/grid.hpp"
#include "gridknot/state.hpp"

namespace gridknot {

// Which transverse pushoff a query concerns: plus = the state at the upper
// right corners of the X squares, minus = lower left corners.
enum class Sign { plus, minus };

// refine = delta1 tests the once-refined class (the degree-1 boundary of the
// distinguished cycle) instead of the cycle itself.
enum class Refine { theta, delta1 };

// The distinguished cycle. minus: the tuple equals G.X. plus: the corner
// diagonally across each X square, i.e. s[(i+1) mod n] = (X[i] mod n) + 1.
State theta_cycle(const GridDiagram& G, Sign sign);

// (Maslov, Alexander) of the distinguished cycle; throws std::logic_error
// unless M = sl(sign) + 1 and 2A = M. This is the cross-module tripwire
// tying gradings, classical invariants and the corner conventions together.
std::pair<int, int> grading_check(const GridDiagram& G, Sign sign);

// Seed of the refined query: the degree-1 boundary of the distinguished
// cycle. Verifies that the result is closed under the degree-0 differential
// (throws std::logic_error on a convention bug).
Chain delta1_seed(const GridDiagram& G, Sign sign);

}  // namespace gridknot
