#pragma once

#include <vector>

#include "gridknot/state.hpp"

namespace gridknot {

// A mod-2 formal sum of states: set semantics, kept sorted in tuple order.
struct Chain {
    std::vector<State> states;

    bool empty() const { return states.empty(); }
    int size() const { return static_cast<int>(states.size()); }
    bool contains(const State& x) const;

    // Toggle x in or out (coefficient arithmetic over the two-element field).
    void toggle(const State& x);

    friend bool operator==(const Chain&, const Chain&) = default;
};

// Symmetric difference (mod-2 sum) of two chains.
Chain chain_xor(const Chain& a, const Chain& b);

}  // namespace gridknot
