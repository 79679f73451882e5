#include "gridknot/chain.hpp"

#include <algorithm>

namespace gridknot {

bool Chain::contains(const State& x) const {
    return std::binary_search(states.begin(), states.end(), x);
}

void Chain::toggle(const State& x) {
    auto it = std::lower_bound(states.begin(), states.end(), x);
    if (it != states.end() && *it == x)
        states.erase(it);
    else
        states.insert(it, x);
}

Chain chain_xor(const Chain& a, const Chain& b) {
    Chain out;
    out.states.reserve(a.states.size() + b.states.size());
    std::set_symmetric_difference(a.states.begin(), a.states.end(), b.states.begin(),
                                  b.states.end(), std::back_inserter(out.states));
    return out;
}

}  // namespace gridknot
