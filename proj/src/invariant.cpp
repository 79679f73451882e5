#include "gridknot/invariant.hpp"

#include <stdexcept>

#include "gridknot/rect.hpp"

namespace gridknot {

State theta_cycle(const GridDiagram& G, Sign sign) {
    State x;
    x.n = static_cast<std::uint8_t>(G.n);
    if (sign == Sign::minus) {
        // Lower-left corners of the X squares: the X tuple itself.
        for (int i = 0; i < G.n; i++) x.s[i] = static_cast<std::uint8_t>(G.X[i]);
    } else {
        // Upper-right corners: one circle over in both directions, with wrap.
        for (int i = 0; i < G.n; i++)
            x.s[(i + 1) % G.n] = static_cast<std::uint8_t>(G.X[i] % G.n + 1);
    }
    return x;
}

std::pair<int, int> grading_check(const GridDiagram& G, Sign sign) {
    State x = theta_cycle(G, sign);
    int M = maslov(x, G, MarkerSet::O);
    int A = alexander(x, G);
    ClassicalInvariants ci = classical_invariants(G);
    int sl = (sign == Sign::plus) ? ci.sl_plus : ci.sl_minus;
    if (M != sl + 1 || 2 * A != M)
        throw std::logic_error("distinguished cycle grading mismatch: M=" + std::to_string(M) +
                               " A=" + std::to_string(A) + " sl=" + std::to_string(sl));
    return {M, A};
}

Chain delta1_seed(const GridDiagram& G, Sign sign) {
    Chain seed = tilde_boundary_k(theta_cycle(G, sign), G, 1);
    // The degree-0 and degree-1 pieces anticommute, and the cycle has no
    // degree-0 boundary, so the seed must be degree-0 closed.
    Chain dd;
    for (const State& y : seed.states) dd = chain_xor(dd, tilde_boundary(y, G));
    if (!dd.empty()) throw std::logic_error("refined seed is not closed under the degree-0 differential");
    return seed;
}

}  // namespace gridknot
