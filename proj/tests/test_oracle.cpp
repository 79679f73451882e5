#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "gridknot/grid.hpp"
#include "gridknot/invariant.hpp"
#include "gridknot/moves.hpp"
#include "gridknot/nullity.hpp"
#include "gridknot/oracle.hpp"
#include "gridknot/rect.hpp"
#include "helpers.hpp"

using namespace gridknot;
using testutil::trefoil5;
using testutil::unknot2;
using testutil::unknot3;

namespace {

Chain single(const State& s) {
    Chain c;
    c.toggle(s);
    return c;
}

GridDiagram staircase(int n) {
    std::vector<int> X(n), O(n);
    for (int i = 0; i < n; i++) {
        X[i] = i + 2 > n ? 1 : i + 2;
        O[i] = i + 1;
    }
    return make_grid(X, O);
}

GridDiagram random_knot(int n, std::mt19937_64& rng) {
    std::vector<int> X(n), O(n);
    std::iota(X.begin(), X.end(), 1);
    std::iota(O.begin(), O.end(), 1);
    while (true) {
        std::shuffle(X.begin(), X.end(), rng);
        std::shuffle(O.begin(), O.end(), rng);
        try {
            return make_grid(X, O);
        } catch (const std::exception&) {
        }
    }
}

}  // namespace

TEST_CASE("grading bins partition the state space") {
    std::mt19937_64 rng(31);
    GridDiagram G = random_knot(5, rng);
    std::map<int, std::vector<State>> expected;
    std::vector<int> perm{1, 2, 3, 4, 5};
    do {
        State s;
        s.n = 5;
        for (int i = 0; i < 5; i++) s[i] = static_cast<std::uint8_t>(perm[i]);
        expected[maslov(s, G)].push_back(s);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::size_t total = 0;
    for (const auto& [m, states] : expected) {
        auto got = enumerate_states(G, m);
        CHECK(std::is_sorted(got.begin(), got.end()));
        CHECK(got == states);  // next_permutation emits lexicographic order
        total += got.size();
    }
    CHECK(total == 120);
    // A grading nothing occupies yields an empty bin.
    CHECK(enumerate_states(G, expected.begin()->first - 1).empty());
}

TEST_CASE("every boundary is certified as a boundary") {
    std::mt19937_64 rng(32);
    for (int n : {4, 5, 6}) {
        GridDiagram G = random_knot(n, rng);
        CAPTURE(n);
        int found = 0;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            State s;
            s.n = static_cast<std::uint8_t>(n);
            for (int i = 0; i < n; i++) s[i] = static_cast<std::uint8_t>(perm[i]);
            Chain b = tilde_boundary(s, G);
            if (b.empty()) continue;
            CHECK(membership(G, b));
            if (++found == 6) break;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(found > 0);
    }
}

TEST_CASE("the empty chain always bounds") {
    CHECK(membership(unknot2(), Chain{}));
}

TEST_CASE("the dense sweep and the lazy engine agree everywhere tested") {
    std::mt19937_64 rng(33);
    std::vector<GridDiagram> diagrams{unknot2(), unknot3(), trefoil5(),
                                      stabilize(trefoil5(), 1, 4, StabType::X_NE)};
    for (int t = 0; t < 3; t++) diagrams.push_back(random_knot(6, rng));

    for (const GridDiagram& G : diagrams) {
        for (Sign s : {Sign::plus, Sign::minus}) {
            for (const Chain& seed : {single(theta_cycle(G, s)), delta1_seed(G, s)}) {
                bool dense = membership(G, seed);
                bool lazy = is_null(G, seed).result == Result::Null;
                CAPTURE(G.name);
                CHECK(dense == lazy);
            }
        }
    }
}

TEST_CASE("oversize grids are refused rather than swept") {
    GridDiagram big = staircase(11);
    CHECK_THROWS_AS(enumerate_states(big, 0), OracleLimitError);
    CHECK_THROWS_AS(membership(big, single(theta_cycle(big, Sign::minus))), OracleLimitError);
    GridDiagram seven = staircase(7);
    CHECK_THROWS_AS(homology_dims(seven), OracleLimitError);
    // Tightened limits bite earlier.
    OracleLimits tight;
    tight.max_n_membership = 4;
    CHECK_THROWS_AS(membership(trefoil5(), single(theta_cycle(trefoil5(), Sign::minus)), tight),
                    OracleLimitError);
}

TEST_CASE("mixed-grading membership targets are rejected") {
    GridDiagram G = unknot2();
    Chain bad;
    bad.toggle(State{2, 1});
    bad.toggle(State{1, 2});
    CHECK_THROWS_AS(membership(G, bad), std::invalid_argument);
}

TEST_CASE("homology tables of the three smallest fixtures") {
    using Table = std::map<int, std::int64_t>;
    CHECK(homology_dims(unknot2()) == Table{{-1, 1}, {0, 1}});
    CHECK(homology_dims(unknot3()) == Table{{-2, 1}, {-1, 2}, {0, 1}});
    CHECK(homology_dims(trefoil5()) ==
          Table{{-4, 1}, {-3, 5}, {-2, 11}, {-1, 14}, {0, 11}, {1, 5}, {2, 1}});
}

TEST_CASE("homology tables under the full differential") {
    using Table = std::map<int, std::int64_t>;
    CHECK(homology_dims(unknot2(), true) == Table{{-1, 1}, {0, 1}});
    CHECK(homology_dims(unknot3(), true) == Table{{-2, 1}, {-1, 2}, {0, 1}});
    // Binomial profile: the two-column overhead contributes a rank-4 factor.
    CHECK(homology_dims(trefoil5(), true) == Table{{-4, 1}, {-3, 4}, {-2, 6}, {-1, 4}, {0, 1}});
}
