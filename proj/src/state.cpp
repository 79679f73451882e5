#include "gridknot/state.hpp"

namespace gridknot {

std::string State::to_string() const {
    std::string out = "(";
    for (int i = 0; i < n; i++) {
        if (i) out += ",";
        out += std::to_string(int(s[i]));
    }
    out += ")";
    return out;
}

PackedState pack_state(const State& x) {
    PackedState p;
    for (int i = 0; i < x.n && i < 12; i++) p.lo |= std::uint64_t(x.s[i]) << (5 * i);
    for (int i = 12; i < x.n; i++) p.hi |= std::uint64_t(x.s[i]) << (5 * (i - 12));
    return p;
}

std::uint64_t hash_packed(const PackedState& p) {
    // splitmix64 finalizer over both words
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(p.lo ^ mix(p.hi));
}

}  // namespace gridknot
