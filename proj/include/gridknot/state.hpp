#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace gridknot {

// Largest supported grid number. 24 entries of 5 bits fit the two-word
// packed key used by the lazy engine's state registry.
inline constexpr int kMaxGrid = 24;

// A generator of the chain complex: a bijection sending each vertical grid
// circle to the horizontal grid circle it meets. Entry s[i] (0-based column
// index i, 1-based circle value) follows the tuple notation used throughout:
// the state's point on vertical circle i+1 lies on horizontal circle s[i].
// Geometrically the point for column i sits at lattice position (i, s[i]-1).
struct State {
    std::uint8_t n = 0;
    std::array<std::uint8_t, kMaxGrid> s{};

    State() = default;
    State(std::initializer_list<int> vals) {
        n = static_cast<std::uint8_t>(vals.size());
        int i = 0;
        for (int v : vals) s[i++] = static_cast<std::uint8_t>(v);
    }

    int size() const { return n; }
    std::uint8_t operator[](int i) const { return s[i]; }
    std::uint8_t& operator[](int i) { return s[i]; }

    // Tuple order: unused tail entries are zero, so comparing the whole
    // array is lexicographic order on the tuple for states of equal size.
    friend auto operator<=>(const State&, const State&) = default;

    std::string to_string() const;
};

// Two-word packed encoding (5 bits per entry), the registry hash key.
struct PackedState {
    std::uint64_t lo = 0, hi = 0;
    friend bool operator==(const PackedState&, const PackedState&) = default;
};

PackedState pack_state(const State& x);
std::uint64_t hash_packed(const PackedState& p);

}  // namespace gridknot
