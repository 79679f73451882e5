#include "gridknot/rect.hpp"

#include <algorithm>

namespace gridknot {

// The two complementary rectangles for states differing exactly in columns
// p < q (0-based). With a = x[p]-1 and b = x[q]-1 as 0-based rows, x
// occupies (p,a) and (q,b); the rectangle with SW corner at an x-point is
// either cols [p..q) x rows [a..b) or cols [q..p) x rows [b..a) (cyclic).
static Rect rect_from(int n, int p, int q, int a, int b) {
    Rect r;
    r.c0 = static_cast<std::uint8_t>(p);
    r.r0 = static_cast<std::uint8_t>(a);
    r.c_len = static_cast<std::uint8_t>((q - p + n) % n);
    r.r_len = static_cast<std::uint8_t>((b - a + n) % n);
    return r;
}

std::vector<Rect> rectangles(const State& x, const State& y) {
    std::vector<Rect> out;
    if (x.n != y.n) return out;
    int p = -1, q = -1;
    for (int i = 0; i < x.n; i++) {
        if (x.s[i] == y.s[i]) continue;
        if (p < 0)
            p = i;
        else if (q < 0)
            q = i;
        else
            return out;  // more than two columns differ
    }
    if (q < 0) return out;  // fewer than two differ
    if (x.s[p] != y.s[q] || x.s[q] != y.s[p]) return out;  // not a transposition
    int n = x.n, a = x.s[p] - 1, b = x.s[q] - 1;
    out.push_back(rect_from(n, p, q, a, b));
    out.push_back(rect_from(n, q, p, b, a));
    return out;
}

bool is_empty(const Rect& r, const State& x) {
    const int n = x.n;
    // Lattice points strictly inside: columns and rows strictly between the
    // bounding circles, measured cyclically from the SW corner.
    for (int dc = 1; dc < r.c_len; dc++) {
        int c = r.c0 + dc;
        if (c >= n) c -= n;
        int dr = (x.s[c] - 1) - r.r0;
        if (dr < 0) dr += n;
        if (dr >= 1 && dr <= r.r_len - 1) return false;
    }
    return true;
}

std::pair<int, int> marker_counts(const Rect& r, const GridDiagram& G) {
    const int n = G.n;
    int xs = 0, os = 0;
    // A marker's cell (c, v-1) lies inside iff both cyclic offsets from the
    // SW corner are within the extents.
    for (int dc = 0; dc < r.c_len; dc++) {
        int c = r.c0 + dc;
        if (c >= n) c -= n;
        int dx = (G.X[c] - 1) - r.r0;
        if (dx < 0) dx += n;
        if (dx < r.r_len) xs++;
        int dy = (G.O[c] - 1) - r.r0;
        if (dy < 0) dy += n;
        if (dy < r.r_len) os++;
    }
    return {xs, os};
}

// Core edge test: does the pair-swap move from x at columns p < q, with
// rectangle constraints (no O markers, X-marker count filtered by want_x;
// want_x < 0 accepts any X count), contribute an odd rectangle count?
static bool odd_qualifying(const State& x, const GridDiagram& G, int p, int q, int want_x) {
    const int n = x.n;
    int a = x.s[p] - 1, b = x.s[q] - 1;
    int hits = 0;
    for (int which = 0; which < 2; which++) {
        Rect r = which == 0 ? rect_from(n, p, q, a, b) : rect_from(n, q, p, b, a);
        if (!is_empty(r, x)) continue;
        auto [xs, os] = marker_counts(r, G);
        if (os != 0) continue;
        if (want_x >= 0 && xs != want_x) continue;
        hits++;
    }
    return hits & 1;
}

static Chain boundary_impl(const State& x, const GridDiagram& G, int want_x) {
    Chain out;
    for (int p = 0; p < x.n; p++)
        for (int q = p + 1; q < x.n; q++)
            if (odd_qualifying(x, G, p, q, want_x)) {
                State y = x;
                std::swap(y.s[p], y.s[q]);
                out.toggle(y);
            }
    return out;
}

Chain tilde_boundary(const State& x, const GridDiagram& G) { return boundary_impl(x, G, 0); }

Chain tilde_boundary_k(const State& x, const GridDiagram& G, int k) {
    if (k >= G.n * G.n) return {};  // a rectangle holds fewer markers than cells
    return boundary_impl(x, G, k);
}

Chain tilde_boundary_full(const State& x, const GridDiagram& G) { return boundary_impl(x, G, -1); }

std::vector<State> tilde_predecessors(const State& y, const GridDiagram& G) {
    std::vector<State> out;
    for (int p = 0; p < y.n; p++)
        for (int q = p + 1; q < y.n; q++) {
            State x = y;
            std::swap(x.s[p], x.s[q]);
            if (odd_qualifying(x, G, p, q, 0)) out.push_back(x);
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gridknot
