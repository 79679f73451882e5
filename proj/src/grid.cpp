#include "gridknot/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace gridknot {

int GridDiagram::x_col(int row) const {
    for (int i = 0; i < n; i++)
        if (X[i] == row) return i;
    return -1;
}

int GridDiagram::o_col(int row) const {
    for (int i = 0; i < n; i++)
        if (O[i] == row) return i;
    return -1;
}

static void check_permutation(const std::vector<int>& t, int n, const char* which) {
    std::vector<char> seen(n + 1, 0);
    for (int v : t) {
        if (v < 1 || v > n) throw ParseError(std::string(which) + " entry out of range 1..n");
        if (seen[v]) throw ParseError(std::string(which) + " tuple repeats value " + std::to_string(v));
        seen[v] = 1;
    }
}

GridDiagram make_grid(std::vector<int> X, std::vector<int> O, std::string name) {
    GridDiagram G;
    G.n = static_cast<int>(X.size());
    if (G.n < 2) throw ParseError("grid number must be at least 2");
    if (G.n > kMaxGrid) throw ParseError("grid number exceeds supported maximum " + std::to_string(kMaxGrid));
    if (O.size() != X.size()) throw ParseError("X and O tuples have different lengths");
    check_permutation(X, G.n, "X");
    check_permutation(O, G.n, "O");
    for (int i = 0; i < G.n; i++)
        if (X[i] == O[i])
            throw ParseError("X and O collide in column " + std::to_string(i + 1));
    G.X = std::move(X);
    G.O = std::move(O);
    G.name = std::move(name);

    // Knot check: starting in any column, the grid's segments visit columns
    // in the cycle i -> column of the O in row X[i]. One component iff that
    // cycle has full length n.
    std::vector<int> o_col_of_row(G.n + 1);
    for (int i = 0; i < G.n; i++) o_col_of_row[G.O[i]] = i;
    int col = 0, steps = 0;
    do {
        col = o_col_of_row[G.X[col]];
        steps++;
    } while (col != 0 && steps <= G.n);
    if (steps != G.n) throw NotAKnotError("diagram traces more than one component");
    return G;
}

GridDiagram parse_grid(std::string_view text) {
    std::string name;
    std::vector<int> X, O;
    bool saw_x = false, saw_o = false;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'name:', 'X:' or 'O:'");
        std::string key = line.substr(first, colon - first);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        std::string rest = line.substr(colon + 1);
        if (key == "name") {
            auto b = rest.find_first_not_of(" \t\r");
            auto e = rest.find_last_not_of(" \t\r");
            name = (b == std::string::npos) ? "" : rest.substr(b, e - b + 1);
            continue;
        }
        if (key != "X" && key != "O")
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        std::vector<int>& dst = (key == "X") ? X : O;
        bool& saw = (key == "X") ? saw_x : saw_o;
        if (saw) throw ParseError("line " + std::to_string(lineno) + ": duplicate " + key + " line");
        saw = true;
        std::istringstream nums(rest);
        std::string tok;
        while (nums >> tok) {
            char* end = nullptr;
            long v = std::strtol(tok.c_str(), &end, 10);
            if (end == tok.c_str() || *end != '\0')
                throw ParseError("line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
            dst.push_back(static_cast<int>(v));
        }
        if (dst.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty " + key + " tuple");
    }
    if (!saw_x || !saw_o) throw ParseError("grid file needs both an X: and an O: line");
    return make_grid(std::move(X), std::move(O), std::move(name));
}

std::string format_grid(const GridDiagram& G) {
    std::string out;
    if (!G.name.empty()) out += "name: " + G.name + "\n";
    auto tuple_line = [&](const char* key, const std::vector<int>& t) {
        out += key;
        out += ":";
        for (int v : t) out += " " + std::to_string(v);
        out += "\n";
    };
    tuple_line("X", G.X);
    tuple_line("O", G.O);
    return out;
}

int iota_count(std::span<const std::pair<int, int>> A, std::span<const std::pair<int, int>> B) {
    int count = 0;
    for (auto& a : A)
        for (auto& b : B)
            if (a.first < b.first && a.second < b.second) count++;
    return count;
}

// Doubled coordinates keep half-integer marker centers integral: the state
// point for column i sits at (2i, 2(s[i]-1)), the marker in column i row v
// at (2i+1, 2v-1).
static void state_points(const State& x, std::vector<std::pair<int, int>>& out) {
    out.clear();
    for (int i = 0; i < x.n; i++) out.emplace_back(2 * i, 2 * (x.s[i] - 1));
}

static void marker_points(const std::vector<int>& rows, std::vector<std::pair<int, int>>& out) {
    out.clear();
    for (int i = 0; i < static_cast<int>(rows.size()); i++) out.emplace_back(2 * i + 1, 2 * rows[i] - 1);
}

int maslov(const State& x, const GridDiagram& G, MarkerSet markers) {
    std::vector<std::pair<int, int>> P, M;
    state_points(x, P);
    marker_points(markers == MarkerSet::O ? G.O : G.X, M);
    return iota_count(P, P) - iota_count(P, M) - iota_count(M, P) + iota_count(M, M) + 1;
}

int alexander(const State& x, const GridDiagram& G) {
    int diff = maslov(x, G, MarkerSet::O) - maslov(x, G, MarkerSet::X);
    int num = diff - (G.n - 1);  // 2A
    if (num % 2 != 0) throw std::logic_error("half-integer Alexander grading on a knot diagram");
    return num / 2;
}

// Planar projection conventions (stored fundamental domain, no wrap):
// markers sit at (col, row-1); each column's segment runs vertically from
// its X to its O, each row's runs horizontally from its O to its X, and
// vertical segments cross over horizontal ones.
ClassicalInvariants classical_invariants(const GridDiagram& G) {
    ClassicalInvariants ci;
    const int n = G.n;

    std::vector<int> xcol(n + 1), ocol(n + 1);
    for (int i = 0; i < n; i++) {
        xcol[G.X[i]] = i;
        ocol[G.O[i]] = i;
    }

    // Crossings: vertical segment of column c against the horizontal
    // segment of row v, both taken strictly in their interiors. Sign is
    // det(over, under) for (vertical, horizontal) directions.
    for (int c = 0; c < n; c++) {
        int ylo = std::min(G.X[c], G.O[c]) - 1, yhi = std::max(G.X[c], G.O[c]) - 1;
        int vy = (G.O[c] > G.X[c]) ? 1 : -1;  // vertical runs X -> O
        for (int v = 1; v <= n; v++) {
            int y = v - 1;
            if (y <= ylo || y >= yhi) continue;
            int xa = ocol[v], xb = xcol[v];
            if (std::min(xa, xb) < c && c < std::max(xa, xb)) {
                int hx = (xb > xa) ? 1 : -1;  // horizontal runs O -> X
                ci.wr += -vy * hx;
            }
        }
    }

    // Corner census: at each marker the incident segments extend one
    // vertical and one horizontal way; extensions E+N make a SW corner,
    // E+S a NW, W+N a SE, W+S a NE.
    auto corner = [&](int col, int row, bool is_x) {
        int other_row = is_x ? G.O[col] : G.X[col];              // vertical partner
        int other_col = is_x ? ocol[row] : xcol[row];            // horizontal partner
        bool north = other_row > row, east = other_col > col;
        if (!east && !north) {  // W+S: NE corner
            ci.ne_total++;
            (is_x ? ci.ne_x : ci.ne_o)++;
        } else if (east && north) {  // E+N: SW corner
            (is_x ? ci.sw_x : ci.sw_o)++;
        }
    };
    for (int c = 0; c < n; c++) {
        corner(c, G.X[c], true);
        corner(c, G.O[c], false);
    }

    ci.tb = -ci.wr - ci.ne_total;
    int two_r = ci.ne_x - ci.ne_o - ci.sw_x + ci.sw_o;
    if (two_r % 2 != 0) throw std::logic_error("odd rotation-number numerator on a knot diagram");
    ci.r = two_r / 2;
    ci.sl_plus = ci.tb - ci.r;
    ci.sl_minus = ci.tb + ci.r;
    return ci;
}

int BraidWord::exponent_sum() const {
    int e = 0;
    for (int g : word) e += (g > 0) ? 1 : -1;
    return e;
}

int BraidWord::closure_components() const {
    std::vector<int> perm(strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (int g : word) std::swap(perm[std::abs(g) - 1], perm[std::abs(g)]);
    std::vector<char> seen(strands, 0);
    int comps = 0;
    for (int i = 0; i < strands; i++) {
        if (seen[i]) continue;
        comps++;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    return comps;
}

// Sweep the rows bottom to top. Verticals with X above O are rerouted
// through the top edge, so every vertical ascends and the braid strands at
// any height are the columns whose (possibly rerouted) vertical covers it.
// The horizontal jump of row v carries the strand ending at that row's O
// over to that row's X, crossing over every active strand in between;
// rightward passes are positive crossings.
BraidWord grid_to_braid(const GridDiagram& G) {
    const int n = G.n;
    BraidWord bw;

    std::vector<int> xcol(n + 1), ocol(n + 1);
    for (int i = 0; i < n; i++) {
        xcol[G.X[i]] = i;
        ocol[G.O[i]] = i;
    }

    // Active columns just below row v's horizontal, kept sorted. At height
    // 0+ these are exactly the rerouted (wrapping) columns.
    std::vector<int> active;
    for (int c = 0; c < n; c++)
        if (G.X[c] > G.O[c]) active.push_back(c);
    std::sort(active.begin(), active.end());
    bw.strands = static_cast<int>(active.size());

    for (int v = 1; v <= n; v++) {
        int from = ocol[v], to = xcol[v];
        auto it = std::lower_bound(active.begin(), active.end(), from);
        int pos = static_cast<int>(it - active.begin());  // 0-based strand position
        active.erase(it);                                 // this vertical ends at its O
        auto it2 = std::lower_bound(active.begin(), active.end(), to);
        int pos2 = static_cast<int>(it2 - active.begin());
        active.insert(it2, to);  // the new vertical starts at this X
        if (pos2 > pos)
            for (int p = pos; p < pos2; p++) bw.word.push_back(p + 1);  // rightward: sigma_p positive
        else
            for (int p = pos; p > pos2; p--) bw.word.push_back(-p);  // leftward: negative
    }
    return bw;
}

}  // namespace gridknot
