#include "gridknot/moves.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <string>

namespace gridknot {

namespace {

// Quadrants of the 2x2 block around a corner, and of a split square.
enum Quad { NW, SW, SE, NE };

constexpr Quad opposite(Quad q) {
    switch (q) {
        case NW: return SE;
        case SW: return NE;
        case SE: return NW;
        default: return SW;
    }
}

constexpr bool is_x_type(StabType t) {
    return t == StabType::X_NW || t == StabType::X_SW || t == StabType::X_SE ||
           t == StabType::X_NE;
}

constexpr Quad quad_of(StabType t) {
    switch (t) {
        case StabType::X_NW:
        case StabType::O_NW: return NW;
        case StabType::X_SW:
        case StabType::O_SW: return SW;
        case StabType::X_SE:
        case StabType::O_SE: return SE;
        default: return NE;
    }
}

StabType make_type(bool x_letter, Quad q) {
    switch (q) {
        case NW: return x_letter ? StabType::X_NW : StabType::O_NW;
        case SW: return x_letter ? StabType::X_SW : StabType::O_SW;
        case SE: return x_letter ? StabType::X_SE : StabType::O_SE;
        default: return x_letter ? StabType::X_NE : StabType::O_NE;
    }
}

// Nested-or-disjoint test for two closed intervals with all four endpoints
// distinct: the number of endpoints of one lying strictly inside the other
// must be even.
bool intervals_compatible(int a1, int b1, int a2, int b2) {
    if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false;
    int lo1 = std::min(a1, b1), hi1 = std::max(a1, b1);
    int lo2 = std::min(a2, b2), hi2 = std::max(a2, b2);
    int inside = (lo1 < lo2 && lo2 < hi1 ? 1 : 0) + (lo1 < hi2 && hi2 < hi1 ? 1 : 0);
    return inside % 2 == 0;
}

}  // namespace

const char* stab_type_name(StabType t) {
    static constexpr std::array<const char*, 8> names = {"X:NW", "X:SW", "X:SE", "X:NE",
                                                         "O:NW", "O:SW", "O:SE", "O:NE"};
    return names[static_cast<int>(t)];
}

std::string MoveSpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::rotL: return "rotL";
        case Kind::rotR: return "rotR";
        case Kind::rotU: return "rotU";
        case Kind::rotD: return "rotD";
        case Kind::commC: os << "commC " << i; break;
        case Kind::commR: os << "commR " << i; break;
        case Kind::stab: os << "stab " << c << ' ' << r << ' ' << stab_type_name(type); break;
        case Kind::destab: os << "destab " << c << ' ' << r; break;
    }
    return os.str();
}

GridDiagram rotate(const GridDiagram& G, RotDir dir) {
    int n = G.n;
    std::vector<int> X(n), O(n);
    switch (dir) {
        case RotDir::right:
            for (int i = 0; i < n; i++) {
                X[(i + 1) % n] = G.X[i];
                O[(i + 1) % n] = G.O[i];
            }
            break;
        case RotDir::left:
            for (int i = 0; i < n; i++) {
                X[i] = G.X[(i + 1) % n];
                O[i] = G.O[(i + 1) % n];
            }
            break;
        case RotDir::down:
            for (int i = 0; i < n; i++) {
                X[i] = G.X[i] == 1 ? n : G.X[i] - 1;
                O[i] = G.O[i] == 1 ? n : G.O[i] - 1;
            }
            break;
        case RotDir::up:
            for (int i = 0; i < n; i++) {
                X[i] = G.X[i] % n + 1;
                O[i] = G.O[i] % n + 1;
            }
            break;
    }
    return make_grid(std::move(X), std::move(O), G.name);
}

bool can_commute_columns(const GridDiagram& G, int i) {
    if (i < 1 || i >= G.n) return false;
    return intervals_compatible(G.X[i - 1], G.O[i - 1], G.X[i], G.O[i]);
}

bool can_commute_rows(const GridDiagram& G, int j) {
    if (j < 1 || j >= G.n) return false;
    return intervals_compatible(G.x_col(j), G.o_col(j), G.x_col(j + 1), G.o_col(j + 1));
}

GridDiagram commute_columns(const GridDiagram& G, int i) {
    if (!can_commute_columns(G, i))
        throw IllegalMoveError("illegal column interchange at " + std::to_string(i));
    std::vector<int> X = G.X, O = G.O;
    std::swap(X[i - 1], X[i]);
    std::swap(O[i - 1], O[i]);
    return make_grid(std::move(X), std::move(O), G.name);
}

GridDiagram commute_rows(const GridDiagram& G, int j) {
    if (!can_commute_rows(G, j))
        throw IllegalMoveError("illegal row interchange at " + std::to_string(j));
    std::vector<int> X = G.X, O = G.O;
    auto swap_rows = [&](std::vector<int>& v) {
        for (int& e : v) {
            if (e == j)
                e = j + 1;
            else if (e == j + 1)
                e = j;
        }
    };
    swap_rows(X);
    swap_rows(O);
    return make_grid(std::move(X), std::move(O), G.name);
}

GridDiagram stabilize(const GridDiagram& G, int c, int r, StabType type) {
    int n = G.n;
    if (c < 1 || c > n || r < 1 || r > n)
        throw IllegalMoveError("enlargement square out of range");
    if (n + 1 > kMaxGrid)
        throw IllegalMoveError("grid number cap reached (" + std::to_string(kMaxGrid) + ")");
    bool xl = is_x_type(type);
    if ((xl ? G.X[c - 1] : G.O[c - 1]) != r)
        throw IllegalMoveError(std::string("square does not carry ") + (xl ? "an X" : "an O"));

    Quad q = quad_of(type);
    Quad co = opposite(q);  // the single co-letter square
    // New-coordinate quadrants of the split square: west column c, east c+1,
    // south row r, north r+1.
    auto qcol = [&](Quad x) { return (x == NW || x == SW) ? c : c + 1; };
    auto qrow = [&](Quad x) { return (x == SW || x == SE) ? r : r + 1; };

    std::vector<int> X2(n + 1, 0), O2(n + 1, 0);
    auto put = [&](bool is_x, int col, int row) { (is_x ? X2 : O2)[col - 1] = row; };
    auto col_of = [&](int j) { return j < c ? j : j + 1; };
    auto row_of = [&](int v) { return v < r ? v : v + 1; };

    // Markers outside the split column and row keep their relative place.
    for (int j = 1; j <= n; j++) {
        if (j == c) continue;
        if (G.X[j - 1] != r) put(true, col_of(j), row_of(G.X[j - 1]));
        if (G.O[j - 1] != r) put(false, col_of(j), row_of(G.O[j - 1]));
    }

    // The doubled letter fills the diagonal avoiding the unmarked quadrant;
    // the co-letter sits diagonally opposite it.
    if (q == NE || q == SW) {
        put(xl, qcol(NW), qrow(NW));
        put(xl, qcol(SE), qrow(SE));
    } else {
        put(xl, qcol(NE), qrow(NE));
        put(xl, qcol(SW), qrow(SW));
    }
    put(!xl, qcol(co), qrow(co));

    // Displaced partners (both carry the co-letter) take the half of the
    // split column/row not occupied by the co-letter square.
    int vp = xl ? G.O[c - 1] : G.X[c - 1];              // column partner's row
    int jp = (xl ? G.o_col(r) : G.x_col(r)) + 1;        // row partner's column, 1-based
    bool co_west = qcol(co) == c, co_south = qrow(co) == r;
    put(!xl, co_west ? c + 1 : c, row_of(vp));
    put(!xl, col_of(jp), co_south ? r + 1 : r);

    return make_grid(std::move(X2), std::move(O2), G.name);
}

namespace {

// Wrap corners (on the cut) are handled by re-cutting the torus first; the
// result is returned in the rotated frame.
void normalize_corner(GridDiagram& g, int& c, int& r) {
    if (c == 1) {
        g = rotate(g, RotDir::right);
        c = 2;
    }
    if (r == 1) {
        g = rotate(g, RotDir::up);
        r = 2;
    }
}

// 0 = unmarked, 'X' or 'O' otherwise.
char square_mark(const GridDiagram& G, int col, int row) {
    if (G.X[col - 1] == row) return 'X';
    if (G.O[col - 1] == row) return 'O';
    return 0;
}

bool corner_pattern(const GridDiagram& G, int c, int r, Quad* q_out, bool* x_letter) {
    if (G.n < 3 || c < 2 || c > G.n || r < 2 || r > G.n) return false;
    // Quadrant squares around the corner where vertical circle c meets
    // horizontal circle r.
    std::array<char, 4> mark{};  // indexed by Quad
    mark[NW] = square_mark(G, c - 1, r);
    mark[SW] = square_mark(G, c - 1, r - 1);
    mark[SE] = square_mark(G, c, r - 1);
    mark[NE] = square_mark(G, c, r);
    int unmarked = -1, count = 0;
    for (int t = 0; t < 4; t++) {
        if (mark[t])
            count++;
        else
            unmarked = t;
    }
    if (count != 3) return false;
    Quad q = static_cast<Quad>(unmarked);
    // With three squares marked, the diagonal avoiding the unmarked quadrant
    // always carries one letter twice.
    Quad d1 = (q == NE || q == SW) ? NW : NE;
    Quad d2 = opposite(d1);
    if (mark[d1] != mark[d2] || mark[d1] == mark[opposite(q)]) return false;
    *q_out = q;
    *x_letter = mark[d1] == 'X';
    return true;
}

}  // namespace

bool can_destabilize(const GridDiagram& G, int c, int r) {
    if (c < 1 || c > G.n || r < 1 || r > G.n || G.n < 3) return false;
    GridDiagram g = G;
    normalize_corner(g, c, r);
    Quad q;
    bool xl;
    return corner_pattern(g, c, r, &q, &xl);
}

StabType destab_type(const GridDiagram& G, int c, int r) {
    GridDiagram g = G;
    if (c >= 1 && c <= G.n && r >= 1 && r <= G.n) normalize_corner(g, c, r);
    Quad q;
    bool xl;
    if (!corner_pattern(g, c, r, &q, &xl))
        throw IllegalMoveError("no reduction available at corner (" + std::to_string(c) + ", " +
                               std::to_string(r) + ")");
    return make_type(xl, q);
}

GridDiagram destabilize(const GridDiagram& G, int c, int r) {
    GridDiagram g = G;
    if (c < 1 || c > G.n || r < 1 || r > G.n || G.n < 3)
        throw IllegalMoveError("no reduction available at corner (" + std::to_string(c) + ", " +
                               std::to_string(r) + ")");
    normalize_corner(g, c, r);
    Quad q;
    bool xl;
    if (!corner_pattern(g, c, r, &q, &xl))
        throw IllegalMoveError("no reduction available at corner (" + std::to_string(c) + ", " +
                               std::to_string(r) + ")");

    int n = g.n;
    std::vector<int> X2(n - 1, 0), O2(n - 1, 0);
    auto put = [&](bool is_x, int col, int row) { (is_x ? X2 : O2)[col - 1] = row; };
    auto col_of = [&](int j) { return j <= c - 1 ? j : j - 1; };
    auto row_of = [&](int v) { return v <= r - 1 ? v : v - 1; };
    auto in_block = [&](int j, int v) {
        return (j == c - 1 || j == c) && (v == r - 1 || v == r);
    };
    for (int j = 1; j <= n; j++) {
        if (!in_block(j, g.X[j - 1])) put(true, col_of(j), row_of(g.X[j - 1]));
        if (!in_block(j, g.O[j - 1])) put(false, col_of(j), row_of(g.O[j - 1]));
    }
    // The three block squares collapse to the merged square, keeping the
    // doubled letter.
    put(xl, c - 1, r - 1);
    return make_grid(std::move(X2), std::move(O2), g.name);
}

GridDiagram apply_move(const GridDiagram& G, const MoveSpec& m) {
    using K = MoveSpec::Kind;
    switch (m.kind) {
        case K::rotL: return rotate(G, RotDir::left);
        case K::rotR: return rotate(G, RotDir::right);
        case K::rotU: return rotate(G, RotDir::up);
        case K::rotD: return rotate(G, RotDir::down);
        case K::commC: return commute_columns(G, m.i);
        case K::commR: return commute_rows(G, m.i);
        case K::stab: return stabilize(G, m.c, m.r, m.type);
        case K::destab: return destabilize(G, m.c, m.r);
    }
    throw IllegalMoveError("unknown move");
}

std::vector<MoveSpec> parse_script(std::string_view text) {
    std::vector<MoveSpec> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        MoveSpec m;
        auto want_int = [&](int& dst) {
            if (!(ls >> dst))
                throw ParseError("script line " + std::to_string(lineno) + ": expected an integer");
        };
        if (word == "rotL") {
            m.kind = MoveSpec::Kind::rotL;
        } else if (word == "rotR") {
            m.kind = MoveSpec::Kind::rotR;
        } else if (word == "rotU") {
            m.kind = MoveSpec::Kind::rotU;
        } else if (word == "rotD") {
            m.kind = MoveSpec::Kind::rotD;
        } else if (word == "commC") {
            m.kind = MoveSpec::Kind::commC;
            want_int(m.i);
        } else if (word == "commR") {
            m.kind = MoveSpec::Kind::commR;
            want_int(m.i);
        } else if (word == "stab") {
            m.kind = MoveSpec::Kind::stab;
            want_int(m.c);
            want_int(m.r);
            std::string ty;
            if (!(ls >> ty))
                throw ParseError("script line " + std::to_string(lineno) + ": missing type");
            bool found = false;
            for (int t = 0; t < 8 && !found; t++)
                if (ty == stab_type_name(static_cast<StabType>(t))) {
                    m.type = static_cast<StabType>(t);
                    found = true;
                }
            if (!found)
                throw ParseError("script line " + std::to_string(lineno) + ": unknown type " + ty);
        } else if (word == "destab") {
            m.kind = MoveSpec::Kind::destab;
            want_int(m.c);
            want_int(m.r);
        } else {
            throw ParseError("script line " + std::to_string(lineno) + ": unknown move " + word);
        }
        std::string extra;
        if (ls >> extra)
            throw ParseError("script line " + std::to_string(lineno) + ": trailing tokens");
        out.push_back(m);
    }
    return out;
}

std::pair<MoveSpec, GridDiagram> random_transverse_move(const GridDiagram& G,
                                                        std::mt19937_64& rng, int max_n) {
    constexpr StabType kTransverse[] = {StabType::X_NW, StabType::X_SE, StabType::X_SW};
    std::vector<MoveSpec> pool;
    for (int i = 1; i < G.n; i++) {
        if (can_commute_columns(G, i))
            pool.push_back({MoveSpec::Kind::commC, i, 0, 0, StabType::X_NW});
        if (can_commute_rows(G, i))
            pool.push_back({MoveSpec::Kind::commR, i, 0, 0, StabType::X_NW});
    }
    auto add_stabs = [&] {
        for (int c = 1; c <= G.n; c++)
            for (StabType t : kTransverse)
                pool.push_back({MoveSpec::Kind::stab, 0, c, G.X[c - 1], t});
    };
    bool budget_open = (max_n <= 0 || G.n < max_n) && G.n + 1 <= kMaxGrid;
    if (budget_open) add_stabs();
    for (int c = 2; c <= G.n; c++)
        for (int r = 2; r <= G.n; r++) {
            Quad q;
            bool xl;
            if (!corner_pattern(G, c, r, &q, &xl)) continue;
            StabType t = make_type(xl, q);
            if (t == StabType::X_NW || t == StabType::X_SE || t == StabType::X_SW)
                pool.push_back({MoveSpec::Kind::destab, 0, c, r, StabType::X_NW});
        }
    // A diagram with no legal interchange and no transverse reduction still
    // gets a move: fall back to enlargements even past the size budget.
    if (pool.empty()) add_stabs();

    MoveSpec m = pool[rng() % pool.size()];
    return {m, apply_move(G, m)};
}

}  // namespace gridknot
