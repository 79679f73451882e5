#include "gridknot/nullity.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <queue>
#include <stdexcept>
#include <string>

#include "gridknot/rect.hpp"

namespace gridknot {

// ---------------------------------------------------------------------------
// ConeComplex

ConeComplex::ConeComplex() {
    // id 0 is a0: live forever, top side, boundary = seed.
    key_.push_back({0, 0});
    alive_.push_back(1);
    boundary_.emplace_back();
    incoming_.emplace_back();
    elim_index_.push_back(-1);
}

int ConeComplex::add_generator(OrderKey key) {
    key_.push_back(key);
    alive_.push_back(1);
    boundary_.emplace_back();
    incoming_.emplace_back();
    elim_index_.push_back(-1);
    live_++;
    account(0);
    return static_cast<int>(key_.size()) - 1;
}

void ConeComplex::set_boundary(int a, std::vector<int> bs) {
    assert(alive_[a] && boundary_[a].empty());
    for (int b : bs) {
        assert(alive_[b]);
        // a is the newest generator, so appending keeps reverse lists sorted.
        assert(incoming_[b].empty() || incoming_[b].back() < a);
        incoming_[b].push_back(a);
    }
    account(static_cast<std::int64_t>(bs.size()) * 2);
    boundary_[a] = std::move(bs);
}

void ConeComplex::set_seed(std::vector<int> bs) {
    assert(boundary_[0].empty());
    for (int b : bs) {
        assert(alive_[b]);
        bool added = toggle_sorted(incoming_[b], 0);
        assert(added);
        (void)added;
    }
    account(static_cast<std::int64_t>(bs.size()) * 2);
    boundary_[0] = std::move(bs);
}

void ConeComplex::toggle_edge(int a, int b) {
    bool on = toggle_sorted(boundary_[a], b);
    bool on2 = toggle_sorted(incoming_[b], a);
    assert(on == on2);
    (void)on2;
    account(on ? 2 : -2);
}

bool ConeComplex::has_edge(int a, int b) const {
    return std::binary_search(boundary_[a].begin(), boundary_[a].end(), b);
}

bool ConeComplex::alive(int id) const { return alive_[id] != 0; }

const std::vector<int>& ConeComplex::boundary(int a) const { return boundary_[a]; }

const std::vector<int>& ConeComplex::incoming(int b) const { return incoming_[b]; }

ConeComplex::Candidate ConeComplex::make_candidate(int a, int b) const {
    return Candidate{key_[a].first, key_[a].second, key_[b].first, key_[b].second, a, b};
}

void ConeComplex::account(std::int64_t delta_ints) {
    edge_ints_ += delta_ints;
    if (byte_budget_ >= 0 && byte_usage() > byte_budget_)
        throw ResourceLimitError("live complex exceeded the configured memory budget (" +
                                 std::to_string(byte_usage()) + " bytes accounted); raise the cap "
                                 "or use interleaved mode");
}

bool ConeComplex::toggle_sorted(std::vector<int>& v, int id) {
    auto it = std::lower_bound(v.begin(), v.end(), id);
    if (it != v.end() && *it == id) {
        v.erase(it);
        return false;
    }
    v.insert(it, id);
    return true;
}

void ConeComplex::erase_sorted(std::vector<int>& v, int id) {
    auto it = std::lower_bound(v.begin(), v.end(), id);
    assert(it != v.end() && *it == id);
    v.erase(it);
}

std::int64_t ConeComplex::byte_usage() const {
    // Approximate but consistent: per-generator fixed cost plus 4 bytes per
    // stored adjacency int plus the elimination log.
    constexpr std::int64_t kPerGenerator = 72;
    return static_cast<std::int64_t>(key_.size()) * kPerGenerator + edge_ints_ * 4 +
           log_ints_ * 4 + static_cast<std::int64_t>(log_pivot_b_.size()) * 32;
}

void ConeComplex::reduce_against_log(std::vector<int>& bs) const {
    if (log_pivot_b_.empty()) return;
    // Replay cancellations chronologically: substituting the earliest dead
    // entry can only introduce entries cancelled later, so a min-heap on the
    // log position processes each relevant pivot exactly once.
    std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>,
                        std::greater<std::pair<int, int>>>
        dead;
    for (int b : bs)
        if (elim_index_[b] >= 0) dead.push({elim_index_[b], b});
    while (!dead.empty()) {
        auto [t, b] = dead.top();
        dead.pop();
        auto it = std::lower_bound(bs.begin(), bs.end(), b);
        if (it == bs.end() || *it != b) continue;  // cancelled mod 2 meanwhile
        bs.erase(it);
        for (int r : log_repl_[t]) {
            auto rit = std::lower_bound(bs.begin(), bs.end(), r);
            if (rit != bs.end() && *rit == r) {
                bs.erase(rit);
            } else {
                bs.insert(rit, r);
                if (elim_index_[r] >= 0) dead.push({elim_index_[r], r});
            }
        }
    }
}

void ConeComplex::contract_edge(int a, int b, std::vector<std::pair<int, int>>* created) {
    assert(a != 0 && alive_[a] && alive_[b] && has_edge(a, b));
    std::vector<int> pb = std::move(boundary_[a]);
    boundary_[a].clear();
    boundary_[a].shrink_to_fit();
    std::vector<int> pin = std::move(incoming_[b]);
    incoming_[b].clear();
    incoming_[b].shrink_to_fit();
    account(-static_cast<std::int64_t>(pb.size() + pin.size()));

    if (log_on_) {
        elim_index_[b] = static_cast<int>(log_pivot_b_.size());
        log_pivot_b_.push_back(b);
        std::vector<int> repl;
        repl.reserve(pb.size() - 1);
        for (int x : pb)
            if (x != b) repl.push_back(x);
        log_ints_ += static_cast<std::int64_t>(repl.size());
        log_repl_.push_back(std::move(repl));
    }

    alive_[a] = alive_[b] = 0;
    live_ -= 2;

    for (int ap : pin) {
        if (ap == a) continue;
        // boundary_[ap] ^= pb  (removes b, toggles the rest of pb)
        scratch_.clear();
        std::set_symmetric_difference(boundary_[ap].begin(), boundary_[ap].end(), pb.begin(),
                                      pb.end(), std::back_inserter(scratch_));
        std::int64_t delta = static_cast<std::int64_t>(scratch_.size()) -
                             static_cast<std::int64_t>(boundary_[ap].size());
        boundary_[ap].assign(scratch_.begin(), scratch_.end());
        for (int bp : pb) {
            if (bp == b) continue;
            bool on = toggle_sorted(incoming_[bp], ap);
            delta += on ? 1 : -1;
            if (on && created) created->push_back({ap, bp});
        }
        account(delta);
    }
    for (int bp : pb) {
        if (bp == b) continue;
        erase_sorted(incoming_[bp], a);
        account(-1);
    }
    contractions_++;
}

bool ConeComplex::contract_between(const std::vector<int>& new_top,
                                   const std::vector<int>& prev_bottom) {
    // Tag the two pools (1 = top, 2 = bottom); ids are dense.
    std::vector<std::uint8_t> tag(key_.size(), 0);
    for (int a : new_top) tag[a] = 1;
    for (int b : prev_bottom) tag[b] = 2;

    std::priority_queue<Candidate, std::vector<Candidate>, std::greater<Candidate>> heap;
    for (int a : new_top) {
        if (!alive_[a]) continue;
        for (int b : boundary_[a])
            if (tag[b] == 2 && alive_[b]) heap.push(make_candidate(a, b));
    }
    std::vector<std::pair<int, int>> created;
    while (!heap.empty()) {
        Candidate c = heap.top();
        heap.pop();
        if (!alive_[c.a] || !alive_[c.b] || !has_edge(c.a, c.b)) continue;
        created.clear();
        contract_edge(c.a, c.b, &created);
        if (boundary_[0].empty()) return true;
        for (auto [ap, bp] : created)
            if (tag[ap] == 1 && tag[bp] == 2 && alive_[ap] && alive_[bp])
                heap.push(make_candidate(ap, bp));
    }
    return boundary_[0].empty();
}

Result ConeComplex::contraction_loop() {
    std::priority_queue<Candidate, std::vector<Candidate>, std::greater<Candidate>> heap;
    for (int b : boundary_[0])
        for (int a : incoming_[b])
            if (a != 0) heap.push(make_candidate(a, b));

    std::vector<std::pair<int, int>> created;
    while (!boundary_[0].empty()) {
        // Discard stale entries until an eligible edge surfaces.
        bool found = false;
        Candidate c{};
        while (!heap.empty()) {
            c = heap.top();
            heap.pop();
            if (alive_[c.a] && alive_[c.b] && has_edge(c.a, c.b) &&
                std::binary_search(boundary_[0].begin(), boundary_[0].end(), c.b)) {
                found = true;
                break;
            }
        }
        if (!found) return Result::NonNull;
        created.clear();
        contract_edge(c.a, c.b, &created);
        for (auto [ap, bp] : created) {
            if (ap == 0) {
                // bp joined a0's boundary: every edge into it is now eligible.
                for (int a2 : incoming_[bp])
                    if (a2 != 0) heap.push(make_candidate(a2, bp));
            } else if (std::binary_search(boundary_[0].begin(), boundary_[0].end(), bp)) {
                heap.push(make_candidate(ap, bp));
            }
        }
    }
    return Result::Null;
}

// ---------------------------------------------------------------------------
// Lazy growth

namespace {

ConeComplex::OrderKey order_key(const State& x) {
    // Most-significant-first packing: numeric order on (hi, lo) is tuple order.
    std::uint64_t hi = 0, lo = 0;
    for (int i = 0; i < 12; i++) hi = hi << 5 | (i < x.size() ? x.s[i] : 0);
    for (int i = 12; i < 24; i++) lo = lo << 5 | (i < x.size() ? x.s[i] : 0);
    return {hi, lo};
}

// Visited-state registry: open-addressing table over the packed encoding.
struct Registry {
    std::vector<State> states;
    std::vector<PackedState> keys;
    std::vector<std::uint32_t> table = std::vector<std::uint32_t>(1024, 0);  // id+1; 0 empty

    int find(const PackedState& k) const {
        std::size_t mask = table.size() - 1;
        for (std::size_t i = hash_packed(k) & mask;; i = (i + 1) & mask) {
            if (!table[i]) return -1;
            int id = static_cast<int>(table[i]) - 1;
            if (keys[id] == k) return id;
        }
    }

    int add(const State& x, const PackedState& k) {
        if ((states.size() + 1) * 2 > table.size()) grow();
        int id = static_cast<int>(states.size());
        states.push_back(x);
        keys.push_back(k);
        std::size_t mask = table.size() - 1;
        std::size_t i = hash_packed(k) & mask;
        while (table[i]) i = (i + 1) & mask;
        table[i] = static_cast<std::uint32_t>(id) + 1;
        return id;
    }

    void grow() {
        std::vector<std::uint32_t> fresh(table.size() * 2, 0);
        std::size_t mask = fresh.size() - 1;
        for (std::size_t id = 0; id < keys.size(); id++) {
            std::size_t i = hash_packed(keys[id]) & mask;
            while (fresh[i]) i = (i + 1) & mask;
            fresh[i] = static_cast<std::uint32_t>(id) + 1;
        }
        table.swap(fresh);
    }

    std::int64_t bytes() const {
        return static_cast<std::int64_t>(states.size()) *
                   static_cast<std::int64_t>(sizeof(State) + sizeof(PackedState) + 5) +
               static_cast<std::int64_t>(table.size()) * 4;
    }
};

struct Engine {
    const GridDiagram& G;
    const NullityOptions& opts;
    int d;  // seed grading; top side sits at d+1
    Registry reg;
    ConeComplex cone;
    NullityStats& stats;

    Engine(const GridDiagram& g, const NullityOptions& o, int grading, NullityStats& st)
        : G(g), opts(o), d(grading), stats(st) {
        // Mirror a0 so registry ids and cone ids coincide.
        State dummy;
        dummy.n = static_cast<std::uint8_t>(g.n);
        reg.states.push_back(dummy);
        reg.keys.push_back(PackedState{});
    }

    int add_state(const State& x, bool top) {
        int expect = maslov(x, G) - d;
        if (expect != (top ? 1 : 0))
            throw std::logic_error("layer state has wrong grading: " + x.to_string());
        int rid = reg.add(x, pack_state(x));
        int cid = cone.add_generator(order_key(x));
        assert(rid == cid);
        (void)cid;
        return rid;
    }

    void refresh_budget() {
        std::int64_t left = opts.max_bytes - reg.bytes();
        if (left < 0)
            throw ResourceLimitError("state registry exceeded the configured memory budget");
        cone.set_byte_budget(left);
        stats.peak_bytes = std::max(stats.peak_bytes, reg.bytes() + cone.byte_usage());
        stats.peak_live = std::max(stats.peak_live, cone.live_count());
    }

    std::vector<State> layer_states(const std::vector<int>& ids) const {
        std::vector<State> out;
        out.reserve(ids.size());
        for (int id : ids) out.push_back(reg.states[id]);
        std::sort(out.begin(), out.end());
        return out;
    }

    Result run(const Chain& seed) {
        cone.enable_log(opts.mode == Mode::interleaved);

        std::vector<int> frontier;  // previous bottom layer, ids in tuple order
        {
            std::vector<int> seed_ids;
            for (const State& y : seed.states) seed_ids.push_back(add_state(y, false));
            cone.set_seed(seed_ids);
            frontier = std::move(seed_ids);
        }
        refresh_budget();

        for (int k = 0;; k++) {
            // New top layer: unvisited sources of edges into the frontier.
            std::vector<int> new_top;
            for (int bid : frontier) {
                State by = reg.states[bid];
                for (const State& x : tilde_predecessors(by, G))
                    if (reg.find(pack_state(x)) < 0) new_top.push_back(add_state(x, true));
            }
            if (new_top.empty()) break;
            stats.layers_built = k + 1;

            // Their boundaries; unvisited targets form the new bottom layer.
            std::vector<int> new_bottom;
            for (int aid : new_top) {
                Chain bd = tilde_boundary(reg.states[aid], G);
                std::vector<int> ids;
                ids.reserve(bd.states.size());
                for (const State& y : bd.states) {
                    int id = reg.find(pack_state(y));
                    if (id < 0) {
                        id = add_state(y, false);
                        new_bottom.push_back(id);
                    }
                    ids.push_back(id);
                }
                std::sort(ids.begin(), ids.end());
                if (opts.mode == Mode::interleaved) cone.reduce_against_log(ids);
                cone.set_boundary(aid, std::move(ids));
            }
            refresh_budget();
            if (opts.layer_hook) opts.layer_hook(k + 1, layer_states(new_top), layer_states(new_bottom));

            if (opts.mode == Mode::interleaved) {
                if (cone.contract_between(new_top, frontier)) {
                    stats.peak_bytes = std::max(stats.peak_bytes, reg.bytes() + cone.byte_usage());
                    return Result::Null;
                }
            }
            if (new_bottom.empty()) break;
            // Next frontier in deterministic tuple order.
            std::sort(new_bottom.begin(), new_bottom.end(), [&](int p, int q) {
                return reg.states[p] < reg.states[q];
            });
            frontier = std::move(new_bottom);
        }

        cone.enable_log(false);  // no further arrivals
        Result r = cone.contraction_loop();
        stats.peak_bytes = std::max(stats.peak_bytes, reg.bytes() + cone.byte_usage());
        return r;
    }
};

}  // namespace

Verdict is_null(const GridDiagram& G, const Chain& seed, const NullityOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    if (seed.empty()) {
        v.result = Result::Null;
        v.stats.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return v;
    }

    int d = maslov(seed.states.front(), G);
    Chain dd;
    for (const State& y : seed.states) {
        if (static_cast<int>(y.n) != G.n || maslov(y, G) != d)
            throw std::invalid_argument("seed is not homogeneous");
        dd = chain_xor(dd, tilde_boundary(y, G));
    }
    if (!dd.empty()) throw std::invalid_argument("seed chain is not closed");

    Engine eng(G, opts, d, v.stats);
    v.result = eng.run(seed);
    v.stats.states_visited = static_cast<std::int64_t>(eng.reg.states.size()) - 1;
    v.stats.contractions = eng.cone.contractions();
    v.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return v;
}

}  // namespace gridknot
