#pragma once

// Exact ordered Ramsey numbers by exhaustive colouring search, the two-clique
// lower-bound construction, and the r_<(NM_k, K3) sweep.

#include <ordramsey/containment.hpp>
#include <ordramsey/core.hpp>
#include <ordramsey/text_io.hpp>

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace ordramsey {

/// The 4k-2 vertex colouring with red cliques on {1..2k-1} and {2k..4k-2} and blue between.
inline auto two_clique_coloring(int k) -> OrderedColoring
{
    if (k < 1)
        throw ParameterError("k must be positive");
    const int n = 4 * k - 2;
    OrderedColoring c(n);
    for (Vertex i = 1; i <= 2 * k - 1; ++i)
        for (Vertex j = 2 * k; j <= n; ++j)
            c.set_blue(i, j, true);
    return c;
}

struct AvoidanceReport
{
    std::optional<EmbeddingWitness> red_copy;
    std::optional<EmbeddingWitness> blue_copy;

    [[nodiscard]] auto avoids() const -> bool { return ! red_copy && ! blue_copy; }
};

inline auto verify_avoidance(const OrderedColoring & c, const OrderedGraph & red_target, const OrderedGraph & blue_target)
    -> AvoidanceReport
{
    return {contains_ordered(c, Color::red, red_target), contains_ordered(c, Color::blue, blue_target)};
}

enum class SearchStatus
{
    found,
    absent,
    budget_exhausted
};

inline auto to_string(SearchStatus s) -> std::string
{
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

struct SearchOptions
{
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max(); ///< search nodes
    int threads = 1;
    int split_depth = -1; ///< edges fixed per subproblem; -1 picks from `threads`
    /// Called from the searching thread roughly every 2^20 nodes with the running total.
    std::function<void(std::uint64_t)> progress;
    /// Colouring of [n-1] to try extending before the unrestricted search.
    std::optional<OrderedColoring> seed;
};

struct SearchResult
{
    SearchStatus status = SearchStatus::absent;
    std::optional<OrderedColoring> coloring;
    std::uint64_t nodes = 0;
};

namespace detail {
    /// Incremental detector for copies of one target in one colour class.
    struct TargetWatch
    {
        enum class Kind
        {
            none,      ///< target can never appear (more vertices than the host)
            always,    ///< edgeless target that fits: every colouring contains it
            triangle,  ///< K3: common neighbour of the new edge's endpoints
            nested,    ///< NM_k: chain DP over spans, valid because spans arrive in increasing order
            generic    ///< full containment check through the new edge
        };

        Kind kind = Kind::none;
        int depth = 0;
        OrderedGraph target;

        static auto make(const OrderedGraph & g, int n) -> TargetWatch
        {
            TargetWatch w;
            w.target = g;
            if (g.n() > n)
                w.kind = Kind::none;
            else if (g.edge_count() == 0)
                w.kind = Kind::always;
            else if (g.n() == 3 && g.edge_count() == 3)
                w.kind = Kind::triangle;
            else if (auto k = nesting_depth_if_nested(g)) {
                w.kind = Kind::nested;
                w.depth = *k;
            }
            else
                w.kind = Kind::generic;
            return w;
        }
    };

    class ColouringSearch
    {
    public:
        ColouringSearch(int n, const OrderedGraph & red_target, const OrderedGraph & blue_target) :
            n_(n),
            words_(words_for(n)),
            watch_{TargetWatch::make(red_target, n), TargetWatch::make(blue_target, n)}
        {
            for (int d = 1; d < n; ++d)
                for (Vertex i = 1; i + d <= n; ++i)
                    order_.push_back({i, i + d});
        }

        [[nodiscard]] auto edge_order() const -> const std::vector<Edge> & { return order_; }

        [[nodiscard]] auto trivially_absent() const -> bool
        {
            return watch_[0].kind == TargetWatch::Kind::always || watch_[1].kind == TargetWatch::Kind::always;
        }

        struct State
        {
            std::vector<std::uint64_t> rows[2]; // decided red / blue adjacency
            std::vector<int> span_best[2];      // best chain inside [a,b], by a*(n+2)+b
            std::vector<std::int8_t> assigned;   // per edge in order: -1, 0 red, 1 blue
        };

        [[nodiscard]] auto fresh_state() const -> State
        {
            State s;
            for (int c = 0; c < 2; ++c) {
                s.rows[c].assign(static_cast<std::size_t>(n_ + 1) * words_, 0);
                s.span_best[c].assign(static_cast<std::size_t>(n_ + 2) * (n_ + 2), 0);
            }
            s.assigned.assign(order_.size(), -1);
            return s;
        }

        /// Assigns colour `col` to edge number `idx`; false if that creates a forbidden copy.
        auto assign(State & s, std::size_t idx, int col) const -> bool
        {
            const Edge e = order_[idx];
            s.assigned[idx] = static_cast<std::int8_t>(col);
            auto * row_a = s.rows[col].data() + static_cast<std::size_t>(e.first) * words_;
            auto * row_b = s.rows[col].data() + static_cast<std::size_t>(e.second) * words_;
            set_bit(row_a, e.second, true);
            set_bit(row_b, e.first, true);

            bool ok = true;
            for (int c = 0; c < 2; ++c) {
                const auto & w = watch_[c];
                if (w.kind == TargetWatch::Kind::nested) {
                    auto & best = s.span_best[c];
                    int chain = c == col ? 1 + best_at(best, e.first + 1, e.second - 1) : 0;
                    best[cell(e.first, e.second)] = std::max(
                        {best_at(best, e.first + 1, e.second), best_at(best, e.first, e.second - 1), chain});
                    if (chain >= w.depth)
                        ok = false;
                }
            }
            if (! ok)
                return false;

            const auto & w = watch_[col];
            if (w.kind == TargetWatch::Kind::triangle) {
                for (std::size_t i = 0; i < words_; ++i)
                    if (row_a[i] & row_b[i])
                        return false;
            }
            else if (w.kind == TargetWatch::Kind::generic)
                return ! generic_hit(s, col, w.target);
            return true;
        }

        void unassign(State & s, std::size_t idx) const
        {
            const Edge e = order_[idx];
            const int col = s.assigned[idx];
            set_bit(s.rows[col].data() + static_cast<std::size_t>(e.first) * words_, e.second, false);
            set_bit(s.rows[col].data() + static_cast<std::size_t>(e.second) * words_, e.first, false);
            s.assigned[idx] = -1;
        }

        [[nodiscard]] auto to_coloring(const State & s) const -> OrderedColoring
        {
            OrderedColoring c(n_);
            for (std::size_t i = 0; i < order_.size(); ++i)
                if (s.assigned[i] == 1)
                    c.set_blue(order_[i].first, order_[i].second, true);
            return c;
        }

        [[nodiscard]] auto n() const -> int { return n_; }

    private:
        [[nodiscard]] auto cell(int a, int b) const -> std::size_t
        {
            return static_cast<std::size_t>(a) * (n_ + 2) + static_cast<std::size_t>(b);
        }

        [[nodiscard]] auto best_at(const std::vector<int> & best, int a, int b) const -> int
        {
            return a >= b ? 0 : best[cell(a, b)];
        }

        [[nodiscard]] auto generic_hit(const State & s, int col, const OrderedGraph & target) const -> bool
        {
            OrderedColoring decided(n_);
            for (std::size_t i = 0; i < order_.size(); ++i)
                if (s.assigned[i] == col)
                    decided.set_blue(order_[i].first, order_[i].second, true);
            return contains_ordered(decided, Color::blue, target).has_value();
        }

        int n_;
        std::size_t words_;
        TargetWatch watch_[2];
        std::vector<Edge> order_;
    };

    struct Subproblem
    {
        const ColouringSearch & search;
        std::atomic<std::uint64_t> & nodes;
        std::uint64_t budget;
        const std::atomic<bool> & stop;
        const std::function<void(std::uint64_t)> & progress;
        const std::optional<OrderedColoring> & fixed; // colours forced on [n-1]
        bool exhausted = false;

        auto forced(std::size_t idx) const -> int
        {
            if (! fixed)
                return -1;
            const Edge e = search.edge_order()[idx];
            if (e.second > fixed->n())
                return -1;
            return fixed->blue(e.first, e.second) ? 1 : 0;
        }

        auto dfs(ColouringSearch::State & s, std::size_t idx) -> bool
        {
            if (idx == search.edge_order().size())
                return true;
            for (int col = 0; col < 2; ++col) {
                int f = forced(idx);
                if (f >= 0 && f != col)
                    continue;
                std::uint64_t count = ++nodes;
                if (count > budget || stop.load(std::memory_order_relaxed)) {
                    exhausted = count > budget;
                    return false;
                }
                if (progress && (count & ((1U << 20) - 1)) == 0)
                    progress(count);
                if (search.assign(s, idx, col) && dfs(s, idx + 1))
                    return true;
                search.unassign(s, idx);
                if (exhausted || stop.load(std::memory_order_relaxed))
                    return false;
            }
            return false;
        }
    };

    inline auto run_search(const ColouringSearch & search, const SearchOptions & opt,
        const std::optional<OrderedColoring> & fixed, std::uint64_t budget) -> SearchResult
    {
        const std::size_t edges = search.edge_order().size();
        int depth = opt.split_depth;
        if (depth < 0)
            depth = opt.threads <= 1 ? 0 : 6;
        depth = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(depth), edges));
        const std::uint64_t jobs = std::uint64_t{1} << depth;

        std::atomic<std::uint64_t> nodes{0};
        std::atomic<std::uint64_t> next_job{0};
        std::atomic<std::uint64_t> best_job{jobs};
        std::atomic<bool> any_exhausted{false};
        std::mutex result_mutex;
        std::optional<OrderedColoring> best;

        auto worker = [&] {
            for (std::uint64_t job = next_job++; job < jobs; job = next_job++) {
                if (job > best_job.load())
                    break;
                std::atomic<bool> stop{false};
                Subproblem sub{search, nodes, budget, stop, opt.progress, fixed};
                auto state = search.fresh_state();
                // job bits, most significant first, pick the colours of the first `depth` edges
                bool viable = true;
                std::size_t placed = 0;
                for (int d = 0; d < depth && viable; ++d) {
                    int col = static_cast<int>((job >> (depth - 1 - d)) & 1U);
                    int f = sub.forced(static_cast<std::size_t>(d));
                    if (f >= 0 && f != col)
                        viable = false;
                    else if (++nodes > budget) {
                        any_exhausted = true;
                        viable = false;
                    }
                    else if (! search.assign(state, static_cast<std::size_t>(d), col))
                        viable = false;
                    else
                        ++placed;
                }
                if (! viable)
                    continue;
                if (sub.dfs(state, placed)) {
                    std::lock_guard lock(result_mutex);
                    if (job < best_job.load()) {
                        best_job = job;
                        best = search.to_coloring(state);
                    }
                }
                else if (sub.exhausted)
                    any_exhausted = true;
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < opt.threads; ++t)
            pool.emplace_back(worker);
        worker();
        for (auto & th : pool)
            th.join();

        SearchResult r;
        r.nodes = std::min(nodes.load(), budget); // increments past the budget were refused, not explored
        if (best) {
            r.status = SearchStatus::found;
            r.coloring = std::move(best);
        }
        else
            r.status = any_exhausted ? SearchStatus::budget_exhausted : SearchStatus::absent;
        return r;
    }
}

/// A colouring of K_n with no red copy of `red_target` and no blue copy of
/// `blue_target`. Depth-first over pairs ordered by (span, left end), red first,
/// pruning as soon as a forbidden copy appears.
inline auto find_avoiding_coloring(int n, const OrderedGraph & red_target, const OrderedGraph & blue_target,
    const SearchOptions & opt = {}) -> SearchResult
{
    if (n < 1)
        throw ParameterError("n must be at least 1");
    detail::ColouringSearch search(n, red_target, blue_target);
    if (search.trivially_absent())
        return {SearchStatus::absent, std::nullopt, 0};
    SearchResult seeded;
    std::uint64_t budget = opt.budget;
    if (opt.seed && opt.seed->n() == n - 1) {
        seeded = detail::run_search(search, opt, opt.seed, budget);
        if (seeded.status == SearchStatus::found)
            return seeded;
        budget = seeded.nodes >= budget ? 0 : budget - seeded.nodes;
    }
    auto r = detail::run_search(search, opt, std::nullopt, budget);
    r.nodes += seeded.nodes;
    return r;
}

struct SearchRecord
{
    int n = 0;
    SearchStatus status = SearchStatus::absent;
    std::uint64_t nodes = 0;
    std::optional<OrderedColoring> witness;
};

struct RamseyResult
{
    OrderedGraph red_target;
    OrderedGraph blue_target;
    bool exact = false;
    int value = 0;                 ///< r when exact
    int lower_exclusive = 0;       ///< r > lower_exclusive
    std::optional<int> upper;      ///< r <= upper when known
    std::optional<OrderedColoring> witness_below; ///< avoiding colouring on lower_exclusive vertices
    std::vector<SearchRecord> records;
    std::uint64_t nodes = 0;
    double seconds = 0;
};

struct RamseyOptions
{
    SearchOptions search;
    std::optional<int> known_upper;               ///< r <= known_upper from elsewhere
    std::optional<OrderedColoring> known_witness; ///< avoiding colouring known in advance
    std::vector<SearchRecord> prior;              ///< completed searches to reuse
    std::function<void(const SearchRecord &)> on_record;
};

/// Least n in [n_start, n_max] with no avoiding colouring, stepping down below
/// n_start when needed to pin the witness at n-1. Budget exhaustion or reaching
/// n_max yields a bracket instead.
inline auto exact_ramsey(const OrderedGraph & red_target, const OrderedGraph & blue_target, int n_start, int n_max,
    const RamseyOptions & opt = {}) -> RamseyResult
{
    if (n_start < 1 || n_start > n_max)
        throw ParameterError("need 1 <= n_start <= n_max");
    auto t0 = std::chrono::steady_clock::now();
    RamseyResult res;
    res.red_target = red_target;
    res.blue_target = blue_target;
    res.upper = opt.known_upper;
    if (opt.known_witness && ! verify_avoidance(*opt.known_witness, red_target, blue_target).avoids())
        throw ParameterError("supplied witness does not avoid the targets");

    std::optional<OrderedColoring> best_witness;
    auto note_witness = [&](const OrderedColoring & c) {
        if (c.n() >= res.lower_exclusive) {
            res.lower_exclusive = c.n();
            best_witness = c;
        }
    };
    if (opt.known_witness)
        note_witness(*opt.known_witness);

    std::uint64_t spent = 0;
    auto search_at = [&](int n) -> SearchRecord {
        for (const auto & p : opt.prior)
            if (p.n == n && p.status != SearchStatus::budget_exhausted)
                return p;
        SearchOptions so = opt.search;
        so.budget = spent >= opt.search.budget ? 0 : opt.search.budget - spent;
        if (best_witness && best_witness->n() == n - 1)
            so.seed = best_witness;
        auto r = find_avoiding_coloring(n, red_target, blue_target, so);
        spent += r.nodes;
        SearchRecord rec{n, r.status, r.nodes, r.coloring};
        if (opt.on_record)
            opt.on_record(rec);
        return rec;
    };

    auto finish = [&]() -> RamseyResult {
        res.witness_below = best_witness;
        res.nodes = spent;
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (res.upper && *res.upper == res.lower_exclusive + 1) {
            res.exact = true;
            res.value = *res.upper;
        }
        return res;
    };

    int n = std::max(n_start, 1);
    // Upward: the first absent n is an upper bound.
    for (; n <= n_max; ++n) {
        if (n <= res.lower_exclusive)
            continue;
        auto rec = search_at(n);
        res.records.push_back(rec);
        if (rec.status == SearchStatus::budget_exhausted)
            return finish();
        if (rec.status == SearchStatus::found)
            note_witness(*rec.witness);
        else {
            res.upper = res.upper ? std::min(*res.upper, n) : n;
            break;
        }
    }
    if (! res.upper || *res.upper > n_max)
        return finish();
    // Downward: pin the largest avoiding n below the upper bound.
    for (int m = *res.upper - 1; m > res.lower_exclusive; --m) {
        if (m < 1) {
            res.lower_exclusive = 0;
            best_witness = OrderedColoring(0);
            break;
        }
        auto rec = search_at(m);
        res.records.push_back(rec);
        if (rec.status == SearchStatus::budget_exhausted)
            return finish();
        if (rec.status == SearchStatus::found) {
            note_witness(*rec.witness);
            break;
        }
        res.upper = m;
    }
    if (res.lower_exclusive == 0 && ! best_witness)
        best_witness = OrderedColoring(0);
    return finish();
}

struct SweepRow
{
    int k = 0;
    RamseyResult result;
};

/// r_<(NM_k, K3) for k = 1..k_max, starting from the two-clique witness on 4k-2
/// vertices and the upper bound 6k.
inline auto conjecture_sweep(int k_max, const RamseyOptions & base = {}) -> std::vector<SweepRow>
{
    if (k_max < 1)
        throw ParameterError("k_max must be positive");
    const OrderedGraph triangle(3, {{1, 2}, {1, 3}, {2, 3}});
    std::vector<SweepRow> rows;
    for (int k = 1; k <= k_max; ++k) {
        RamseyOptions opt = base;
        opt.known_upper = 6 * k;
        opt.known_witness = two_clique_coloring(k);
        rows.push_back({k, exact_ramsey(nested_matching(k), triangle, 4 * k - 1, 6 * k, opt)});
    }
    return rows;
}

inline auto triangle_graph() -> OrderedGraph { return OrderedGraph(3, {{1, 2}, {1, 3}, {2, 3}}); }

} // namespace ordramsey
