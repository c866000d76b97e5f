#pragma once

// Permutations of matchings with interval chromatic number 2, exact patterns,
// ordered intersection (LCS of value sequences), compatible orderings of a value
// set and its shift, and a seeded Monte Carlo for Int(π, π+h).

#include <ordramsey/containment.hpp>
#include <ordramsey/core.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <thread>
#include <unordered_map>
#include <vector>

namespace ordramsey {

/// Sequence form (π(1), ..., π(n)) of a bijection on [n].
class Permutation
{
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> values) : values_(std::move(values))
    {
        std::vector<bool> seen(values_.size() + 1, false);
        for (int v : values_) {
            if (v < 1 || v > static_cast<int>(values_.size()) || seen[v])
                throw ParameterError("values are not a permutation of [1," + std::to_string(values_.size()) + "]");
            seen[v] = true;
        }
    }

    static auto identity(int n) -> Permutation
    {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    [[nodiscard]] auto size() const -> int { return static_cast<int>(values_.size()); }
    [[nodiscard]] auto values() const -> const std::vector<int> & { return values_; }
    [[nodiscard]] auto operator()(int i) const -> int { return values_[i - 1]; }

    /// π + h: the same sequence with every value raised by h.
    [[nodiscard]] auto shifted(int h) const -> std::vector<int>
    {
        std::vector<int> out(values_);
        for (auto & v : out)
            v += h;
        return out;
    }

    auto operator==(const Permutation &) const -> bool = default;

private:
    std::vector<int> values_;
};

/// π(M) for a perfect matching on [2n] whose edges all run from [1,n] to [n+1,2n].
inline auto matching_to_perm(const OrderedMatching & m) -> Permutation
{
    if (m.n() % 2 != 0 || ! m.is_perfect())
        throw ParameterError("need a perfect matching on an even number of vertices");
    const int n = m.n() / 2;
    std::vector<int> values(n, 0);
    for (const auto & e : m.edges()) {
        if (e.first > n || e.second <= n)
            throw ParameterError("edge (" + std::to_string(e.first) + "," + std::to_string(e.second)
                + ") stays on one side of the midpoint; interval chromatic number is not 2");
        values[e.first - 1] = e.second - n;
    }
    return Permutation(std::move(values));
}

inline auto perm_to_matching(const Permutation & p) -> OrderedMatching
{
    const int n = p.size();
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        edges.push_back({i, p(i) + n});
    return OrderedMatching(2 * n, std::move(edges));
}

/// Fewest contiguous independent intervals covering [n]. Greedy is optimal: each
/// interval is extended until the next vertex has a neighbour inside it.
inline auto interval_chromatic_number(const OrderedGraph & g) -> int
{
    std::vector<Vertex> reach(g.n() + 1, 0); // largest earlier neighbour
    for (const auto & e : g.edges())
        reach[e.second] = std::max(reach[e.second], e.first);
    int count = 1;
    Vertex start = 1;
    for (Vertex v = 1; v <= g.n(); ++v) {
        if (reach[v] >= start) {
            ++count;
            start = v;
        }
    }
    return count;
}

/// True iff `pattern` occurs as a subsequence of `seq` (values must match exactly).
inline auto contains_exact_pattern(std::span<const int> seq, std::span<const int> pattern) -> bool
{
    std::size_t j = 0;
    for (std::size_t i = 0; i < seq.size() && j < pattern.size(); ++i)
        if (seq[i] == pattern[j])
            ++j;
    return j == pattern.size();
}

/// Length of the longest strictly increasing subsequence (patience sorting).
inline auto lis_length(std::span<const int> seq) -> int
{
    std::vector<int> piles;
    for (int x : seq) {
        auto it = std::lower_bound(piles.begin(), piles.end(), x);
        if (it == piles.end())
            piles.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(piles.size());
}

/// Quadratic longest-common-subsequence DP; accepts repeated values.
inline auto lcs_length_dp(std::span<const int> a, std::span<const int> b) -> int
{
    std::vector<int> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

namespace detail {
    inline void require_distinct(std::span<const int> seq, const char * name)
    {
        std::vector<int> sorted(seq.begin(), seq.end());
        std::sort(sorted.begin(), sorted.end());
        if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
            throw ParameterError(std::string("value ") + std::to_string(*it) + " repeats in sequence " + name);
    }
}

/// Int(a, b): the longest exact pattern common to both sequences. Values are
/// relabelled by their position in `a`, and the answer is the LIS of `b` read
/// through that relabelling.
inline auto ordered_intersection(std::span<const int> a, std::span<const int> b) -> int
{
    detail::require_distinct(a, "a");
    detail::require_distinct(b, "b");
    std::unordered_map<int, int> pos;
    pos.reserve(a.size() * 2);
    for (std::size_t i = 0; i < a.size(); ++i)
        pos.emplace(a[i], static_cast<int>(i));
    std::vector<int> through;
    through.reserve(b.size());
    for (int v : b)
        if (auto it = pos.find(v); it != pos.end())
            through.push_back(it->second);
    return lis_length(through);
}

/// Int(π, π+h) without materialising the shifted sequence.
inline auto shift_intersection(const Permutation & p, int h) -> int
{
    const int n = p.size();
    if (h >= n || h <= -n)
        return 0;
    std::vector<int> pos(n + 1);
    for (int i = 1; i <= n; ++i)
        pos[p(i)] = i;
    std::vector<int> through;
    for (int i = 1; i <= n; ++i) {
        int v = p(i) + h;
        if (v >= 1 && v <= n)
            through.push_back(pos[v]);
    }
    return lis_length(through);
}

/// True iff some permutation contains both exact patterns: the two total orders
/// merged into one digraph must be acyclic (any topological order is a witness).
inline auto patterns_compatible(std::span<const int> rho, std::span<const int> sigma) -> bool
{
    std::map<int, int> id;
    for (int v : rho)
        id.emplace(v, static_cast<int>(id.size()));
    for (int v : sigma)
        id.emplace(v, static_cast<int>(id.size()));
    const std::size_t n = id.size();
    std::vector<std::vector<int>> out(n);
    std::vector<int> indeg(n, 0);
    auto chain = [&](std::span<const int> seq) {
        for (std::size_t i = 1; i < seq.size(); ++i) {
            out[id[seq[i - 1]]].push_back(id[seq[i]]);
            ++indeg[id[seq[i]]];
        }
    };
    chain(rho);
    chain(sigma);
    std::vector<int> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0)
            ready.push_back(static_cast<int>(v));
    std::size_t done = 0;
    while (! ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++done;
        for (int w : out[v])
            if (--indeg[w] == 0)
                ready.push_back(w);
    }
    return done == n;
}

struct CompatibilityCount
{
    std::uint64_t compatible = 0; ///< orderings ρ of U with ρ and ρ+h jointly embeddable
    std::uint64_t total = 0;      ///< k!
    int k = 0;
    int t = 0;                    ///< |U ∩ (U+h)|

    /// 2^(2k-t) k^(k-t).
    [[nodiscard]] auto bound() const -> double { return std::pow(2.0, 2 * k - t) * std::pow(static_cast<double>(k), k - t); }
};

/// Counts orderings of U compatible with their h-shift by exhaustive enumeration.
inline auto count_compatible_orderings(std::vector<int> set, int h, int limit = 8) -> CompatibilityCount
{
    if (static_cast<int>(set.size()) > limit)
        throw SizeError("set of size " + std::to_string(set.size()) + " exceeds the exhaustive limit " + std::to_string(limit));
    if (h < 1)
        throw ParameterError("shift must be positive");
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
        throw ParameterError("set values must be distinct");
    CompatibilityCount r;
    r.k = static_cast<int>(set.size());
    for (int v : set)
        if (std::binary_search(set.begin(), set.end(), v - h))
            ++r.t;
    std::vector<int> rho = set, shifted(set.size());
    do {
        ++r.total;
        for (std::size_t i = 0; i < rho.size(); ++i)
            shifted[i] = rho[i] + h;
        if (patterns_compatible(rho, shifted))
            ++r.compatible;
    } while (std::next_permutation(rho.begin(), rho.end()));
    return r;
}

/// Uniform integer in [0, bound) from a 64-bit engine by rejection, so streams are
/// identical across standard libraries.
inline auto uniform_below(std::mt19937_64 & rng, std::uint64_t bound) -> std::uint64_t
{
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        std::uint64_t r = rng();
        if (r >= threshold)
            return r % bound;
    }
}

/// Fisher-Yates from the identity, swapping position i-1 with a uniform index in [0, i).
inline auto random_permutation(int n, std::mt19937_64 & rng) -> Permutation
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    for (int i = n; i > 1; --i)
        std::swap(v[i - 1], v[uniform_below(rng, static_cast<std::uint64_t>(i))]);
    return Permutation(std::move(v));
}

struct TailThreshold
{
    double alpha = 0;
    double threshold = 0;   ///< n^(2/3+α)
    int exceedances = 0;    ///< samples with Int >= threshold
    double base = 0;        ///< e^5 n^(-3α/2)
    double log_bound = 0;   ///< natural log of base^threshold
    double bound = 0;       ///< base^threshold (may underflow to 0)
};

struct ShiftIntersectionReport
{
    int n = 0;
    int h = 0;
    std::uint64_t seed = 0;
    std::vector<int> samples;                 ///< Int(π, π+h) per trial, trial order
    std::vector<std::pair<int, double>> cdf;  ///< value -> fraction of samples <= value
    std::vector<TailThreshold> tails;
};

/// Tail bound e^5 n^(-3α/2) raised to n^(2/3+α).
inline auto shift_tail_bound(int n, double alpha) -> TailThreshold
{
    TailThreshold t;
    t.alpha = alpha;
    t.threshold = std::pow(static_cast<double>(n), 2.0 / 3.0 + alpha);
    t.base = std::exp(5.0) * std::pow(static_cast<double>(n), -1.5 * alpha);
    t.log_bound = t.threshold * std::log(t.base);
    t.bound = std::exp(t.log_bound);
    return t;
}

namespace detail {
    inline void finish_report(ShiftIntersectionReport & r, const std::vector<double> & alphas)
    {
        std::map<int, std::size_t> counts;
        for (int s : r.samples)
            ++counts[s];
        std::size_t acc = 0;
        for (auto [value, c] : counts) {
            acc += c;
            r.cdf.emplace_back(value, static_cast<double>(acc) / static_cast<double>(r.samples.size()));
        }
        for (double a : alphas) {
            auto t = shift_tail_bound(r.n, a);
            t.exceedances = static_cast<int>(std::count_if(r.samples.begin(), r.samples.end(),
                [&](int s) { return static_cast<double>(s) >= t.threshold; }));
            r.tails.push_back(t);
        }
    }
}

/// Int(π, π+h) over `trials` uniform permutations. Trial i draws from an
/// mt19937_64 seeded with seed XOR i, so results do not depend on `threads`.
inline auto mc_shift_intersection(int n, int h, int trials, std::uint64_t seed, const std::vector<double> & alphas = {},
    int threads = 1) -> ShiftIntersectionReport
{
    if (trials < 1)
        throw ParameterError("need at least one trial");
    if (n < 2)
        throw ParameterError("need n >= 2");
    ShiftIntersectionReport r{n, h, seed, std::vector<int>(trials, 0), {}, {}};
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < trials; i = next++) {
            std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(i));
            r.samples[i] = shift_intersection(random_permutation(n, rng), h);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto & th : pool)
        th.join();
    detail::finish_report(r, alphas);
    return r;
}

/// Same report over every permutation of [n] (n small).
inline auto exhaustive_shift_intersection(int n, int h, const std::vector<double> & alphas = {}) -> ShiftIntersectionReport
{
    if (n < 1 || n > 10)
        throw SizeError("exhaustive enumeration supports 1 <= n <= 10");
    ShiftIntersectionReport r{n, h, 0, {}, {}, {}};
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do
        r.samples.push_back(shift_intersection(Permutation(v), h));
    while (std::next_permutation(v.begin(), v.end()));
    detail::finish_report(r, alphas);
    return r;
}

/// Largest red clique search (branch and bound over bitsets); stops at `target`.
inline auto find_red_clique(const OrderedColoring & c, int target) -> std::optional<std::vector<Vertex>>
{
    if (target <= 0)
        return std::vector<Vertex>{};
    std::vector<Vertex> current;
    std::function<bool(std::vector<std::uint64_t>)> grow = [&](std::vector<std::uint64_t> cand) -> bool {
        if (static_cast<int>(current.size()) >= target)
            return true;
        if (static_cast<int>(current.size()) + detail::popcount(cand) < target)
            return false;
        for (int v = detail::next_bit(cand, 1); v != -1; v = detail::next_bit(cand, v + 1)) {
            if (static_cast<int>(current.size()) + detail::popcount(cand) < target)
                return false;
            auto row = c.color_row(v, Color::red);
            std::vector<std::uint64_t> next(cand.size());
            for (std::size_t w = 0; w < cand.size(); ++w)
                next[w] = cand[w] & row[w];
            // only extend upward so each clique is built in increasing order
            for (int u = 0; u <= v; ++u)
                detail::set_bit(next.data(), u, false);
            current.push_back(v);
            if (grow(std::move(next)))
                return true;
            current.pop_back();
            detail::set_bit(cand.data(), v, false);
        }
        return false;
    };
    if (grow(detail::interval_mask(c.n(), {1, c.n()})))
        return current;
    return std::nullopt;
}

/// Red copy of m with its left interval mapped into [1, half] and its right interval
/// into [half+1, 2 half]. m must have interval chromatic number at most 2.
inline auto find_bipartite_red_copy(const OrderedColoring & c, const OrderedMatching & m) -> std::optional<EmbeddingWitness>
{
    if (c.n() % 2 != 0)
        throw ParameterError("host must have an even number of vertices");
    if (interval_chromatic_number(m) > 2)
        throw ParameterError("pattern has interval chromatic number above 2");
    const int half = c.n() / 2;
    int split = 0;
    for (const auto & e : m.edges())
        split = std::max(split, e.first);
    if (m.edge_count() == 0)
        split = std::min(m.n(), half);
    detail::Backtracker bt{c, Color::red, m, std::vector<std::vector<Vertex>>(m.n() + 1), std::vector<Vertex>(m.n(), 0), {}};
    for (const auto & e : m.edges())
        bt.earlier[e.second].push_back(e.first);
    for (int u = 1; u <= m.n(); ++u)
        bt.domain.push_back(u <= split ? Interval{1, half} : Interval{half + 1, c.n()});
    if (m.n() > 0 && ! bt.run(1))
        return std::nullopt;
    return EmbeddingWitness{bt.map, Color::red};
}

struct ThreeStructureReport
{
    std::optional<Triangle> blue_triangle;
    std::optional<std::vector<Vertex>> red_clique;
    std::optional<EmbeddingWitness> bipartite_copy;

    [[nodiscard]] auto any() const -> bool { return blue_triangle || red_clique || bipartite_copy; }
};

/// Which of blue K3, a red clique of `clique_size`, and a bipartite red copy of m
/// across the halves of [2n] occur in c. Exact and exponential: desk scale only.
inline auto three_structure_check(const OrderedColoring & c, const OrderedMatching & m, int clique_size)
    -> ThreeStructureReport
{
    if (m.n() > c.n())
        throw ParameterError("pattern larger than host");
    return {find_blue_triangle(c), find_red_clique(c, clique_size), find_bipartite_red_copy(c, m)};
}

/// Parameter choices that combine the shift tail bound with the clique/matching
/// trade-off for a random interval-chromatic-2 matching on 2m vertices.
struct RandomMatchingParameters
{
    double log_m = 0;
    double tail_alpha = 0;     ///< α fed to the tail bound: 4 / ln m
    double int_threshold = 0;  ///< e^4 m^(2/3) = m^(2/3 + 4/ln m)
    double eps = 0;            ///< 1/3 - 4/ln m
    double alpha = 0;          ///< 1/24 - 1/(2 ln m)
    double beta = 0;           ///< same as alpha
    double host_constant = 0;  ///< smallest c (on a 1.01 grid) with n = c m^(24/13) meeting both size conditions
};

inline auto random_matching_parameters(int m) -> RandomMatchingParameters
{
    if (m < 2)
        throw ParameterError("need m >= 2");
    RandomMatchingParameters p;
    p.log_m = std::log(static_cast<double>(m));
    p.tail_alpha = 4.0 / p.log_m;
    p.int_threshold = std::exp(4.0) * std::pow(static_cast<double>(m), 2.0 / 3.0);
    p.eps = 1.0 / 3.0 - 4.0 / p.log_m;
    p.alpha = 1.0 / 24.0 - 1.0 / (2.0 * p.log_m);
    p.beta = p.alpha;
    const double clique_exp = 13.0 / 24.0 - 1.0 / (2.0 * p.log_m);
    const double loss_exp = 1.0 / 12.0 - 1.0 / p.log_m;
    const double base = std::pow(static_cast<double>(m), 24.0 / 13.0);
    for (double c = 1.0; c < 1e12; c *= 1.01) {
        double n = c * base;
        if (std::pow(n, clique_exp) / 4.0 - std::pow(n, loss_exp) / 2.0 >= 2.0 * m && 2.0 * std::pow(n, clique_exp) >= 2.0 * m) {
            p.host_constant = c;
            break;
        }
    }
    return p;
}

} // namespace ordramsey
