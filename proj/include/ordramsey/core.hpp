#pragma once

// Ordered graphs, red/blue colorings of the ordered complete graph, and
// order-preserving containment. Vertices are 1-based throughout.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordramsey {

struct Error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Invalid argument value (bad ε, empty list, non-finite input, ...).
struct ParameterError : Error
{
    using Error::Error;
};

/// Malformed textual input. `index` is the 0-based offending position or token.
struct ParseError : Error
{
    ParseError(const std::string & what, std::size_t index) : Error(what), index(index) {}
    std::size_t index;
};

/// Host too small for an operation's guarantee.
struct SizeError : Error
{
    using Error::Error;
};

/// An internal guarantee failed; always indicates a bug upstream.
struct ContractViolation : Error
{
    using Error::Error;
};

using Vertex = int;

struct Edge
{
    Vertex first = 0;
    Vertex second = 0;

    auto operator<=>(const Edge &) const = default;
};

enum class Color
{
    red,
    blue
};

inline auto to_string(Color c) -> std::string { return c == Color::red ? "red" : "blue"; }

/// Inclusive vertex interval [first, last]; empty when first > last.
struct Interval
{
    Vertex first = 1;
    Vertex last = 0;

    [[nodiscard]] auto size() const -> int { return last >= first ? last - first + 1 : 0; }
    [[nodiscard]] auto contains(Vertex v) const -> bool { return v >= first && v <= last; }
};

class OrderedGraph
{
public:
    OrderedGraph() = default;

    OrderedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
    {
        if (n_ < 0)
            throw ParameterError("vertex count must be non-negative");
        for (const auto & e : edges_) {
            if (e.first < 1 || e.second > n_ || e.first >= e.second)
                throw ParameterError("edge (" + std::to_string(e.first) + "," + std::to_string(e.second)
                    + ") is not a pair i<j inside [1," + std::to_string(n_) + "]");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw ParameterError("duplicate edge");
    }

    explicit OrderedGraph(int n) : OrderedGraph(n, {}) {}

    [[nodiscard]] auto n() const -> int { return n_; }
    [[nodiscard]] auto edges() const -> const std::vector<Edge> & { return edges_; }
    [[nodiscard]] auto edge_count() const -> std::size_t { return edges_.size(); }

    [[nodiscard]] auto has_edge(Vertex i, Vertex j) const -> bool
    {
        if (i > j)
            std::swap(i, j);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
    }

    [[nodiscard]] auto degrees() const -> std::vector<int>
    {
        std::vector<int> d(n_ + 1, 0);
        for (const auto & e : edges_) {
            ++d[e.first];
            ++d[e.second];
        }
        return d;
    }

    [[nodiscard]] auto is_matching() const -> bool
    {
        auto d = degrees();
        return std::all_of(d.begin(), d.end(), [](int x) { return x <= 1; });
    }

    auto operator==(const OrderedGraph &) const -> bool = default;

protected:
    int n_ = 0;
    std::vector<Edge> edges_;
};

class OrderedMatching : public OrderedGraph
{
public:
    OrderedMatching() = default;

    OrderedMatching(int n, std::vector<Edge> edges) : OrderedGraph(n, std::move(edges))
    {
        if (! is_matching())
            throw ParameterError("edges share a vertex; not a matching");
    }

    explicit OrderedMatching(const OrderedGraph & g) : OrderedMatching(g.n(), g.edges()) {}

    [[nodiscard]] auto is_perfect() const -> bool { return 2 * static_cast<int>(edges_.size()) == n_; }

    /// Partner of v, or 0 when v is unmatched.
    [[nodiscard]] auto partner(Vertex v) const -> Vertex
    {
        for (const auto & e : edges_) {
            if (e.first == v)
                return e.second;
            if (e.second == v)
                return e.first;
        }
        return 0;
    }

    /// True when no two edges cross, i.e. intervals are disjoint or nested.
    [[nodiscard]] auto is_noncrossing() const -> bool { return ! find_crossing().has_value(); }

    [[nodiscard]] auto find_crossing() const -> std::optional<std::pair<Edge, Edge>>
    {
        // Scan left to right with a stack of open intervals.
        std::vector<Vertex> partner_of(n_ + 1, 0);
        for (const auto & e : edges_) {
            partner_of[e.first] = e.second;
            partner_of[e.second] = e.first;
        }
        std::vector<Vertex> open;
        for (Vertex v = 1; v <= n_; ++v) {
            Vertex p = partner_of[v];
            if (p == 0)
                continue;
            if (p > v) {
                open.push_back(v);
            }
            else {
                if (open.back() != p) {
                    Edge a{open.back(), partner_of[open.back()]}, b{p, v};
                    return std::pair{std::min(a, b), std::max(a, b)};
                }
                open.pop_back();
            }
        }
        return std::nullopt;
    }
};

/// A pattern embedding: `map[u-1]` is the host vertex of pattern vertex u.
struct EmbeddingWitness
{
    std::vector<Vertex> map;
    Color color = Color::red;

    auto operator==(const EmbeddingWitness &) const -> bool = default;
};

namespace detail {
    inline auto words_for(int n) -> std::size_t { return (static_cast<std::size_t>(n) + 64) / 64; }

    inline auto test_bit(const std::uint64_t * row, int v) -> bool { return (row[v >> 6] >> (v & 63)) & 1U; }

    inline void set_bit(std::uint64_t * row, int v, bool on)
    {
        std::uint64_t m = std::uint64_t{1} << (v & 63);
        if (on)
            row[v >> 6] |= m;
        else
            row[v >> 6] &= ~m;
    }

    /// First set bit at index >= from in `bits`, or -1.
    inline auto next_bit(std::span<const std::uint64_t> bits, int from) -> int
    {
        if (from < 0)
            from = 0;
        std::size_t w = static_cast<std::size_t>(from) >> 6;
        if (w >= bits.size())
            return -1;
        std::uint64_t cur = bits[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur != 0)
                return static_cast<int>(w * 64 + std::countr_zero(cur));
            if (++w >= bits.size())
                return -1;
            cur = bits[w];
        }
    }

    inline auto popcount(std::span<const std::uint64_t> bits) -> int
    {
        int c = 0;
        for (auto w : bits)
            c += std::popcount(w);
        return c;
    }

    /// Bitset with bits [first, last] set, sized for vertices up to n.
    inline auto interval_mask(int n, Interval iv) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> m(words_for(n), 0);
        for (Vertex v = std::max(iv.first, 1); v <= std::min(iv.last, n); ++v)
            set_bit(m.data(), v, true);
        return m;
    }
}

/// Red/blue coloring of the ordered complete graph on [n]. Blue edges are stored
/// as a symmetric bit matrix; red is the complement.
class OrderedColoring
{
public:
    explicit OrderedColoring(int n = 0) : n_(n), words_(detail::words_for(n)), rows_((n + 1) * words_, 0)
    {
        if (n < 0)
            throw ParameterError("vertex count must be non-negative");
    }

    static auto all_blue(int n) -> OrderedColoring
    {
        OrderedColoring c(n);
        for (Vertex i = 1; i <= n; ++i)
            for (Vertex j = i + 1; j <= n; ++j)
                c.set_blue(i, j, true);
        return c;
    }

    static auto all_red(int n) -> OrderedColoring { return OrderedColoring(n); }

    [[nodiscard]] auto n() const -> int { return n_; }
    [[nodiscard]] auto pair_count() const -> std::size_t { return static_cast<std::size_t>(n_) * (n_ - (n_ > 0)) / 2; }

    [[nodiscard]] auto blue(Vertex i, Vertex j) const -> bool { return detail::test_bit(row_ptr(i), j); }
    [[nodiscard]] auto red(Vertex i, Vertex j) const -> bool { return i != j && ! blue(i, j); }
    [[nodiscard]] auto color(Vertex i, Vertex j) const -> Color { return blue(i, j) ? Color::blue : Color::red; }
    [[nodiscard]] auto has_color(Vertex i, Vertex j, Color c) const -> bool
    {
        return c == Color::blue ? blue(i, j) : red(i, j);
    }

    void set_blue(Vertex i, Vertex j, bool on = true)
    {
        check_pair(i, j);
        detail::set_bit(row_ptr(i), j, on);
        detail::set_bit(row_ptr(j), i, on);
    }

    void set_color(Vertex i, Vertex j, Color c) { set_blue(i, j, c == Color::blue); }

    /// Blue neighbourhood of v as a bitset indexed by vertex.
    [[nodiscard]] auto blue_row(Vertex v) const -> std::span<const std::uint64_t>
    {
        return {row_ptr(v), words_};
    }

    /// Neighbourhood of v in the given colour.
    [[nodiscard]] auto color_row(Vertex v, Color c) const -> std::vector<std::uint64_t>
    {
        auto b = blue_row(v);
        std::vector<std::uint64_t> out(b.begin(), b.end());
        if (c == Color::red) {
            for (auto & w : out)
                w = ~w;
            trim(out);
            detail::set_bit(out.data(), v, false);
        }
        return out;
    }

    [[nodiscard]] auto words() const -> std::size_t { return words_; }

    /// Index of pair (i,j), i<j, in row-major order (1,2),(1,3),...,(1,n),(2,3),...
    [[nodiscard]] auto pair_index(Vertex i, Vertex j) const -> std::size_t
    {
        auto ii = static_cast<std::size_t>(i - 1);
        auto nn = static_cast<std::size_t>(n_);
        return ii * (2 * nn - ii - 1) / 2 + static_cast<std::size_t>(j - i - 1);
    }

    auto operator==(const OrderedColoring &) const -> bool = default;

private:
    [[nodiscard]] auto row_ptr(Vertex v) const -> const std::uint64_t *
    {
        return rows_.data() + static_cast<std::size_t>(v) * words_;
    }
    auto row_ptr(Vertex v) -> std::uint64_t * { return rows_.data() + static_cast<std::size_t>(v) * words_; }

    void check_pair(Vertex i, Vertex j) const
    {
        if (i < 1 || j < 1 || i > n_ || j > n_ || i == j)
            throw ParameterError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside [1,"
                + std::to_string(n_) + "]");
    }

    void trim(std::vector<std::uint64_t> & bits) const
    {
        // keep only vertices 1..n
        detail::set_bit(bits.data(), 0, false);
        for (int v = n_ + 1; v < static_cast<int>(words_ * 64); ++v)
            detail::set_bit(bits.data(), v, false);
    }

    int n_ = 0;
    std::size_t words_ = 1;
    std::vector<std::uint64_t> rows_;
};

using Triangle = std::array<Vertex, 3>;

/// Lexicographically least blue triangle among `vertices` (all of [n] when empty).
inline auto find_blue_triangle(const OrderedColoring & c, std::span<const Vertex> vertices = {})
    -> std::optional<Triangle>
{
    std::vector<std::uint64_t> mask;
    if (vertices.empty())
        mask = detail::interval_mask(c.n(), {1, c.n()});
    else {
        mask.assign(c.words(), 0);
        for (auto v : vertices)
            detail::set_bit(mask.data(), v, true);
    }
    std::vector<std::uint64_t> common(c.words());
    for (Vertex i = detail::next_bit(mask, 1); i != -1; i = detail::next_bit(mask, i + 1)) {
        auto ri = c.blue_row(i);
        for (Vertex j = detail::next_bit(mask, i + 1); j != -1; j = detail::next_bit(mask, j + 1)) {
            if (! detail::test_bit(ri.data(), j))
                continue;
            auto rj = c.blue_row(j);
            for (std::size_t w = 0; w < common.size(); ++w)
                common[w] = ri[w] & rj[w] & mask[w];
            int k = detail::next_bit(common, j + 1);
            if (k != -1)
                return Triangle{i, j, k};
        }
    }
    return std::nullopt;
}

struct DegreeResult
{
    Vertex vertex = 0;
    int degree = 0;

    auto operator==(const DegreeResult &) const -> bool = default;
};

/// Vertex of maximum blue degree among `among`, counting only neighbours in `into`.
/// Both default to the whole vertex set. Ties go to the smallest vertex.
inline auto max_blue_degree(const OrderedColoring & c, std::optional<Interval> among = std::nullopt,
    std::optional<Interval> into = std::nullopt) -> DegreeResult
{
    if (c.n() < 1)
        throw ParameterError("max_blue_degree needs n >= 1");
    Interval src = among.value_or(Interval{1, c.n()});
    auto mask = detail::interval_mask(c.n(), into.value_or(Interval{1, c.n()}));
    DegreeResult best{0, -1};
    for (Vertex v = std::max(src.first, 1); v <= std::min(src.last, c.n()); ++v) {
        auto row = c.blue_row(v);
        int d = 0;
        for (std::size_t w = 0; w < mask.size(); ++w)
            d += std::popcount(row[w] & mask[w]);
        if (d > best.degree)
            best = {v, d};
    }
    if (best.vertex == 0)
        throw ParameterError("empty vertex range");
    return best;
}

/// Blue neighbours of v inside `into`, ascending.
inline auto blue_neighbours(const OrderedColoring & c, Vertex v, Interval into) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    auto row = c.blue_row(v);
    for (Vertex u = std::max(into.first, 1); u <= std::min(into.last, c.n()); ++u)
        if (u != v && detail::test_bit(row.data(), u))
            out.push_back(u);
    return out;
}

/// True when every pattern edge maps to a host pair of the witness colour and the map is increasing.
inline auto validate_witness(const OrderedColoring & c, const OrderedGraph & g, const EmbeddingWitness & w) -> bool
{
    if (static_cast<int>(w.map.size()) != g.n())
        return false;
    for (std::size_t i = 0; i < w.map.size(); ++i) {
        if (w.map[i] < 1 || w.map[i] > c.n())
            return false;
        if (i > 0 && w.map[i - 1] >= w.map[i])
            return false;
    }
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge & e) {
        return c.has_color(w.map[e.first - 1], w.map[e.second - 1], w.color);
    });
}

/// True when `vertices` is strictly increasing and pairwise red.
inline auto is_red_clique(const OrderedColoring & c, std::span<const Vertex> vertices) -> bool
{
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        if (vertices[a] < 1 || vertices[a] > c.n() || (a > 0 && vertices[a - 1] >= vertices[a]))
            return false;
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (c.blue(vertices[a], vertices[b]))
                return false;
    }
    return true;
}

/// NM_k: the perfect matching on [2k] with edges (i, 2k+1-i).
inline auto nested_matching(int k) -> OrderedMatching
{
    if (k < 1)
        throw ParameterError("nested matching needs k >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= k; ++i)
        edges.push_back({i, 2 * k + 1 - i});
    return OrderedMatching(2 * k, std::move(edges));
}

namespace detail {
    /// Length of the longest chain e1 < e2 < ... of strictly nested edges.
    inline auto longest_chain_length(std::vector<Edge> edges) -> int
    {
        // left descending, right descending on ties; then strict LIS on right endpoints
        std::sort(edges.begin(), edges.end(), [](const Edge & a, const Edge & b) {
            return a.first != b.first ? a.first > b.first : a.second > b.second;
        });
        std::vector<Vertex> tails;
        for (const auto & e : edges) {
            auto it = std::lower_bound(tails.begin(), tails.end(), e.second);
            if (it == tails.end())
                tails.push_back(e.second);
            else
                *it = e.second;
        }
        return static_cast<int>(tails.size());
    }

    inline auto nesting_depth_if_nested(const OrderedGraph & g) -> std::optional<int>
    {
        if (g.n() == 0 || g.n() % 2 != 0)
            return std::nullopt;
        int k = g.n() / 2;
        if (static_cast<int>(g.edge_count()) != k)
            return std::nullopt;
        for (const auto & e : g.edges())
            if (e.first + e.second != 2 * k + 1)
                return std::nullopt;
        return k;
    }

    inline auto coloured_edges(const OrderedColoring & c, Color colour) -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (Vertex i = 1; i <= c.n(); ++i)
            for (Vertex j = i + 1; j <= c.n(); ++j)
                if (c.has_color(i, j, colour))
                    out.push_back({i, j});
        return out;
    }

    struct Backtracker
    {
        const OrderedColoring & host;
        Color colour;
        const OrderedGraph & pattern;
        std::vector<std::vector<Vertex>> earlier; // earlier[u]: neighbours w<u
        std::vector<Vertex> map;
        std::vector<Interval> domain; // optional per-pattern-vertex host range

        auto run(int u) -> bool
        {
            int m = pattern.n();
            if (u > m)
                return true;
            int lo = u == 1 ? 1 : map[u - 2] + 1;
            int hi = host.n() - (m - u);
            if (! domain.empty()) {
                lo = std::max(lo, domain[u - 1].first);
                hi = std::min(hi, domain[u - 1].last);
            }
            if (lo > hi)
                return false;
            std::vector<std::uint64_t> cand = interval_mask(host.n(), {lo, hi});
            for (Vertex w : earlier[u]) {
                auto row = host.color_row(map[w - 1], colour);
                for (std::size_t i = 0; i < cand.size(); ++i)
                    cand[i] &= row[i];
            }
            for (int x = next_bit(cand, lo); x != -1; x = next_bit(cand, x + 1)) {
                map[u - 1] = x;
                if (run(u + 1))
                    return true;
            }
            return false;
        }
    };
}

} // namespace ordramsey
