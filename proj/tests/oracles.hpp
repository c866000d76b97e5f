#pragma once

// Brute-force reference implementations used as test oracles. Deliberately
// naive: nothing here shares code with the algorithms under test.

#include <ordramsey/core.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using namespace ordramsey;

/// Coloring of K_n whose blue pairs are the set bits of `mask`, pairs in row-major order.
inline auto coloring_from_mask(int n, std::uint64_t mask) -> OrderedColoring
{
    OrderedColoring c(n);
    int bit = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++bit)
            if (mask >> bit & 1U)
                c.set_blue(i, j, true);
    return c;
}

inline auto pairs(int n) -> int { return n * (n - 1) / 2; }

inline auto random_coloring(int n, std::mt19937_64 & rng, double p_blue = 0.5) -> OrderedColoring
{
    std::bernoulli_distribution coin(p_blue);
    OrderedColoring c(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (coin(rng))
                c.set_blue(i, j, true);
    return c;
}

/// Every increasing map from [g.n] into [c.n], lexicographic order; first one
/// under which all edges of g carry colour `col`.
inline auto brute_contains(const OrderedColoring & c, Color col, const OrderedGraph & g) -> std::optional<std::vector<int>>
{
    const int k = g.n(), n = c.n();
    if (k > n)
        return std::nullopt;
    std::vector<int> map(k);
    std::iota(map.begin(), map.end(), 1);
    while (true) {
        bool ok = true;
        for (const auto & e : g.edges()) {
            int a = map[e.first - 1], b = map[e.second - 1];
            bool blue = c.blue(a, b);
            if ((col == Color::blue) != blue) {
                ok = false;
                break;
            }
        }
        if (ok)
            return map;
        int i = k - 1;
        while (i >= 0 && map[i] == n - (k - 1 - i))
            --i;
        if (i < 0)
            return std::nullopt;
        ++map[i];
        for (int j = i + 1; j < k; ++j)
            map[j] = map[j - 1] + 1;
    }
}

inline auto has_blue_triangle(const OrderedColoring & c) -> bool
{
    for (int a = 1; a <= c.n(); ++a)
        for (int b = a + 1; b <= c.n(); ++b)
            for (int d = b + 1; d <= c.n(); ++d)
                if (c.blue(a, b) && c.blue(a, d) && c.blue(b, d))
                    return true;
    return false;
}

/// Blue graph = random bipartite graph on a random split, so no blue triangle;
/// optionally then adds random blue pairs that keep it triangle-free.
inline auto random_triangle_free(int n, std::mt19937_64 & rng, double density = 0.5) -> OrderedColoring
{
    std::bernoulli_distribution coin(density), side(0.5);
    std::vector<int> part(n + 1);
    for (int v = 1; v <= n; ++v)
        part[v] = side(rng);
    OrderedColoring c(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (part[i] != part[j] && coin(rng))
                c.set_blue(i, j, true);
    // a few extra same-side blue pairs where they close no triangle
    std::uniform_int_distribution<int> pick(1, std::max(1, n));
    for (int tries = 0; tries < n; ++tries) {
        int a = pick(rng), b = pick(rng);
        if (a == b || c.blue(std::min(a, b), std::max(a, b)))
            continue;
        bool closes = false;
        for (int w = 1; w <= n && ! closes; ++w)
            closes = w != a && w != b && c.blue(std::min(a, w), std::max(a, w)) && c.blue(std::min(b, w), std::max(b, w));
        if (! closes)
            c.set_blue(std::min(a, b), std::max(a, b), true);
    }
    return c;
}

/// Longest chain of strictly nested edges, by checking every subset.
inline auto brute_chain(const std::vector<Edge> & edges) -> int
{
    const std::size_t m = edges.size();
    int best = 0;
    for (std::uint32_t s = 1; s < (1U << m); ++s) {
        std::vector<Edge> sub;
        for (std::size_t i = 0; i < m; ++i)
            if (s >> i & 1U)
                sub.push_back(edges[i]);
        // a chain sorted by left endpoint descending must have right endpoints ascending
        std::sort(sub.begin(), sub.end(), [](auto a, auto b) { return a.first > b.first; });
        bool ok = true;
        for (std::size_t i = 1; i < sub.size() && ok; ++i)
            ok = sub[i].first < sub[i - 1].first && sub[i].second > sub[i - 1].second;
        if (ok)
            best = std::max(best, static_cast<int>(sub.size()));
    }
    return best;
}

/// Longest common subsequence by enumerating every subsequence of `a`.
inline auto brute_lcs(const std::vector<int> & a, const std::vector<int> & b) -> int
{
    int best = 0;
    for (std::uint32_t s = 0; s < (1U << a.size()); ++s) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (s >> i & 1U)
                sub.push_back(a[i]);
        std::size_t j = 0;
        for (int x : b)
            if (j < sub.size() && sub[j] == x)
                ++j;
        if (j == sub.size())
            best = std::max(best, static_cast<int>(sub.size()));
    }
    return best;
}

inline auto is_subsequence(const std::vector<int> & pattern, const std::vector<int> & seq) -> bool
{
    std::size_t j = 0;
    for (int x : seq)
        if (j < pattern.size() && pattern[j] == x)
            ++j;
    return j == pattern.size();
}

/// Every balanced parenthesis string of exactly `len` characters.
inline auto balanced_strings(int len) -> std::vector<std::string>
{
    std::vector<std::string> out;
    std::string cur;
    std::function<void(int, int)> go = [&](int open, int close) {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        if (open < len / 2) {
            cur.push_back('(');
            go(open + 1, close);
            cur.pop_back();
        }
        if (close < open) {
            cur.push_back(')');
            go(open, close + 1);
            cur.pop_back();
        }
    };
    if (len % 2 == 0)
        go(0, 0);
    return out;
}

/// Minimum interval partition of [n] with no edge inside a part, over all 2^(n-1) cut sets.
inline auto brute_interval_chromatic(const OrderedGraph & g) -> int
{
    const int n = g.n();
    if (n <= 1)
        return 1;
    int best = n;
    for (std::uint32_t cuts = 0; cuts < (1U << (n - 1)); ++cuts) {
        std::vector<int> part(n + 1, 0);
        for (int v = 2; v <= n; ++v)
            part[v] = part[v - 1] + static_cast<int>(cuts >> (v - 2) & 1U);
        bool ok = std::none_of(g.edges().begin(), g.edges().end(), [&](auto e) { return part[e.first] == part[e.second]; });
        if (ok)
            best = std::min(best, part[n] + 1);
    }
    return best;
}

/// Calls `visit` on every blue-triangle-free coloring of K_n. Vertices are added
/// in order; each new vertex takes a blue neighbourhood with no blue edge inside it.
inline void for_each_triangle_free(int n, const std::function<void(const OrderedColoring &)> & visit)
{
    OrderedColoring c(n);
    std::function<void(int)> add = [&](int v) {
        if (v > n) {
            visit(c);
            return;
        }
        for (std::uint32_t s = 0; s < (1U << (v - 1)); ++s) {
            bool independent = true;
            for (int a = 1; a < v && independent; ++a)
                for (int b = a + 1; b < v && independent; ++b)
                    if ((s >> (a - 1) & 1U) && (s >> (b - 1) & 1U) && c.blue(a, b))
                        independent = false;
            if (! independent)
                continue;
            for (int a = 1; a < v; ++a)
                c.set_blue(a, v, s >> (a - 1) & 1U);
            add(v + 1);
        }
        for (int a = 1; a < v; ++a)
            c.set_blue(a, v, false);
    };
    add(1);
}

} // namespace oracle
