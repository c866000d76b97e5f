#pragma once

// Nesting order on edges: (i,j) < (l,m) iff l < i < j < m.

#include <ordramsey/core.hpp>

#include <algorithm>
#include <vector>

namespace ordramsey {

/// Edges e1 < e2 < ... under the nesting order, innermost first.
struct NestChain
{
    std::vector<Edge> edges;

    [[nodiscard]] auto size() const -> std::size_t { return edges.size(); }
};

inline auto nested_inside(const Edge & inner, const Edge & outer) -> bool
{
    return outer.first < inner.first && inner.second < outer.second;
}

inline auto is_chain(const std::vector<Edge> & edges) -> bool
{
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (! nested_inside(edges[i - 1], edges[i]))
            return false;
    return true;
}

namespace detail {
    /// Fenwick tree over positions 1..n answering max over a prefix.
    class MaxFenwick
    {
    public:
        explicit MaxFenwick(int n) : tree_(n + 1, 0) {}

        void update(int pos, int value)
        {
            for (; pos < static_cast<int>(tree_.size()); pos += pos & -pos)
                tree_[pos] = std::max(tree_[pos], value);
        }

        [[nodiscard]] auto prefix_max(int pos) const -> int
        {
            int best = 0;
            for (pos = std::min(pos, static_cast<int>(tree_.size()) - 1); pos > 0; pos -= pos & -pos)
                best = std::max(best, tree_[pos]);
            return best;
        }

    private:
        std::vector<int> tree_;
    };

    inline auto max_vertex(const std::vector<Edge> & edges) -> int
    {
        int m = 0;
        for (const auto & e : edges)
            m = std::max(m, e.second);
        return m;
    }

    /// outward[i]: longest chain whose innermost edge is edges[i].
    inline auto outward_lengths(const std::vector<Edge> & edges) -> std::vector<int>
    {
        int top = max_vertex(edges);
        std::vector<std::size_t> order(edges.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return edges[a].first < edges[b].first; });
        // suffix max over right endpoints via a mirrored Fenwick
        MaxFenwick fen(top + 1);
        std::vector<int> up(edges.size(), 1);
        for (std::size_t g = 0; g < order.size();) {
            std::size_t h = g;
            while (h < order.size() && edges[order[h]].first == edges[order[g]].first)
                ++h;
            for (std::size_t q = g; q < h; ++q) {
                const auto & e = edges[order[q]];
                up[order[q]] = 1 + fen.prefix_max(top - e.second);
            }
            for (std::size_t q = g; q < h; ++q) {
                const auto & e = edges[order[q]];
                fen.update(top - e.second + 1, up[order[q]]);
            }
            g = h;
        }
        return up;
    }
}

/// A maximum-length chain; among maximum chains, the one whose innermost-first
/// edge list is lexicographically least.
inline auto longest_nested_chain(const std::vector<Edge> & edges) -> NestChain
{
    if (edges.empty())
        return {};
    auto up = detail::outward_lengths(edges);
    int best = *std::max_element(up.begin(), up.end());

    std::vector<std::vector<Edge>> by_length(best + 1);
    for (std::size_t i = 0; i < edges.size(); ++i)
        by_length[up[i]].push_back(edges[i]);
    for (auto & group : by_length)
        std::sort(group.begin(), group.end());

    NestChain chain;
    chain.edges.push_back(by_length[best].front());
    for (int need = best - 1; need >= 1; --need) {
        const Edge prev = chain.edges.back();
        bool found = false;
        for (const auto & f : by_length[need]) {
            if (f.first >= prev.first)
                break;
            if (f.second > prev.second) {
                chain.edges.push_back(f);
                found = true;
                break;
            }
        }
        if (! found)
            throw ContractViolation("chain reconstruction lost its successor");
    }
    return chain;
}

/// Partition of `edges` by L(e), the longest chain with e outermost. Level i
/// (0-based) holds the edges with L(e) = i + 1; every level is an antichain.
inline auto chain_levels(const std::vector<Edge> & edges) -> std::vector<std::vector<Edge>>
{
    int top = detail::max_vertex(edges);
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return edges[a].first > edges[b].first; });
    detail::MaxFenwick fen(top);
    std::vector<int> level(edges.size(), 1);
    for (std::size_t g = 0; g < order.size();) {
        std::size_t h = g;
        while (h < order.size() && edges[order[h]].first == edges[order[g]].first)
            ++h;
        for (std::size_t q = g; q < h; ++q)
            level[order[q]] = 1 + fen.prefix_max(edges[order[q]].second - 1);
        for (std::size_t q = g; q < h; ++q)
            fen.update(edges[order[q]].second, level[order[q]]);
        g = h;
    }
    int depth = level.empty() ? 0 : *std::max_element(level.begin(), level.end());
    std::vector<std::vector<Edge>> out(depth);
    for (std::size_t i = 0; i < edges.size(); ++i)
        out[level[i] - 1].push_back(edges[i]);
    for (auto & lv : out)
        std::sort(lv.begin(), lv.end());
    return out;
}

inline auto is_antichain(const std::vector<Edge> & edges) -> bool
{
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = 0; b < edges.size(); ++b)
            if (a != b && nested_inside(edges[a], edges[b]))
                return false;
    return true;
}

/// Copy of NM_k read off a chain of at least k edges: the k innermost edges.
inline auto chain_witness(const NestChain & chain, int k, Color colour = Color::red) -> EmbeddingWitness
{
    EmbeddingWitness w;
    w.color = colour;
    w.map.resize(2 * k);
    for (int i = 1; i <= k; ++i) {
        const Edge & e = chain.edges[k - i];
        w.map[i - 1] = e.first;
        w.map[2 * k - i] = e.second;
    }
    return w;
}

} // namespace ordramsey
