#pragma once

#include <ordramsey/chain.hpp>
#include <ordramsey/core.hpp>

#include <optional>

namespace ordramsey {

namespace detail {
    /// Lexicographically least copy of NM_k in one colour class.
    ///
    /// inside(x, y) is the longest chain using only vertices of [x, y]:
    /// either the outermost edge avoids x or y, or it is (x, y) itself. The map is
    /// then fixed one position at a time (lefts outermost first, then rights
    /// innermost first), each time taking the least value that still completes.
    class NestedEmbedder
    {
    public:
        NestedEmbedder(const OrderedColoring & c, Color colour, int k) :
            c_(c), colour_(colour), k_(k), n_(c.n()), inside_(static_cast<std::size_t>(n_ + 2) * (n_ + 2), 0)
        {
            for (int span = 1; span < n_; ++span)
                for (int x = 1; x + span <= n_; ++x) {
                    int y = x + span;
                    int best = std::max(in(x + 1, y), in(x, y - 1));
                    if (c_.has_color(x, y, colour_))
                        best = std::max(best, 1 + in(x + 1, y - 1));
                    inside_[cell(x, y)] = best;
                }
        }

        [[nodiscard]] auto longest() const -> int { return n_ >= 2 ? in(1, n_) : 0; }

        [[nodiscard]] auto least() const -> std::optional<EmbeddingWitness>
        {
            if (longest() < k_)
                return std::nullopt;
            std::vector<Vertex> left, right; // right[i] pairs with left[i]
            for (int j = 0; j < k_; ++j) {
                Vertex from = j == 0 ? 1 : left.back() + 1;
                left.push_back(0);
                for (Vertex v = from; v <= n_ && left.back() == 0; ++v) {
                    left.back() = v;
                    if (! completes(left, right))
                        left.back() = 0;
                }
                if (left.back() == 0)
                    throw ContractViolation("nested embedding lost feasibility");
            }
            for (int i = k_ - 1; i >= 0; --i) {
                Vertex from = i == k_ - 1 ? left.back() + 1 : right.back() + 1;
                right.push_back(0);
                for (Vertex v = from; v <= n_ && right.back() == 0; ++v) {
                    right.back() = v;
                    if (! completes(left, right))
                        right.back() = 0;
                }
                if (right.back() == 0)
                    throw ContractViolation("nested embedding lost feasibility");
            }
            EmbeddingWitness w{left, colour_};
            w.map.insert(w.map.end(), right.begin(), right.end());
            return w;
        }

    private:
        [[nodiscard]] auto cell(int x, int y) const -> std::size_t
        {
            return static_cast<std::size_t>(x) * (n_ + 2) + static_cast<std::size_t>(y);
        }

        [[nodiscard]] auto in(int x, int y) const -> int { return x >= y ? 0 : inside_[cell(x, y)]; }

        /// Whether the fixed lefts (outermost first) and rights (innermost first,
        /// `rights` pairing with the last lefts) extend to a full copy.
        [[nodiscard]] auto completes(const std::vector<Vertex> & lefts, const std::vector<Vertex> & rights) const -> bool
        {
            const int j = static_cast<int>(lefts.size());
            Vertex low = 0; // right endpoint of the edge just inside the next one outward
            int i = j - 1;  // next edge (by index into lefts) needing a right endpoint
            if (j < k_) {
                // innermost fixed edge must enclose a chain of k - j further edges
                const Vertex a = lefts.back();
                for (Vertex b = a + 1; b <= n_ && low == 0; ++b)
                    if (c_.has_color(a, b, colour_) && in(a + 1, b - 1) >= k_ - j)
                        low = b;
                if (low == 0)
                    return false;
                --i;
            }
            else {
                for (std::size_t r = 0; r < rights.size(); ++r) {
                    const Vertex a = lefts[k_ - 1 - r], b = rights[r];
                    if (b <= (r == 0 ? a : rights[r - 1]) || ! c_.has_color(a, b, colour_))
                        return false;
                }
                low = rights.empty() ? lefts.back() : rights.back();
                i = k_ - 1 - static_cast<int>(rights.size());
            }
            for (; i >= 0; --i) {
                Vertex b = low + 1;
                while (b <= n_ && ! c_.has_color(lefts[i], b, colour_))
                    ++b;
                if (b > n_)
                    return false;
                low = b;
            }
            return true;
        }

        const OrderedColoring & c_;
        Color colour_;
        int k_;
        int n_;
        std::vector<int> inside_;
    };
}

/// Order-preserving copy of g in one colour class of c, or nullopt. The copy
/// returned is always the lexicographically least one.
///
/// Nested matchings use an interval DP over the host; everything else
/// backtracks over increasing maps in lexicographic order with bitset candidate
/// sets.
inline auto contains_ordered(const OrderedColoring & c, Color colour, const OrderedGraph & g)
    -> std::optional<EmbeddingWitness>
{
    if (g.n() > c.n())
        return std::nullopt;
    if (g.edge_count() == 0) {
        EmbeddingWitness w{{}, colour};
        for (Vertex v = 1; v <= g.n(); ++v)
            w.map.push_back(v);
        return w;
    }
    if (auto k = detail::nesting_depth_if_nested(g))
        return detail::NestedEmbedder(c, colour, *k).least();

    detail::Backtracker bt{c, colour, g, std::vector<std::vector<Vertex>>(g.n() + 1), std::vector<Vertex>(g.n(), 0), {}};
    for (const auto & e : g.edges())
        bt.earlier[e.second].push_back(e.first);
    if (! bt.run(1))
        return std::nullopt;
    return EmbeddingWitness{bt.map, colour};
}

} // namespace ordramsey
