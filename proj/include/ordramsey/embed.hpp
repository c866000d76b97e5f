#pragma once

// Constructive embedders for matchings in blue-K3-free colourings. Each one
// either returns a blue triangle, a red copy of its pattern, or (for the base
// cases) a red clique large enough to hold the pattern. Sub-embedders work on
// views: strictly increasing lists of host vertices.

#include <ordramsey/chain.hpp>
#include <ordramsey/core.hpp>
#include <ordramsey/paren.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <numeric>
#include <span>
#include <variant>
#include <vector>

namespace ordramsey {

struct BlueTriangle
{
    Triangle vertices{};
};

struct RedCopy
{
    EmbeddingWitness witness;
};

struct RedClique
{
    std::vector<Vertex> vertices;
};

using EmbedOutcome = std::variant<BlueTriangle, RedCopy, RedClique>;
using HostView = std::span<const Vertex>;
using Embedder = std::function<EmbedOutcome(const OrderedColoring &, HostView)>;

/// A sub-pattern, the host size its embedder is guaranteed to succeed on, and the embedder.
struct Part
{
    OrderedMatching pattern;
    std::size_t budget = 0;
    Embedder embed;
};

inline auto all_vertices(const OrderedColoring & c) -> std::vector<Vertex>
{
    std::vector<Vertex> v(c.n());
    std::iota(v.begin(), v.end(), 1);
    return v;
}

/// Checks an outcome against the host without trusting the producer.
inline auto validate_outcome(const OrderedColoring & c, const EmbedOutcome & out, const OrderedGraph & pattern) -> bool
{
    if (auto t = std::get_if<BlueTriangle>(&out)) {
        auto [a, b, d] = t->vertices;
        return a >= 1 && a < b && b < d && d <= c.n() && c.blue(a, b) && c.blue(a, d) && c.blue(b, d);
    }
    if (auto r = std::get_if<RedCopy>(&out))
        return r->witness.color == Color::red && validate_witness(c, pattern, r->witness);
    const auto & q = std::get<RedClique>(out);
    return static_cast<int>(q.vertices.size()) >= pattern.n() && is_red_clique(c, q.vertices);
}

inline auto outcome_kind(const EmbedOutcome & out) -> std::string
{
    if (std::holds_alternative<BlueTriangle>(out))
        return "blue-triangle";
    if (std::holds_alternative<RedCopy>(out))
        return "red-copy";
    return "red-clique";
}

namespace detail {
    inline auto sorted_triangle(Vertex a, Vertex b, Vertex d) -> Triangle
    {
        Triangle t{a, b, d};
        std::sort(t.begin(), t.end());
        return t;
    }

    /// Red copy of `pattern` from a non-triangle outcome; cliques donate their first vertices.
    inline auto copy_map(const EmbedOutcome & out, const OrderedMatching & pattern) -> std::vector<Vertex>
    {
        if (auto r = std::get_if<RedCopy>(&out))
            return r->witness.map;
        const auto & q = std::get<RedClique>(out);
        if (static_cast<int>(q.vertices.size()) < pattern.n())
            throw ContractViolation("red clique of size " + std::to_string(q.vertices.size())
                + " cannot hold a pattern on " + std::to_string(pattern.n()) + " vertices");
        return {q.vertices.begin(), q.vertices.begin() + pattern.n()};
    }

    inline auto red_copy(std::vector<Vertex> map) -> EmbedOutcome { return RedCopy{EmbeddingWitness{std::move(map), Color::red}}; }

    /// Least blue pair among `vs`, closed into a triangle with `apex` (blue to all of vs).
    inline auto blue_pair_with(const OrderedColoring & c, Vertex apex, std::span<const Vertex> vs) -> std::optional<Triangle>
    {
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (c.blue(vs[a], vs[b]))
                    return sorted_triangle(apex, vs[a], vs[b]);
        return std::nullopt;
    }

    inline auto view_triangle(const OrderedColoring & c, HostView view) -> std::optional<Triangle>
    {
        if (view.empty())
            return std::nullopt;
        return find_blue_triangle(c, view);
    }

    inline auto shift_matching(const OrderedMatching & m, int offset, std::vector<Edge> & into)
    {
        for (const auto & e : m.edges())
            into.push_back({e.first + offset, e.second + offset});
    }
}

/// Concatenation M1 M2 ... on consecutive vertex blocks.
inline auto concat_matchings(const std::vector<OrderedMatching> & parts) -> OrderedMatching
{
    std::vector<Edge> edges;
    int offset = 0;
    for (const auto & p : parts) {
        detail::shift_matching(p, offset, edges);
        offset += p.n();
    }
    return OrderedMatching(offset, std::move(edges));
}

/// (M): one new edge around M.
inline auto surround_matching(const OrderedMatching & m) -> OrderedMatching
{
    std::vector<Edge> edges{{1, m.n() + 2}};
    detail::shift_matching(m, 1, edges);
    return OrderedMatching(m.n() + 2, std::move(edges));
}

/// (A1 (A2 ( ... (Ak) ... ) A_{2k-2}) A_{2k-1}) for 2k-1 parts.
inline auto nest_matchings(const std::vector<OrderedMatching> & parts) -> OrderedMatching
{
    if (parts.size() % 2 == 0)
        throw ParameterError("nesting needs an odd number of parts");
    int k = static_cast<int>(parts.size() + 1) / 2;
    std::vector<Edge> edges;
    std::vector<Vertex> opens;
    int pos = 0;
    for (int j = 1; j <= k; ++j) {
        opens.push_back(++pos);
        detail::shift_matching(parts[j - 1], pos, edges);
        pos += parts[j - 1].n();
    }
    for (int j = k - 1; j >= 0; --j) {
        edges.push_back({opens[j], ++pos});
        if (j > 0) {
            detail::shift_matching(parts[2 * k - 1 - j], pos, edges);
            pos += parts[2 * k - 1 - j].n();
        }
    }
    return OrderedMatching(pos, std::move(edges));
}

/// Red NM_k, a blue triangle, or a red clique of size >= 2k, on a view of >= 6k vertices.
///
/// A vertex of blue degree >= 2k either closes a blue triangle or has a red-clique
/// neighbourhood. Otherwise the red edges are dense enough that the nesting order
/// has a chain of length k; failing that, a blue triangle must exist.
inline auto embed_nested(const OrderedColoring & c, HostView view, int k) -> EmbedOutcome
{
    if (k < 1)
        throw ParameterError("k must be positive");
    if (view.size() < static_cast<std::size_t>(6 * k))
        throw SizeError("nested embedding of NM_" + std::to_string(k) + " needs " + std::to_string(6 * k)
            + " vertices, got " + std::to_string(view.size()));

    std::vector<std::uint64_t> mask(c.words(), 0);
    for (auto v : view)
        detail::set_bit(mask.data(), v, true);
    Vertex best = 0;
    int best_degree = -1;
    for (auto v : view) {
        auto row = c.blue_row(v);
        int d = 0;
        for (std::size_t w = 0; w < mask.size(); ++w)
            d += std::popcount(row[w] & mask[w]);
        if (d > best_degree) {
            best = v;
            best_degree = d;
        }
    }
    if (best_degree >= 2 * k) {
        std::vector<Vertex> nbrs;
        for (auto u : view)
            if (u != best && c.blue(best, u))
                nbrs.push_back(u);
        if (auto t = detail::blue_pair_with(c, best, nbrs))
            return BlueTriangle{*t};
        return RedClique{std::move(nbrs)};
    }

    std::vector<Edge> red;
    for (std::size_t a = 0; a < view.size(); ++a)
        for (std::size_t b = a + 1; b < view.size(); ++b)
            if (c.red(view[a], view[b]))
                red.push_back({view[a], view[b]});
    auto chain = longest_nested_chain(red);
    if (static_cast<int>(chain.size()) >= k)
        return RedCopy{chain_witness(chain, k)};
    if (auto t = detail::view_triangle(c, view))
        return BlueTriangle{*t};
    throw ContractViolation("no blue triangle, no dense blue vertex and no red chain of length "
        + std::to_string(k) + " on " + std::to_string(view.size()) + " vertices");
}

inline auto embed_nested(const OrderedColoring & c, int k) -> EmbedOutcome
{
    if (c.n() < 6 * k)
        throw SizeError("nested embedding of NM_" + std::to_string(k) + " needs " + std::to_string(6 * k)
            + " vertices, got " + std::to_string(c.n()));
    auto v = all_vertices(c);
    return embed_nested(c, v, k);
}

/// Red copy of (M) on a view of >= t + |(M)| + 1 vertices, where t is inner.budget.
///
/// M goes into positions 2..t+1. A red edge from the first vertex into the tail
/// t+2.. wraps it; otherwise the tail is blue to the first vertex and so is a red
/// clique or contains a blue triangle.
inline auto embed_surround(const OrderedColoring & c, HostView view, const Part & inner) -> EmbedOutcome
{
    const std::size_t t = inner.budget;
    const std::size_t outer = static_cast<std::size_t>(inner.pattern.n()) + 2;
    if (view.size() < t + 2)
        throw SizeError("surround needs at least " + std::to_string(t + 2) + " vertices, got "
            + std::to_string(view.size()));

    auto res = inner.embed(c, view.subspan(1, t));
    if (std::holds_alternative<BlueTriangle>(res))
        return res;
    auto map = detail::copy_map(res, inner.pattern);

    const Vertex first = view[0];
    auto tail = view.subspan(t + 1, std::min(outer, view.size() - t - 1));
    for (auto w : tail) {
        if (c.red(first, w)) {
            std::vector<Vertex> wrapped{first};
            wrapped.insert(wrapped.end(), map.begin(), map.end());
            wrapped.push_back(w);
            return detail::red_copy(std::move(wrapped));
        }
    }
    if (tail.size() < outer)
        throw SizeError("surround ran out of host: tail has " + std::to_string(tail.size()) + " of "
            + std::to_string(outer) + " vertices and no red edge from the first vertex");
    if (auto tri = detail::blue_pair_with(c, first, tail))
        return BlueTriangle{*tri};
    return RedClique{{tail.begin(), tail.end()}};
}

/// Consecutive blocks of the given budgets, one per part (subadditivity on disjoint intervals).
inline auto embed_concat(const OrderedColoring & c, HostView view, const std::vector<Part> & parts) -> EmbedOutcome
{
    std::size_t need = 0;
    for (const auto & p : parts)
        need += p.budget;
    if (view.size() < need)
        throw SizeError("concatenation needs " + std::to_string(need) + " vertices, got " + std::to_string(view.size()));
    std::vector<Vertex> map;
    std::size_t offset = 0;
    for (const auto & p : parts) {
        auto res = p.embed(c, view.subspan(offset, p.budget));
        if (std::holds_alternative<BlueTriangle>(res))
            return res;
        auto sub = detail::copy_map(res, p.pattern);
        map.insert(map.end(), sub.begin(), sub.end());
        offset += p.budget;
    }
    return detail::red_copy(std::move(map));
}

namespace detail {
    /// Positional edge in a view: indices are 0-based view positions.
    struct Span
    {
        std::size_t left = 0, right = 0;
    };

    /// Walks a nested red chain outward, saving one edge per level and deleting edges
    /// in between until the gaps beside the saved edge fit the next pair of parts.
    /// `chain` is innermost first. The centre is embedded by the caller when
    /// `centre_map` is set; otherwise it is embedded inside the first saved edge.
    inline auto nest_walk(const OrderedColoring & c, HostView view, const std::vector<Span> & chain,
        const std::vector<Part> & parts, std::optional<std::vector<Vertex>> centre_map) -> EmbedOutcome
    {
        const int k = static_cast<int>(parts.size() + 1) / 2;
        std::vector<Span> saved(k + 1);
        std::vector<std::vector<Vertex>> maps(parts.size());
        std::size_t idx = 0;

        auto run = [&](std::size_t part, std::size_t from, std::size_t to) -> std::optional<EmbedOutcome> {
            // host positions strictly between from and to
            auto sub = view.subspan(from + 1, to - from - 1);
            auto res = parts[part].embed(c, sub.first(std::min(sub.size(), parts[part].budget)));
            if (std::holds_alternative<BlueTriangle>(res))
                return res;
            maps[part] = copy_map(res, parts[part].pattern);
            return std::nullopt;
        };

        if (centre_map) {
            if (chain.empty())
                throw ContractViolation("nest walk started without a chain");
            saved[k] = chain[0];
            maps[k - 1] = std::move(*centre_map);
        }
        else {
            while (idx < chain.size() && chain[idx].right - chain[idx].left - 1 < parts[k - 1].budget)
                ++idx;
            if (idx >= chain.size())
                throw ContractViolation("nested chain exhausted before the centre fit");
            saved[k] = chain[idx];
            if (auto tri = run(k - 1, chain[idx].left, chain[idx].right))
                return *tri;
        }

        for (int level = k - 1; level >= 1; --level) {
            const Part & lp = parts[level - 1];
            const Part & rp = parts[2 * k - 1 - level];
            const Span inner = saved[level + 1];
            ++idx;
            while (idx < chain.size()
                && (inner.left - chain[idx].left - 1 < lp.budget || chain[idx].right - inner.right - 1 < rp.budget))
                ++idx;
            if (idx >= chain.size())
                throw ContractViolation("nested chain exhausted at level " + std::to_string(level));
            saved[level] = chain[idx];
            if (auto tri = run(level - 1, chain[idx].left, inner.left))
                return *tri;
            if (auto tri = run(2 * k - 1 - level, inner.right, chain[idx].right))
                return *tri;
        }

        std::vector<Vertex> map;
        for (int j = 1; j <= k; ++j) {
            map.push_back(view[saved[j].left]);
            map.insert(map.end(), maps[j - 1].begin(), maps[j - 1].end());
        }
        map.push_back(view[saved[k].right]);
        for (int j = k - 1; j >= 1; --j) {
            const auto & m = maps[2 * k - 1 - j];
            map.insert(map.end(), m.begin(), m.end());
            map.push_back(view[saved[j].right]);
        }
        return red_copy(std::move(map));
    }

    inline auto patterns_of(const std::vector<Part> & parts) -> std::vector<OrderedMatching>
    {
        std::vector<OrderedMatching> out;
        for (const auto & p : parts)
            out.push_back(p.pattern);
        return out;
    }

    inline void check_parts(const std::vector<Part> & parts)
    {
        if (parts.empty() || parts.size() % 2 == 0)
            throw ParameterError("nesting needs 2k-1 parts for some k >= 1");
    }
}

/// Host size the simple nesting embedder needs: 6(k + t) with
/// t = Σ_{i<=k} max(budget(M_i), budget(M_{2k-i})).
inline auto nest_simple_budget(const std::vector<Part> & parts) -> std::size_t
{
    detail::check_parts(parts);
    const std::size_t k = (parts.size() + 1) / 2;
    std::size_t t = 0;
    for (std::size_t i = 1; i <= k; ++i)
        t += std::max(parts[i - 1].budget, parts[2 * k - i - 1].budget);
    return 6 * (k + t);
}

/// Red copy of (A1(A2(...(Ak)...)A_{2k-2})A_{2k-1}) from a red NM_{k+t}: starting at
/// the innermost edge, delete matched pairs until each part has room, saving one
/// pair per level.
inline auto embed_nest_simple(const OrderedColoring & c, HostView view, const std::vector<Part> & parts) -> EmbedOutcome
{
    const std::size_t need = nest_simple_budget(parts);
    if (view.size() < need)
        throw SizeError("simple nesting needs " + std::to_string(need) + " vertices, got " + std::to_string(view.size()));
    const int levels = static_cast<int>(need / 6);
    auto pattern = nest_matchings(detail::patterns_of(parts));

    auto res = embed_nested(c, view, levels);
    if (std::holds_alternative<BlueTriangle>(res))
        return res;
    if (auto q = std::get_if<RedClique>(&res))
        return detail::red_copy(detail::copy_map(*q, pattern));

    const auto & map = std::get<RedCopy>(res).witness.map;
    auto pos = [&](Vertex v) { return static_cast<std::size_t>(std::lower_bound(view.begin(), view.end(), v) - view.begin()); };
    std::vector<detail::Span> chain;
    for (int i = levels; i >= 1; --i)
        chain.push_back({pos(map[i - 1]), pos(map[2 * levels - i])});
    return detail::nest_walk(c, view, chain, parts, std::nullopt);
}

struct NestComplexSizes
{
    std::size_t k = 0;      ///< nesting levels
    std::size_t l = 0;      ///< Σ_{i≠k} budget(M_i)
    std::size_t t = 0;      ///< budget(M_k)
    std::size_t centre = 0; ///< |M_k|, edges of the centre
    [[nodiscard]] auto unit() const -> std::size_t { return k + l + centre; }
    [[nodiscard]] auto total() const -> std::size_t { return t + 20 * unit(); }
};

inline auto nest_complex_sizes(const std::vector<Part> & parts) -> NestComplexSizes
{
    detail::check_parts(parts);
    NestComplexSizes s;
    s.k = (parts.size() + 1) / 2;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (i + 1 != s.k)
            s.l += parts[i].budget;
    s.t = parts[s.k - 1].budget;
    s.centre = parts[s.k - 1].pattern.edge_count();
    return s;
}

/// Red copy of (A1(A2(...(Ak)...)A_{2k-2})A_{2k-1}) on t + 20K vertices, K = k + l + |M_k|.
///
/// X = first 10K vertices, Y = next t, Z = the rest. M_k goes into Y. A nested red
/// X-Z chain of length k + l is walked outward as in the simple embedder. Otherwise
/// the X-Z red edges split into fewer than k + l antichains of size <= |X| + |Z|, so
/// some vertex of X has 8K blue neighbours in Z: a blue triangle or a red clique
/// that holds the whole pattern.
inline auto embed_nest_complex(const OrderedColoring & c, HostView view, const std::vector<Part> & parts) -> EmbedOutcome
{
    const auto sz = nest_complex_sizes(parts);
    if (view.size() < sz.total())
        throw SizeError("nest embedding needs " + std::to_string(sz.total()) + " vertices, got "
            + std::to_string(view.size()));
    auto pattern = nest_matchings(detail::patterns_of(parts));
    const std::size_t unit = sz.unit();
    if (static_cast<std::size_t>(pattern.n()) > 8 * unit)
        throw ContractViolation("pattern on " + std::to_string(pattern.n()) + " vertices exceeds 8(k+l+|M_k|) = "
            + std::to_string(8 * unit));

    const std::size_t x_end = 10 * unit;     // X = [0, x_end)
    const std::size_t z_begin = x_end + sz.t; // Z = [z_begin, size)

    auto centre = parts[sz.k - 1].embed(c, view.subspan(x_end, sz.t));
    if (std::holds_alternative<BlueTriangle>(centre))
        return centre;
    auto centre_map = detail::copy_map(centre, parts[sz.k - 1].pattern);

    std::vector<Edge> red;
    for (std::size_t x = 0; x < x_end; ++x)
        for (std::size_t z = z_begin; z < view.size(); ++z)
            if (c.red(view[x], view[z]))
                red.push_back({static_cast<Vertex>(x + 1), static_cast<Vertex>(z + 1)});
    auto chain = longest_nested_chain(red);
    if (chain.size() >= sz.k + sz.l) {
        std::vector<detail::Span> spans;
        for (const auto & e : chain.edges)
            spans.push_back({static_cast<std::size_t>(e.first - 1), static_cast<std::size_t>(e.second - 1)});
        return detail::nest_walk(c, view, spans, parts, std::move(centre_map));
    }

    Vertex best = 0;
    std::vector<Vertex> best_nbrs;
    for (std::size_t x = 0; x < x_end; ++x) {
        std::vector<Vertex> nbrs;
        for (std::size_t z = z_begin; z < view.size(); ++z)
            if (c.blue(view[x], view[z]))
                nbrs.push_back(view[z]);
        if (nbrs.size() > best_nbrs.size() || best == 0) {
            best = view[x];
            best_nbrs = std::move(nbrs);
        }
    }
    if (best_nbrs.size() >= 8 * unit) {
        if (auto tri = detail::blue_pair_with(c, best, best_nbrs))
            return BlueTriangle{*tri};
        return detail::red_copy({best_nbrs.begin(), best_nbrs.begin() + pattern.n()});
    }
    if (auto tri = detail::view_triangle(c, view))
        return BlueTriangle{*tri};
    throw ContractViolation("nest embedding found neither a long chain, a dense blue vertex nor a blue triangle");
}

namespace detail {
    inline auto children_paren(const ParenTree & t, int v) -> std::string
    {
        std::string out;
        for (int ch : t.nodes[v].children)
            out += "(" + children_paren(t, ch) + ")";
        return out;
    }

    struct TreeEmbedder
    {
        const ParenTree & tree;
        std::vector<const BoundCertificate *> cert_of;

        auto budget(int v) const -> std::size_t { return cert_of[v]->budget(); }
        auto inner(int v) const -> OrderedMatching { return parse_paren(children_paren(tree, v)); }

        /// The matching under v, as a part sized by v's certificate.
        auto part(int v) const -> Part
        {
            return {inner(v), budget(v), [this, v](const OrderedColoring & c, HostView view) { return embed(c, view, v); }};
        }

        /// (M_v) with the given budget.
        auto surround_part(int v, std::size_t budget) const -> Part
        {
            Part in = part(v);
            auto pattern = surround_matching(in.pattern);
            return {pattern, budget, [in](const OrderedColoring & c, HostView view) { return embed_surround(c, view, in); }};
        }

        auto concat_part(const std::vector<int> & branches) const -> Part
        {
            std::vector<Part> sub;
            std::vector<OrderedMatching> patterns;
            std::size_t total = 0;
            for (int b : branches) {
                std::size_t bb = budget(b) + 3 * static_cast<std::size_t>(tree.nodes[b].size);
                sub.push_back(surround_part(b, bb));
                patterns.push_back(sub.back().pattern);
                total += bb;
            }
            return {concat_matchings(patterns), total,
                [sub](const OrderedColoring & c, HostView view) { return embed_concat(c, view, sub); }};
        }

        auto embed(const OrderedColoring & c, HostView view, int v) const -> EmbedOutcome
        {
            const auto * cert = cert_of[v];
            if (cert->kind == BoundCase::leaf)
                return red_copy({});
            if (cert->kind == BoundCase::light_root) {
                std::vector<Part> blocks;
                for (int ch : tree.nodes[v].children)
                    blocks.push_back(surround_part(ch, budget(ch) + 2 * static_cast<std::size_t>(tree.nodes[ch].size) + 1));
                return embed_concat(c, view, blocks);
            }
            auto hp = heavy_path_from(tree, v);
            const std::size_t k = hp.path.size();
            std::vector<Part> parts(2 * k - 1);
            for (std::size_t j = 0; j + 1 < k; ++j) {
                parts[j] = concat_part(hp.left[j]);
                parts[2 * k - 2 - j] = concat_part(hp.right[j]);
            }
            parts[k - 1] = concat_part(hp.deep);
            auto res = embed_nest_complex(c, view, parts);
            if (auto r = std::get_if<RedCopy>(&res)) {
                // drop the outermost pair standing in for v itself
                auto & map = r->witness.map;
                map.erase(map.begin());
                map.pop_back();
            }
            return res;
        }
    };

    inline void index_certificates(const BoundCertificate & cert, std::vector<const BoundCertificate *> & out)
    {
        out[cert.node] = &cert;
        for (const auto & ch : cert.children)
            index_certificates(ch, out);
    }
}

/// A non-crossing perfect matching as a Part whose budget is its certificate bound.
inline auto pmatching_part(const OrderedMatching & m, const BoundParams & params) -> Part
{
    struct Held
    {
        Held(ParenTree t, const BoundParams & p) :
            tree(std::move(t)), cert(bound_tree(tree, p)),
            te{tree, std::vector<const BoundCertificate *>(tree.nodes.size(), nullptr)}
        {
            detail::index_certificates(cert, te.cert_of);
        }
        ParenTree tree;
        BoundCertificate cert;
        detail::TreeEmbedder te;
    };
    auto held = std::make_shared<const Held>(matching_to_tree(m, params.ratio), params);
    return {m, held->cert.budget(), [held, m](const OrderedColoring & c, HostView view) -> EmbedOutcome {
                if (view.size() < held->cert.budget())
                    throw SizeError("view has " + std::to_string(view.size()) + " vertices; the certificate needs "
                        + std::to_string(held->cert.budget()));
                auto res = held->te.embed(c, view.first(held->cert.budget()), 0);
                if (auto q = std::get_if<RedClique>(&res))
                    return detail::red_copy(detail::copy_map(*q, m));
                return res;
            }};
}

/// Red copy of a non-crossing perfect matching, or a blue triangle, on a host of at
/// least the certificate's bound. Light roots surround each child and concatenate;
/// heavy roots nest along the heavy path.
inline auto embed_pmatching(const OrderedColoring & c, const OrderedMatching & m, const BoundParams & params) -> EmbedOutcome
{
    auto part = pmatching_part(m, params);
    if (static_cast<std::size_t>(c.n()) < part.budget)
        throw SizeError("host has " + std::to_string(c.n()) + " vertices; the certificate needs "
            + std::to_string(part.budget));
    auto view = all_vertices(c);
    return part.embed(c, view);
}

inline auto embed_pmatching(const OrderedColoring & c, const OrderedMatching & m, double eps) -> EmbedOutcome
{
    return embed_pmatching(c, m, BoundParams::standard(eps));
}

} // namespace ordramsey
