#pragma once

// Parenthesis matchings: sequence <-> matching <-> ordered rooted tree, the
// recursive r_<(M, K3) bound certificate for non-crossing matchings, and the two
// convexity inequalities that bound certificate growth.

#include <ordramsey/core.hpp>

#include <cmath>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ordramsey {

inline auto parse_paren(std::string_view seq) -> OrderedMatching
{
    std::vector<Edge> edges;
    std::vector<Vertex> open;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        auto v = static_cast<Vertex>(i + 1);
        if (seq[i] == '(')
            open.push_back(v);
        else if (seq[i] == ')') {
            if (open.empty())
                throw ParseError("unbalanced ')' at index " + std::to_string(i), i);
            edges.push_back({open.back(), v});
            open.pop_back();
        }
        else
            throw ParseError(std::string("unexpected character '") + seq[i] + "' at index " + std::to_string(i), i);
    }
    if (! open.empty()) {
        auto i = static_cast<std::size_t>(open.front() - 1);
        throw ParseError("unclosed '(' at index " + std::to_string(i), i);
    }
    return OrderedMatching(static_cast<int>(seq.size()), std::move(edges));
}

inline auto render_paren(const OrderedMatching & m) -> std::string
{
    if (! m.is_perfect())
        throw ParameterError("only perfect matchings have a parenthesis sequence");
    if (auto cross = m.find_crossing())
        throw ParameterError("edges (" + std::to_string(cross->first.first) + "," + std::to_string(cross->first.second)
            + ") and (" + std::to_string(cross->second.first) + "," + std::to_string(cross->second.second) + ") cross");
    std::string out(m.n(), '(');
    for (const auto & e : m.edges())
        out[e.second - 1] = ')';
    return out;
}

/// Ordered rooted tree of a parenthesis matching. Node 0 is the root; every other
/// node owns one matching edge, and its children are the edges directly inside it.
struct ParenTree
{
    struct Node
    {
        int parent = -1;
        std::vector<int> children;
        int size = 1;
        Edge edge{};
        bool heavy = false; ///< parent edge is r-heavy
    };

    std::vector<Node> nodes;
    double ratio = 0.5;

    [[nodiscard]] auto root_size() const -> int { return nodes.front().size; }
};

namespace detail {
    inline void label_tree(ParenTree & t)
    {
        for (int v = static_cast<int>(t.nodes.size()) - 1; v >= 0; --v) {
            auto & node = t.nodes[v];
            node.size = 1;
            for (int ch : node.children)
                node.size += t.nodes[ch].size;
        }
        for (auto & node : t.nodes)
            node.heavy = node.parent >= 0 && node.size >= t.ratio * t.nodes[node.parent].size;
    }
}

inline auto matching_to_tree(const OrderedMatching & m, double ratio) -> ParenTree
{
    if (auto cross = m.find_crossing())
        throw ParameterError("edges (" + std::to_string(cross->first.first) + "," + std::to_string(cross->first.second)
            + ") and (" + std::to_string(cross->second.first) + "," + std::to_string(cross->second.second) + ") cross");
    if (! m.is_perfect())
        throw ParameterError("matching leaves vertices uncovered; the tree bijection needs a perfect matching");

    ParenTree t;
    t.ratio = ratio;
    t.nodes.emplace_back();
    std::vector<Vertex> partner(m.n() + 1, 0);
    for (const auto & e : m.edges()) {
        partner[e.first] = e.second;
        partner[e.second] = e.first;
    }
    // Nodes are created in preorder, so children always follow their parent.
    int current = 0;
    for (Vertex v = 1; v <= m.n(); ++v) {
        if (partner[v] > v) {
            ParenTree::Node node;
            node.parent = current;
            node.edge = {v, partner[v]};
            t.nodes.push_back(node);
            int id = static_cast<int>(t.nodes.size()) - 1;
            t.nodes[current].children.push_back(id);
            current = id;
        }
        else
            current = t.nodes[current].parent;
    }
    detail::label_tree(t);
    return t;
}

inline auto tree_to_matching(const ParenTree & t) -> OrderedMatching
{
    std::vector<Edge> edges;
    Vertex next = 1;
    std::function<void(int)> walk = [&](int v) {
        for (int ch : t.nodes[v].children) {
            Vertex open = next++;
            walk(ch);
            edges.push_back({open, next++});
        }
    };
    walk(0);
    return OrderedMatching(next - 1, std::move(edges));
}

/// Constants of the bound recursion: exponent ε, heaviness ratio r, and the
/// growth constant c = 23 / (1 - r^ε).
struct BoundParams
{
    double eps = 1.0;
    double ratio = 0.0;
    double constant = 0.0;

    /// The constants the growth proof is stated for: r = 1 - 23^(-2/ε).
    static auto standard(double eps) -> BoundParams
    {
        if (! (eps > 0) || ! std::isfinite(eps))
            throw ParameterError("epsilon must be a positive finite number");
        return with_ratio(eps, 1.0 - std::pow(23.0, -2.0 / eps));
    }

    /// Same recursion with a caller-chosen ratio (used to reach heavy paths on small trees).
    static auto with_ratio(double eps, double ratio) -> BoundParams
    {
        if (! (eps > 0) || ! std::isfinite(eps))
            throw ParameterError("epsilon must be a positive finite number");
        if (! (ratio > 0 && ratio < 1))
            throw ParameterError("ratio must lie in (0,1)");
        return {eps, ratio, 23.0 / (1.0 - std::pow(ratio, eps))};
    }

    /// Split point between the two heavy-path cases: 23^(-1/ε).
    [[nodiscard]] auto case_threshold() const -> double { return std::pow(23.0, -1.0 / eps); }
};

enum class BoundCase
{
    leaf,
    light_root,
    heavy_path_a,
    heavy_path_b
};

inline auto to_string(BoundCase c) -> std::string
{
    switch (c) {
    case BoundCase::leaf: return "leaf";
    case BoundCase::light_root: return "light-root";
    case BoundCase::heavy_path_a: return "heavy-path-A";
    case BoundCase::heavy_path_b: return "heavy-path-B";
    }
    return "?";
}

/// Heavy-path decomposition below a node. The path starts at the node and
/// always descends into its first heavy child while one exists.
struct HeavyPath
{
    std::vector<int> path;        ///< path[0] is the start node
    std::vector<int> deep;        ///< children of the deepest path node
    /// Branches hanging off path[j] for j < last, split by side of the heavy child.
    std::vector<std::vector<int>> left, right;

    /// All branches except the deep ones, in certificate order: level by level, left then right.
    [[nodiscard]] auto side_branches() const -> std::vector<int>
    {
        std::vector<int> out;
        for (std::size_t j = 0; j < left.size(); ++j) {
            out.insert(out.end(), left[j].begin(), left[j].end());
            out.insert(out.end(), right[j].begin(), right[j].end());
        }
        return out;
    }
};

inline auto heavy_child(const ParenTree & t, int v) -> int
{
    // First heavy child; with r > 1/2 there is at most one.
    for (int ch : t.nodes[v].children)
        if (t.nodes[ch].heavy)
            return ch;
    return -1;
}

inline auto heavy_path_from(const ParenTree & t, int start) -> HeavyPath
{
    HeavyPath hp;
    int v = start;
    while (true) {
        hp.path.push_back(v);
        int h = heavy_child(t, v);
        if (h < 0)
            break;
        std::vector<int> l, r;
        bool after = false;
        for (int ch : t.nodes[v].children) {
            if (ch == h)
                after = true;
            else
                (after ? r : l).push_back(ch);
        }
        hp.left.push_back(std::move(l));
        hp.right.push_back(std::move(r));
        v = h;
    }
    hp.deep = t.nodes[v].children;
    return hp;
}

/// Derivation tree for an upper bound on r_<(M, K3).
///
/// leaf:        s = 1, bound 0.
/// light-root:  bound = sum over children of (t_i + 2 s_i + 1).
/// heavy-path:  with deep children first (deep_count of them) and side branches after,
///              bound = sum_deep (t + 3s) + 20 (path_size + sum_side (t + 3s) + sum_deep s).
struct BoundCertificate
{
    BoundCase kind = BoundCase::leaf;
    int s = 1;
    double bound = 0.0;
    int path_size = 0;
    int deep_count = 0;
    int node = 0; ///< tree node this certificate covers
    BoundParams params;
    std::vector<BoundCertificate> children;

    /// Host size handed to embedders: the bound rounded up.
    [[nodiscard]] auto budget() const -> std::size_t { return static_cast<std::size_t>(std::ceil(bound - 1e-9)); }
};

namespace detail {
    inline auto light_formula(const std::vector<BoundCertificate> & ch) -> double
    {
        double b = 0;
        for (const auto & c : ch)
            b += c.bound + 2.0 * c.s + 1.0;
        return b;
    }

    inline auto heavy_formula(const std::vector<BoundCertificate> & ch, int deep_count, int path_size) -> double
    {
        double center = 0, side = 0, deep_edges = 0;
        for (std::size_t i = 0; i < ch.size(); ++i) {
            double surround = ch[i].bound + 3.0 * ch[i].s;
            if (static_cast<int>(i) < deep_count) {
                center += surround;
                deep_edges += ch[i].s;
            }
            else
                side += surround;
        }
        return center + 20.0 * (path_size + side + deep_edges);
    }

    inline auto heavy_case(const BoundParams & p, int s, int path_size, const std::vector<BoundCertificate> & ch,
        int deep_count) -> BoundCase
    {
        double upper = path_size;
        for (std::size_t i = deep_count; i < ch.size(); ++i)
            upper += ch[i].s;
        return upper >= p.case_threshold() * s ? BoundCase::heavy_path_a : BoundCase::heavy_path_b;
    }

    inline auto certify(const ParenTree & t, int v, const BoundParams & p) -> BoundCertificate
    {
        BoundCertificate cert;
        cert.node = v;
        cert.params = p;
        cert.s = t.nodes[v].size;
        if (t.nodes[v].children.empty()) {
            cert.kind = BoundCase::leaf;
            return cert;
        }
        if (heavy_child(t, v) < 0) {
            cert.kind = BoundCase::light_root;
            for (int ch : t.nodes[v].children)
                cert.children.push_back(certify(t, ch, p));
            cert.bound = light_formula(cert.children);
            return cert;
        }
        auto hp = heavy_path_from(t, v);
        cert.path_size = static_cast<int>(hp.path.size());
        cert.deep_count = static_cast<int>(hp.deep.size());
        for (int ch : hp.deep)
            cert.children.push_back(certify(t, ch, p));
        for (int ch : hp.side_branches())
            cert.children.push_back(certify(t, ch, p));
        cert.bound = heavy_formula(cert.children, cert.deep_count, cert.path_size);
        cert.kind = heavy_case(p, cert.s, cert.path_size, cert.children, cert.deep_count);
        return cert;
    }
}

inline auto bound_tree(const ParenTree & t, const BoundParams & p) -> BoundCertificate
{
    return detail::certify(t, 0, p);
}

inline auto bound_pmatching(const OrderedMatching & m, const BoundParams & p) -> BoundCertificate
{
    return bound_tree(matching_to_tree(m, p.ratio), p);
}

inline auto bound_pmatching(const OrderedMatching & m, double eps) -> BoundCertificate
{
    return bound_pmatching(m, BoundParams::standard(eps));
}

/// c * s^(1+ε), the growth the recursion is claimed to stay under.
inline auto growth_cap(const BoundParams & p, int s) -> double { return p.constant * std::pow(s, 1.0 + p.eps); }

struct CertificateCheck
{
    bool ok = true;
    std::string reason;
};

/// Re-derives every node of a certificate from its children. With `check_growth`
/// each node must also satisfy bound <= c s^(1+ε).
inline auto validate_certificate(const BoundCertificate & cert, bool check_growth) -> CertificateCheck
{
    auto fail = [&](const std::string & why) {
        return CertificateCheck{false, "node " + std::to_string(cert.node) + ": " + why};
    };
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); };

    switch (cert.kind) {
    case BoundCase::leaf:
        if (cert.s != 1 || cert.bound != 0.0 || ! cert.children.empty())
            return fail("leaf must have s=1, bound 0 and no children");
        break;
    case BoundCase::light_root: {
        int s = 1;
        for (const auto & ch : cert.children) {
            s += ch.s;
            if (ch.s >= cert.params.ratio * cert.s)
                return fail("light-root node has a heavy child");
        }
        if (s != cert.s)
            return fail("subtree sizes do not sum to s");
        if (! close(cert.bound, detail::light_formula(cert.children)))
            return fail("bound differs from the surround/subadditivity formula");
        break;
    }
    case BoundCase::heavy_path_a:
    case BoundCase::heavy_path_b: {
        int s = cert.path_size;
        for (const auto & ch : cert.children)
            s += ch.s;
        if (s != cert.s || cert.path_size < 2 || cert.deep_count > static_cast<int>(cert.children.size()))
            return fail("path size and branch sizes do not sum to s");
        for (int i = 0; i < cert.deep_count; ++i)
            if (cert.children[i].s > cert.params.ratio * cert.s)
                return fail("deep subtree exceeds r*s");
        if (! close(cert.bound, detail::heavy_formula(cert.children, cert.deep_count, cert.path_size)))
            return fail("bound differs from the nested-decomposition formula");
        if (detail::heavy_case(cert.params, cert.s, cert.path_size, cert.children, cert.deep_count) != cert.kind)
            return fail("case label does not match the threshold test");
        break;
    }
    }
    if (check_growth && cert.bound > growth_cap(cert.params, cert.s) * (1 + 1e-12))
        return fail("bound exceeds c*s^(1+eps)");
    for (const auto & ch : cert.children) {
        if (ch.params.eps != cert.params.eps || ch.params.ratio != cert.params.ratio)
            return fail("child uses different constants");
        if (auto sub = validate_certificate(ch, check_growth); ! sub.ok)
            return sub;
    }
    return {};
}

enum class Verdict
{
    holds,
    fails,
    hypothesis_unmet
};

inline auto to_string(Verdict v) -> std::string
{
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::hypothesis_unmet: return "hypothesis-unmet";
    }
    return "?";
}

namespace detail {
    constexpr double convex_slack = 1e-9;

    inline void check_values(const std::vector<double> & a)
    {
        if (a.empty())
            throw ParameterError("empty coefficient list");
        for (double x : a)
            if (! std::isfinite(x) || x < 0)
                throw ParameterError("coefficients must be finite and non-negative");
    }

    inline auto leq(double lhs, double rhs) -> bool { return lhs <= rhs + convex_slack * std::max(1.0, std::abs(rhs)); }
}

/// m (a0 + c a1^δ + ... + c ak^δ) <= c s^δ, for s = Σ a_i >= 1, a_i <= r s (i >= 1),
/// r = m^(-1/(δ-1)) and c >= m. `a[0]` is a0.
inline auto convex1_holds(const std::vector<double> & a, double delta, double m, double c) -> Verdict
{
    detail::check_values(a);
    if (! std::isfinite(delta) || ! std::isfinite(m) || ! std::isfinite(c))
        throw ParameterError("non-finite parameter");
    if (! (delta > 1))
        throw ParameterError("delta must exceed 1");
    if (! (m > 0))
        throw ParameterError("m must be positive");
    double s = 0;
    for (double x : a)
        s += x;
    double r = std::pow(m, -1.0 / (delta - 1.0));
    if (c < m || s < 1)
        return Verdict::hypothesis_unmet;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (! detail::leq(a[i], r * s))
            return Verdict::hypothesis_unmet;
    double lhs = a[0];
    for (std::size_t i = 1; i < a.size(); ++i)
        lhs += c * std::pow(a[i], delta);
    lhs *= m;
    return detail::leq(lhs, c * std::pow(s, delta)) ? Verdict::holds : Verdict::fails;
}

/// a1^δ + ... + ak^δ <= r^(δ-1) s^δ, for s = Σ a_i and a_i <= r s.
inline auto convex2_holds(const std::vector<double> & a, double delta, double r) -> Verdict
{
    detail::check_values(a);
    if (! std::isfinite(delta) || ! std::isfinite(r))
        throw ParameterError("non-finite parameter");
    if (! (delta >= 1))
        throw ParameterError("delta must be at least 1");
    if (! (r > 0 && r < 1))
        throw ParameterError("r must lie in (0,1)");
    double s = 0;
    for (double x : a)
        s += x;
    for (double x : a)
        if (! detail::leq(x, r * s))
            return Verdict::hypothesis_unmet;
    double lhs = 0;
    for (double x : a)
        lhs += std::pow(x, delta);
    return detail::leq(lhs, std::pow(r, delta - 1.0) * std::pow(s, delta)) ? Verdict::holds : Verdict::fails;
}

} // namespace ordramsey
