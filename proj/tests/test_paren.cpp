#include "oracles.hpp"

#include <ordramsey/paren.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace ordramsey;

namespace {

// Tree read straight off a parenthesis string, independent of ParenTree.
struct RefTree
{
    std::vector<RefTree> kids;
    int size = 1;
};

auto ref_children(const std::string & s) -> std::vector<RefTree>
{
    std::vector<RefTree> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        depth += s[i] == '(' ? 1 : -1;
        if (depth == 0) {
            RefTree t;
            t.kids = ref_children(s.substr(start + 1, i - start - 1));
            for (const auto & k : t.kids)
                t.size += k.size;
            out.push_back(t);
            start = i + 1;
        }
    }
    return out;
}

auto ref_tree(const std::string & s) -> RefTree
{
    RefTree root;
    root.kids = ref_children(s);
    for (const auto & k : root.kids)
        root.size += k.size;
    return root;
}

struct RefBound
{
    double bound = 0;
    std::string kind = "leaf";
};

auto ref_bound(const RefTree & t, double r, double eps) -> RefBound
{
    if (t.kids.empty())
        return {};
    auto heavy = [&](const RefTree & v) -> const RefTree * {
        for (const auto & k : v.kids)
            if (k.size >= r * v.size)
                return &k;
        return nullptr;
    };
    if (! heavy(t)) {
        double b = 0;
        for (const auto & k : t.kids)
            b += ref_bound(k, r, eps).bound + 2.0 * k.size + 1;
        return {b, "light-root"};
    }
    const RefTree * v = &t;
    int path = 1;
    double side = 0, side_size = 0;
    while (const RefTree * h = heavy(*v)) {
        for (const auto & k : v->kids)
            if (&k != h) {
                side += ref_bound(k, r, eps).bound + 3.0 * k.size;
                side_size += k.size;
            }
        v = h;
        ++path;
    }
    double centre = 0, deep_size = 0;
    for (const auto & k : v->kids) {
        centre += ref_bound(k, r, eps).bound + 3.0 * k.size;
        deep_size += k.size;
    }
    bool case_a = path + side_size >= std::pow(23.0, -1.0 / eps) * t.size;
    return {centre + 20.0 * (path + side + deep_size), case_a ? "heavy-path-A" : "heavy-path-B"};
}

auto all_balanced(int max_len) -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (int len = 0; len <= max_len; len += 2)
        for (auto & s : oracle::balanced_strings(len))
            out.push_back(s);
    return out;
}

} // namespace

TEST(Paren, MixedSequence)
{
    auto m = parse_paren("(()())()");
    EXPECT_EQ(m.n(), 8);
    EXPECT_EQ(m.edges(), (std::vector<Edge>{{1, 6}, {2, 3}, {4, 5}, {7, 8}}));
}

TEST(Paren, EmptyAndNested)
{
    EXPECT_EQ(parse_paren("").n(), 0);
    EXPECT_EQ(parse_paren("((()))"), nested_matching(3));
    EXPECT_EQ(nested_matching(1).edges(), (std::vector<Edge>{{1, 2}}));
    EXPECT_EQ(nested_matching(2).edges(), (std::vector<Edge>{{1, 4}, {2, 3}}));
    EXPECT_EQ(nested_matching(3).edges(), (std::vector<Edge>{{1, 6}, {2, 5}, {3, 4}}));
    EXPECT_THROW(nested_matching(0), ParameterError);
}

TEST(Paren, ErrorsNameTheIndex)
{
    auto index_of = [](const std::string & s) -> std::size_t {
        try {
            parse_paren(s);
        }
        catch (const ParseError & e) {
            return e.index;
        }
        return std::string::npos;
    };
    EXPECT_EQ(index_of("())("), 2U);
    EXPECT_EQ(index_of("(()"), 0U);
    EXPECT_EQ(index_of("()(()"), 2U);
    EXPECT_EQ(index_of("(x)"), 1U);
    EXPECT_EQ(index_of(")"), 0U);
}

TEST(Paren, RenderRejectsCrossingAndImperfect)
{
    EXPECT_THROW(render_paren(OrderedMatching(4, {{1, 3}, {2, 4}})), ParameterError);
    EXPECT_THROW(render_paren(OrderedMatching(3, {{1, 2}})), ParameterError);
}

TEST(Paren, RoundTripsExhaustive)
{
    for (const auto & s : all_balanced(16)) {
        auto m = parse_paren(s);
        ASSERT_TRUE(m.is_perfect());
        ASSERT_TRUE(m.is_noncrossing());
        ASSERT_EQ(render_paren(m), s);
        auto t = matching_to_tree(m, 0.6);
        ASSERT_EQ(t.root_size(), static_cast<int>(m.edge_count()) + 1);
        ASSERT_EQ(tree_to_matching(t), m);
    }
}

TEST(Paren, EdgesPairEachOpenWithItsClose)
{
    // i < j is an edge iff s[i..j] is balanced and no proper prefix of it is
    for (const auto & s : all_balanced(10)) {
        auto m = parse_paren(s);
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != '(')
                continue;
            int depth = 0;
            std::size_t j = i;
            for (; j < s.size(); ++j) {
                depth += s[j] == '(' ? 1 : -1;
                if (depth == 0)
                    break;
            }
            ASSERT_EQ(m.partner(static_cast<Vertex>(i + 1)), static_cast<Vertex>(j + 1));
        }
    }
}

TEST(ParenTree, MixedSequenceChildren)
{
    auto t = matching_to_tree(parse_paren("(()())()"), 0.5);
    ASSERT_EQ(t.nodes[0].children.size(), 2U);
    EXPECT_EQ(t.nodes[t.nodes[0].children[0]].size, 3);
    EXPECT_EQ(t.nodes[t.nodes[0].children[1]].size, 1);
    EXPECT_EQ(t.root_size(), 5);
}

TEST(ParenTree, NestedIsAPath)
{
    for (int k = 1; k <= 8; ++k) {
        auto t = matching_to_tree(nested_matching(k), 0.5);
        ASSERT_EQ(t.nodes.size(), static_cast<std::size_t>(k + 1));
        for (std::size_t v = 0; v < t.nodes.size(); ++v)
            ASSERT_EQ(t.nodes[v].children.size(), v + 1 < t.nodes.size() ? 1U : 0U);
    }
}

TEST(ParenTree, EmptyIsSingleRoot)
{
    auto t = matching_to_tree(parse_paren(""), 0.5);
    EXPECT_EQ(t.nodes.size(), 1U);
    EXPECT_EQ(t.root_size(), 1);
}

TEST(ParenTree, CrossingIsReported)
{
    try {
        matching_to_tree(OrderedMatching(4, {{1, 3}, {2, 4}}), 0.5);
        FAIL();
    }
    catch (const ParameterError & e) {
        EXPECT_NE(std::string(e.what()).find("(1,3)"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("(2,4)"), std::string::npos);
    }
}

TEST(ParenTree, SizesAndHeavyLabels)
{
    for (double r : {0.51, 0.6, 0.75, 0.9})
        for (const auto & s : all_balanced(12)) {
            auto t = matching_to_tree(parse_paren(s), r);
            for (const auto & node : t.nodes) {
                int sum = 1;
                int heavy = 0;
                for (int ch : node.children) {
                    sum += t.nodes[ch].size;
                    bool want = t.nodes[ch].size >= r * node.size;
                    ASSERT_EQ(t.nodes[ch].heavy, want);
                    heavy += want;
                }
                ASSERT_EQ(node.size, sum);
                ASSERT_LE(heavy, 1) << "two heavy children with r > 1/2";
            }
        }
}

TEST(Bound, StandardConstants)
{
    auto p = BoundParams::standard(1.0);
    EXPECT_NEAR(p.ratio, 1.0 - 1.0 / 529.0, 1e-15);
    EXPECT_NEAR(p.constant, 23.0 * 529.0, 1e-6);
    EXPECT_THROW(BoundParams::standard(0.0), ParameterError);
    EXPECT_THROW(BoundParams::standard(-1.0), ParameterError);
    EXPECT_THROW(bound_pmatching(parse_paren("()"), 0.0), ParameterError);
}

TEST(Bound, EmptyIsLeaf)
{
    auto cert = bound_pmatching(parse_paren(""), 1.0);
    EXPECT_EQ(cert.kind, BoundCase::leaf);
    EXPECT_EQ(cert.bound, 0.0);
}

TEST(Bound, FrozenValues)
{
    // recursion replayed by hand: "()" -> 3, "(())" -> 3 + 2*2 + 1
    auto nm2 = bound_pmatching(nested_matching(2), 1.0);
    EXPECT_EQ(nm2.kind, BoundCase::light_root);
    EXPECT_EQ(nm2.bound, 8.0);
    EXPECT_EQ(bound_pmatching(nested_matching(1), 1.0).bound, 3.0);
    auto fig = bound_pmatching(parse_paren("(()())()"), 1.0);
    EXPECT_EQ(fig.bound, 16.0);
    EXPECT_LE(fig.bound, 12167.0 * 25.0);
}

TEST(Bound, MatchesReferenceAtStandardConstants)
{
    for (double eps : {0.5, 1.0, 2.0}) {
        auto p = BoundParams::standard(eps);
        for (const auto & s : all_balanced(16)) {
            auto cert = bound_pmatching(parse_paren(s), p);
            auto ref = ref_bound(ref_tree(s), p.ratio, eps);
            ASSERT_NEAR(cert.bound, ref.bound, 1e-9 * std::max(1.0, ref.bound)) << s;
            ASSERT_EQ(to_string(cert.kind), ref.kind) << s;
            auto check = validate_certificate(cert, true);
            ASSERT_TRUE(check.ok) << s << ": " << check.reason;
        }
    }
}

TEST(Bound, HeavyPathsWithSmallRatio)
{
    // ratios just above 1/2 put heavy edges on small trees
    int heavy_a = 0, heavy_b = 0;
    for (double eps : {0.5, 1.0, 2.0})
        for (double r : {0.55, 0.7, 0.85}) {
            auto p = BoundParams::with_ratio(eps, r);
            for (const auto & s : all_balanced(14)) {
                auto cert = bound_pmatching(parse_paren(s), p);
                auto ref = ref_bound(ref_tree(s), r, eps);
                ASSERT_NEAR(cert.bound, ref.bound, 1e-9 * std::max(1.0, ref.bound)) << s;
                ASSERT_EQ(to_string(cert.kind), ref.kind) << s;
                ASSERT_TRUE(validate_certificate(cert, false).ok) << s;
                heavy_a += cert.kind == BoundCase::heavy_path_a;
                heavy_b += cert.kind == BoundCase::heavy_path_b;
            }
        }
    EXPECT_GT(heavy_a, 0);
    EXPECT_EQ(heavy_b, 0); // case B needs path and side mass below 23^(-1/eps) s: larger trees
}

TEST(Bound, CaseBNeedsDeepMass)
{
    // root -> one heavy child carrying 13 leaves: path 2, no side branches, s = 15
    std::string s = "(";
    for (int i = 0; i < 13; ++i)
        s += "()";
    s += ")";
    auto p = BoundParams::with_ratio(2.0, 0.55);
    auto cert = bound_pmatching(parse_paren(s), p);
    EXPECT_EQ(cert.kind, BoundCase::heavy_path_b);
    EXPECT_EQ(cert.path_size, 2);
    EXPECT_EQ(cert.deep_count, 13);
    // 13 leaves at (0 + 3) each, plus 20 (2 + 13)
    EXPECT_EQ(cert.bound, 39.0 + 300.0);
    auto ref = ref_bound(ref_tree(s), 0.55, 2.0);
    EXPECT_EQ(ref.kind, "heavy-path-B");
    EXPECT_TRUE(validate_certificate(cert, false).ok);
}

TEST(Bound, ValidationCatchesTampering)
{
    auto p = BoundParams::with_ratio(1.0, 0.6);
    auto cert = bound_pmatching(parse_paren("((()()))()"), p);
    ASSERT_TRUE(validate_certificate(cert, false).ok);
    auto bad = cert;
    bad.bound += 1;
    EXPECT_FALSE(validate_certificate(bad, false).ok);
    bad = cert;
    ASSERT_FALSE(bad.children.empty());
    bad.children[0].bound += 1;
    EXPECT_FALSE(validate_certificate(bad, false).ok);
    bad = cert;
    bad.kind = bad.kind == BoundCase::light_root ? BoundCase::heavy_path_a : BoundCase::light_root;
    EXPECT_FALSE(validate_certificate(bad, false).ok);
}

TEST(Convex, Examples)
{
    // r s repeated, summing to s: equality
    EXPECT_EQ(convex2_holds({1, 1, 1, 1}, 2.0, 0.25), Verdict::holds);
    EXPECT_EQ(convex2_holds({1, 1}, 1.0, 0.5), Verdict::holds);
    EXPECT_EQ(convex1_holds({5, 0, 0}, 2.0, 1.0, 1.0), Verdict::holds);
    EXPECT_EQ(convex2_holds({3, 1}, 2.0, 0.5), Verdict::hypothesis_unmet);
    EXPECT_EQ(convex1_holds({0.5}, 2.0, 1.0, 1.0), Verdict::hypothesis_unmet); // s < 1
    EXPECT_EQ(convex1_holds({5, 0}, 2.0, 2.0, 1.0), Verdict::hypothesis_unmet); // c < m
}

TEST(Convex, ParameterErrors)
{
    EXPECT_THROW(convex1_holds({}, 2.0, 1.0, 1.0), ParameterError);
    EXPECT_THROW(convex2_holds({}, 2.0, 0.5), ParameterError);
    EXPECT_THROW(convex2_holds({NAN}, 2.0, 0.5), ParameterError);
    EXPECT_THROW(convex2_holds({INFINITY}, 2.0, 0.5), ParameterError);
    EXPECT_THROW(convex1_holds({1}, 1.0, 1.0, 1.0), ParameterError);
    EXPECT_THROW(convex2_holds({1}, 0.5, 0.5), ParameterError);
    EXPECT_THROW(convex2_holds({1}, 2.0, 1.0), ParameterError);
}

TEST(Convex, ViolatingInstancesAreCaught)
{
    // drop a hypothesis and the inequality really can fail: δ=2, r=0.5, a=(1)
    // is unmet (1 > 0.5), and the raw comparison 1 <= 0.5 fails
    EXPECT_EQ(convex2_holds({1}, 2.0, 0.5), Verdict::hypothesis_unmet);
}

TEST(Convex, RandomInstancesHold)
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20000; ++trial) {
        int k = 2 + trial % 12;
        double delta = 1.0 + 3.0 * u(rng);
        std::vector<double> a(k);
        double s = 0, mx = 0;
        for (auto & x : a) {
            x = 10 * u(rng);
            s += x;
            mx = std::max(mx, x);
        }
        if (s == 0)
            continue;
        double r = mx / s + (1 - mx / s) * u(rng);
        if (r <= 0 || r >= 1)
            continue;
        ASSERT_EQ(convex2_holds(a, delta, r), Verdict::holds);
    }
    for (int trial = 0; trial < 20000; ++trial) {
        double delta = 1.05 + 3.0 * u(rng);
        double m = 0.1 + 20 * u(rng);
        double c = m * (1 + 5 * u(rng));
        double r = std::pow(m, -1.0 / (delta - 1.0));
        double s = 1 + 100 * u(rng);
        std::vector<double> a{0};
        double left = s;
        for (int i = 0; i < 1 + trial % 10 && left > 0; ++i) {
            double x = std::min(left, r * s * u(rng));
            a.push_back(x);
            left -= x;
        }
        a[0] = left;
        ASSERT_EQ(convex1_holds(a, delta, m, c), Verdict::holds);
    }
}
