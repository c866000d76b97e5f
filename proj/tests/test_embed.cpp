#include "oracles.hpp"

#include <ordramsey/embed.hpp>
#include <ordramsey/search.hpp>

#include <gtest/gtest.h>

using namespace ordramsey;

namespace {

auto empty_part() -> Part
{
    return {OrderedMatching(), 0, [](const OrderedColoring &, HostView) -> EmbedOutcome {
                return RedCopy{EmbeddingWitness{{}, Color::red}};
            }};
}

// "()" on 3 vertices: the first red pair, else the three vertices form a blue triangle.
auto edge_part() -> Part
{
    return {parse_paren("()"), 3, [](const OrderedColoring & c, HostView view) -> EmbedOutcome {
                for (std::size_t a = 0; a < view.size(); ++a)
                    for (std::size_t b = a + 1; b < view.size(); ++b)
                        if (c.red(view[a], view[b]))
                            return RedCopy{EmbeddingWitness{{view[a], view[b]}, Color::red}};
                if (auto t = find_blue_triangle(c, view))
                    return BlueTriangle{*t};
                throw ContractViolation("edge part on fewer than 3 vertices");
            }};
}

void expect_valid(const OrderedColoring & c, const EmbedOutcome & out, const OrderedGraph & pattern)
{
    ASSERT_TRUE(validate_outcome(c, out, pattern)) << outcome_kind(out);
}

} // namespace

TEST(Outcome, ValidationRejectsForgeries)
{
    auto c = OrderedColoring::all_red(4);
    EXPECT_FALSE(validate_outcome(c, BlueTriangle{{1, 2, 3}}, nested_matching(1)));
    EXPECT_FALSE(validate_outcome(c, RedCopy{{{2, 1}, Color::red}}, nested_matching(1)));
    EXPECT_FALSE(validate_outcome(c, RedClique{{1}}, nested_matching(1)));
    EXPECT_TRUE(validate_outcome(c, RedClique{{1, 4}}, nested_matching(1)));
    auto b = OrderedColoring::all_blue(4);
    EXPECT_TRUE(validate_outcome(b, BlueTriangle{{1, 2, 4}}, nested_matching(1)));
    EXPECT_FALSE(validate_outcome(b, RedClique{{1, 4}}, nested_matching(1)));
}

TEST(Nested, AllRedAndAllBlue)
{
    auto red = OrderedColoring::all_red(12);
    auto out = embed_nested(red, 2);
    EXPECT_TRUE(std::holds_alternative<RedCopy>(out) || std::holds_alternative<RedClique>(out));
    expect_valid(red, out, nested_matching(2));
    auto blue = OrderedColoring::all_blue(6);
    EXPECT_TRUE(std::holds_alternative<BlueTriangle>(embed_nested(blue, 1)));
    EXPECT_THROW(embed_nested(OrderedColoring(11), 2), SizeError);
}

TEST(Nested, ExhaustiveK6)
{
    for (std::uint64_t mask = 0; mask < (1U << 15); ++mask) {
        auto c = oracle::coloring_from_mask(6, mask);
        expect_valid(c, embed_nested(c, 1), nested_matching(1));
    }
}

TEST(Nested, RandomLargerK)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 600; ++trial) {
        int k = 2 + trial % 3;
        auto c = trial % 2 ? oracle::random_triangle_free(6 * k + trial % 4, rng) : oracle::random_coloring(6 * k, rng, 0.15);
        expect_valid(c, embed_nested(c, k), nested_matching(k));
    }
}

TEST(Nested, TwoCliquesForceNothingBelowBudget)
{
    // the construction has 4k-2 vertices; nothing can be found there
    for (int k = 1; k <= 6; ++k) {
        auto c = two_clique_coloring(k);
        EXPECT_FALSE(find_blue_triangle(c));
        EXPECT_FALSE(contains_ordered(c, Color::red, nested_matching(k)));
    }
}

TEST(Surround, EmptyInner)
{
    OrderedColoring c(2);
    auto out = embed_surround(c, all_vertices(c), empty_part());
    ASSERT_TRUE(std::holds_alternative<RedCopy>(out));
    EXPECT_EQ(std::get<RedCopy>(out).witness.map, (std::vector<Vertex>{1, 2}));
}

TEST(Surround, AllRedWrapsEdge)
{
    auto c = OrderedColoring::all_red(8);
    auto v = all_vertices(c);
    auto out = embed_surround(c, v, edge_part());
    ASSERT_TRUE(std::holds_alternative<RedCopy>(out));
    expect_valid(c, out, parse_paren("(())"));
}

TEST(Surround, ExhaustiveK5EmptyInner)
{
    for (std::uint64_t mask = 0; mask < (1U << 10); ++mask) {
        auto c = oracle::coloring_from_mask(5, mask);
        auto v = all_vertices(c);
        for (std::size_t from = 0; from + 3 <= v.size(); ++from)
            expect_valid(c, embed_surround(c, HostView(v).subspan(from), empty_part()), parse_paren("()"));
    }
}

TEST(Surround, ExhaustiveTriangleFreeK7AtBudget)
{
    // inner "()" has budget 3, so (()) needs 3 + 4 + 1 = 8; K7 shows the tail running short
    // only when the first vertex is blue to it
    int size_errors = 0, total = 0;
    oracle::for_each_triangle_free(7, [&](const OrderedColoring & c) {
        ++total;
        auto v = all_vertices(c);
        try {
            expect_valid(c, embed_surround(c, v, edge_part()), parse_paren("(())"));
        }
        catch (const SizeError &) {
            ++size_errors;
        }
    });
    EXPECT_GT(size_errors, 0);
}

TEST(Surround, RandomTriangleFreeAtBudget)
{
    std::mt19937_64 rng(17);
    auto inner = pmatching_part(parse_paren("()()"), BoundParams::standard(1.0));
    const std::size_t need = inner.budget + 6 + 1;
    for (int trial = 0; trial < 2000; ++trial) {
        auto c = oracle::random_triangle_free(static_cast<int>(need), rng, 0.3 + 0.1 * (trial % 6));
        auto out = embed_surround(c, all_vertices(c), inner);
        ASSERT_FALSE(std::holds_alternative<BlueTriangle>(out));
        expect_valid(c, out, parse_paren("(()())"));
    }
}

TEST(Concat, TwoEdges)
{
    auto c = OrderedColoring::all_red(6);
    auto out = embed_concat(c, all_vertices(c), {edge_part(), edge_part()});
    expect_valid(c, out, parse_paren("()()"));
    EXPECT_EQ(std::get<RedCopy>(out).witness.map, (std::vector<Vertex>{1, 2, 4, 5}));
}

TEST(NestMatchings, Shape)
{
    auto m = nest_matchings({parse_paren("()"), parse_paren(""), parse_paren("()()")});
    EXPECT_EQ(render_paren(m), "(()()()())");
    EXPECT_EQ(render_paren(nest_matchings({parse_paren("")})), "()");
}

TEST(NestSimple, RandomTriangleFree)
{
    std::mt19937_64 rng(23);
    std::vector<Part> parts{edge_part(), empty_part(), edge_part()};
    auto pattern = nest_matchings({parse_paren("()"), parse_paren(""), parse_paren("()")});
    const auto need = nest_simple_budget(parts);
    EXPECT_EQ(need, 6U * (2 + 3));
    for (int trial = 0; trial < 300; ++trial) {
        auto c = oracle::random_triangle_free(static_cast<int>(need), rng, 0.2 + 0.1 * (trial % 5));
        auto out = embed_nest_simple(c, all_vertices(c), parts);
        ASSERT_FALSE(std::holds_alternative<BlueTriangle>(out));
        expect_valid(c, out, pattern);
    }
    auto red = OrderedColoring::all_red(static_cast<int>(need));
    expect_valid(red, embed_nest_simple(red, all_vertices(red), parts), pattern);
}

TEST(NestComplex, Sizes)
{
    auto s = nest_complex_sizes({edge_part()});
    EXPECT_EQ(s.k, 1U);
    EXPECT_EQ(s.l, 0U);
    EXPECT_EQ(s.t, 3U);
    EXPECT_EQ(s.centre, 1U);
    EXPECT_EQ(s.total(), 3U + 40U);
    EXPECT_THROW(nest_complex_sizes({}), ParameterError);
    EXPECT_THROW(nest_complex_sizes({edge_part(), edge_part()}), ParameterError);
}

TEST(NestComplex, DegenerateSingleEdge)
{
    // parts = {empty}: the pattern is one red edge on >= 20 vertices
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 500; ++trial) {
        auto c = oracle::random_triangle_free(20, rng, 0.2 * (trial % 6));
        auto out = embed_nest_complex(c, all_vertices(c), {empty_part()});
        ASSERT_FALSE(std::holds_alternative<BlueTriangle>(out));
        expect_valid(c, out, parse_paren("()"));
    }
}

TEST(NestComplex, AllRedUsesChain)
{
    auto c = OrderedColoring::all_red(43);
    auto out = embed_nest_complex(c, all_vertices(c), {edge_part()});
    ASSERT_TRUE(std::holds_alternative<RedCopy>(out));
    expect_valid(c, out, parse_paren("(())"));
}

TEST(NestComplex, BlueBipartiteUsesClique)
{
    // X = first 20, Z = last 20: all X-Z pairs blue, everything else red
    auto c = OrderedColoring::all_red(43);
    for (int x = 1; x <= 20; ++x)
        for (int z = 24; z <= 43; ++z)
            c.set_blue(x, z, true);
    auto out = embed_nest_complex(c, all_vertices(c), {edge_part()});
    ASSERT_TRUE(std::holds_alternative<RedCopy>(out));
    auto map = std::get<RedCopy>(out).witness.map;
    EXPECT_GE(map.front(), 24);
    expect_valid(c, out, parse_paren("(())"));
}

TEST(NestComplex, RandomTriangleFreeAtBudget)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        auto c = oracle::random_triangle_free(43, rng, 0.1 * (trial % 10));
        auto out = embed_nest_complex(c, all_vertices(c), {edge_part()});
        ASSERT_FALSE(std::holds_alternative<BlueTriangle>(out));
        expect_valid(c, out, parse_paren("(())"));
    }
}

TEST(NestComplex, ThreeLevels)
{
    std::mt19937_64 rng(37);
    std::vector<Part> parts{edge_part(), empty_part(), edge_part(), empty_part(), edge_part()};
    auto pattern = nest_matchings({parse_paren("()"), parse_paren(""), parse_paren("()"), parse_paren(""), parse_paren("()")});
    const auto need = nest_complex_sizes(parts).total();
    for (int trial = 0; trial < 200; ++trial) {
        auto c = oracle::random_triangle_free(static_cast<int>(need), rng, 0.1 * (trial % 10));
        auto out = embed_nest_complex(c, all_vertices(c), parts);
        ASSERT_FALSE(std::holds_alternative<BlueTriangle>(out));
        expect_valid(c, out, pattern);
    }
}

TEST(NestComplex, AntichainWidth)
{
    // levels of the nesting order on X-Z red edges are antichains of size <= |X| + |Z|
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        auto c = oracle::random_coloring(40, rng, 0.3);
        const int x_end = 10 + trial % 10, z_begin = x_end + 5;
        std::vector<Edge> red;
        for (int x = 1; x <= x_end; ++x)
            for (int z = z_begin; z <= 40; ++z)
                if (c.red(x, z))
                    red.push_back({x, z});
        for (const auto & lv : chain_levels(red)) {
            ASSERT_TRUE(is_antichain(lv));
            ASSERT_LE(lv.size(), static_cast<std::size_t>(x_end + (40 - z_begin + 1)));
        }
    }
}

TEST(Pmatching, EmptyAndSingleEdge)
{
    auto c = OrderedColoring(0);
    auto out = embed_pmatching(c, parse_paren(""), 1.0);
    ASSERT_TRUE(std::holds_alternative<RedCopy>(out));
    EXPECT_TRUE(std::get<RedCopy>(out).witness.map.empty());

    oracle::for_each_triangle_free(3, [](const OrderedColoring & h) {
        auto res = embed_pmatching(h, parse_paren("()"), 1.0);
        ASSERT_TRUE(std::holds_alternative<RedCopy>(res));
        ASSERT_TRUE(validate_outcome(h, res, parse_paren("()")));
    });
    EXPECT_THROW(embed_pmatching(OrderedColoring(2), parse_paren("()"), 1.0), SizeError);
}

TEST(Pmatching, ExhaustiveTriangleFreeSmallPatterns)
{
    // budgets: "()" 3, "()()" 6, "(())" 8
    for (const std::string s : {"()", "()()"})
        oracle::for_each_triangle_free(6, [&](const OrderedColoring & h) {
            auto m = parse_paren(s);
            auto res = embed_pmatching(h, m, 1.0);
            ASSERT_TRUE(std::holds_alternative<RedCopy>(res));
            ASSERT_TRUE(validate_outcome(h, res, m));
        });
}

TEST(Pmatching, RandomAtCertificateBound)
{
    std::mt19937_64 rng(43);
    for (const std::string s : {"(())()", "(()())()", "((()))", "()(())()"}) {
        auto m = parse_paren(s);
        auto n = static_cast<int>(bound_pmatching(m, 1.0).budget());
        for (int trial = 0; trial < 300; ++trial) {
            auto c = oracle::random_triangle_free(n, rng, 0.1 * (trial % 10));
            auto out = embed_pmatching(c, m, 1.0);
            ASSERT_TRUE(std::holds_alternative<RedCopy>(out)) << s;
            expect_valid(c, out, m);
        }
    }
}

TEST(Pmatching, HeavyPathsWithSmallRatio)
{
    // ratio 0.55 puts heavy edges on these trees, so the nesting embedder runs
    std::mt19937_64 rng(47);
    auto p = BoundParams::with_ratio(1.0, 0.55);
    for (const std::string s : {"(())", "((()))", "(()())", "((())())"}) {
        auto m = parse_paren(s);
        auto cert = bound_pmatching(m, p);
        ASSERT_NE(cert.kind, BoundCase::light_root) << s;
        auto n = static_cast<int>(cert.budget());
        for (int trial = 0; trial < 100; ++trial) {
            auto c = oracle::random_triangle_free(n, rng, 0.1 * (trial % 10));
            auto out = embed_pmatching(c, m, p);
            ASSERT_TRUE(std::holds_alternative<RedCopy>(out)) << s;
            expect_valid(c, out, m);
        }
        auto red = OrderedColoring::all_red(n);
        expect_valid(red, embed_pmatching(red, m, p), m);
    }
}

TEST(Pmatching, ColoringsWithTrianglesStillValidate)
{
    std::mt19937_64 rng(53);
    auto m = parse_paren("(()())");
    auto n = static_cast<int>(bound_pmatching(m, 1.0).budget());
    for (int trial = 0; trial < 300; ++trial) {
        auto c = oracle::random_coloring(n, rng, 0.5 + 0.05 * (trial % 10));
        expect_valid(c, embed_pmatching(c, m, 1.0), m);
    }
}
