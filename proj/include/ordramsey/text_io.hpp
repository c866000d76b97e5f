#pragma once

// Plain-text formats.
//
// Coloring:  line 1 `n`; line 2 hex digits holding the blue bit of every pair in
//            row-major order (1,2),(1,3),...,(1,n),(2,3),...  The first pair is the
//            most significant bit of the first digit; trailing pad bits are zero.
// Graph:     line 1 `n`; then one `i j` pair per line.

#include <ordramsey/core.hpp>

#include <cctype>
#include <sstream>
#include <string>

namespace ordramsey {

inline auto hex_digit_count(int n) -> std::size_t
{
    std::size_t pairs = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    return (pairs + 3) / 4;
}

inline auto coloring_to_hex(const OrderedColoring & c) -> std::string
{
    std::vector<int> digits(hex_digit_count(c.n()), 0);
    std::size_t p = 0;
    for (Vertex i = 1; i <= c.n(); ++i)
        for (Vertex j = i + 1; j <= c.n(); ++j, ++p)
            if (c.blue(i, j))
                digits[p / 4] |= 8 >> (p % 4);
    std::string out;
    for (int d : digits)
        out += "0123456789abcdef"[d];
    return out;
}

inline auto coloring_from_hex(int n, std::string_view hex) -> OrderedColoring
{
    if (n < 0)
        throw ParseError("negative vertex count", 0);
    if (hex.size() != hex_digit_count(n))
        throw ParseError("expected " + std::to_string(hex_digit_count(n)) + " hex digits for n=" + std::to_string(n)
                + ", got " + std::to_string(hex.size()),
            hex.size());
    OrderedColoring c(n);
    std::size_t p = 0;
    std::vector<int> digits(hex.size());
    for (std::size_t i = 0; i < hex.size(); ++i) {
        char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[i])));
        if (ch >= '0' && ch <= '9')
            digits[i] = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            digits[i] = ch - 'a' + 10;
        else
            throw ParseError(std::string("invalid hex digit '") + hex[i] + "' at index " + std::to_string(i), i);
    }
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j, ++p)
            if (digits[p / 4] & (8 >> (p % 4)))
                c.set_blue(i, j, true);
    for (; p < hex.size() * 4; ++p)
        if (digits[p / 4] & (8 >> (p % 4)))
            throw ParseError("nonzero padding bit in final hex digit", p / 4);
    return c;
}

namespace detail {
    inline auto parse_int_token(const std::string & tok, std::size_t index) -> int
    {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        }
        catch (const std::exception &) {
            throw ParseError("malformed integer '" + tok + "'", index);
        }
        if (used != tok.size())
            throw ParseError("malformed integer '" + tok + "'", index);
        return v;
    }
}

inline auto format_coloring(const OrderedColoring & c) -> std::string
{
    return std::to_string(c.n()) + "\n" + coloring_to_hex(c) + "\n";
}

inline auto parse_coloring(const std::string & text) -> OrderedColoring
{
    std::istringstream in(text);
    std::string n_tok, hex;
    if (! (in >> n_tok))
        throw ParseError("missing vertex count", 0);
    int n = detail::parse_int_token(n_tok, 0);
    in >> hex;
    std::string extra;
    if (in >> extra)
        throw ParseError("unexpected trailing token '" + extra + "'", 2);
    return coloring_from_hex(n, hex);
}

inline auto format_graph(const OrderedGraph & g) -> std::string
{
    std::string out = std::to_string(g.n()) + "\n";
    for (const auto & e : g.edges())
        out += std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
    return out;
}

inline auto parse_graph(const std::string & text) -> OrderedGraph
{
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;)
        tokens.push_back(t);
    if (tokens.empty())
        throw ParseError("missing vertex count", 0);
    int n = detail::parse_int_token(tokens[0], 0);
    if ((tokens.size() - 1) % 2 != 0)
        throw ParseError("dangling endpoint '" + tokens.back() + "'", tokens.size() - 1);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < tokens.size(); i += 2) {
        int a = detail::parse_int_token(tokens[i], i);
        int b = detail::parse_int_token(tokens[i + 1], i + 1);
        if (a > b)
            std::swap(a, b);
        edges.push_back({a, b});
    }
    try {
        return OrderedGraph(n, std::move(edges));
    }
    catch (const ParameterError & e) {
        throw ParseError(e.what(), 0);
    }
}

} // namespace ordramsey
