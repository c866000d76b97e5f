#pragma once

// JSON forms of certificates, outcomes, reports and search records.

#include <ordramsey/core.hpp>
#include <ordramsey/embed.hpp>
#include <ordramsey/paren.hpp>
#include <ordramsey/perm.hpp>
#include <ordramsey/search.hpp>
#include <ordramsey/text_io.hpp>

#include <json.hpp>

#include <cmath>
#include <string>

namespace ordramsey {

using Json = nlohmann::ordered_json;

inline auto edges_json(const OrderedGraph & g) -> Json
{
    Json out = Json::array();
    for (const auto & e : g.edges())
        out.push_back({e.first, e.second});
    return out;
}

inline auto graph_json(const OrderedGraph & g) -> Json { return {{"n", g.n()}, {"edges", edges_json(g)}}; }

inline auto graph_from_json(const Json & j) -> OrderedGraph
{
    std::vector<Edge> edges;
    for (const auto & e : j.at("edges"))
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return OrderedGraph(j.at("n").get<int>(), edges);
}

inline auto witness_json(const EmbeddingWitness & w) -> Json { return {{"color", to_string(w.color)}, {"map", w.map}}; }

inline auto certificate_json(const BoundCertificate & c) -> Json
{
    Json j;
    j["case"] = to_string(c.kind);
    j["s"] = c.s;
    j["bound"] = c.bound;
    j["constants"] = {{"eps", c.params.eps}, {"r", c.params.ratio}, {"c", c.params.constant}};
    if (c.kind == BoundCase::heavy_path_a || c.kind == BoundCase::heavy_path_b) {
        j["path_size"] = c.path_size;
        j["deep_children"] = c.deep_count;
    }
    j["children"] = Json::array();
    for (const auto & ch : c.children)
        j["children"].push_back(certificate_json(ch));
    return j;
}

inline auto outcome_json(const EmbedOutcome & out) -> Json
{
    Json j{{"kind", outcome_kind(out)}};
    if (auto * t = std::get_if<BlueTriangle>(&out))
        j["vertices"] = t->vertices;
    else if (auto * r = std::get_if<RedCopy>(&out))
        j["witness"] = witness_json(r->witness);
    else
        j["vertices"] = std::get<RedClique>(out).vertices;
    return j;
}

/// Finite doubles as numbers; infinities and NaN have no JSON spelling.
inline auto real_json(double x) -> Json
{
    if (std::isfinite(x))
        return x;
    return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

inline auto shift_report_json(const ShiftIntersectionReport & r) -> Json
{
    Json j{{"n", r.n}, {"h", r.h}, {"seed", r.seed}, {"trials", r.samples.size()}};
    Json cdf = Json::array();
    for (const auto & [v, f] : r.cdf)
        cdf.push_back({{"int", v}, {"fraction", f}});
    j["cdf"] = cdf;
    Json tails = Json::array();
    for (const auto & t : r.tails)
        tails.push_back({{"alpha", t.alpha},
            {"threshold", t.threshold},
            {"exceedances", t.exceedances},
            {"base", t.base},
            {"log_bound", real_json(t.log_bound)},
            {"bound", real_json(t.bound)}});
    j["tail_bounds"] = tails;
    return j;
}

inline auto search_record_json(const OrderedGraph & red, const OrderedGraph & blue, const SearchRecord & rec,
    std::uint64_t seed = 0) -> Json
{
    std::string outcome = rec.status == SearchStatus::found ? "avoiding" : rec.status == SearchStatus::absent ? "none" : "budget-exhausted";
    Json j{{"red_target", graph_json(red)}, {"blue_target", graph_json(blue)}, {"n", rec.n}, {"outcome", outcome}};
    j["witness_hex"] = rec.witness ? Json(coloring_to_hex(*rec.witness)) : Json(nullptr);
    j["nodes"] = rec.nodes;
    j["seed"] = seed;
    return j;
}

inline auto search_record_from_json(const Json & j) -> SearchRecord
{
    SearchRecord rec;
    rec.n = j.at("n").get<int>();
    rec.nodes = j.value("nodes", std::uint64_t{0});
    const auto outcome = j.at("outcome").get<std::string>();
    if (outcome == "avoiding") {
        rec.status = SearchStatus::found;
        rec.witness = coloring_from_hex(rec.n, j.at("witness_hex").get<std::string>());
    }
    else if (outcome == "none")
        rec.status = SearchStatus::absent;
    else
        rec.status = SearchStatus::budget_exhausted;
    return rec;
}

inline auto ramsey_json(const RamseyResult & r) -> Json
{
    Json j{{"red_target", graph_json(r.red_target)}, {"blue_target", graph_json(r.blue_target)}};
    j["exact"] = r.exact;
    if (r.exact)
        j["value"] = r.value;
    j["lower_exclusive"] = r.lower_exclusive;
    j["upper"] = r.upper ? Json(*r.upper) : Json(nullptr);
    if (r.witness_below) {
        j["witness_below"] = {{"n", r.witness_below->n()}, {"hex", coloring_to_hex(*r.witness_below)}};
    }
    else
        j["witness_below"] = nullptr;
    Json recs = Json::array();
    for (const auto & rec : r.records)
        recs.push_back({{"n", rec.n}, {"status", to_string(rec.status)}, {"nodes", rec.nodes}});
    j["searches"] = recs;
    j["nodes"] = r.nodes;
    return j;
}

} // namespace ordramsey
