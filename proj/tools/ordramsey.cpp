// ordramsey: command line front end.
//
// stdout carries JSON (or CSV for `perm mc --format csv`); progress goes to stderr.
// Exit codes: 0 ok, 1 verification failed, 2 bad parameters or input, 3 budget
// exhausted, 4 internal error.

#include <ordramsey/containment.hpp>
#include <ordramsey/embed.hpp>
#include <ordramsey/json_io.hpp>
#include <ordramsey/paren.hpp>
#include <ordramsey/perm.hpp>
#include <ordramsey/search.hpp>
#include <ordramsey/text_io.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ordramsey;

namespace {

constexpr const char * tool_version = "0.1.0";

enum Exit
{
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_parameter = 2,
    exit_budget = 3,
    exit_internal = 4
};

/// 10M, 250k, 1G, or a plain integer.
auto parse_count(const std::string & text) -> std::uint64_t
{
    if (text.empty())
        throw ParseError("empty count", 0);
    std::uint64_t scale = 1;
    std::string digits = text;
    switch (std::toupper(static_cast<unsigned char>(text.back()))) {
    case 'K': scale = 1'000; break;
    case 'M': scale = 1'000'000; break;
    case 'G': scale = 1'000'000'000; break;
    default: break;
    }
    if (scale != 1)
        digits.pop_back();
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed count '" + text + "'", 0);
    return std::stoull(digits) * scale;
}

auto parse_int_list(const std::string & text) -> std::vector<int>
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    std::size_t index = 0;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            out.push_back(v);
        }
        catch (const std::logic_error &) {
            throw ParseError("malformed integer '" + tok + "'", index);
        }
        ++index;
    }
    return out;
}

auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path);
    if (! in)
        throw ParameterError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Target graph: "K<m>" for a complete graph, "NM<k>" for a nested matching,
/// a parenthesis string, or a path to a graph file.
auto parse_target(const std::string & spec) -> OrderedGraph
{
    auto number_after = [&](std::size_t skip) {
        auto rest = spec.substr(skip);
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("malformed target '" + spec + "'", 0);
        return std::stoi(rest);
    };
    if (spec.size() > 1 && spec[0] == 'K') {
        int m = number_after(1);
        std::vector<Edge> edges;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                edges.push_back({i, j});
        return OrderedGraph(m, edges);
    }
    if (spec.rfind("NM", 0) == 0)
        return nested_matching(number_after(2));
    if (spec.empty() || spec.find_first_not_of("()") == std::string::npos)
        return parse_paren(spec);
    return parse_graph(read_file(spec));
}

/// Core text format, or any JSON object carrying a coloring as {n, hex},
/// {n, witness_hex}, or {witness_below: {n, hex}}.
auto load_coloring(const std::string & path) -> OrderedColoring
{
    auto text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{')
        return parse_coloring(text);
    auto j = Json::parse(text);
    if (j.contains("witness_below") && j["witness_below"].is_object())
        j = j["witness_below"];
    if (j.contains("hex"))
        return coloring_from_hex(j.at("n").get<int>(), j.at("hex").get<std::string>());
    if (j.contains("witness_hex") && j["witness_hex"].is_string())
        return coloring_from_hex(j.at("n").get<int>(), j.at("witness_hex").get<std::string>());
    throw ParseError("JSON input carries no coloring", 0);
}

auto default_threads() -> int
{
    if (const char * env = std::getenv("ORDRAMSEY_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t >= 1)
                return t;
        }
        catch (const std::logic_error &) {
        }
        std::cerr << "warning: ignoring ORDRAMSEY_THREADS='" << env << "'\n";
    }
    return 1;
}

void emit(const Json & j) { std::cout << j.dump() << '\n'; }

/// Appends a run record (with timestamp) to `path`; stdout stays reproducible.
void write_record(const std::string & path, const std::string & command, const Json & params, std::uint64_t seed,
    const Json & outputs)
{
    if (path.empty())
        return;
    std::ofstream out(path, std::ios::app);
    if (! out)
        throw ParameterError("cannot open '" + path + "'");
    Json rec{{"command", command}, {"params", params}, {"seed", seed}, {"outputs", outputs},
        {"timestamp", static_cast<std::int64_t>(std::time(nullptr))}, {"version", tool_version}};
    out << rec.dump() << '\n';
}

struct Heartbeat
{
    std::string label;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void operator()(std::uint64_t nodes) const
    {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "[" << label << "] nodes=" << nodes << " elapsed=" << secs << "s\n";
    }
};

auto load_prior(const std::string & path, const OrderedGraph & red, const OrderedGraph & blue) -> std::vector<SearchRecord>
{
    std::vector<SearchRecord> out;
    std::ifstream in(path);
    if (! in)
        return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        auto j = Json::parse(line);
        if (graph_from_json(j.at("red_target")) == red && graph_from_json(j.at("blue_target")) == blue)
            out.push_back(search_record_from_json(j));
    }
    return out;
}

struct RamseyFlags
{
    std::string budget = "100M";
    int threads = 1;
    int split = -1;
    std::string out;
    std::string resume;
    bool quiet = false;
};

void add_ramsey_flags(CLI::App * cmd, RamseyFlags & f)
{
    cmd->add_option("--budget", f.budget, "search node budget (suffixes K, M, G)")->capture_default_str();
    cmd->add_option("--threads", f.threads, "worker threads (default from ORDRAMSEY_THREADS, else 1)")->check(CLI::PositiveNumber);
    cmd->add_option("--split-depth", f.split, "edges fixed per parallel subproblem");
    cmd->add_option("--out", f.out, "append one JSON line per completed search to this file");
    cmd->add_option("--resume", f.resume, "reuse completed searches recorded in this file");
    cmd->add_flag("--quiet", f.quiet, "no heartbeat lines");
}

auto ramsey_options(const RamseyFlags & f, const OrderedGraph & red, const OrderedGraph & blue, const std::string & label)
    -> RamseyOptions
{
    RamseyOptions opt;
    opt.search.budget = parse_count(f.budget);
    opt.search.threads = f.threads;
    opt.search.split_depth = f.split;
    if (! f.quiet)
        opt.search.progress = Heartbeat{label};
    if (! f.resume.empty())
        opt.prior = load_prior(f.resume, red, blue);
    std::string out = f.out;
    bool quiet = f.quiet;
    opt.on_record = [out, red, blue, quiet, label](const SearchRecord & rec) {
        if (! quiet)
            std::cerr << "[" << label << "] n=" << rec.n << " " << to_string(rec.status) << " nodes=" << rec.nodes << "\n";
        if (out.empty() || rec.status == SearchStatus::budget_exhausted)
            return;
        std::ofstream o(out, std::ios::app);
        o << search_record_json(red, blue, rec).dump() << '\n';
    };
    return opt;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Ordered Ramsey numbers of matchings versus triangles"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);
    std::string record_path;
    app.add_option("--record", record_path, "append a timestamped run record to this file");

    std::function<int()> action;

    // ramsey
    auto * ramsey = app.add_subcommand("ramsey", "exact ordered Ramsey numbers");
    ramsey->require_subcommand(1);

    RamseyFlags exact_flags;
    exact_flags.threads = default_threads();
    std::string red_spec, blue_spec = "K3";
    int n_start = 1, n_max = 0;
    auto * exact = ramsey->add_subcommand("exact", "least n forcing a red copy of --red or a blue copy of --blue");
    exact->add_option("--red", red_spec, "red target: K<m>, NM<k>, parenthesis string, or graph file")->required();
    exact->add_option("--blue", blue_spec, "blue target, same forms")->capture_default_str();
    exact->add_option("--nstart", n_start, "first n searched")->capture_default_str()->check(CLI::PositiveNumber);
    exact->add_option("--nmax", n_max, "last n searched")->required()->check(CLI::PositiveNumber);
    add_ramsey_flags(exact, exact_flags);
    exact->callback([&] {
        action = [&] {
            auto red = parse_target(red_spec);
            auto blue = parse_target(blue_spec);
            auto opt = ramsey_options(exact_flags, red, blue, "ramsey");
            auto res = exact_ramsey(red, blue, n_start, n_max, opt);
            auto j = ramsey_json(res);
            emit(j);
            write_record(record_path, "ramsey exact",
                {{"red", red_spec}, {"blue", blue_spec}, {"nstart", n_start}, {"nmax", n_max}, {"budget", exact_flags.budget}}, 0, j);
            bool exhausted = ! res.records.empty() && res.records.back().status == SearchStatus::budget_exhausted;
            return exhausted ? exit_budget : exit_ok;
        };
    });

    RamseyFlags sweep_flags;
    sweep_flags.threads = default_threads();
    int k_max = 2;
    auto * sweep = ramsey->add_subcommand("sweep", "r(NM_k, K3) for k = 1..kmax");
    sweep->add_option("--kmax", k_max, "largest k")->capture_default_str()->check(CLI::PositiveNumber);
    add_ramsey_flags(sweep, sweep_flags);
    sweep->callback([&] {
        action = [&] {
            const auto blue = triangle_graph();
            Json rows = Json::array();
            bool exhausted = false;
            for (int k = 1; k <= k_max; ++k) {
                auto label = "sweep k=" + std::to_string(k);
                auto opt = ramsey_options(sweep_flags, nested_matching(k), blue, label);
                opt.known_upper = 6 * k;
                opt.known_witness = two_clique_coloring(k);
                auto res = exact_ramsey(nested_matching(k), blue, 4 * k - 1, 6 * k, opt);
                Json row{{"k", k}, {"conjectured", 4 * k - 1}};
                if (res.exact)
                    row["value"] = res.value;
                else {
                    row["bracket"] = {res.lower_exclusive, res.upper ? *res.upper : 6 * k};
                    exhausted = true;
                }
                row["result"] = ramsey_json(res);
                rows.push_back(row);
            }
            emit(rows);
            write_record(record_path, "ramsey sweep", {{"kmax", k_max}, {"budget", sweep_flags.budget}}, 0, rows);
            return exhausted ? exit_budget : exit_ok;
        };
    });

    // paren
    auto * paren = app.add_subcommand("paren", "parenthesis matchings");
    paren->require_subcommand(1);
    std::string seq;
    auto * parse = paren->add_subcommand("parse", "parenthesis string to edge list");
    parse->add_option("seq", seq, "balanced parenthesis string")->required();
    parse->callback([&] {
        action = [&] {
            auto m = parse_paren(seq);
            emit(graph_json(m));
            return exit_ok;
        };
    });

    std::string render_path;
    auto * render = paren->add_subcommand("render", "matching (graph file) to parenthesis string");
    render->add_option("file", render_path, "graph file: n, then one 'i j' per line")->required();
    render->callback([&] {
        action = [&] {
            auto g = parse_graph(read_file(render_path));
            if (! g.is_matching())
                throw ParameterError("input is not a matching");
            emit(render_paren(OrderedMatching(g)));
            return exit_ok;
        };
    });

    double eps = 1.0;
    std::string bound_seq;
    auto * bound = paren->add_subcommand("bound", "certified upper bound on r(M, K3)");
    bound->add_option("seq", bound_seq, "balanced parenthesis string")->required();
    bound->add_option("--eps", eps, "epsilon")->capture_default_str();
    bound->callback([&] {
        action = [&] {
            auto cert = bound_pmatching(parse_paren(bound_seq), eps);
            auto check = validate_certificate(cert, true);
            Json j{{"matching", bound_seq}, {"bound", cert.budget()}, {"valid", check.ok}, {"certificate", certificate_json(cert)}};
            emit(j);
            return check.ok ? exit_ok : exit_internal;
        };
    });

    // embed
    std::string embed_coloring, embed_seq;
    int embed_k = 0;
    double embed_eps = 1.0;
    auto * embed = app.add_subcommand("embed", "constructive embedders");
    embed->require_subcommand(1);
    auto * embed_run = embed->add_subcommand("run", "find a blue triangle, a red copy, or a red clique");
    embed_run->add_option("--coloring", embed_coloring, "coloring file")->required();
    auto * opt_seq = embed_run->add_option("--paren", embed_seq, "target parenthesis matching (tree-decomposition embedder)");
    auto * opt_k = embed_run->add_option("--nested", embed_k, "target NM_k (6k embedder)")->check(CLI::PositiveNumber);
    opt_seq->excludes(opt_k);
    embed_run->add_option("--eps", embed_eps, "epsilon for --paren")->capture_default_str();
    embed_run->callback([&] {
        action = [&] {
            if ((opt_seq->count() > 0) == (embed_k > 0))
                throw ParameterError("give exactly one of --paren and --nested");
            auto c = load_coloring(embed_coloring);
            OrderedMatching target = embed_k > 0 ? nested_matching(embed_k) : parse_paren(embed_seq);
            auto out = embed_k > 0 ? embed_nested(c, embed_k) : embed_pmatching(c, target, embed_eps);
            bool ok = validate_outcome(c, out, target);
            Json j{{"outcome", outcome_json(out)}, {"validated", ok}};
            emit(j);
            return ok ? exit_ok : exit_internal;
        };
    });

    // perm
    auto * perm = app.add_subcommand("perm", "permutation statistics");
    perm->require_subcommand(1);
    std::string seq_a, seq_b;
    auto * pint = perm->add_subcommand("int", "ordered intersection (longest common subsequence)");
    pint->add_option("--a", seq_a, "comma separated sequence")->required();
    pint->add_option("--b", seq_b, "comma separated sequence")->required();
    pint->callback([&] {
        action = [&] {
            auto a = parse_int_list(seq_a);
            auto b = parse_int_list(seq_b);
            emit(ordered_intersection(a, b));
            return exit_ok;
        };
    });

    int mc_n = 1000, mc_h = 1, mc_trials = 100, mc_threads = default_threads();
    std::uint64_t mc_seed = 1;
    std::vector<double> mc_alphas{0.4};
    std::string mc_format = "json", mc_summary;
    auto * mc = perm->add_subcommand("mc", "Monte Carlo distribution of Int(pi, pi+h)");
    mc->set_help_flag("--help", "Print this help message and exit"); // frees -h for the shift
    mc->add_option("--n", mc_n, "permutation length")->capture_default_str()->check(CLI::Range(2, 100'000'000));
    mc->add_option("--h", mc_h, "value shift")->capture_default_str()->check(CLI::NonNegativeNumber);
    mc->add_option("--trials", mc_trials, "samples")->capture_default_str()->check(CLI::PositiveNumber);
    mc->add_option("--seed", mc_seed, "64-bit seed")->capture_default_str();
    mc->add_option("--alpha", mc_alphas, "tail thresholds n^(2/3+alpha)")->capture_default_str();
    mc->add_option("--threads", mc_threads, "worker threads")->check(CLI::PositiveNumber);
    mc->add_option("--format", mc_format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    mc->add_option("--summary", mc_summary, "with --format csv, also write the JSON summary here");
    mc->callback([&] {
        action = [&] {
            std::cerr << "[mc] n=" << mc_n << " trials=" << mc_trials << " threads=" << mc_threads << "\n";
            auto r = mc_shift_intersection(mc_n, mc_h, mc_trials, mc_seed, mc_alphas, mc_threads);
            auto summary = shift_report_json(r);
            if (mc_format == "csv") {
                std::cout << "n,h,trial,Int\n";
                for (std::size_t t = 0; t < r.samples.size(); ++t)
                    std::cout << r.n << ',' << r.h << ',' << t << ',' << r.samples[t] << '\n';
                if (! mc_summary.empty()) {
                    std::ofstream out(mc_summary);
                    out << summary.dump(2) << '\n';
                }
            }
            else
                emit(summary);
            write_record(record_path, "perm mc", {{"n", mc_n}, {"h", mc_h}, {"trials", mc_trials}, {"alpha", mc_alphas}},
                mc_seed, summary);
            std::cerr << "[mc] done\n";
            return exit_ok;
        };
    });

    std::string l5_set;
    int l5_h = 1, l5_universe = 8, l5_kmax = 5, l5_hmax = 3;
    auto * lemma5 = perm->add_subcommand("lemma5", "compatible orderings of U and U+h against 2^(2k-t) k^(k-t)");
    lemma5->set_help_flag("--help", "Print this help message and exit");
    lemma5->add_option("--set", l5_set, "comma separated U; omit for the exhaustive sweep");
    lemma5->add_option("--h", l5_h, "shift for --set")->capture_default_str()->check(CLI::PositiveNumber);
    lemma5->add_option("--universe", l5_universe, "sweep: U within [1, universe]")->capture_default_str()->check(CLI::Range(1, 16));
    lemma5->add_option("--kmax", l5_kmax, "sweep: largest |U|")->capture_default_str()->check(CLI::Range(0, 8));
    lemma5->add_option("--hmax", l5_hmax, "sweep: shifts 1..hmax")->capture_default_str()->check(CLI::PositiveNumber);
    lemma5->callback([&] {
        action = [&] {
            auto row = [](const CompatibilityCount & c) {
                return Json{{"k", c.k}, {"t", c.t}, {"compatible", c.compatible}, {"orderings", c.total}, {"bound", c.bound()},
                    {"within_bound", static_cast<double>(c.compatible) <= c.bound()}};
            };
            if (! l5_set.empty()) {
                emit(row(count_compatible_orderings(parse_int_list(l5_set), l5_h)));
                return exit_ok;
            }
            std::uint64_t sets = 0, violations = 0;
            double worst = 0;
            for (int h = 1; h <= l5_hmax; ++h)
                for (std::uint32_t mask = 0; mask < (1U << l5_universe); ++mask) {
                    if (std::popcount(mask) > l5_kmax)
                        continue;
                    std::vector<int> u;
                    for (int v = 0; v < l5_universe; ++v)
                        if (mask >> v & 1U)
                            u.push_back(v + 1);
                    auto c = count_compatible_orderings(u, h);
                    ++sets;
                    if (static_cast<double>(c.compatible) > c.bound())
                        ++violations;
                    worst = std::max(worst, static_cast<double>(c.compatible) / c.bound());
                }
            emit({{"sets", sets}, {"violations", violations}, {"max_ratio", worst}});
            return violations == 0 ? exit_ok : exit_verify_failed;
        };
    });

    // construct
    int tc_k = 1;
    auto * construct = app.add_subcommand("construct", "lower-bound colorings");
    construct->require_subcommand(1);
    auto * two_clique = construct->add_subcommand("two-clique", "two red cliques on 4k-2 vertices, blue between");
    two_clique->add_option("--k", tc_k, "k")->required()->check(CLI::PositiveNumber);
    two_clique->callback([&] {
        action = [&] {
            auto c = two_clique_coloring(tc_k);
            emit({{"k", tc_k}, {"n", c.n()}, {"hex", coloring_to_hex(c)}});
            return exit_ok;
        };
    });

    // verify
    std::string verify_path, verify_red, verify_blue = "K3";
    auto * verify = app.add_subcommand("verify", "independent checks");
    verify->require_subcommand(1);
    auto * vcol = verify->add_subcommand("coloring", "check that a coloring avoids red --red and blue --blue");
    vcol->add_option("file", verify_path, "coloring file (text format or JSON with n and hex)")->required();
    vcol->add_option("--red", verify_red, "red target")->required();
    vcol->add_option("--blue", verify_blue, "blue target")->capture_default_str();
    vcol->callback([&] {
        action = [&] {
            auto c = load_coloring(verify_path);
            auto rep = verify_avoidance(c, parse_target(verify_red), parse_target(verify_blue));
            Json j{{"n", c.n()}, {"avoids", rep.avoids()}};
            j["red_copy"] = rep.red_copy ? witness_json(*rep.red_copy) : Json(nullptr);
            j["blue_copy"] = rep.blue_copy ? witness_json(*rep.blue_copy) : Json(nullptr);
            emit(j);
            return rep.avoids() ? exit_ok : exit_verify_failed;
        };
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parameter;
    }

    try {
        return action ? action() : exit_parameter;
    }
    catch (const ParseError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parameter;
    }
    catch (const ParameterError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parameter;
    }
    catch (const SizeError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parameter;
    }
    catch (const nlohmann::json::exception & e) {
        std::cerr << "error: malformed JSON input: " << e.what() << '\n';
        return exit_parameter;
    }
    catch (const std::exception & e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}
