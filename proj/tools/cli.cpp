#include "cli.hpp"

#include "cli_io.hpp"
#include "report.hpp"

#include "homx/canonical.hpp"
#include "homx/error.hpp"
#include "homx/graph6.hpp"
#include "homx/hom.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>

namespace homx::cli {

namespace {

struct Options {
    std::string target;
    std::string target_file;
    std::string graph;
    std::string graph_file;
    std::size_t delta = 2;
    std::size_t n = 0;
    std::size_t n_min = 4;
    std::string source = "emc";
    std::optional<std::size_t> max_degree;
    std::optional<std::size_t> regular;
    bool bipartite = false;
    bool two_regular = false;
    bool empirical_threshold = false;
    std::string output = "json";
    std::optional<unsigned> jobs;
};

class Runner {
public:
    Runner(const Options& o, Environment env) : o_(o), env_(env) {}

    int count();
    int classify();
    int generate();
    int decompose();
    int search();
    int verify();

private:
    TargetGraph target() const {
        if (!o_.target_file.empty())
            return load_target(o_.target_file);
        if (o_.target.empty())
            throw ParameterError("a target is required (--target or --target-file)");
        return parse_target(o_.target);
    }

    std::vector<SimpleGraph> graphs() const {
        if (!o_.graph_file.empty())
            return load_graphs(o_.graph_file);
        if (o_.graph.empty())
            throw ParameterError("a graph is required (--graph or --graph-file)");
        return {parse_graph(o_.graph)};
    }

    unsigned jobs() const {
        const unsigned j = o_.jobs.value_or(env_.default_jobs);
        if (j == 0)
            throw ParameterError("--jobs must be at least 1");
        return j;
    }

    EvalOptions eval() const { return EvalOptions{jobs(), env_.stop}; }

    FamilySpec family() const {
        if (o_.n == 0)
            throw ParameterError("--n is required");
        FamilySpec spec{o_.n, o_.delta, Source::generated_emc, {o_.max_degree, o_.regular, o_.bipartite}, {}};
        if (o_.source == "all") {
            spec.source = Source::all_graphs_bruteforce;
        } else if (o_.source == "g6-stdin") {
            spec.source = Source::graph6_stream;
            spec.supplied = read_graph6_stream(env_.in);
        } else if (o_.source == "g6-file") {
            if (o_.graph_file.empty())
                throw ParameterError("--source g6-file needs --graph-file");
            spec.source = Source::graph6_stream;
            spec.supplied = load_graphs(o_.graph_file);
        }
        return spec;
    }

    Json family_json(const FamilySpec& spec) const {
        Json filters;
        filters["max_degree"] = spec.filters.max_degree ? Json(std::to_string(*spec.filters.max_degree)) : Json(nullptr);
        filters["regular"] = spec.filters.regular ? Json(std::to_string(*spec.filters.regular)) : Json(nullptr);
        filters["bipartite"] = spec.filters.bipartite;
        return Json{{"n", std::to_string(spec.n)},
                    {"delta", std::to_string(spec.delta)},
                    {"source", o_.source},
                    {"filters", filters}};
    }

    void emit(const Json& doc) const { env_.out << doc.dump(2) << '\n'; }

    const Options& o_;
    Environment env_;
};

std::string weighted_count(const SimpleGraph& g, const TargetGraph& h) {
    return h.unit_weights() ? hom(g, h).str() : z_weighted(g, h).str();
}

int Runner::count() {
    const auto h = target();
    const auto gs = graphs();
    if (o_.output == "csv") {
        write_csv_row(env_.out, {"graph6", "hom_value"});
        for (const auto& g : gs)
            write_csv_row(env_.out, {write_graph6(g), weighted_count(g, h)});
    } else if (o_.output == "plain") {
        for (const auto& g : gs)
            env_.out << weighted_count(g, h) << '\n';
    } else {
        Json results = Json::array();
        for (const auto& g : gs)
            results.push_back(Json{{"graph6", write_graph6(g)}, {"vertices", std::to_string(g.order())},
                                   {"value", weighted_count(g, h)}});
        emit(Json{{"command", "count"}, {"target", to_json(h)}, {"results", results}});
    }
    return kExitOk;
}

int Runner::classify() {
    const auto h = target();
    const auto r = homx::classify(h, o_.delta);
    if (o_.output == "csv") {
        write_csv_row(env_.out, {"comparison", "lhs", "rhs", "op", "exact"});
        for (const auto& c : r.comparisons)
            write_csv_row(env_.out, {c.name, c.lhs, c.rhs, op_symbol(c.op), c.exact ? "true" : "false"});
    } else if (o_.output == "plain") {
        auto& out = env_.out;
        out << "sum_d " << r.sum_d << '\n';
        out << "max_degree " << r.max_deg << '\n';
        out << "sum_d_vs_max_degree_squared " << op_symbol(r.degree_vs_delta_squared) << '\n';
        if (r.n0)
            out << "n0 " << r.n0->n0 << (r.n0->boundary_equality ? " (boundary tie)" : "") << '\n';
        out << "delta2_regime " << (r.delta2.regime == Delta2Regime::bipartite ? "bipartite" : "cycles") << '\n';
        out << "hom_c3 " << r.delta2.c3 << '\n' << "hom_c4 " << r.delta2.c4 << '\n';
        out << "s_delta " << r.s_delta << '\n';
        out << "looped_dominating_vertex " << (r.flags.looped_dominating_vertex ? "true" : "false") << '\n';
        out << "unique_max_degree_vertex " << (r.flags.unique_max_degree_vertex ? "true" : "false") << '\n';
        for (const auto& v : r.verdicts)
            out << "verdict " << v.name << ' ' << v.tag << '\n';
    } else {
        emit(Json{{"command", "classify"}, {"target", to_json(h)}, {"report", to_json(r)}});
    }
    return kExitOk;
}

int Runner::generate() {
    const auto spec = family();
    const auto members = enumerate_family(spec, jobs());
    if (o_.output == "csv") {
        write_csv_row(env_.out, {"canonical_form"});
        for (const auto& g : members)
            write_csv_row(env_.out, {write_graph6(g)});
    } else if (o_.output == "plain") {
        for (const auto& g : members)
            env_.out << write_graph6(g) << '\n';
    } else {
        Json list = Json::array();
        for (const auto& g : members)
            list.push_back(write_graph6(g));
        emit(Json{{"command", "generate"}, {"family", family_json(spec)}, {"count", std::to_string(members.size())},
                  {"graphs", list}});
    }
    return kExitOk;
}

int Runner::decompose() {
    const auto gs = graphs();
    Json list = Json::array();
    for (const auto& g : gs) {
        const auto d = decompose_delta2(g);
        if (o_.output == "plain") {
            env_.out << write_graph6(g) << '\n';
            for (auto c : d.base_cycles)
                env_.out << "  cycle " << c << '\n';
            for (const auto& p : d.path_additions)
                env_.out << "  path " << p.k << ' ' << p.attach_a << ' ' << p.attach_b << '\n';
            for (const auto& p : d.pendant_additions)
                env_.out << "  pendant " << p.a << ' ' << p.b << '\n';
        } else {
            Json entry = to_json(d);
            entry["graph6"] = write_graph6(g);
            list.push_back(entry);
        }
    }
    if (o_.output == "csv")
        throw ParameterError("decompose supports json and plain output");
    if (o_.output == "json")
        emit(Json{{"command", "decompose"}, {"decompositions", list}});
    return kExitOk;
}

int Runner::search() {
    const auto h = target();
    if (o_.empirical_threshold) {
        if (o_.n == 0)
            throw ParameterError("--n is required");
        const auto from = homx::empirical_threshold(h, o_.n_min, o_.n, eval());
        const std::string value = from ? std::to_string(*from) : "none";
        if (o_.output == "plain") {
            env_.out << "empirical_threshold " << value << " (empirical, not c_H)\n";
        } else if (o_.output == "csv") {
            write_csv_row(env_.out, {"n_min", "n_max", "empirical_threshold"});
            write_csv_row(env_.out, {std::to_string(o_.n_min), std::to_string(o_.n), value});
        } else {
            emit(Json{{"command", "search"},
                      {"target", to_json(h)},
                      {"n_min", std::to_string(o_.n_min)},
                      {"n_max", std::to_string(o_.n)},
                      {"empirical_threshold", from ? Json(value) : Json(nullptr)},
                      {"label", "empirical, not c_H"}});
        }
        return kExitOk;
    }
    const auto spec = family();
    const auto best = argmax_hom(enumerate_family(spec, jobs()), h, eval());
    if (o_.output == "csv") {
        write_rows_csv(env_.out, best.rows, best.truncated);
    } else if (o_.output == "plain") {
        env_.out << "max " << best.max << '\n';
        for (const auto& w : best.witnesses)
            env_.out << "witness " << w.form.bytes << '\n';
        if (best.truncated)
            env_.out << "truncated\n";
    } else {
        emit(Json{{"command", "search"}, {"target", to_json(h)}, {"family", family_json(spec)}, {"result", to_json(best)}});
    }
    return kExitOk;
}

int Runner::verify() {
    const auto h = target();
    if (o_.two_regular) {
        if (o_.n == 0)
            throw ParameterError("--n is required");
        const auto v = verify_2regular(o_.n, h);
        if (o_.output == "csv") {
            write_csv_row(env_.out, {"cycle_lengths", "hom_value", "attains_bound"});
            for (const auto& r : v.rows) {
                std::string lengths;
                for (auto k : r.cycle_lengths)
                    lengths += (lengths.empty() ? "" : " ") + std::to_string(k);
                write_csv_row(env_.out, {lengths, r.value.str(), r.attains_bound ? "true" : "false"});
            }
        } else if (o_.output == "plain") {
            env_.out << "holds true\nmax " << v.max_value << '\n';
        } else {
            emit(Json{{"command", "verify"}, {"target", to_json(h)}, {"two_regular", to_json(v)}});
        }
        return kExitOk;
    }

    const auto spec = family();
    const auto v = verify_conjecture(spec, h, eval());
    Json extra = nullptr;
    const bool plain_family = !spec.filters.max_degree && !spec.filters.regular && !spec.filters.bipartite;
    if (spec.delta == 1 && plain_family && spec.source != Source::graph6_stream && !v.truncated) {
        const auto p = predict_min_degree_1(spec.n, h);
        std::set<CanonicalForm> witnesses;
        for (const auto& w : v.witnesses)
            witnesses.insert(w.form);
        const std::set<CanonicalForm> predicted(p.equality.begin(), p.equality.end());
        const auto order = compare_term_value(p.bound, spec.n, v.max_value);
        bool matches = order != std::strong_ordering::less;
        if (!p.everything_ties)
            matches = matches && (predicted.empty() ? order == std::strong_ordering::greater
                                                    : order == std::strong_ordering::equal && witnesses == predicted);
        if (!matches)
            throw InvariantViolation("minimum-degree-1 maximum or equality set differs from the proven prediction");
        Json eq = Json::array();
        for (const auto& f : p.equality)
            eq.push_back(f.bytes);
        extra = Json{{"bound", to_json(p.bound, spec.n)}, {"equality", eq}, {"everything_ties", p.everything_ties},
                     {"matches", true}};
    }
    if (o_.output == "csv") {
        write_rows_csv(env_.out, v.rows, v.truncated);
    } else if (o_.output == "plain") {
        env_.out << "conjecture_holds " << (v.conjecture_holds ? "true" : "false") << '\n';
        env_.out << "max " << v.max_value << '\n';
        for (const auto& w : v.witnesses)
            env_.out << "witness " << w.form.bytes << '\n';
        for (const auto& f : v.equality_graphs)
            env_.out << "equality " << f.bytes << '\n';
        for (const auto& note : v.notes)
            env_.out << "note " << note << '\n';
        if (v.truncated)
            env_.out << "truncated\n";
    } else {
        Json doc{{"command", "verify"}, {"target", to_json(h)}, {"family", family_json(spec)}, {"verdict", to_json(v)}};
        if (!extra.is_null())
            doc["min_degree_1_prediction"] = extra;
        emit(doc);
    }
    return kExitOk;
}

void add_target(CLI::App* cmd, Options& o) {
    cmd->add_option("--target", o.target, "ind, wr, hc:k, kq:q, kqloop:q or adjacency rows such as 01/11");
    cmd->add_option("--target-file", o.target_file, "target as JSON or adjacency rows");
}

void add_graph(CLI::App* cmd, Options& o) {
    cmd->add_option("--graph", o.graph, "cycle:n, path:n, star:n, complete:n, cbip:a,b or g6:<line>");
    cmd->add_option("--graph-file", o.graph_file, "graph6 file, one graph per line");
}

void add_family(CLI::App* cmd, Options& o) {
    cmd->add_option("--n", o.n, "number of vertices");
    cmd->add_option("--delta", o.delta, "minimum degree")->capture_default_str();
    cmd->add_option("--source", o.source, "family source")
        ->check(CLI::IsMember({"emc", "all", "g6-stdin", "g6-file"}))
        ->capture_default_str();
    cmd->add_option("--graph-file", o.graph_file, "graph6 file for --source g6-file");
    cmd->add_option("--max-degree", o.max_degree, "keep graphs with maximum degree at most D");
    cmd->add_option("--regular", o.regular, "keep r-regular graphs");
    cmd->add_flag("--bipartite", o.bipartite, "keep bipartite graphs");
    cmd->add_option("--jobs", o.jobs, "worker threads (default HOMX_JOBS or 1)");
}

void add_output(CLI::App* cmd, Options& o) {
    cmd->add_option("--output", o.output, "report format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
}

}  // namespace

unsigned jobs_from_environment(const char* value) {
    if (!value || !*value)
        return 1;
    const std::string_view text(value);
    unsigned jobs = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), jobs);
    if (ec != std::errc{} || ptr != text.data() + text.size() || jobs == 0)
        throw ParameterError("HOMX_JOBS must be a positive integer");
    return jobs;
}

int run(const std::vector<std::string>& args, Environment env) {
    Options o;
    CLI::App app{"Exact graph homomorphism counting and extremal search", "homx"};
    app.require_subcommand(1, 1);

    auto* count = app.add_subcommand("count", "hom(G,H) for named or graph6 graphs");
    add_target(count, o);
    add_graph(count, o);
    add_output(count, o);

    auto* classify = app.add_subcommand("classify", "regime report for a target");
    add_target(classify, o);
    classify->add_option("--delta", o.delta, "minimum degree")->capture_default_str();
    add_output(classify, o);

    auto* generate = app.add_subcommand("generate", "list a graph family as graph6");
    add_family(generate, o);
    add_output(generate, o);

    auto* decompose = app.add_subcommand("decompose", "ear decomposition of edge-min-critical minimum-degree-2 graphs");
    add_graph(decompose, o);
    add_output(decompose, o);

    auto* search = app.add_subcommand("search", "maximize hom(G,H) over a family");
    add_target(search, o);
    add_family(search, o);
    search->add_flag("--empirical-threshold", o.empirical_threshold,
                     "least n in [n-min, n] from which K_{2,n-2} is the unique maximizer");
    search->add_option("--n-min", o.n_min, "first size for --empirical-threshold")->capture_default_str();
    add_output(search, o);

    auto* verify = app.add_subcommand("verify", "compare the family maximum with the conjectured bound");
    add_target(verify, o);
    add_family(verify, o);
    verify->add_flag("--two-regular", o.two_regular, "check every 2-regular graph on n vertices");
    add_output(verify, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, env.out, env.err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Runner runner(o, env);
        if (count->parsed())
            return runner.count();
        if (classify->parsed())
            return runner.classify();
        if (generate->parsed())
            return runner.generate();
        if (decompose->parsed())
            return runner.decompose();
        if (search->parsed())
            return runner.search();
        return runner.verify();
    } catch (const InvariantViolation& e) {
        env.err << "homx: invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const Error& e) {
        env.err << "homx: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace homx::cli
