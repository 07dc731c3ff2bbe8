#include "report.hpp"

#include <iomanip>
#include <sstream>

namespace homx::cli {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

std::string str(double v) {
    std::ostringstream out;
    out << std::setprecision(12) << v;
    return out.str();
}

std::string str(const Rational& r) {
    return r.str();
}

Json strings(const std::vector<std::size_t>& values) {
    Json out = Json::array();
    for (auto v : values)
        out.push_back(str(v));
    return out;
}

}  // namespace

std::string op_symbol(std::strong_ordering o) {
    if (o == std::strong_ordering::less)
        return "<";
    if (o == std::strong_ordering::greater)
        return ">";
    return "=";
}

Json to_json(const TargetGraph& h) {
    Json rows = Json::array();
    for (std::size_t v = 0; v < h.order(); ++v) {
        std::string row;
        for (std::size_t u = 0; u < h.order(); ++u)
            row += h.adjacent(v, u) ? '1' : '0';
        rows.push_back(row);
    }
    Json out{{"q", str(h.order())}, {"adj", rows}};
    if (!h.unit_weights()) {
        Json w = Json::array();
        for (const auto& x : h.weights())
            w.push_back(str(x));
        out["weights"] = w;
    }
    return out;
}

Json to_json(const RegimeReport& r) {
    Json out;
    out["delta"] = str(r.delta);
    out["sum_d"] = r.sum_d.str();
    out["max_degree"] = str(r.max_deg);
    out["sum_d_vs_max_degree_squared"] = op_symbol(r.degree_vs_delta_squared);
    if (r.n0)
        out["n0"] = Json{{"n0", str(r.n0->n0)}, {"boundary_equality", r.n0->boundary_equality}};
    else
        out["n0"] = nullptr;
    out["delta2"] = Json{{"regime", r.delta2.regime == Delta2Regime::bipartite ? "bipartite" : "cycles"},
                         {"hom_c3", r.delta2.c3.str()},
                         {"hom_c4", r.delta2.c4.str()},
                         {"c3_vs_max_degree_cubed", op_symbol(r.delta2.c3_vs_delta3)},
                         {"c4_vs_max_degree_fourth", op_symbol(r.delta2.c4_vs_delta4)},
                         {"c3_root_vs_c4_root", op_symbol(r.delta2.c3_vs_c4)}};
    out["s_delta"] = r.s_delta.str();
    out["flags"] = Json{{"has_k_delta_loop_component", r.flags.has_k_delta_loop_component},
                        {"has_k_delta_delta_component", r.flags.has_k_delta_delta_component},
                        {"looped_dominating_vertex", r.flags.looped_dominating_vertex},
                        {"unique_max_degree_vertex", r.flags.unique_max_degree_vertex},
                        {"shared_max_degree_neighborhoods", r.flags.shared_max_degree_neighborhoods}};
    out["p4"] = Json{{"max_pinned", r.p4.max_pinned.str()}, {"strict", r.p4.strict}};
    Json profile = Json::array();
    for (auto o : r.star_profile)
        profile.push_back(op_symbol(o));
    out["star_profile"] = Json{{"from_x", "2"}, {"steps", profile}, {"sign_changes", str(sign_changes(r.star_profile))}};
    if (r.path) {
        Json lambdas = Json::array();
        Json cs = Json::array();
        for (double x : r.path->lambda1_per_component)
            lambdas.push_back(str(x));
        for (double x : r.path->c_per_component)
            cs.push_back(str(x));
        Json spots = Json::array();
        for (const auto& s : r.path->spot_checks)
            spots.push_back(Json{{"k", str(s.k)}, {"max_entry", s.max_entry.str()}, {"lhs", s.lhs.str()},
                                 {"rhs", s.rhs.str()}, {"holds", s.holds}});
        out["path_threshold"] = Json{{"l_h", str(r.path->l_h)}, {"c", str(r.path->c)},
                                     {"lambda1_per_component", lambdas}, {"c_per_component", cs},
                                     {"spot_checks", spots}, {"approximate", r.path->approximate}};
    } else {
        out["path_threshold"] = nullptr;
    }
    if (r.c_h)
        out["c_h"] = Json{{"value", str(*r.c_h)}, {"informational", true}, {"approximate", true}};
    else
        out["c_h"] = nullptr;
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back(Json{{"name", v.name}, {"tag", v.tag}, {"detail", v.detail}});
    out["verdicts"] = verdicts;
    Json ledger = Json::array();
    for (const auto& c : r.comparisons)
        ledger.push_back(Json{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"op", op_symbol(c.op)}, {"exact", c.exact}});
    out["comparisons"] = ledger;
    return out;
}

Json to_json(const PowerTerm& t, std::size_t n) {
    const auto value = term_value(t, n);
    return Json{{"label", t.label},
                {"base", t.base.str()},
                {"exponent", str(n) + "/" + str(t.root)},
                {"value", value ? Json(value->str()) : Json(nullptr)}};
}

Json to_json(const Bound& b) {
    Json terms = Json::array();
    for (const auto& t : b.terms)
        terms.push_back(to_json(t, b.n));
    return Json{{"n", str(b.n)},
                {"terms", terms},
                {"hom_k_delta_n_minus_delta", b.k_delta_n_minus_delta.str()},
                {"attained", str(b.attained)},
                {"tied", strings(b.tied)}};
}

Json to_json(const Evaluated& e) {
    return Json{{"canonical_form", e.form.bytes}, {"value", e.value.str()}, {"is_maximizer", e.is_maximizer}};
}

Json to_json(const ArgMax& a) {
    Json witnesses = Json::array();
    for (const auto& w : a.witnesses)
        witnesses.push_back(w.form.bytes);
    return Json{{"family_size", str(a.rows.size())},
                {"max_value", a.max.str()},
                {"witnesses", witnesses},
                {"truncated", a.truncated}};
}

Json to_json(const SearchVerdict& v) {
    Json witnesses = Json::array();
    for (const auto& w : v.witnesses)
        witnesses.push_back(w.form.bytes);
    Json equality = Json::array();
    for (const auto& f : v.equality_graphs)
        equality.push_back(f.bytes);
    return Json{{"family_size", str(v.family_size)},
                {"max_value", v.max_value.str()},
                {"witnesses", witnesses},
                {"bound", to_json(v.bound)},
                {"conjecture_holds", v.conjecture_holds},
                {"equality_graphs", equality},
                {"notes", v.notes},
                {"truncated", v.truncated}};
}

Json to_json(const TwoRegularVerdict& v) {
    Json rows = Json::array();
    for (const auto& r : v.rows)
        rows.push_back(Json{{"cycle_lengths", strings(r.cycle_lengths)}, {"value", r.value.str()},
                            {"attains_bound", r.attains_bound}});
    return Json{{"n", str(v.n)},
                {"c3", to_json(v.c3, v.n)},
                {"c4", to_json(v.c4, v.n)},
                {"c3_vs_c4", op_symbol(v.c3_vs_c4)},
                {"max_value", v.max_value.str()},
                {"holds", true},
                {"rows", rows}};
}

Json to_json(const EarDecomposition& d) {
    Json paths = Json::array();
    for (const auto& p : d.path_additions)
        paths.push_back(Json{{"k", str(p.k)}, {"attach_a", str(p.attach_a)}, {"attach_b", str(p.attach_b)}});
    Json pendants = Json::array();
    for (const auto& p : d.pendant_additions)
        pendants.push_back(Json{{"a", str(p.a)}, {"b", str(p.b)}});
    std::vector<std::size_t> map(d.vertex_map.begin(), d.vertex_map.end());
    return Json{{"base_cycles", strings(d.base_cycles)},
                {"path_additions", paths},
                {"pendant_additions", pendants},
                {"vertex_map", strings(map)}};
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out << ',';
        const auto& f = fields[i];
        if (f.find_first_of(",\"\r\n") == std::string::npos) {
            out << f;
            continue;
        }
        out << '"';
        for (char c : f) {
            if (c == '"')
                out << '"';
            out << c;
        }
        out << '"';
    }
    out << "\r\n";
}

void write_rows_csv(std::ostream& out, const std::vector<Evaluated>& rows, bool truncated) {
    write_csv_row(out, {"canonical_form", "hom_value", "is_maximizer"});
    for (const auto& r : rows)
        write_csv_row(out, {r.form.bytes, r.value.str(), r.is_maximizer ? "true" : "false"});
    if (truncated)
        write_csv_row(out, {"truncated", "", ""});
}

}  // namespace homx::cli
