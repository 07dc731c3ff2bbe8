#include "homx/search.hpp"

#include "homx/critical.hpp"
#include "homx/error.hpp"
#include "homx/families.hpp"
#include "homx/hom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace homx {

namespace {

bool passes(const SimpleGraph& g, const Filters& f) {
    if (f.max_degree && max_degree(g) > *f.max_degree)
        return false;
    if (f.regular && !is_regular(g, *f.regular))
        return false;
    if (f.bipartite && !is_bipartite(g))
        return false;
    return true;
}

void cycle_partitions(std::size_t n, std::size_t largest, std::vector<std::size_t>& parts,
                      std::vector<std::vector<std::size_t>>& out) {
    if (n == 0) {
        out.push_back(parts);
        return;
    }
    for (std::size_t p = std::min(n, largest); p >= 3; --p) {
        parts.push_back(p);
        cycle_partitions(n - p, p, parts, out);
        parts.pop_back();
    }
}

std::string term_label(const std::string& graph, std::size_t root) {
    return graph + "^(n/" + std::to_string(root) + ")";
}

}  // namespace

std::vector<SimpleGraph> enumerate_family(const FamilySpec& spec, unsigned jobs) {
    if (spec.n == 0)
        throw ParameterError("family needs n >= 1");
    std::vector<SimpleGraph> candidates;
    switch (spec.source) {
    case Source::generated_emc:
        candidates = generate_emc(spec.n, spec.delta, jobs);
        break;
    case Source::all_graphs_bruteforce:
        if (spec.n > kAllGraphsCap)
            throw ParameterError("all_graphs_bruteforce needs n <= " + std::to_string(kAllGraphsCap));
        for (auto& g : all_graphs(spec.n))
            if (min_degree(g) == spec.delta)
                candidates.push_back(std::move(g));
        break;
    case Source::graph6_stream:
        for (std::size_t i = 0; i < spec.supplied.size(); ++i) {
            const auto& g = spec.supplied[i];
            if (g.order() != spec.n)
                throw ParameterError("supplied graph " + std::to_string(i + 1) + " has " + std::to_string(g.order()) +
                                     " vertices, expected " + std::to_string(spec.n));
            if (min_degree(g) < spec.delta)
                throw ParameterError("supplied graph " + std::to_string(i + 1) + " has minimum degree " +
                                     std::to_string(min_degree(g)) + " < " + std::to_string(spec.delta));
            candidates.push_back(g);
        }
        break;
    }
    std::map<CanonicalForm, SimpleGraph> kept;
    for (const auto& g : candidates)
        if (passes(g, spec.filters)) {
            auto label = canonical_labeling(g);
            kept.emplace(canonical_form(label.graph), std::move(label.graph));
        }
    std::vector<SimpleGraph> out;
    out.reserve(kept.size());
    for (auto& [key, g] : kept)
        out.push_back(std::move(g));
    return out;
}

ArgMax argmax_hom(const std::vector<SimpleGraph>& family, const TargetGraph& h, const EvalOptions& options) {
    if (family.empty())
        throw ParameterError("the family is empty");
    std::vector<std::optional<Evaluated>> slots(family.size());
    const unsigned workers = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(family.size())));
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < family.size(); i += workers) {
            if (options.stop && options.stop->load())
                return;
            slots[i] = Evaluated{canonical_form(family[i]), family[i], hom(family[i], h), false};
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }

    ArgMax out;
    out.max = 0;
    bool any = false;
    for (auto& slot : slots) {
        if (!slot) {
            out.truncated = true;
            continue;
        }
        if (!any || slot->value > out.max)
            out.max = slot->value;
        any = true;
        out.rows.push_back(std::move(*slot));
    }
    for (auto& row : out.rows)
        if (row.value == out.max) {
            row.is_maximizer = true;
            out.witnesses.push_back(row);
        }
    std::sort(out.witnesses.begin(), out.witnesses.end(),
              [](const Evaluated& a, const Evaluated& b) { return a.form < b.form; });
    return out;
}

ArgMax argmax_hom(const FamilySpec& spec, const TargetGraph& h, const EvalOptions& options) {
    return argmax_hom(enumerate_family(spec, options.jobs), h, options);
}

std::strong_ordering compare_terms(const PowerTerm& a, const PowerTerm& b) {
    return cmp_root_powers(a.base, a.root, b.base, b.root);
}

std::strong_ordering compare_term_value(const PowerTerm& t, std::size_t n, const Count& value) {
    return pow(t.base, n) <=> pow(value, t.root);
}

std::optional<Count> term_value(const PowerTerm& t, std::size_t n) {
    if (n % t.root != 0)
        return std::nullopt;
    return pow(t.base, n / t.root);
}

Bound conjecture_bound(std::size_t n, std::size_t delta, const TargetGraph& h, const Filters& filters) {
    if (delta == 0 || n <= delta)
        throw ParameterError("conjecture bound needs 1 <= delta < n");
    Bound b;
    b.n = n;
    b.k_delta_n_minus_delta = hom_complete_bipartite_any(delta, n - delta, h);
    const std::string d = std::to_string(delta);
    if (filters.regular) {
        const std::size_t r = *filters.regular;
        if (r == 0)
            throw ParameterError("regular filter needs degree >= 1");
        const std::string rs = std::to_string(r);
        b.terms.push_back({term_label("hom(K_" + std::to_string(r + 1) + ")", r + 1), hom_complete(r + 1, h), r + 1});
        b.terms.push_back({term_label("hom(K_{" + rs + "," + rs + "})", 2 * r), hom_complete_bipartite_any(r, r, h), 2 * r});
    } else {
        b.terms.push_back({term_label("hom(K_" + std::to_string(delta + 1) + ")", delta + 1), hom_complete(delta + 1, h),
                           delta + 1});
        b.terms.push_back(
            {term_label("hom(K_{" + d + "," + d + "})", 2 * delta), hom_complete_bipartite_any(delta, delta, h), 2 * delta});
        if (filters.max_degree && *filters.max_degree < n - delta) {
            const std::size_t big = *filters.max_degree;
            if (big < delta)
                throw ParameterError("max degree filter is below delta");
            b.terms.push_back({term_label("hom(K_{" + d + "," + std::to_string(big) + "})", delta + big),
                               hom_complete_bipartite_any(delta, big, h), delta + big});
        } else {
            b.terms.push_back({"hom(K_{" + d + "," + std::to_string(n - delta) + "})", b.k_delta_n_minus_delta, n});
        }
    }
    for (std::size_t i = 1; i < b.terms.size(); ++i)
        if (compare_terms(b.terms[i], b.terms[b.attained]) == std::strong_ordering::greater)
            b.attained = i;
    for (std::size_t i = 0; i < b.terms.size(); ++i)
        if (compare_terms(b.terms[i], b.terms[b.attained]) == std::strong_ordering::equal)
            b.tied.push_back(i);
    return b;
}

SearchVerdict verify_conjecture(const FamilySpec& spec, const TargetGraph& h, const EvalOptions& options) {
    const auto family = enumerate_family(spec, options.jobs);
    SearchVerdict v;
    v.family_size = family.size();
    auto best = argmax_hom(family, h, options);
    v.max_value = best.max;
    v.witnesses = std::move(best.witnesses);
    v.rows = std::move(best.rows);
    v.truncated = best.truncated;
    v.bound = conjecture_bound(spec.n, spec.delta, h, spec.filters);
    const PowerTerm& top = v.bound.terms[v.bound.attained];
    const auto order = compare_term_value(top, spec.n, v.max_value);
    v.conjecture_holds = order != std::strong_ordering::less;
    if (order == std::strong_ordering::equal)
        for (const auto& w : v.witnesses)
            v.equality_graphs.push_back(w.form);
    for (std::size_t i : v.bound.tied)
        if (spec.n % v.bound.terms[i].root != 0)
            v.notes.push_back("n = " + std::to_string(spec.n) + " is not a multiple of " +
                              std::to_string(v.bound.terms[i].root) + ", so " + v.bound.terms[i].label +
                              " is not realized by disjoint copies");
    if (!v.conjecture_holds)
        v.notes.push_back("maximum exceeds the bound at this n; the bound is only asserted for n beyond a constant");
    if (v.truncated)
        v.notes.push_back("evaluation was interrupted; the verdict covers only the evaluated graphs");
    return v;
}

TwoRegularVerdict verify_2regular(std::size_t n, const TargetGraph& h) {
    if (n < 3)
        throw ParameterError("2-regular graphs need n >= 3");
    TwoRegularVerdict v;
    v.n = n;
    v.c3 = {term_label("hom(C3)", 3), hom_cycle(3, h), 3};
    v.c4 = {term_label("hom(C4)", 4), hom_cycle(4, h), 4};
    v.c3_vs_c4 = compare_terms(v.c3, v.c4);
    const PowerTerm& top = v.c3_vs_c4 == std::strong_ordering::less ? v.c4 : v.c3;
    const bool trivial = is_fully_looped_complete(h);

    std::vector<std::vector<std::size_t>> all;
    std::vector<std::size_t> parts;
    cycle_partitions(n, n, parts, all);
    std::map<std::size_t, Count> per_cycle;
    v.max_value = 0;
    for (auto& lengths : all) {
        CyclePartitionRow row;
        row.value = 1;
        for (std::size_t k : lengths) {
            auto it = per_cycle.find(k);
            if (it == per_cycle.end())
                it = per_cycle.emplace(k, hom_cycle(k, h)).first;
            row.value *= it->second;
        }
        const auto order = compare_term_value(top, n, row.value);
        if (order == std::strong_ordering::less)
            throw InvariantViolation("2-regular graph with cycles exceeds max{hom(C3)^(n/3), hom(C4)^(n/4)}");
        row.attains_bound = order == std::strong_ordering::equal;
        bool expected = trivial;
        if (!trivial) {
            const bool only3 = std::all_of(lengths.begin(), lengths.end(), [](std::size_t k) { return k == 3; });
            const bool only4 = std::all_of(lengths.begin(), lengths.end(), [](std::size_t k) { return k == 4; });
            const bool only34 = std::all_of(lengths.begin(), lengths.end(), [](std::size_t k) { return k == 3 || k == 4; });
            expected = v.c3_vs_c4 == std::strong_ordering::greater ? only3
                       : v.c3_vs_c4 == std::strong_ordering::less  ? only4
                                                                   : only34;
        }
        if (expected != row.attains_bound)
            throw InvariantViolation("equality set of 2-regular graphs does not match the cycle characterization");
        v.max_value = std::max(v.max_value, row.value);
        row.cycle_lengths = std::move(lengths);
        v.rows.push_back(std::move(row));
    }
    return v;
}

Delta1Prediction predict_min_degree_1(std::size_t n, const TargetGraph& h, std::optional<std::size_t> max_degree) {
    if (n < 2)
        throw ParameterError("minimum degree 1 needs n >= 2");
    const std::size_t big = std::min(max_degree.value_or(n - 1), n - 1);
    if (big == 0)
        throw ParameterError("max degree must be at least 1");
    Delta1Prediction p;
    if (is_fully_looped_complete(h)) {
        p.bound = {"q^n", Count(h.order()), 1};
        p.everything_ties = true;
        return p;
    }
    const PowerTerm edge{term_label("hom(K2)", 2), degree_sum(h), 2};
    const PowerTerm spread{term_label("hom(K_{1," + std::to_string(big) + "})", big + 1), hom_star(big + 1, h), big + 1};
    const auto order = compare_terms(edge, spread);
    p.bound = order == std::strong_ordering::less ? spread : edge;
    std::set<CanonicalForm> eq;
    // Disjoint unions of a copies of K2 and b copies of K_{1,big}.
    for (std::size_t b = 0; b * (big + 1) <= n; ++b) {
        const std::size_t rest = n - b * (big + 1);
        if (rest % 2 != 0)
            continue;
        const std::size_t a = rest / 2;
        const bool uses_edge = a > 0 && big > 1;
        const bool uses_star = b > 0;
        if (order == std::strong_ordering::greater && uses_star && big > 1)
            continue;
        if (order == std::strong_ordering::less && uses_edge)
            continue;
        eq.insert(canonical_form(disjoint_union(copies(complete(2), a), copies(star(big + 1), b))));
    }
    p.equality.assign(eq.begin(), eq.end());
    return p;
}

std::optional<std::size_t> empirical_threshold(const TargetGraph& h, std::size_t n_min, std::size_t n_max,
                                               const EvalOptions& options) {
    if (n_min < 4 || n_max < n_min)
        throw ParameterError("empirical threshold needs 4 <= n_min <= n_max");
    std::optional<std::size_t> from;
    for (std::size_t n = n_max + 1; n-- > n_min;) {
        const auto best = argmax_hom(generate_emc(n, 2, options.jobs), h, options);
        const bool strict = best.witnesses.size() == 1 && is_isomorphic(best.witnesses[0].graph, complete_bipartite(2, n - 2));
        if (!strict)
            break;
        from = n;
    }
    return from;
}

}  // namespace homx
