#include "homx/classify.hpp"

#include "homx/canonical.hpp"
#include "homx/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace homx {

namespace {

Count sum_of_degree_powers(const TargetGraph& h, std::uint64_t exponent) {
    Count total = 0;
    for (Vertex v = 0; v < h.order(); ++v)
        total += pow(Count(degree(h, v)), exponent);
    return total;
}

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

Comparison compare(std::string name, const Count& lhs, const Count& rhs) {
    return {std::move(name), lhs.str(), rhs.str(), lhs <=> rhs, true};
}

bool is_k_delta_loop(const TargetGraph& h, const std::vector<Vertex>& comp, std::size_t delta) {
    if (comp.size() != delta)
        return false;
    Mask all = 0;
    for (Vertex v : comp)
        all |= bit(v);
    return std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return h.neighbors(v) == all; });
}

bool is_k_delta_delta(const TargetGraph& h, const std::vector<Vertex>& comp, std::size_t delta) {
    if (comp.size() != 2 * delta)
        return false;
    // Complete bipartite with equal classes: the side of comp[0] is its
    // neighborhood's neighborhood, and the two sides must see each other fully.
    const Mask right = h.neighbors(comp[0]);
    Mask all = 0;
    for (Vertex v : comp)
        all |= bit(v);
    const Mask left = all & ~right;
    if (popcount(left) != delta || popcount(right) != delta)
        return false;
    return std::all_of(comp.begin(), comp.end(),
                       [&](Vertex v) { return h.neighbors(v) == ((left & bit(v)) ? right : left); });
}

// Power iteration on A + I, which shares its Perron vector with A and has no
// competing eigenvalue of equal modulus when A is bipartite.
std::pair<double, double> perron(const Matrix<double>& a, double tolerance) {
    const Eigen::Index n = a.rows();
    const Matrix<double> shifted = a + Matrix<double>::Identity(n, n);
    Eigen::VectorXd x = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
    for (int iter = 0; iter < 1000000; ++iter) {
        Eigen::VectorXd y = shifted * x;
        y /= y.norm();
        const double change = (y - x).cwiseAbs().maxCoeff();
        x = std::move(y);
        if (change < tolerance)
            break;
    }
    const double lambda = x.dot(a * x) / x.dot(x);
    return {lambda, x.maxCoeff() / x.minCoeff()};
}

}  // namespace

std::strong_ordering degree_condition(const TargetGraph& h) {
    const Count delta = max_degree(h);
    return degree_sum(h) <=> delta * delta;
}

N0Result compute_n0(const TargetGraph& h) {
    if (degree_condition(h) != std::strong_ordering::less)
        throw RegimeError("n0 is defined only when sum d(v) < Delta^2; this target is in the perfect-matching regime");
    const Count sum = degree_sum(h);
    for (std::size_t n = 3; n < 3 + kN0IterationCap; ++n) {
        const Count s = sum_of_degree_powers(h, n - 1);
        if (pow(sum, n) < s * s) {
            const Count prev = sum_of_degree_powers(h, n - 2);
            return {n, pow(sum, n - 1) == prev * prev};
        }
    }
    throw InvariantViolation("n0 search exceeded " + std::to_string(kN0IterationCap) + " iterations");
}

Delta2Verdict regime_delta2(const TargetGraph& h) {
    Delta2Verdict v;
    const Count delta = max_degree(h);
    v.c3 = hom_cycle(3, h);
    v.c4 = hom_cycle(4, h);
    v.c3_vs_delta3 = v.c3 <=> pow(delta, 3);
    v.c4_vs_delta4 = v.c4 <=> pow(delta, 4);
    v.c3_vs_c4 = cmp_root_powers(v.c3, 3, v.c4, 4);
    const bool below = v.c3_vs_delta3 == std::strong_ordering::less && v.c4_vs_delta4 == std::strong_ordering::less;
    v.regime = below ? Delta2Regime::bipartite : Delta2Regime::cycles;
    return v;
}

SDelta s_delta(const TargetGraph& h, std::size_t delta, bool enumerate, std::size_t cap) {
    if (delta == 0)
        throw ParameterError("s_delta needs delta >= 1");
    if (delta > cap)
        throw ResourceError("s_delta enumerates q^delta tuples; delta = " + std::to_string(delta) + " exceeds cap " +
                            std::to_string(cap));
    const std::size_t top = max_degree(h);
    SDelta out;
    out.count = 0;
    std::vector<Vertex> tuple;
    std::uint64_t found = 0;
    auto walk = [&](auto&& self, Mask common) -> void {
        if (popcount(common) < top)
            return;
        if (tuple.size() == delta) {
            ++found;
            if (enumerate)
                out.tuples.push_back(tuple);
            return;
        }
        for (Vertex c = 0; c < h.order(); ++c) {
            tuple.push_back(c);
            self(self, common & h.neighbors(c));
            tuple.pop_back();
        }
    };
    walk(walk, low_mask(h.order()));
    out.count = found;
    return out;
}

StructureFlags structure_flags(const TargetGraph& h) {
    StructureFlags f;
    const std::size_t top = max_degree(h);
    for (const auto& comp : connected_components(h)) {
        f.has_k_delta_loop_component = f.has_k_delta_loop_component || is_k_delta_loop(h, comp, top);
        f.has_k_delta_delta_component = f.has_k_delta_delta_component || is_k_delta_delta(h, comp, top);
    }
    const Mask all = low_mask(h.order());
    std::size_t at_max = 0;
    std::optional<Mask> shared;
    f.shared_max_degree_neighborhoods = true;
    for (Vertex v = 0; v < h.order(); ++v) {
        if (h.looped(v) && h.neighbors(v) == all)
            f.looped_dominating_vertex = true;
        if (degree(h, v) != top)
            continue;
        ++at_max;
        if (!shared)
            shared = h.neighbors(v);
        else if (*shared != h.neighbors(v))
            f.shared_max_degree_neighborhoods = false;
    }
    f.unique_max_degree_vertex = at_max == 1;
    return f;
}

std::size_t sign_changes(const std::vector<std::strong_ordering>& profile) {
    std::size_t changes = 0;
    std::optional<std::strong_ordering> last;
    for (auto o : profile) {
        if (o == std::strong_ordering::equal)
            continue;
        if (last && *last != o)
            ++changes;
        last = o;
    }
    return changes;
}

std::vector<std::strong_ordering> star_sequence_profile(const TargetGraph& h, std::size_t x_max) {
    if (x_max < 3)
        throw ParameterError("star_sequence_profile needs x_max >= 3");
    std::vector<std::strong_ordering> profile;
    Count current = sum_of_degree_powers(h, 1);
    for (std::size_t x = 2; x <= x_max; ++x) {
        Count next = sum_of_degree_powers(h, x);
        profile.push_back(cmp_root_powers(current, x, next, x + 1));
        current = std::move(next);
    }
    if (sign_changes(profile) > 1)
        throw InvariantViolation("star sequence (sum d^(x-1))^(1/x) changes direction more than once");
    return profile;
}

PathThreshold path_threshold(const TargetGraph& h, double tolerance) {
    if (regime_delta2(h).regime != Delta2Regime::bipartite)
        throw RegimeError("path threshold needs max{hom(C3)^(1/3), hom(C4)^(1/4)} < Delta");
    const double delta = static_cast<double>(max_degree(h));
    const double q = static_cast<double>(h.order());
    PathThreshold out;
    std::size_t l = 2;
    for (const auto& comp : connected_components(h)) {
        const auto [lambda, c] = perron(adjacency_matrix<double>(h.induced(comp)), tolerance);
        if (lambda >= delta - tolerance)
            throw RegimeError("Perron eigenvalue " + format_double(lambda) + " is not below Delta");
        out.lambda1_per_component.push_back(lambda);
        out.c_per_component.push_back(c);
        // c * lambda^k < Delta^(k-4) / q^2  <=>  k * log(Delta / lambda) > log c + 4 log Delta + 2 log q
        const double bound = (std::log(c) + 4 * std::log(delta) + 2 * std::log(q)) / (std::log(delta) - std::log(lambda));
        l = std::max(l, static_cast<std::size_t>(std::floor(bound)) + 1);
        out.c = std::max(out.c, c);
    }
    out.l_h = l;
    const Matrix<Count> a = adjacency_matrix<Count>(h);
    const Count q2 = Count(h.order()) * Count(h.order());
    for (std::size_t k = l; k <= l + 4; ++k) {
        PathSpotCheck s;
        s.k = k;
        const Matrix<Count> power = matrix_power(a, k - 1);
        s.max_entry = 0;
        for (Eigen::Index i = 0; i < power.rows(); ++i)
            for (Eigen::Index j = 0; j < power.cols(); ++j)
                s.max_entry = std::max(s.max_entry, power(i, j));
        s.lhs = q2 * s.max_entry;
        s.rhs = pow(Count(max_degree(h)), k - 4);
        s.holds = s.lhs < s.rhs;
        out.spot_checks.push_back(std::move(s));
    }
    return out;
}

P4Bound p4_bound_check(const TargetGraph& h) {
    const Matrix<Count> cube = matrix_power(adjacency_matrix<Count>(h), 3);
    P4Bound out;
    out.max_pinned = 0;
    for (Eigen::Index i = 0; i < cube.rows(); ++i)
        for (Eigen::Index j = 0; j < cube.cols(); ++j)
            out.max_pinned = std::max(out.max_pinned, cube(i, j));
    const Count delta = max_degree(h);
    out.strict = out.max_pinned < delta * delta;
    if (!out.strict) {
        const auto flags = structure_flags(h);
        if (!flags.has_k_delta_loop_component && !flags.has_k_delta_delta_component)
            throw InvariantViolation("pinned P4 count reaches Delta^2 without a K_Delta^loop or K_{Delta,Delta} component");
    }
    return out;
}

std::optional<double> c_h(const TargetGraph& h, std::size_t delta) {
    if (degree_condition(h) != std::strong_ordering::less)
        return std::nullopt;
    const double big = static_cast<double>(max_degree(h));
    const double sum = static_cast<double>(degree_sum(h).value());
    return static_cast<double>(delta) * std::log(big) / std::log(big * big / sum);
}

RegimeReport classify(const TargetGraph& h, std::size_t delta) {
    if (delta == 0)
        throw ParameterError("classification needs delta >= 1");
    RegimeReport r;
    r.delta = delta;
    r.sum_d = degree_sum(h);
    r.max_deg = max_degree(h);
    const Count big = r.max_deg;
    const bool trivial = is_fully_looped_complete(h);

    r.degree_vs_delta_squared = degree_condition(h);
    r.comparisons.push_back(compare("sum d(v) vs Delta^2", r.sum_d, big * big));
    const bool below = r.degree_vs_delta_squared == std::strong_ordering::less;
    if (below) {
        r.n0 = compute_n0(h);
        const std::size_t n0 = r.n0->n0;
        const Count s = sum_of_degree_powers(h, n0 - 1);
        r.comparisons.push_back(
            compare("n0: (sum d)^n0 vs (sum d^(n0-1))^2 at n0 = " + std::to_string(n0), pow(r.sum_d, n0), s * s));
        const Count prev = sum_of_degree_powers(h, n0 - 2);
        r.comparisons.push_back(
            compare("boundary: (sum d)^(n0-1) vs (sum d^(n0-2))^2", pow(r.sum_d, n0 - 1), prev * prev));
    }

    r.delta2 = regime_delta2(h);
    r.comparisons.push_back(compare("hom(C3,H) vs Delta^3", r.delta2.c3, pow(big, 3)));
    r.comparisons.push_back(compare("hom(C4,H) vs Delta^4", r.delta2.c4, pow(big, 4)));
    r.comparisons.push_back(compare("hom(C3,H)^4 vs hom(C4,H)^3", pow(r.delta2.c3, 4), pow(r.delta2.c4, 3)));

    r.s_delta = s_delta(h, delta).count;
    r.flags = structure_flags(h);
    r.p4 = p4_bound_check(h);
    r.comparisons.push_back(compare("max pinned P4 colorings vs Delta^2", r.p4.max_pinned, big * big));
    r.star_profile = star_sequence_profile(h, 10);
    r.c_h = c_h(h, delta);

    if (r.delta2.regime == Delta2Regime::bipartite) {
        r.path = path_threshold(h);
        const auto& p = *r.path;
        r.comparisons.push_back({"path threshold l_H (Perron estimate)", std::to_string(p.l_h),
                                 "c = " + format_double(p.c), std::strong_ordering::equal, false});
        for (const auto& s : p.spot_checks)
            r.comparisons.push_back(
                compare("q^2 * max (A^(k-1))_uv vs Delta^(k-4) at k = " + std::to_string(s.k), s.lhs, s.rhs));
    }

    if (trivial)
        r.verdicts.push_back({"min_degree_1", "trivial", "H is fully looped complete; every graph has Delta^n colorings"});
    else if (!below)
        r.verdicts.push_back({"min_degree_1", "perfect_matching", "hom(G,H) <= hom(K2,H)^(n/2), equality only for (n/2)K2"});
    else {
        std::string detail = "n0 = " + std::to_string(r.n0->n0) + "; (n/2)K2 for n < n0, K_{1,n-1} for n >= n0";
        if (r.n0->boundary_equality)
            detail += "; K_{1,n-1} ties (n/2)K2 at n = " + std::to_string(r.n0->n0 - 1);
        r.verdicts.push_back({"min_degree_1", "star", detail});
    }

    if (trivial)
        r.verdicts.push_back({"min_degree_2", "trivial", "H is fully looped complete"});
    else if (r.delta2.regime == Delta2Regime::cycles) {
        const auto o = r.delta2.c3_vs_c4;
        const std::string who = o == std::strong_ordering::greater ? "(n/3)C3"
                                : o == std::strong_ordering::less  ? "(n/4)C4"
                                                                   : "any disjoint union of C3s and C4s";
        r.verdicts.push_back({"min_degree_2", "cycles", "max{hom(C3)^(n/3), hom(C4)^(n/4)}, attained by " + who});
    } else {
        r.verdicts.push_back({"min_degree_2", "complete_bipartite", "K_{2,n-2} is the unique maximizer for large n"});
    }

    if (below) {
        std::string detail = "K_{delta,n-delta} is the unique maximizer for n >= c_H^delta";
        if (r.flags.shared_max_degree_neighborhoods)
            detail += "; degree-Delta vertices share neighborhoods, so n >= c_H * delta^2 suffices";
        r.verdicts.push_back({"degree_sum_below_delta_squared", "complete_bipartite", detail});
    } else {
        r.verdicts.push_back({"degree_sum_below_delta_squared", "not_applicable", "sum d(v) >= Delta^2"});
    }

    const bool special = (!trivial && r.flags.looped_dominating_vertex) || (below && r.flags.unique_max_degree_vertex);
    r.verdicts.push_back({"looped_dominating_or_unique_max", special ? "complete_bipartite" : "not_applicable",
                          special ? "K_{delta,n-delta} is the unique maximizer for n >= c_H * delta^2"
                                  : "neither a looped dominating vertex nor (sum d < Delta^2 with a unique degree-Delta vertex)"});

    if (delta >= 3) {
        if (below || special)
            r.verdicts.push_back({"min_degree_general", "complete_bipartite", "covered by the degree-sum condition"});
        else
            r.verdicts.push_back({"min_degree_general", "conjectural",
                                  "max{hom(K_{d+1})^(n/(d+1)), hom(K_{d,d})^(n/2d), hom(K_{d,n-d})} is conjectured"});
    }
    return r;
}

}  // namespace homx
