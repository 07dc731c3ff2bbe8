#include "homx/canonical.hpp"
#include "homx/classify.hpp"
#include "homx/error.hpp"
#include "homx/families.hpp"
#include "homx/hom.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace homx;

namespace {

constexpr auto kLess = std::strong_ordering::less;
constexpr auto kEqual = std::strong_ordering::equal;
constexpr auto kGreater = std::strong_ordering::greater;

// Path on three vertices with a loop on vertex 0.
TargetGraph looped_endpoint_p3() { return TargetGraph({0b011, 0b101, 0b010}); }

std::size_t brute_degree(const TargetGraph& h, Vertex v) {
    std::size_t d = 0;
    for (Vertex u = 0; u < h.order(); ++u)
        d += h.adjacent(v, u) ? 1 : 0;
    return d;
}

std::size_t brute_max_degree(const TargetGraph& h) {
    std::size_t best = 0;
    for (Vertex v = 0; v < h.order(); ++v)
        best = std::max(best, brute_degree(h, v));
    return best;
}

// Tuples of length delta whose common neighborhood has max-degree size, by odometer.
std::uint64_t brute_s_delta(const TargetGraph& h, std::size_t delta) {
    const std::size_t q = h.order();
    const std::size_t top = brute_max_degree(h);
    std::vector<Vertex> t(delta, 0);
    std::uint64_t count = 0;
    while (true) {
        std::size_t common = 0;
        for (Vertex w = 0; w < q; ++w) {
            bool all = true;
            for (Vertex x : t)
                all = all && h.adjacent(x, w);
            common += all ? 1 : 0;
        }
        count += common == top ? 1 : 0;
        std::size_t i = 0;
        while (i < delta && ++t[i] == q)
            t[i++] = 0;
        if (i == delta)
            break;
    }
    return count;
}

std::uint64_t brute_pinned_p4(const TargetGraph& h, Vertex u, Vertex v) {
    std::uint64_t count = 0;
    for (Vertex a = 0; a < h.order(); ++a)
        for (Vertex b = 0; b < h.order(); ++b)
            count += (h.adjacent(u, a) && h.adjacent(a, b) && h.adjacent(b, v)) ? 1 : 0;
    return count;
}

SimpleGraph loopless_part(const TargetGraph& h, const std::vector<Vertex>& comp) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = i + 1; j < comp.size(); ++j)
            if (h.adjacent(comp[i], comp[j]))
                edges.emplace_back(i, j);
    return SimpleGraph(comp.size(), edges);
}

}  // namespace

TEST_CASE("degree_condition examples") {
    CHECK(degree_condition(h_wr()) == kLess);
    CHECK(degree_condition(looped_endpoint_p3()) == kGreater);
    CHECK(degree_sum(looped_endpoint_p3()) == Count(5));
    CHECK(max_degree(looped_endpoint_p3()) == 2);
    for (std::size_t q = 1; q <= 5; ++q)
        CHECK(degree_condition(looped_complete(q)) == kEqual);
}

TEST_CASE("compute_n0") {
    auto ind = compute_n0(h_ind());
    CHECK(ind.n0 == 5);
    CHECK(ind.boundary_equality);
    auto wr = compute_n0(h_wr());
    CHECK(wr.n0 == 8);
    CHECK_THROWS_AS(compute_n0(as_target(complete(2))), RegimeError);
    CHECK_THROWS_AS(compute_n0(looped_complete(3)), RegimeError);
}

TEST_CASE("compute_n0 matches a direct search with 64-bit arithmetic") {
    for (const auto& h : testing::all_targets_up_to(3)) {
        if (degree_condition(h) != kLess)
            continue;
        auto s = [&](std::size_t e) {
            long double total = 0;
            for (Vertex v = 0; v < h.order(); ++v)
                total += std::pow(static_cast<long double>(brute_degree(h, v)), static_cast<long double>(e));
            return total;
        };
        const long double sum = s(1);
        std::size_t n0 = 3;
        while (!(std::pow(sum, static_cast<long double>(n0)) < s(n0 - 1) * s(n0 - 1)))
            ++n0;
        CHECK(compute_n0(h).n0 == n0);
    }
}

TEST_CASE("regime_delta2 examples") {
    auto ind = regime_delta2(h_ind());
    CHECK(ind.regime == Delta2Regime::bipartite);
    CHECK(ind.c3 == Count(4));
    CHECK(ind.c4 == Count(7));

    auto k3 = regime_delta2(complete_target(3));
    CHECK(k3.regime == Delta2Regime::cycles);
    CHECK(k3.c4_vs_delta4 == kGreater);
    CHECK(k3.c3_vs_c4 == kLess);

    auto p3 = regime_delta2(looped_endpoint_p3());
    CHECK(p3.regime == Delta2Regime::bipartite);
    CHECK(p3.c3 == Count(4));
    CHECK(p3.c4 == Count(13));

    CHECK(regime_delta2(looped_complete(3)).regime == Delta2Regime::cycles);
}

TEST_CASE("s_delta examples") {
    auto ind = s_delta(h_ind(), 2, true);
    CHECK(ind.count == Count(1));
    REQUIRE(ind.tuples.size() == 1);
    CHECK(ind.tuples[0] == std::vector<Vertex>{1, 1});
    for (std::size_t q = 1; q <= 3; ++q)
        for (std::size_t d = 1; d <= 3; ++d)
            CHECK(s_delta(looped_complete(q), d).count == pow(Count(q), d));
    auto wr = s_delta(h_wr(), 2, true);
    CHECK(wr.count == Count(1));
    CHECK(wr.tuples[0] == std::vector<Vertex>{1, 1});
    CHECK_THROWS_AS(s_delta(h_ind(), 7), ResourceError);
}

TEST_CASE("structure_flags examples") {
    CHECK(structure_flags(h_wr()).looped_dominating_vertex);
    auto mixed = structure_flags(disjoint_union(as_target(complete(2)), looped_vertices(1)));
    CHECK(mixed.has_k_delta_loop_component);
    CHECK(mixed.has_k_delta_delta_component);
    auto ind = structure_flags(h_ind());
    CHECK_FALSE(ind.has_k_delta_loop_component);
    CHECK_FALSE(ind.has_k_delta_delta_component);
    CHECK(ind.unique_max_degree_vertex);
    CHECK(structure_flags(as_target(cycle(4))).has_k_delta_delta_component);
}

TEST_CASE("star_sequence_profile examples") {
    auto ind = star_sequence_profile(h_ind(), 8);
    REQUIRE(ind.size() == 7);
    CHECK(ind[0] == kGreater);
    for (std::size_t i = 1; i < ind.size(); ++i)
        CHECK(ind[i] == kLess);
    CHECK(sign_changes(ind) == 1);
    for (auto o : star_sequence_profile(looped_complete(3), 8))
        CHECK(o == kEqual);
    for (auto o : star_sequence_profile(as_target(complete(2)), 8))
        CHECK(o == kGreater);
    CHECK_THROWS_AS(star_sequence_profile(h_ind(), 2), ParameterError);
}

TEST_CASE("path_threshold") {
    auto p = path_threshold(h_ind(), 1e-9);
    REQUIRE(p.lambda1_per_component.size() == 1);
    CHECK(p.lambda1_per_component[0] == doctest::Approx(1.6180339887).epsilon(1e-8));
    CHECK(p.c == doctest::Approx(1.6180339887).epsilon(1e-6));
    CHECK(p.l_h == 22);
    CHECK(p.approximate);
    REQUIRE(p.spot_checks.size() == 5);
    for (const auto& s : p.spot_checks)
        CHECK(s.holds);
    CHECK(p.spot_checks[0].max_entry == Count(17711));
    CHECK_THROWS_AS(path_threshold(looped_complete(3)), RegimeError);
    CHECK_THROWS_AS(path_threshold(as_target(complete(2))), RegimeError);
}

TEST_CASE("p4_bound_check examples") {
    auto ind = p4_bound_check(h_ind());
    CHECK(ind.max_pinned == Count(3));
    CHECK(ind.strict);
    auto loop2 = p4_bound_check(looped_complete(2));
    CHECK(loop2.max_pinned == Count(4));
    CHECK_FALSE(loop2.strict);
    auto c4 = p4_bound_check(as_target(cycle(4)));
    CHECK(c4.max_pinned == Count(4));
    CHECK_FALSE(c4.strict);
}

TEST_CASE("classification re-derives from brute force for every target with q <= 4") {
    std::size_t checked = 0;
    for (const auto& h : testing::all_targets_up_to(4)) {
        const std::size_t top = brute_max_degree(h);
        std::uint64_t sum = 0;
        for (Vertex v = 0; v < h.order(); ++v)
            sum += brute_degree(h, v);
        REQUIRE(degree_condition(h) == (sum <=> top * top));

        const std::uint64_t c3 = testing::hom_by_all_maps(cycle(3), h);
        const std::uint64_t c4 = testing::hom_by_all_maps(cycle(4), h);
        const bool bipartite = c3 < top * top * top && c4 < top * top * top * top;
        REQUIRE((regime_delta2(h).regime == Delta2Regime::bipartite) == bipartite);

        for (std::size_t d = 1; d <= 3; ++d)
            REQUIRE(s_delta(h, d).count == Count(brute_s_delta(h, d)));

        const auto flags = structure_flags(h);
        bool loop_comp = false;
        bool kdd_comp = false;
        for (const auto& comp : connected_components(h)) {
            bool all_looped = true;
            bool any_loop = false;
            for (Vertex v : comp) {
                all_looped = all_looped && h.looped(v);
                any_loop = any_loop || h.looped(v);
            }
            const SimpleGraph plain = loopless_part(h, comp);
            loop_comp = loop_comp || (all_looped && is_isomorphic(plain, complete(top)));
            kdd_comp = kdd_comp || (!any_loop && is_isomorphic(plain, complete_bipartite(top, top)));
        }
        REQUIRE(flags.has_k_delta_loop_component == loop_comp);
        REQUIRE(flags.has_k_delta_delta_component == kdd_comp);
        std::size_t at_top = 0;
        bool dominating = false;
        for (Vertex v = 0; v < h.order(); ++v) {
            at_top += brute_degree(h, v) == top ? 1 : 0;
            dominating = dominating || (h.looped(v) && brute_degree(h, v) == h.order());
        }
        REQUIRE(flags.unique_max_degree_vertex == (at_top == 1));
        REQUIRE(flags.looped_dominating_vertex == dominating);

        std::uint64_t best = 0;
        for (Vertex u = 0; u < h.order(); ++u)
            for (Vertex v = 0; v < h.order(); ++v) {
                const std::uint64_t pinned = brute_pinned_p4(h, u, v);
                REQUIRE(hom_path_pinned(4, h, u, v) == Count(pinned));
                best = std::max(best, pinned);
            }
        const auto p4 = p4_bound_check(h);
        REQUIRE(p4.max_pinned == Count(best));
        REQUIRE(p4.strict == (best < top * top));
        if (!loop_comp && !kdd_comp)
            REQUIRE(p4.strict);
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("star sequence changes direction at most once") {
    for (const auto& h : testing::all_targets_up_to(4))
        REQUIRE(sign_changes(star_sequence_profile(h, 16)) <= 1);
}

TEST_CASE("with sum d >= Delta^2 the star never beats the edge") {
    for (const auto& h : testing::all_targets_up_to(4)) {
        if (degree_condition(h) == kLess || is_fully_looped_complete(h))
            continue;
        const Count s2 = degree_sum(h);
        for (std::size_t x = 3; x <= 10; ++x)
            REQUIRE(cmp_root_powers(hom_star(x, h), x, s2, 2) == kLess);
    }
}

TEST_CASE("complete bipartite graphs dominate s(delta,H) Delta^(n-delta)") {
    for (const auto& h : testing::all_targets_up_to(4)) {
        const Count top = max_degree(h);
        for (std::size_t delta = 1; delta <= 3; ++delta) {
            const Count s = s_delta(h, delta).count;
            REQUIRE(s >= Count(1));
            for (std::size_t n = delta + 1; n <= 12; ++n)
                REQUIRE(hom_complete_bipartite(delta, n - delta, h) >= s * pow(top, n - delta));
        }
    }
}

TEST_CASE("path threshold spot checks hold across the bipartite regime for q <= 4") {
    for (const auto& h : testing::all_targets_up_to(4)) {
        if (regime_delta2(h).regime != Delta2Regime::bipartite)
            continue;
        const auto p = path_threshold(h);
        for (const auto& s : p.spot_checks)
            REQUIRE(s.holds);
    }
}

TEST_CASE("classify reports") {
    auto wr = classify(h_wr(), 2);
    CHECK(wr.sum_d == Count(7));
    CHECK(wr.max_deg == 3);
    CHECK(wr.degree_vs_delta_squared == kLess);
    CHECK(wr.flags.looped_dominating_vertex);
    REQUIRE(wr.n0);
    CHECK(wr.n0->n0 == 8);
    bool found = false;
    for (const auto& v : wr.verdicts)
        if (v.name == "degree_sum_below_delta_squared") {
            found = true;
            CHECK(v.tag == "complete_bipartite");
        }
    CHECK(found);
    for (const auto& c : wr.comparisons)
        if (c.exact)
            CHECK(Count::from_string(c.lhs) <=> Count::from_string(c.rhs) == c.op);

    auto k2 = classify(as_target(complete(2)), 1);
    CHECK_FALSE(k2.n0);
    CHECK(k2.verdicts[0].tag == "perfect_matching");
    CHECK_FALSE(k2.path);

    auto tie = classify(looped_vertices(1), 3);
    CHECK(tie.verdicts[0].tag == "trivial");
    CHECK_THROWS_AS(classify(h_ind(), 0), ParameterError);
}
