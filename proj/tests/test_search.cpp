#include "homx/classify.hpp"
#include "homx/error.hpp"
#include "homx/families.hpp"
#include "homx/graph6.hpp"
#include "homx/hom.hpp"
#include "homx/search.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace homx;

namespace {

TargetGraph two_looped() { return looped_vertices(2); }

TargetGraph h_tie() {
    TargetGraph h = looped_vertices(8);
    for (int i = 0; i < 4; ++i)
        h = disjoint_union(h, as_target(complete(2)));
    return h;
}

FamilySpec emc(std::size_t n, std::size_t delta) { return FamilySpec{n, delta, Source::generated_emc, {}, {}}; }

std::set<CanonicalForm> forms(const std::vector<SimpleGraph>& graphs) {
    std::set<CanonicalForm> out;
    for (const auto& g : graphs)
        out.insert(canonical_form(g));
    return out;
}

}  // namespace

TEST_CASE("enumerate_family examples") {
    CHECK(enumerate_family(emc(5, 2)).size() == 3);
    CHECK(enumerate_family(emc(4, 1)).size() == 2);
    FamilySpec regular{6, 2, Source::all_graphs_bruteforce, {}, {}};
    regular.filters.regular = 2;
    CHECK(forms(enumerate_family(regular)) == forms({cycle(6), copies(cycle(3), 2)}));
    CHECK_THROWS_AS(enumerate_family(FamilySpec{9, 2, Source::all_graphs_bruteforce, {}, {}}), ParameterError);
    CHECK_THROWS_AS(enumerate_family(emc(6, 3)), ParameterError);
}

TEST_CASE("graph6 stream families are validated and deduplicated") {
    std::istringstream in("C]\nC]\n\nC~\n");
    FamilySpec spec{4, 2, Source::graph6_stream, {}, read_graph6_stream(in)};
    CHECK(spec.supplied.size() == 3);
    CHECK(enumerate_family(spec).size() == 2);
    spec.n = 5;
    CHECK_THROWS_AS(enumerate_family(spec), ParameterError);
    spec.n = 4;
    spec.delta = 3;
    CHECK_THROWS_AS(enumerate_family(spec), ParameterError);
    std::istringstream bad("Cr\nC\n");
    CHECK_THROWS_AS(read_graph6_stream(bad), FormatError);
}

TEST_CASE("argmax_hom examples") {
    auto ind = argmax_hom(emc(8, 2), h_ind());
    CHECK(ind.max == Count(67));
    REQUIRE(ind.witnesses.size() == 1);
    CHECK(is_isomorphic(ind.witnesses[0].graph, complete_bipartite(2, 6)));

    auto loops = argmax_hom(emc(12, 2), two_looped());
    CHECK(loops.max == Count(16));
    REQUIRE(loops.witnesses.size() == 1);
    CHECK(is_isomorphic(loops.witnesses[0].graph, copies(cycle(3), 4)));

    auto k3 = argmax_hom(emc(12, 2), complete_target(3));
    CHECK(k3.max == Count(5832));
    REQUIRE(k3.witnesses.size() == 1);
    CHECK(is_isomorphic(k3.witnesses[0].graph, copies(cycle(4), 3)));

    CHECK_THROWS_AS(argmax_hom(std::vector<SimpleGraph>{}, h_ind()), ParameterError);
}

TEST_CASE("argmax is identical for any number of jobs") {
    const auto family = enumerate_family(emc(11, 2));
    const auto one = argmax_hom(family, h_wr(), {1, nullptr});
    const auto many = argmax_hom(family, h_wr(), {5, nullptr});
    CHECK(one.max == many.max);
    REQUIRE(one.rows.size() == many.rows.size());
    for (std::size_t i = 0; i < one.rows.size(); ++i) {
        CHECK(one.rows[i].form == many.rows[i].form);
        CHECK(one.rows[i].value == many.rows[i].value);
    }
    REQUIRE(one.witnesses.size() == many.witnesses.size());
    for (std::size_t i = 0; i < one.witnesses.size(); ++i)
        CHECK(one.witnesses[i].form == many.witnesses[i].form);
}

TEST_CASE("a raised stop flag truncates evaluation") {
    std::atomic<bool> stop{true};
    const auto result = argmax_hom(enumerate_family(emc(9, 2)), h_ind(), {2, &stop});
    CHECK(result.truncated);
    CHECK(result.rows.empty());
}

TEST_CASE("conjecture_bound examples") {
    auto ind = conjecture_bound(12, 2, h_ind());
    REQUIRE(ind.terms.size() == 3);
    CHECK(term_value(ind.terms[0], 12) == Count(256));
    CHECK(term_value(ind.terms[1], 12) == Count(343));
    CHECK(term_value(ind.terms[2], 12) == Count(1027));
    CHECK(ind.k_delta_n_minus_delta == Count(1027));
    CHECK(ind.attained == 2);

    auto k3 = conjecture_bound(12, 2, complete_target(3));
    CHECK(k3.attained == 1);
    CHECK(term_value(k3.terms[1], 12) == Count(5832));

    for (std::size_t q = 1; q <= 3; ++q) {
        auto loop = conjecture_bound(7, 2, looped_complete(q));
        CHECK(loop.tied.size() == 3);
        for (const auto& t : loop.terms)
            CHECK(compare_term_value(t, 7, pow(Count(q), 7)) == std::strong_ordering::equal);
    }
}

TEST_CASE("fractional exponents are compared exactly") {
    auto b = conjecture_bound(7, 2, h_ind());
    CHECK_FALSE(term_value(b.terms[0], 7));
    // 4^(7/3) ~ 25.4, 7^(7/4) ~ 30.1, hom(K_{2,5}) = 35
    CHECK(b.attained == 2);
    CHECK(compare_term_value(b.terms[0], 7, 25) == std::strong_ordering::greater);
    CHECK(compare_term_value(b.terms[0], 7, 26) == std::strong_ordering::less);
}

TEST_CASE("verify_conjecture examples") {
    auto ind = verify_conjecture(emc(8, 2), h_ind());
    CHECK(ind.conjecture_holds);
    REQUIRE(ind.equality_graphs.size() == 1);
    CHECK(ind.equality_graphs[0] == canonical_form(complete_bipartite(2, 6)));

    FamilySpec capped = emc(12, 1);
    capped.filters.max_degree = 3;
    auto capped_result = verify_conjecture(capped, h_ind());
    CHECK(capped_result.conjecture_holds);
    CHECK(capped_result.max_value == Count(729));
    const std::set<CanonicalForm> expected{
        canonical_form(copies(star(4), 3)), canonical_form(copies(complete(2), 6)),
        canonical_form(disjoint_union(copies(star(4), 2), copies(complete(2), 2))),
        canonical_form(disjoint_union(star(4), copies(complete(2), 4)))};
    CHECK(std::set<CanonicalForm>(capped_result.equality_graphs.begin(), capped_result.equality_graphs.end()) == expected);

    auto loops = verify_conjecture(FamilySpec{6, 2, Source::all_graphs_bruteforce, {}, {}}, two_looped());
    CHECK(loops.conjecture_holds);
    CHECK(loops.max_value == Count(4));
    REQUIRE(loops.equality_graphs.size() == 1);
    CHECK(loops.equality_graphs[0] == canonical_form(copies(cycle(3), 2)));
}

TEST_CASE("verify_2regular examples") {
    auto k3 = verify_2regular(12, complete_target(3));
    CHECK(k3.max_value == Count(5832));
    std::size_t attaining = 0;
    for (const auto& row : k3.rows)
        if (row.attains_bound) {
            ++attaining;
            CHECK(row.cycle_lengths == std::vector<std::size_t>{4, 4, 4});
        }
    CHECK(attaining == 1);

    auto tie = verify_2regular(12, h_tie());
    CHECK(tie.c3_vs_c4 == std::strong_ordering::equal);
    for (const auto& row : tie.rows) {
        const bool mixture = std::all_of(row.cycle_lengths.begin(), row.cycle_lengths.end(),
                                         [](std::size_t k) { return k == 3 || k == 4; });
        CHECK(row.attains_bound == mixture);
    }
    auto tie7 = verify_2regular(7, h_tie());
    for (const auto& row : tie7.rows)
        CHECK(row.attains_bound == (row.cycle_lengths == std::vector<std::size_t>{4, 3}));

    for (const auto& row : verify_2regular(7, looped_complete(3)).rows) {
        CHECK(row.value == pow(Count(3), 7));
        CHECK(row.attains_bound);
    }
    CHECK_THROWS_AS(verify_2regular(2, h_ind()), ParameterError);
}

TEST_CASE("2-regular values agree with counting the graphs directly") {
    for (const auto& h : testing::all_targets_up_to(3)) {
        const auto v = verify_2regular(9, h);
        for (const auto& row : v.rows) {
            std::vector<SimpleGraph> cycles;
            for (std::size_t k : row.cycle_lengths)
                cycles.push_back(cycle(k));
            REQUIRE(hom_brute(disjoint_union(cycles), h) == row.value);
        }
    }
}

TEST_CASE("edge-min-critical and exhaustive families share the maximum") {
    for (std::size_t delta = 1; delta <= 2; ++delta)
        for (std::size_t n = delta + 2; n <= 8; ++n) {
            const auto all = enumerate_family(FamilySpec{n, delta, Source::all_graphs_bruteforce, {}, {}});
            const auto critical = enumerate_family(emc(n, delta));
            for (const auto& h : testing::all_targets_up_to(3)) {
                const auto a = argmax_hom(all, h);
                const auto c = argmax_hom(critical, h);
                REQUIRE(a.max == c.max);
                std::set<CanonicalForm> all_w;
                for (const auto& w : a.witnesses)
                    all_w.insert(w.form);
                for (const auto& w : c.witnesses)
                    REQUIRE(all_w.count(w.form) == 1);
            }
        }
}

TEST_CASE("empirical threshold") {
    CHECK(empirical_threshold(h_ind(), 4, 9) == std::optional<std::size_t>(6));
    CHECK(empirical_threshold(h_ind(), 6, 9) == std::optional<std::size_t>(6));
    CHECK_FALSE(empirical_threshold(complete_target(3), 4, 8));
    CHECK_THROWS_AS(empirical_threshold(h_ind(), 3, 8), ParameterError);
}

TEST_CASE("minimum degree 1: exhaustive maxima and equality sets for q <= 3, 2 <= n <= 10") {
    CHECK(compute_n0(h_ind()).n0 == 5);
    CHECK(hom(copies(complete(2), 2), h_ind()) == Count(9));
    CHECK(hom(star(4), h_ind()) == Count(9));

    std::vector<std::vector<SimpleGraph>> families(11);
    for (std::size_t n = 2; n <= 10; ++n)
        families[n] = enumerate_family(n <= kAllGraphsCap ? FamilySpec{n, 1, Source::all_graphs_bruteforce, {}, {}} : emc(n, 1));

    for (const auto& h : testing::all_targets_up_to(3)) {
        const bool loop_complete = is_fully_looped_complete(h);
        const Count sum_d = degree_sum(h);
        const Count max_deg(max_degree(h));
        const bool small_sum = sum_d < max_deg * max_deg;
        const auto n0 = small_sum ? std::optional(compute_n0(h)) : std::nullopt;
        for (std::size_t n = 2; n <= 10; ++n) {
            const auto best = argmax_hom(families[n], h);
            const auto predicted = predict_min_degree_1(n, h);
            if (loop_complete) {
                REQUIRE(best.max == pow(Count(h.order()), n));
                REQUIRE(best.witnesses.size() == families[n].size());
                REQUIRE(predicted.everything_ties);
                continue;
            }
            PowerTerm bound{"", sum_d, 2};
            std::set<CanonicalForm> equality;
            if (n % 2 == 0)
                equality.insert(canonical_form(copies(complete(2), n / 2)));
            if (n0 && n >= n0->n0) {
                bound = PowerTerm{"", hom_star(n, h), n};
                equality = {canonical_form(star(n))};
            } else if (n0 && n + 1 == n0->n0 && n0->boundary_equality) {
                equality.insert(canonical_form(star(n)));
            }
            REQUIRE(compare_terms(bound, predicted.bound) == std::strong_ordering::equal);
            REQUIRE(std::set<CanonicalForm>(predicted.equality.begin(), predicted.equality.end()) == equality);
            if (equality.empty()) {
                REQUIRE(compare_term_value(bound, n, best.max) == std::strong_ordering::greater);
            } else {
                REQUIRE(compare_term_value(bound, n, best.max) == std::strong_ordering::equal);
                std::set<CanonicalForm> witnesses;
                for (const auto& w : best.witnesses)
                    witnesses.insert(w.form);
                REQUIRE(witnesses == equality);
            }
        }
    }
}
