#pragma once

#include "homx/canonical.hpp"
#include "homx/count.hpp"
#include "homx/graph.hpp"

#include <atomic>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace homx {

enum class Source { generated_emc, graph6_stream, all_graphs_bruteforce };

struct Filters {
    std::optional<std::size_t> max_degree;
    std::optional<std::size_t> regular;
    bool bipartite = false;
};

/// A family of n-vertex graphs with minimum degree delta.
struct FamilySpec {
    std::size_t n = 0;
    std::size_t delta = 1;
    Source source = Source::generated_emc;
    Filters filters;
    /// Graphs for Source::graph6_stream, e.g. from read_graph6_stream.
    std::vector<SimpleGraph> supplied;
};

struct EvalOptions {
    unsigned jobs = 1;
    /// Checked between graphs; once set, evaluation stops and the result is
    /// marked truncated.
    const std::atomic<bool>* stop = nullptr;
};

/// Members of the family, pairwise non-isomorphic, canonically labeled and
/// sorted by canonical form. Supplied graphs must have n vertices and
/// minimum degree at least delta.
std::vector<SimpleGraph> enumerate_family(const FamilySpec& spec, unsigned jobs = 1);

struct Evaluated {
    CanonicalForm form;
    SimpleGraph graph;
    Count value;
    bool is_maximizer = false;
};

struct ArgMax {
    Count max;
    std::vector<Evaluated> witnesses;  // sorted by canonical form
    std::vector<Evaluated> rows;       // every evaluated member, family order
    bool truncated = false;
};

/// Exact maximum of hom(G,H) over the family, with every maximizer.
/// ParameterError on an empty family.
ArgMax argmax_hom(const std::vector<SimpleGraph>& family, const TargetGraph& h, const EvalOptions& options = {});
ArgMax argmax_hom(const FamilySpec& spec, const TargetGraph& h, const EvalOptions& options = {});

/// base^(n/root). A plain count C appears as (C, n).
struct PowerTerm {
    std::string label;
    Count base;
    std::size_t root = 1;
};

/// Orders base_a^(n/root_a) against base_b^(n/root_b).
std::strong_ordering compare_terms(const PowerTerm& a, const PowerTerm& b);
/// Orders term^(n/root) against a plain value.
std::strong_ordering compare_term_value(const PowerTerm& t, std::size_t n, const Count& value);
/// term^(n/root) as an exact integer when root divides n, else nullopt.
std::optional<Count> term_value(const PowerTerm& t, std::size_t n);

struct Bound {
    std::size_t n = 0;
    std::vector<PowerTerm> terms;
    Count k_delta_n_minus_delta;
    std::size_t attained = 0;          // index of a largest term
    std::vector<std::size_t> tied;     // every index equal to the largest
};

/// The three conjectured terms hom(K_{d+1})^(n/(d+1)), hom(K_{d,d})^(n/2d),
/// hom(K_{d,n-d}). With a max-degree filter D < n - delta the last becomes
/// hom(K_{d,D})^(n/(d+D)); with a regular filter r only the first two remain,
/// taken at r.
Bound conjecture_bound(std::size_t n, std::size_t delta, const TargetGraph& h, const Filters& filters = {});

struct SearchVerdict {
    std::size_t family_size = 0;
    Count max_value;
    std::vector<Evaluated> witnesses;
    Bound bound;
    bool conjecture_holds = false;
    std::vector<CanonicalForm> equality_graphs;
    std::vector<std::string> notes;
    bool truncated = false;
    std::vector<Evaluated> rows;
};

SearchVerdict verify_conjecture(const FamilySpec& spec, const TargetGraph& h, const EvalOptions& options = {});

struct CyclePartitionRow {
    std::vector<std::size_t> cycle_lengths;
    Count value;
    bool attains_bound = false;
};

struct TwoRegularVerdict {
    std::size_t n = 0;
    PowerTerm c3;
    PowerTerm c4;
    std::strong_ordering c3_vs_c4 = std::strong_ordering::equal;
    Count max_value;
    std::vector<CyclePartitionRow> rows;
};

/// Every 2-regular graph on n vertices as a cycle-length multiset, checked
/// against max{hom(C3)^(n/3), hom(C4)^(n/4)} and the equality
/// characterization. InvariantViolation on any violation or mismatch.
TwoRegularVerdict verify_2regular(std::size_t n, const TargetGraph& h);

/// Predicted maximum over minimum-degree-1 graphs (optionally max degree D)
/// and the graphs predicted to reach it.
struct Delta1Prediction {
    PowerTerm bound;
    /// Every graph ties (H = K_q^loop).
    bool everything_ties = false;
    std::vector<CanonicalForm> equality;
};

Delta1Prediction predict_min_degree_1(std::size_t n, const TargetGraph& h, std::optional<std::size_t> max_degree = {});

/// Smallest n in [n_min, n_max] from which K_{2,n-2} is the unique maximizer
/// over edge-min-critical minimum-degree-2 graphs at every tested size up to
/// n_max. Empirical; not the constant c_H.
std::optional<std::size_t> empirical_threshold(const TargetGraph& h, std::size_t n_min, std::size_t n_max,
                                               const EvalOptions& options = {});

}  // namespace homx
