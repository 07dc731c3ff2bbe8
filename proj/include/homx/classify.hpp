#pragma once

#include "homx/count.hpp"
#include "homx/graph.hpp"
#include "homx/hom.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace homx {

/// One exact (or flagged approximate) comparison behind a verdict.
struct Comparison {
    std::string name;
    std::string lhs;
    std::string rhs;
    std::strong_ordering op = std::strong_ordering::equal;
    bool exact = true;
};

/// Sum of degrees against Delta^2.
std::strong_ordering degree_condition(const TargetGraph& h);

struct N0Result {
    std::size_t n0 = 0;
    /// (sum d)^(n0-1) == (sum d^(n0-2))^2: the star ties the matching at n0-1.
    bool boundary_equality = false;
};

inline constexpr std::size_t kN0IterationCap = 10000;

/// Smallest n0 >= 3 with (sum d)^n0 < (sum d^(n0-1))^2.
/// RegimeError unless sum d < Delta^2.
N0Result compute_n0(const TargetGraph& h);

enum class Delta2Regime { cycles, bipartite };

struct Delta2Verdict {
    Delta2Regime regime = Delta2Regime::bipartite;
    Count c3;
    Count c4;
    std::strong_ordering c3_vs_delta3 = std::strong_ordering::equal;  // hom(C3,H) vs Delta^3
    std::strong_ordering c4_vs_delta4 = std::strong_ordering::equal;  // hom(C4,H) vs Delta^4
    std::strong_ordering c3_vs_c4 = std::strong_ordering::equal;      // hom(C3)^(1/3) vs hom(C4)^(1/4)
};

/// Cycles regime when max{hom(C3)^(1/3), hom(C4)^(1/4)} >= Delta, else bipartite.
Delta2Verdict regime_delta2(const TargetGraph& h);

struct SDelta {
    Count count;
    /// Filled only when enumeration was requested.
    std::vector<std::vector<Vertex>> tuples;
};

/// delta-tuples of H-vertices whose common neighborhood has exactly Delta vertices.
SDelta s_delta(const TargetGraph& h, std::size_t delta, bool enumerate = false, std::size_t cap = kDefaultTupleCap);

struct StructureFlags {
    bool has_k_delta_loop_component = false;
    bool has_k_delta_delta_component = false;
    bool looped_dominating_vertex = false;
    bool unique_max_degree_vertex = false;
    bool shared_max_degree_neighborhoods = false;
};

StructureFlags structure_flags(const TargetGraph& h);

/// Entry i orders f(x) against f(x+1) for x = i + 2, where
/// f(x) = (sum_v d(v)^(x-1))^(1/x). InvariantViolation on two or more sign changes.
std::vector<std::strong_ordering> star_sequence_profile(const TargetGraph& h, std::size_t x_max);

/// Number of strict direction changes in a profile, equal steps skipped.
std::size_t sign_changes(const std::vector<std::strong_ordering>& profile);

struct PathSpotCheck {
    std::size_t k = 0;
    Count max_entry;  // max over (u,v) of (A^(k-1))_{uv}
    Count lhs;        // q^2 * max_entry
    Count rhs;        // Delta^(k-4)
    bool holds = false;
};

struct PathThreshold {
    std::size_t l_h = 0;
    double c = 0;
    std::vector<double> lambda1_per_component;
    std::vector<double> c_per_component;
    std::vector<PathSpotCheck> spot_checks;
    bool approximate = true;
};

/// Least l with c * lambda1^k < Delta^(k-4) / q^2 for all k >= l, taken over
/// components, from power iteration. Requires the bipartite regime.
PathThreshold path_threshold(const TargetGraph& h, double tolerance = 1e-9);

struct P4Bound {
    Count max_pinned;
    bool strict = false;
};

/// Largest pinned count of P4 colorings against Delta^2.
P4Bound p4_bound_check(const TargetGraph& h);

/// delta * log(Delta) / log(Delta^2 / sum d); nullopt unless sum d < Delta^2.
std::optional<double> c_h(const TargetGraph& h, std::size_t delta);

struct Verdict {
    std::string name;
    std::string tag;
    std::string detail;
};

struct RegimeReport {
    std::size_t delta = 0;
    Count sum_d;
    std::size_t max_deg = 0;
    std::strong_ordering degree_vs_delta_squared = std::strong_ordering::equal;
    std::optional<N0Result> n0;
    Delta2Verdict delta2;
    Count s_delta;
    StructureFlags flags;
    P4Bound p4;
    std::vector<std::strong_ordering> star_profile;
    std::optional<PathThreshold> path;
    std::optional<double> c_h;
    std::vector<Verdict> verdicts;
    std::vector<Comparison> comparisons;
};

/// Everything above for one target and intended minimum degree.
RegimeReport classify(const TargetGraph& h, std::size_t delta);

}  // namespace homx
