#pragma once

#include "homx/graph.hpp"

#include <vector>

namespace homx {

/// Minimum degree is `delta` and deleting any edge lowers it.
/// ParameterError unless min_degree(g) == delta.
bool is_edge_min_critical(const SimpleGraph& g, std::size_t delta);

/// A path on k >= 2 new vertices whose first vertex joins attach_a and last
/// vertex joins attach_b.
struct PathAddition {
    std::size_t k = 0;
    Vertex attach_a = 0;
    Vertex attach_b = 0;
    friend bool operator==(const PathAddition&, const PathAddition&) = default;
};

/// A new vertex joined to two distinct non-adjacent existing vertices.
struct PendantAddition {
    Vertex a = 0;
    Vertex b = 0;
    friend bool operator==(const PendantAddition&, const PendantAddition&) = default;
};

/// Build record of a minimum-degree-2 graph. Vertex ids follow rebuild():
/// cycles first (consecutive ids, in cyclic order), then each path's vertices
/// from the attach_a end, then pendants.
struct EarDecomposition {
    std::vector<std::size_t> base_cycles;
    std::vector<PathAddition> path_additions;
    std::vector<PendantAddition> pendant_additions;
    /// vertex_map[i]: vertex of the decomposed graph that rebuild() numbers i.
    /// Empty for hand-built records.
    std::vector<Vertex> vertex_map;
};

/// ConstructionError names the offending step if an attachment breaks the rules.
SimpleGraph rebuild(const EarDecomposition& d);

/// Repeatedly strips a maximal thread of degree-2 vertices whose attachments
/// are equal or non-adjacent and keep minimum degree 2, until only cycles
/// remain. Among candidates the one with the smallest (sorted) attachment pair,
/// then smallest thread vertex, goes first. Single-vertex threads become
/// pendants at the end of the record.
/// ParameterError unless g is edge-min-critical with delta = 2.
EarDecomposition decompose_delta2(const SimpleGraph& g);

/// Edge-min-critical graphs on n vertices for delta in {1, 2}, pairwise
/// non-isomorphic, sorted by canonical form. ParameterError otherwise.
std::vector<SimpleGraph> generate_emc(std::size_t n, std::size_t delta, unsigned jobs = 1);

struct MatchingPartition {
    std::vector<Edge> matching;
    std::vector<Vertex> i;  // unmatched
    std::vector<Vertex> j;  // per matched edge, the endpoint with more neighbors in I
    std::vector<Vertex> k;  // per matched edge, the other endpoint
};

inline constexpr std::size_t kMatchingVertexCap = 40;

/// A maximum matching by memoized search over sets of still-free vertices.
std::vector<Edge> maximum_matching(const SimpleGraph& g);

/// Maximum matching plus the I/J/K split (ties to the smaller id). Checks that
/// I is independent, that no matched edge has one endpoint with >= 2 and the
/// other with >= 1 neighbors in I, and that at most |M| vertices of I see
/// both ends of a matched edge; InvariantViolation otherwise.
MatchingPartition matching_partition(const SimpleGraph& g);

}  // namespace homx
