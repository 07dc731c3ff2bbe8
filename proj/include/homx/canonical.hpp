#pragma once

#include "homx/graph.hpp"

#include <compare>
#include <string>
#include <vector>

namespace homx {

/// Isomorphism-invariant key: the graph6 string of the canonically relabeled
/// graph. Equal iff the graphs are isomorphic.
struct CanonicalForm {
    std::string bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend std::strong_ordering operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
    /// order[i] is the original vertex placed at canonical position i.
    std::vector<Vertex> order;
    SimpleGraph graph;
};

/// Color refinement plus individualization search, pruned by automorphisms
/// (twin transpositions up front, leaf-derived ones as they are found).
/// Components are labeled independently and concatenated in sorted order.
CanonicalLabeling canonical_labeling(const SimpleGraph& g);
CanonicalForm canonical_form(const SimpleGraph& g);
bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

inline constexpr std::size_t kAllGraphsCap = 8;

/// Every graph on n <= 8 vertices up to isomorphism, canonically labeled and
/// sorted by canonical form. Built by adding one vertex at a time.
std::vector<SimpleGraph> all_graphs(std::size_t n);

/// Vertex sets of the connected components, each sorted, ordered by least vertex.
std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g);
std::vector<std::vector<Vertex>> connected_components(const TargetGraph& h);

}  // namespace homx
