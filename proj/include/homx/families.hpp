#pragma once

#include "homx/graph.hpp"

#include <variant>
#include <vector>

namespace homx {

// Named graphs with documented vertex order:
//   complete_bipartite(a,b): class of size a is 0..a-1, the other a..a+b-1
//   cycle(n), path(n):       vertices in walk order
//   star(n):                 K_{1,n-1}, center 0

SimpleGraph empty_graph(std::size_t n);
SimpleGraph complete(std::size_t n);
SimpleGraph complete_bipartite(std::size_t a, std::size_t b);
SimpleGraph cycle(std::size_t n);
SimpleGraph path(std::size_t n);
SimpleGraph star(std::size_t n);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);
SimpleGraph disjoint_union(std::span<const SimpleGraph> parts);
SimpleGraph copies(const SimpleGraph& g, std::size_t count);

/// K_q^loop.
TargetGraph looped_complete(std::size_t q);
/// K_q as a target (proper q-colorings).
TargetGraph complete_target(std::size_t q);
/// Edge u–w with a loop on w; vertex 0 = u, vertex 1 = w (inline "01/11").
TargetGraph h_ind();
/// Fully looped path a–b–c, vertices in path order.
TargetGraph h_wr();
/// H(k): vertices 0..k, i ~ j iff i + j <= k.
TargetGraph hard_core(std::size_t k);
/// `count` isolated looped vertices.
TargetGraph looped_vertices(std::size_t count);
/// A loopless graph without isolated vertices, viewed as a target.
TargetGraph as_target(const SimpleGraph& g);
TargetGraph disjoint_union(const TargetGraph& a, const TargetGraph& b);

enum class FamilyKind {
    complete,
    complete_bipartite,
    cycle,
    path,
    star,
    disjoint_union,
    looped_complete,
    h_ind,
    h_wr,
    hard_core_k
};

/// Parameterized constructor over FamilyKind. disjoint_union takes a list of
/// cycle lengths. Throws ParameterError on inconsistent parameters.
std::variant<SimpleGraph, TargetGraph> make_family(FamilyKind kind, std::span<const std::size_t> params);

}  // namespace homx
