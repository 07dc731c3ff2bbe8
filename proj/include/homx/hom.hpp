#pragma once

#include "homx/count.hpp"
#include "homx/graph.hpp"

#include <cstdint>
#include <vector>

namespace homx {

/// Order in which hom_brute colors the vertices of g: highest degree first,
/// then repeatedly the highest-degree vertex adjacent to an already ordered
/// one (ties by more ordered neighbors, then smaller id).
std::vector<Vertex> coloring_order(const SimpleGraph& g);

/// Number of adjacency-preserving maps V(G) -> V(H), by backtracking with
/// candidate sets cut down by already colored neighbors. Once the remaining
/// vertices are pairwise non-adjacent their choices multiply out.
Count hom_brute(const SimpleGraph& g, const TargetGraph& h);

/// hom_brute applied per connected component and multiplied.
Count hom(const SimpleGraph& g, const TargetGraph& h);

/// Z_Lambda(G,H): sum over homomorphisms f of prod_v lambda_{f(v)}.
Rational z_weighted(const SimpleGraph& g, const TargetGraph& h);

/// hom(K_{1,x-1}, H) = sum_v d(v)^(x-1).
Count hom_star(std::size_t x, const TargetGraph& h);

/// hom(C_k, H) = Tr A^k.
Count hom_cycle(std::size_t k, const TargetGraph& h);

/// Colorings of the k-vertex path with first vertex -> u and last -> v,
/// i.e. entry (u,v) of A^(k-1).
Count hom_path_pinned(std::size_t k, const TargetGraph& h, Vertex u, Vertex v);

inline constexpr std::size_t kDefaultTupleCap = 6;

/// Sum over a-tuples t of |common neighborhood of t|^b. The smaller class is
/// enumerated; throws ResourceError if both classes exceed `cap`.
Count hom_complete_bipartite(std::size_t a, std::size_t b, const TargetGraph& h, std::size_t cap = kDefaultTupleCap);

/// hom_complete_bipartite, falling back to hom_brute past the tuple cap.
Count hom_complete_bipartite_any(std::size_t a, std::size_t b, const TargetGraph& h);

/// k-tuples of pairwise adjacent vertices (repeats only on looped vertices).
Count hom_complete(std::size_t k, const TargetGraph& h);

/// A^k by repeated squaring, for any Eigen-compatible scalar.
template <class Scalar>
Matrix<Scalar> matrix_power(const Matrix<Scalar>& a, std::uint64_t k) {
    Matrix<Scalar> result = Matrix<Scalar>::Identity(a.rows(), a.cols());
    Matrix<Scalar> base = a;
    while (k > 0) {
        if (k & 1U)
            result = result * base;
        k >>= 1U;
        if (k > 0)
            base = base * base;
    }
    return result;
}

}  // namespace homx
