#pragma once

#include "homx/count.hpp"

#include <Eigen/Core>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace homx {

using Vertex = std::size_t;
using Mask = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Both graph types store adjacency as one 64-bit row per vertex.
inline constexpr std::size_t kMaxVertices = 64;

inline Mask bit(Vertex v) { return Mask{1} << v; }
inline std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }
inline Mask low_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Loopless undirected graph on vertices 0..n-1. Immutable value type.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n);
    /// Throws ParameterError on loops, duplicate edges or out-of-range endpoints.
    SimpleGraph(std::size_t n, std::span<const Edge> edges);
    SimpleGraph(std::size_t n, std::initializer_list<Edge> edges)
        : SimpleGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    /// Rows must be symmetric with a zero diagonal.
    static SimpleGraph from_rows(std::vector<Mask> rows);

    std::size_t order() const noexcept { return rows_.size(); }
    std::size_t edge_count() const;
    bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
    Mask neighbors(Vertex v) const { return rows_[v]; }
    std::size_t degree(Vertex v) const { return popcount(rows_[v]); }
    const std::vector<Mask>& rows() const noexcept { return rows_; }
    std::vector<Edge> edges() const;

    SimpleGraph with_edge(Vertex u, Vertex v) const;
    SimpleGraph without_edge(Vertex u, Vertex v) const;
    /// Vertex v of this graph becomes vertex new_label[v].
    SimpleGraph relabeled(std::span<const Vertex> new_label) const;
    /// Subgraph induced on `vertices`, renumbered in the given order.
    SimpleGraph induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    std::vector<Mask> rows_;
};

/// Undirected target graph H: loops allowed, no isolated vertices, positive
/// rational vertex weights (all 1 unless given).
class TargetGraph {
public:
    TargetGraph() = default;
    /// Throws ParameterError if rows are asymmetric, a vertex is isolated or
    /// a weight is not positive.
    explicit TargetGraph(std::vector<Mask> rows, std::vector<Rational> weights = {});

    std::size_t order() const noexcept { return rows_.size(); }
    bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
    bool looped(Vertex v) const { return adjacent(v, v); }
    Mask neighbors(Vertex v) const { return rows_[v]; }
    const std::vector<Mask>& rows() const noexcept { return rows_; }
    const std::vector<Rational>& weights() const noexcept { return weights_; }
    bool unit_weights() const;
    TargetGraph with_weights(std::vector<Rational> weights) const;
    /// Target induced on `vertices` (renumbered in the given order), weights
    /// carried along. The selection must not leave a vertex isolated.
    TargetGraph induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const TargetGraph&, const TargetGraph&) = default;

private:
    std::vector<Mask> rows_;
    std::vector<Rational> weights_;
};

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
Matrix<Scalar> adjacency_matrix(const TargetGraph& h) {
    const auto q = static_cast<Eigen::Index>(h.order());
    Matrix<Scalar> a(q, q);
    for (Eigen::Index i = 0; i < q; ++i)
        for (Eigen::Index j = 0; j < q; ++j)
            a(i, j) = h.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? Scalar(1) : Scalar(0);
    return a;
}

// Degrees. A loop counts once toward the degree of its vertex.
inline std::size_t degree(const TargetGraph& h, Vertex v) { return popcount(h.neighbors(v)); }
std::size_t min_degree(const SimpleGraph& g);
std::size_t max_degree(const SimpleGraph& g);
std::size_t min_degree(const TargetGraph& h);
std::size_t max_degree(const TargetGraph& h);
/// Sum over v of d(v); equals hom(K_2, H).
Count degree_sum(const TargetGraph& h);
std::size_t loop_count(const TargetGraph& h);
std::size_t non_loop_edge_count(const TargetGraph& h);

/// Sum of neighbor weights; a loop contributes the vertex's own weight once.
Rational weighted_degree(const TargetGraph& h, Vertex v);
Rational max_weighted_degree(const TargetGraph& h);

bool is_bipartite(const SimpleGraph& g);
bool is_regular(const SimpleGraph& g, std::size_t d);

/// H = K_q^loop, the fully looped complete graph (every map is an H-coloring).
bool is_fully_looped_complete(const TargetGraph& h);

}  // namespace homx
