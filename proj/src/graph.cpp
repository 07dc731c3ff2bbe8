#include "homx/graph.hpp"

#include "homx/error.hpp"

#include <algorithm>
#include <string>

namespace homx {

namespace {

void check_order(std::size_t n) {
    if (n > kMaxVertices)
        throw ParameterError("graphs are limited to " + std::to_string(kMaxVertices) + " vertices, got " +
                             std::to_string(n));
}

}  // namespace

SimpleGraph::SimpleGraph(std::size_t n) : rows_(n, 0) { check_order(n); }

SimpleGraph::SimpleGraph(std::size_t n, std::span<const Edge> edges) : SimpleGraph(n) {
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw ParameterError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for n = " +
                                 std::to_string(n));
        if (u == v)
            throw ParameterError("loop at vertex " + std::to_string(u) + " in a simple graph");
        if (adjacent(u, v))
            throw ParameterError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        rows_[u] |= bit(v);
        rows_[v] |= bit(u);
    }
}

SimpleGraph SimpleGraph::from_rows(std::vector<Mask> rows) {
    check_order(rows.size());
    const Mask all = low_mask(rows.size());
    for (Vertex v = 0; v < rows.size(); ++v) {
        if (rows[v] & ~all)
            throw ParameterError("row " + std::to_string(v) + " has bits beyond n");
        if (rows[v] & bit(v))
            throw ParameterError("loop at vertex " + std::to_string(v) + " in a simple graph");
        for (Vertex u = 0; u < rows.size(); ++u)
            if (((rows[v] >> u) & 1U) != ((rows[u] >> v) & 1U))
                throw ParameterError("asymmetric adjacency");
    }
    SimpleGraph g;
    g.rows_ = std::move(rows);
    return g;
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t total = 0;
    for (Mask r : rows_)
        total += popcount(r);
    return total / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
        for (Mask m = rows_[u] & ~low_mask(u + 1); m; m &= m - 1)
            out.emplace_back(u, static_cast<Vertex>(std::countr_zero(m)));
    return out;
}

SimpleGraph SimpleGraph::with_edge(Vertex u, Vertex v) const {
    if (u >= order() || v >= order() || u == v)
        throw ParameterError("invalid edge");
    SimpleGraph g = *this;
    g.rows_[u] |= bit(v);
    g.rows_[v] |= bit(u);
    return g;
}

SimpleGraph SimpleGraph::without_edge(Vertex u, Vertex v) const {
    if (u >= order() || v >= order())
        throw ParameterError("invalid edge");
    SimpleGraph g = *this;
    g.rows_[u] &= ~bit(v);
    g.rows_[v] &= ~bit(u);
    return g;
}

SimpleGraph SimpleGraph::relabeled(std::span<const Vertex> new_label) const {
    if (new_label.size() != order())
        throw ParameterError("relabeling has wrong length");
    std::vector<Mask> rows(order(), 0);
    for (Vertex v = 0; v < order(); ++v)
        for (Mask m = rows_[v]; m; m &= m - 1)
            rows[new_label[v]] |= bit(new_label[static_cast<Vertex>(std::countr_zero(m))]);
    SimpleGraph g;
    g.rows_ = std::move(rows);
    return g;
}

SimpleGraph SimpleGraph::induced(std::span<const Vertex> vertices) const {
    SimpleGraph g(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                g.rows_[i] |= bit(j);
    return g;
}

TargetGraph::TargetGraph(std::vector<Mask> rows, std::vector<Rational> weights)
    : rows_(std::move(rows)), weights_(std::move(weights)) {
    const std::size_t q = rows_.size();
    if (q == 0)
        throw ParameterError("target graph needs at least one vertex");
    check_order(q);
    const Mask all = low_mask(q);
    for (Vertex v = 0; v < q; ++v) {
        if (rows_[v] & ~all)
            throw ParameterError("target row " + std::to_string(v) + " has bits beyond q");
        if (rows_[v] == 0)
            throw ParameterError("target vertex " + std::to_string(v) + " is isolated");
        for (Vertex u = 0; u < q; ++u)
            if (adjacent(u, v) != adjacent(v, u))
                throw ParameterError("target adjacency is not symmetric");
    }
    if (weights_.empty())
        weights_.assign(q, Rational(1));
    if (weights_.size() != q)
        throw ParameterError("expected " + std::to_string(q) + " weights, got " + std::to_string(weights_.size()));
    for (const auto& w : weights_)
        if (w <= 0)
            throw ParameterError("vertex weights must be positive");
}

bool TargetGraph::unit_weights() const {
    return std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w == 1; });
}

TargetGraph TargetGraph::induced(std::span<const Vertex> vertices) const {
    std::vector<Mask> rows(vertices.size(), 0);
    std::vector<Rational> weights;
    weights.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        weights.push_back(weights_[vertices[i]]);
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                rows[i] |= bit(j);
    }
    return TargetGraph(std::move(rows), std::move(weights));
}

TargetGraph TargetGraph::with_weights(std::vector<Rational> weights) const {
    return TargetGraph(rows_, std::move(weights));
}

std::size_t min_degree(const SimpleGraph& g) {
    std::size_t best = g.order() == 0 ? 0 : g.order();
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

std::size_t max_degree(const SimpleGraph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

std::size_t min_degree(const TargetGraph& h) {
    std::size_t best = h.order();
    for (Vertex v = 0; v < h.order(); ++v)
        best = std::min(best, degree(h, v));
    return best;
}

std::size_t max_degree(const TargetGraph& h) {
    std::size_t best = 0;
    for (Vertex v = 0; v < h.order(); ++v)
        best = std::max(best, degree(h, v));
    return best;
}

Count degree_sum(const TargetGraph& h) {
    std::size_t total = 0;
    for (Vertex v = 0; v < h.order(); ++v)
        total += degree(h, v);
    return Count(total);
}

std::size_t loop_count(const TargetGraph& h) {
    std::size_t loops = 0;
    for (Vertex v = 0; v < h.order(); ++v)
        loops += h.looped(v) ? 1 : 0;
    return loops;
}

std::size_t non_loop_edge_count(const TargetGraph& h) {
    std::size_t total = 0;
    for (Vertex v = 0; v < h.order(); ++v)
        total += popcount(h.neighbors(v) & ~bit(v));
    return total / 2;
}

Rational weighted_degree(const TargetGraph& h, Vertex v) {
    if (v >= h.order())
        throw ParameterError("vertex out of range");
    Rational sum = 0;
    for (Mask m = h.neighbors(v); m; m &= m - 1)
        sum += h.weights()[static_cast<Vertex>(std::countr_zero(m))];
    return sum;
}

Rational max_weighted_degree(const TargetGraph& h) {
    Rational best = 0;
    for (Vertex v = 0; v < h.order(); ++v)
        best = std::max(best, weighted_degree(h, v));
    return best;
}

bool is_bipartite(const SimpleGraph& g) {
    std::vector<int> side(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Mask m = g.neighbors(v); m; m &= m - 1) {
                auto u = static_cast<Vertex>(std::countr_zero(m));
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    stack.push_back(u);
                } else if (side[u] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_regular(const SimpleGraph& g, std::size_t d) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != d)
            return false;
    return true;
}

bool is_fully_looped_complete(const TargetGraph& h) {
    const Mask all = low_mask(h.order());
    return std::all_of(h.rows().begin(), h.rows().end(), [all](Mask r) { return r == all; });
}

}  // namespace homx
