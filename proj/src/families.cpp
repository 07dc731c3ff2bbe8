#include "homx/families.hpp"

#include "homx/error.hpp"

#include <string>

namespace homx {

SimpleGraph empty_graph(std::size_t n) { return SimpleGraph(n); }

SimpleGraph complete(std::size_t n) {
    if (n == 0)
        throw ParameterError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return SimpleGraph(n, edges);
}

SimpleGraph complete_bipartite(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0)
        throw ParameterError("complete bipartite graph needs both classes nonempty");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v)
            edges.emplace_back(u, v);
    return SimpleGraph(a + b, edges);
}

SimpleGraph cycle(std::size_t n) {
    if (n < 3)
        throw ParameterError("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return SimpleGraph(n, edges);
}

SimpleGraph path(std::size_t n) {
    if (n == 0)
        throw ParameterError("path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return SimpleGraph(n, edges);
}

SimpleGraph star(std::size_t n) {
    if (n < 2)
        throw ParameterError("star needs n >= 2 vertices, got " + std::to_string(n));
    return complete_bipartite(1, n - 1);
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    std::vector<Mask> rows = a.rows();
    if (a.order() + b.order() > kMaxVertices)
        throw ParameterError("disjoint union exceeds the vertex limit");
    for (Mask r : b.rows())
        rows.push_back(r << a.order());
    return SimpleGraph::from_rows(std::move(rows));
}

SimpleGraph disjoint_union(std::span<const SimpleGraph> parts) {
    SimpleGraph out;
    for (const auto& p : parts)
        out = disjoint_union(out, p);
    return out;
}

SimpleGraph copies(const SimpleGraph& g, std::size_t count) {
    SimpleGraph out;
    for (std::size_t i = 0; i < count; ++i)
        out = disjoint_union(out, g);
    return out;
}

TargetGraph looped_complete(std::size_t q) {
    if (q == 0)
        throw ParameterError("K_q^loop needs q >= 1");
    return TargetGraph(std::vector<Mask>(q, low_mask(q)));
}

TargetGraph complete_target(std::size_t q) {
    if (q < 2)
        throw ParameterError("K_q as a target needs q >= 2 (K_1 is isolated)");
    std::vector<Mask> rows(q);
    for (Vertex v = 0; v < q; ++v)
        rows[v] = low_mask(q) & ~bit(v);
    return TargetGraph(std::move(rows));
}

TargetGraph h_ind() { return TargetGraph({0b10, 0b11}); }

TargetGraph h_wr() { return TargetGraph({0b011, 0b111, 0b110}); }

TargetGraph hard_core(std::size_t k) {
    if (k == 0)
        throw ParameterError("H(k) needs k >= 1");
    std::vector<Mask> rows(k + 1, 0);
    for (Vertex i = 0; i <= k; ++i)
        for (Vertex j = 0; i + j <= k; ++j)
            rows[i] |= bit(j);
    return TargetGraph(std::move(rows));
}

TargetGraph looped_vertices(std::size_t count) {
    if (count == 0)
        throw ParameterError("need at least one looped vertex");
    std::vector<Mask> rows(count);
    for (Vertex v = 0; v < count; ++v)
        rows[v] = bit(v);
    return TargetGraph(std::move(rows));
}

TargetGraph as_target(const SimpleGraph& g) { return TargetGraph(g.rows()); }

TargetGraph disjoint_union(const TargetGraph& a, const TargetGraph& b) {
    if (a.order() + b.order() > kMaxVertices)
        throw ParameterError("disjoint union exceeds the vertex limit");
    std::vector<Mask> rows = a.rows();
    for (Mask r : b.rows())
        rows.push_back(r << a.order());
    std::vector<Rational> weights = a.weights();
    weights.insert(weights.end(), b.weights().begin(), b.weights().end());
    return TargetGraph(std::move(rows), std::move(weights));
}

std::variant<SimpleGraph, TargetGraph> make_family(FamilyKind kind, std::span<const std::size_t> params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw ParameterError("expected " + std::to_string(count) + " parameter(s), got " +
                                 std::to_string(params.size()));
    };
    switch (kind) {
    case FamilyKind::complete:
        need(1);
        return complete(params[0]);
    case FamilyKind::complete_bipartite:
        need(2);
        return complete_bipartite(params[0], params[1]);
    case FamilyKind::cycle:
        need(1);
        return cycle(params[0]);
    case FamilyKind::path:
        need(1);
        return path(params[0]);
    case FamilyKind::star:
        need(1);
        return star(params[0]);
    case FamilyKind::disjoint_union: {
        if (params.empty())
            throw ParameterError("disjoint union needs at least one cycle length");
        std::vector<SimpleGraph> parts;
        for (std::size_t len : params)
            parts.push_back(cycle(len));
        return disjoint_union(parts);
    }
    case FamilyKind::looped_complete:
        need(1);
        return looped_complete(params[0]);
    case FamilyKind::h_ind:
        need(0);
        return h_ind();
    case FamilyKind::h_wr:
        need(0);
        return h_wr();
    case FamilyKind::hard_core_k:
        need(1);
        return hard_core(params[0]);
    }
    throw ParameterError("unknown family");
}

}  // namespace homx
