#pragma once

// Test-only oracles and generators. Nothing here calls into the counting code.

#include "homx/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace homx::testing {

/// hom(G,H) by trying every one of the q^n maps.
inline std::uint64_t hom_by_all_maps(const SimpleGraph& g, const TargetGraph& h) {
    const std::size_t n = g.order();
    const std::size_t q = h.order();
    std::vector<Vertex> f(n, 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (const auto& [u, v] : g.edges())
            if (!h.adjacent(f[u], f[v])) {
                ok = false;
                break;
            }
        count += ok ? 1 : 0;
        std::size_t i = 0;
        while (i < n && ++f[i] == q)
            f[i++] = 0;
        if (i == n)
            break;
    }
    return count;
}

/// Weighted partition function by trying every map, exact rationals.
inline Rational z_by_all_maps(const SimpleGraph& g, const TargetGraph& h) {
    const std::size_t n = g.order();
    const std::size_t q = h.order();
    std::vector<Vertex> f(n, 0);
    Rational z = 0;
    while (true) {
        bool ok = true;
        for (const auto& [u, v] : g.edges())
            ok = ok && h.adjacent(f[u], f[v]);
        if (ok) {
            Rational w = 1;
            for (Vertex v = 0; v < n; ++v)
                w *= h.weights()[f[v]];
            z += w;
        }
        std::size_t i = 0;
        while (i < n && ++f[i] == q)
            f[i++] = 0;
        if (i == n)
            break;
    }
    return z;
}

/// Every labeled target on q vertices (symmetric 0/1 with loops), skipping
/// those with an isolated vertex.
inline std::vector<TargetGraph> all_targets(std::size_t q) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex i = 0; i < q; ++i)
        for (Vertex j = i; j < q; ++j)
            slots.emplace_back(i, j);
    std::vector<TargetGraph> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots.size()); ++code) {
        std::vector<Mask> rows(q, 0);
        for (std::size_t s = 0; s < slots.size(); ++s)
            if ((code >> s) & 1U) {
                rows[slots[s].first] |= bit(slots[s].second);
                rows[slots[s].second] |= bit(slots[s].first);
            }
        bool isolated = false;
        for (Mask r : rows)
            isolated = isolated || r == 0;
        if (!isolated)
            out.emplace_back(std::move(rows));
    }
    return out;
}

inline std::vector<TargetGraph> all_targets_up_to(std::size_t q_max) {
    std::vector<TargetGraph> out;
    for (std::size_t q = 1; q <= q_max; ++q) {
        auto batch = all_targets(q);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

inline SimpleGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return SimpleGraph(n, edges);
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v)
        perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace homx::testing
