#include "homx/critical.hpp"

#include "homx/canonical.hpp"
#include "homx/error.hpp"
#include "homx/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <tuple>
#include <unordered_map>

namespace homx {

namespace {

// Partitions of n into parts >= smallest, parts nonincreasing.
void partitions(std::size_t n, std::size_t smallest, std::size_t largest, std::vector<std::size_t>& parts,
                std::vector<std::vector<std::size_t>>& out) {
    if (n == 0) {
        out.push_back(parts);
        return;
    }
    for (std::size_t p = std::min(n, largest); p >= smallest; --p) {
        parts.push_back(p);
        partitions(n - p, smallest, p, parts, out);
        parts.pop_back();
    }
}

std::vector<std::vector<std::size_t>> partitions(std::size_t n, std::size_t smallest) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> parts;
    partitions(n, smallest, n, parts, out);
    return out;
}

SimpleGraph union_of(const std::vector<std::size_t>& parts, SimpleGraph (*make)(std::size_t)) {
    std::vector<SimpleGraph> pieces;
    for (std::size_t p : parts)
        pieces.push_back(make(p));
    return disjoint_union(pieces);
}

SimpleGraph with_path(const SimpleGraph& g, std::size_t k, Vertex a, Vertex b) {
    const std::size_t n = g.order();
    std::vector<Mask> rows = g.rows();
    rows.resize(n + k, 0);
    auto join = [&](Vertex x, Vertex y) {
        rows[x] |= bit(y);
        rows[y] |= bit(x);
    };
    for (std::size_t i = 0; i + 1 < k; ++i)
        join(n + i, n + i + 1);
    join(a, n);
    join(b, n + k - 1);
    return SimpleGraph::from_rows(std::move(rows));
}

struct Removal {
    std::vector<Vertex> thread;  // in path order
    Vertex a = 0;                // neighbor of thread.front()
    Vertex b = 0;                // neighbor of thread.back()
};

class Decomposer {
public:
    explicit Decomposer(const SimpleGraph& g) : g_(g), alive_(low_mask(g.order())) {}

    EarDecomposition run() {
        while (!only_cycles_left()) {
            auto next = best_candidate();
            if (!next)
                throw InvariantViolation("no removable thread of degree-2 vertices in a graph that is not a union of cycles");
            for (Vertex v : next->thread)
                alive_ &= ~bit(v);
            removals_.push_back(std::move(*next));
        }
        return record();
    }

private:
    std::size_t deg(Vertex v) const { return popcount(g_.neighbors(v) & alive_); }

    bool only_cycles_left() const {
        for (Mask m = alive_; m; m &= m - 1)
            if (deg(static_cast<Vertex>(std::countr_zero(m))) != 2)
                return false;
        return true;
    }

    // The maximal run of degree-2 vertices through v, or nullopt if it closes
    // into a cycle.
    std::optional<Removal> thread_through(Vertex v) const {
        std::vector<Vertex> left;
        std::vector<Vertex> right;
        Mask seen = bit(v);
        std::array<Vertex, 2> ends{};
        std::size_t e = 0;
        for (Mask m = g_.neighbors(v) & alive_; m; m &= m - 1)
            ends[e++] = static_cast<Vertex>(std::countr_zero(m));
        std::array<Vertex, 2> attach{};
        for (int side = 0; side < 2; ++side) {
            auto& run = side == 0 ? left : right;
            Vertex prev = v;
            Vertex cur = ends[side];
            while (deg(cur) == 2) {
                if (seen & bit(cur))
                    return std::nullopt;
                seen |= bit(cur);
                run.push_back(cur);
                const Mask next = g_.neighbors(cur) & alive_ & ~bit(prev);
                prev = cur;
                cur = static_cast<Vertex>(std::countr_zero(next));
            }
            attach[side] = cur;
        }
        Removal r;
        r.thread.assign(left.rbegin(), left.rend());
        r.thread.push_back(v);
        r.thread.insert(r.thread.end(), right.begin(), right.end());
        r.a = attach[0];
        r.b = attach[1];
        return r;
    }

    bool removable(const Removal& r) const {
        if (r.thread.size() + 3 > popcount(alive_))
            return false;
        if (r.a == r.b)
            return r.thread.size() >= 2 && deg(r.a) >= 4;
        return !g_.adjacent(r.a, r.b) && deg(r.a) >= 3 && deg(r.b) >= 3;
    }

    std::optional<Removal> best_candidate() const {
        std::optional<Removal> best;
        auto key = [](const Removal& r) {
            return std::tuple(std::min(r.a, r.b), std::max(r.a, r.b),
                              *std::min_element(r.thread.begin(), r.thread.end()));
        };
        Mask visited = 0;
        for (Mask m = alive_; m; m &= m - 1) {
            const auto v = static_cast<Vertex>(std::countr_zero(m));
            if ((visited & bit(v)) || deg(v) != 2)
                continue;
            auto r = thread_through(v);
            if (!r)
                continue;
            for (Vertex t : r->thread)
                visited |= bit(t);
            if (removable(*r) && (!best || key(*r) < key(*best)))
                best = std::move(r);
        }
        return best;
    }

    EarDecomposition record() const {
        EarDecomposition d;
        std::vector<Vertex> new_id(g_.order(), g_.order());
        auto assign = [&](Vertex v) {
            new_id[v] = d.vertex_map.size();
            d.vertex_map.push_back(v);
        };

        Mask left = alive_;
        while (left) {
            const auto start = static_cast<Vertex>(std::countr_zero(left));
            Vertex prev = start;
            Vertex cur = static_cast<Vertex>(std::countr_zero(g_.neighbors(start) & alive_));
            std::size_t length = 1;
            assign(start);
            left &= ~bit(start);
            while (cur != start) {
                assign(cur);
                left &= ~bit(cur);
                ++length;
                const Mask next = g_.neighbors(cur) & alive_ & ~bit(prev);
                prev = cur;
                cur = static_cast<Vertex>(std::countr_zero(next));
            }
            d.base_cycles.push_back(length);
        }

        std::vector<const Removal*> pendants;
        Mask pendant_vertices = 0;
        for (auto it = removals_.rbegin(); it != removals_.rend(); ++it) {
            const Removal& r = *it;
            if (r.thread.size() == 1) {
                pendants.push_back(&r);
                pendant_vertices |= bit(r.thread[0]);
                continue;
            }
            if ((pendant_vertices & bit(r.a)) || (pendant_vertices & bit(r.b)))
                throw InvariantViolation("a thread attaches to a single-vertex thread added before it");
            std::vector<Vertex> path = r.thread;
            Vertex a = r.a;
            Vertex b = r.b;
            const bool flip = new_id[b] < new_id[a] || (a == b && path.back() < path.front());
            if (flip) {
                std::reverse(path.begin(), path.end());
                std::swap(a, b);
            }
            d.path_additions.push_back({path.size(), new_id[a], new_id[b]});
            for (Vertex v : path)
                assign(v);
        }
        for (const Removal* r : pendants) {
            Vertex a = new_id[r->a];
            Vertex b = new_id[r->b];
            d.pendant_additions.push_back({std::min(a, b), std::max(a, b)});
            assign(r->thread[0]);
        }
        return d;
    }

    const SimpleGraph& g_;
    Mask alive_;
    std::vector<Removal> removals_;
};

using MatchMemo = std::unordered_map<Mask, std::size_t>;

std::size_t matching_size(const SimpleGraph& g, Mask free, MatchMemo& memo) {
    // Drop vertices with no free neighbor; they stay unmatched.
    Mask useful = 0;
    for (Mask m = free; m; m &= m - 1) {
        const auto v = static_cast<Vertex>(std::countr_zero(m));
        if (g.neighbors(v) & free)
            useful |= bit(v);
    }
    if (useful == 0)
        return 0;
    if (auto it = memo.find(useful); it != memo.end())
        return it->second;
    const auto v = static_cast<Vertex>(std::countr_zero(useful));
    std::size_t best = matching_size(g, useful & ~bit(v), memo);
    for (Mask m = g.neighbors(v) & useful; m; m &= m - 1) {
        const auto u = static_cast<Vertex>(std::countr_zero(m));
        best = std::max(best, 1 + matching_size(g, useful & ~bit(v) & ~bit(u), memo));
    }
    memo.emplace(useful, best);
    return best;
}

}  // namespace

bool is_edge_min_critical(const SimpleGraph& g, std::size_t delta) {
    if (g.order() == 0 || min_degree(g) != delta)
        throw ParameterError("edge-min-criticality is defined for graphs of minimum degree " + std::to_string(delta));
    for (const auto& [u, v] : g.edges())
        if (g.degree(u) > delta && g.degree(v) > delta)
            return false;
    return true;
}

SimpleGraph rebuild(const EarDecomposition& d) {
    if (d.base_cycles.empty())
        throw ConstructionError("no base cycles");
    std::size_t total = 0;
    for (std::size_t c : d.base_cycles)
        total += c;
    for (const auto& p : d.path_additions)
        total += p.k;
    total += d.pendant_additions.size();
    if (total > kMaxVertices)
        throw ParameterError("decomposition describes " + std::to_string(total) + " vertices; limit is " +
                             std::to_string(kMaxVertices));

    SimpleGraph g(0);
    for (std::size_t i = 0; i < d.base_cycles.size(); ++i) {
        if (d.base_cycles[i] < 3)
            throw ConstructionError("base cycle " + std::to_string(i) + " has length " +
                                    std::to_string(d.base_cycles[i]));
        g = disjoint_union(g, cycle(d.base_cycles[i]));
    }
    for (std::size_t i = 0; i < d.path_additions.size(); ++i) {
        const auto& p = d.path_additions[i];
        const std::string name = "path addition " + std::to_string(i);
        if (p.k < 2)
            throw ConstructionError(name + " has " + std::to_string(p.k) + " vertices; single vertices are pendants");
        if (p.attach_a >= g.order() || p.attach_b >= g.order())
            throw ConstructionError(name + " attaches to a vertex that does not exist yet");
        if (p.attach_a != p.attach_b && g.adjacent(p.attach_a, p.attach_b))
            throw ConstructionError(name + " attaches to adjacent vertices " + std::to_string(p.attach_a) + " and " +
                                    std::to_string(p.attach_b));
        g = with_path(g, p.k, p.attach_a, p.attach_b);
    }
    const SimpleGraph before = g;
    std::vector<Mask> rows = g.rows();
    for (std::size_t i = 0; i < d.pendant_additions.size(); ++i) {
        const auto& p = d.pendant_additions[i];
        const std::string name = "pendant addition " + std::to_string(i);
        if (p.a >= before.order() || p.b >= before.order())
            throw ConstructionError(name + " attaches to a vertex outside the graph built before pendants");
        if (p.a == p.b)
            throw ConstructionError(name + " attaches twice to vertex " + std::to_string(p.a));
        if (before.adjacent(p.a, p.b))
            throw ConstructionError(name + " attaches to adjacent vertices " + std::to_string(p.a) + " and " +
                                    std::to_string(p.b));
        const Vertex v = rows.size();
        rows.push_back(bit(p.a) | bit(p.b));
        rows[p.a] |= bit(v);
        rows[p.b] |= bit(v);
    }
    return SimpleGraph::from_rows(std::move(rows));
}

EarDecomposition decompose_delta2(const SimpleGraph& g) {
    if (g.order() == 0 || min_degree(g) != 2 || !is_edge_min_critical(g, 2))
        throw ParameterError("decompose_delta2 needs an edge-min-critical graph of minimum degree 2");
    EarDecomposition d = Decomposer(g).run();
    if (!(rebuild(d) == g.induced(d.vertex_map)))
        throw InvariantViolation("ear decomposition does not rebuild the input graph");
    return d;
}

std::vector<SimpleGraph> generate_emc(std::size_t n, std::size_t delta, unsigned jobs) {
    if (delta != 1 && delta != 2)
        throw ParameterError("edge-min-critical generation is supported for delta 1 and 2 only, got " +
                             std::to_string(delta));
    if (n < delta + 1)
        throw ParameterError("generate_emc needs n >= delta + 1");
    if (n > kMaxVertices)
        throw ParameterError("n exceeds the vertex limit");

    std::map<CanonicalForm, SimpleGraph> found;
    if (delta == 1) {
        for (const auto& parts : partitions(n, 2)) {
            auto g = canonical_labeling(union_of(parts, star)).graph;
            found.emplace(canonical_form(g), std::move(g));
        }
    } else {
        // Graphs built from cycles and paths of >= 2 vertices, by order.
        std::vector<std::map<CanonicalForm, SimpleGraph>> level(n + 1);
        for (std::size_t m = 3; m <= n; ++m)
            for (const auto& parts : partitions(m, 3)) {
                auto g = union_of(parts, cycle);
                level[m].emplace(canonical_form(g), g);
            }
        for (std::size_t m = 3; m + 2 <= n; ++m)
            for (const auto& [key, base] : level[m])
                for (std::size_t k = 2; m + k <= n; ++k)
                    for (Vertex a = 0; a < m; ++a)
                        for (Vertex b = a; b < m; ++b) {
                            if (a != b && base.adjacent(a, b))
                                continue;
                            auto g = with_path(base, k, a, b);
                            if (is_edge_min_critical(g, 2))
                                level[m + k].emplace(canonical_form(g), std::move(g));
                        }

        std::vector<const SimpleGraph*> bases;
        for (std::size_t m = 3; m <= n; ++m)
            for (const auto& [key, base] : level[m])
                bases.push_back(&base);

        std::mutex lock;
        auto attach_pendants = [&](const SimpleGraph& base) {
            const std::size_t m = base.order();
            const std::size_t count = n - m;
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (Vertex a = 0; a < m; ++a)
                for (Vertex b = a + 1; b < m; ++b)
                    if (!base.adjacent(a, b))
                        pairs.emplace_back(a, b);
            std::vector<std::size_t> extra(m, 0);
            std::vector<std::size_t> chosen;
            std::vector<std::pair<CanonicalForm, SimpleGraph>> local;
            auto hot = [&](Vertex v) { return base.degree(v) + extra[v] >= 3; };
            auto clash = [&](Vertex v) {
                for (Mask nb = base.neighbors(v); nb; nb &= nb - 1)
                    if (hot(static_cast<Vertex>(std::countr_zero(nb))))
                        return true;
                return false;
            };
            auto walk = [&](auto&& self, std::size_t from) -> void {
                if (chosen.size() == count) {
                    std::vector<Mask> rows = base.rows();
                    for (std::size_t idx : chosen) {
                        const auto [a, b] = pairs[idx];
                        const Vertex v = rows.size();
                        rows.push_back(bit(a) | bit(b));
                        rows[a] |= bit(v);
                        rows[b] |= bit(v);
                    }
                    auto g = SimpleGraph::from_rows(std::move(rows));
                    if (is_edge_min_critical(g, 2))
                        local.emplace_back(canonical_form(g), std::move(g));
                    return;
                }
                for (std::size_t idx = from; idx < pairs.size(); ++idx) {
                    const auto [a, b] = pairs[idx];
                    ++extra[a];
                    ++extra[b];
                    if (!clash(a) && !clash(b)) {
                        chosen.push_back(idx);
                        self(self, idx);
                        chosen.pop_back();
                    }
                    --extra[a];
                    --extra[b];
                }
            };
            walk(walk, 0);
            std::lock_guard guard(lock);
            for (auto& [key, g] : local)
                found.emplace(std::move(key), std::move(g));
        };

        const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(bases.size())));
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < bases.size(); i += workers)
                    attach_pendants(*bases[i]);
            });
        for (auto& t : pool)
            t.join();
    }

    std::vector<SimpleGraph> out;
    out.reserve(found.size());
    for (auto& [key, g] : found)
        out.push_back(canonical_labeling(g).graph);
    return out;
}

std::vector<Edge> maximum_matching(const SimpleGraph& g) {
    if (g.order() > kMatchingVertexCap)
        throw ResourceError("maximum matching search is capped at " + std::to_string(kMatchingVertexCap) + " vertices");
    MatchMemo memo;
    Mask free = low_mask(g.order());
    std::size_t remaining = matching_size(g, free, memo);
    std::vector<Edge> out;
    // Walk back through the memo: pick any edge that keeps the optimum.
    while (remaining > 0) {
        bool step = false;
        for (Mask m = free; m && !step; m &= m - 1) {
            const auto v = static_cast<Vertex>(std::countr_zero(m));
            for (Mask nb = g.neighbors(v) & free; nb; nb &= nb - 1) {
                const auto u = static_cast<Vertex>(std::countr_zero(nb));
                const Mask rest = free & ~bit(v) & ~bit(u);
                if (1 + matching_size(g, rest, memo) == remaining) {
                    out.emplace_back(std::min(u, v), std::max(u, v));
                    free = rest;
                    --remaining;
                    step = true;
                    break;
                }
            }
        }
        if (!step)
            throw InvariantViolation("matching reconstruction failed");
    }
    return out;
}

MatchingPartition matching_partition(const SimpleGraph& g) {
    MatchingPartition p;
    p.matching = maximum_matching(g);
    Mask matched = 0;
    for (const auto& [u, v] : p.matching)
        matched |= bit(u) | bit(v);
    const Mask unmatched = low_mask(g.order()) & ~matched;
    for (Mask m = unmatched; m; m &= m - 1)
        p.i.push_back(static_cast<Vertex>(std::countr_zero(m)));

    for (Vertex v : p.i)
        if (g.neighbors(v) & unmatched)
            throw InvariantViolation("unmatched vertices are adjacent; the matching is not maximum");

    std::size_t both = 0;
    Mask sees_both = 0;
    for (const auto& [u, v] : p.matching) {
        const std::size_t du = popcount(g.neighbors(u) & unmatched);
        const std::size_t dv = popcount(g.neighbors(v) & unmatched);
        if ((du >= 2 && dv >= 1) || (dv >= 2 && du >= 1))
            throw InvariantViolation("matched edge {" + std::to_string(u) + "," + std::to_string(v) +
                                     "} has an augmenting path of length 3");
        const bool u_first = du > dv || (du == dv && u < v);
        p.j.push_back(u_first ? u : v);
        p.k.push_back(u_first ? v : u);
        sees_both |= g.neighbors(u) & g.neighbors(v) & unmatched;
    }
    both = popcount(sees_both);
    if (both > p.matching.size())
        throw InvariantViolation(std::to_string(both) + " unmatched vertices see both ends of a matched edge, more than |M|");
    return p;
}

}  // namespace homx
