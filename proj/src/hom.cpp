#include "homx/hom.hpp"

#include "homx/canonical.hpp"
#include "homx/error.hpp"
#include "homx/families.hpp"

#include <algorithm>
#include <limits>

namespace homx {

namespace {

struct Plan {
    std::vector<Vertex> order;
    // For each position, positions of earlier neighbors.
    std::vector<std::vector<std::size_t>> earlier;
    // Vertices at positions >= free_from are pairwise non-adjacent.
    std::size_t free_from = 0;
};

Plan make_plan(const SimpleGraph& g) {
    Plan plan;
    plan.order = coloring_order(g);
    const std::size_t n = plan.order.size();
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[plan.order[i]] = i;
    plan.earlier.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (Mask m = g.neighbors(plan.order[i]); m; m &= m - 1) {
            std::size_t j = position[static_cast<Vertex>(std::countr_zero(m))];
            if (j < i)
                plan.earlier[i].push_back(j);
        }
    Mask suffix = 0;
    plan.free_from = n;
    while (plan.free_from > 0 && (g.neighbors(plan.order[plan.free_from - 1]) & suffix) == 0) {
        --plan.free_from;
        suffix |= bit(plan.order[plan.free_from]);
    }
    return plan;
}

// 64-bit running sum that spills into a big integer.
class Tally {
public:
    void add(std::uint64_t x) {
        if (small_ > std::numeric_limits<std::uint64_t>::max() - x) {
            big_ += small_;
            small_ = 0;
        }
        small_ += x;
    }
    void add(const BigInt& x) { big_ += x; }
    Count total() const { return Count(BigInt(big_ + small_)); }

private:
    std::uint64_t small_ = 0;
    BigInt big_ = 0;
};

class UnitCounter {
public:
    UnitCounter(const SimpleGraph& g, const TargetGraph& h)
        : h_(h), plan_(make_plan(g)), colour_(g.order()), all_(low_mask(h.order())) {}

    Count run() {
        descend(0);
        return tally_.total();
    }

private:
    Mask candidates(std::size_t pos) const {
        Mask m = all_;
        for (std::size_t e : plan_.earlier[pos])
            m &= h_.neighbors(colour_[e]);
        return m;
    }

    void descend(std::size_t pos) {
        if (pos == plan_.free_from) {
            std::uint64_t product = 1;
            bool spilled = false;
            for (std::size_t p = pos; p < plan_.order.size(); ++p) {
                const std::uint64_t choices = popcount(candidates(p));
                if (choices == 0)
                    return;
                spilled = spilled || __builtin_mul_overflow(product, choices, &product);
            }
            if (!spilled) {
                tally_.add(product);
                return;
            }
            BigInt big = 1;
            for (std::size_t p = pos; p < plan_.order.size(); ++p)
                big *= popcount(candidates(p));
            tally_.add(big);
            return;
        }
        for (Mask m = candidates(pos); m; m &= m - 1) {
            colour_[pos] = static_cast<Vertex>(std::countr_zero(m));
            descend(pos + 1);
        }
    }

    const TargetGraph& h_;
    Plan plan_;
    std::vector<Vertex> colour_;
    Mask all_;
    Tally tally_;
};

class WeightedCounter {
public:
    WeightedCounter(const SimpleGraph& g, const TargetGraph& h, std::vector<BigInt> weights)
        : h_(h), plan_(make_plan(g)), colour_(g.order()), all_(low_mask(h.order())), weights_(std::move(weights)) {}

    BigInt run() { return descend(0); }

private:
    Mask candidates(std::size_t pos) const {
        Mask m = all_;
        for (std::size_t e : plan_.earlier[pos])
            m &= h_.neighbors(colour_[e]);
        return m;
    }

    BigInt mask_weight(Mask m) const {
        BigInt sum = 0;
        for (; m; m &= m - 1)
            sum += weights_[static_cast<Vertex>(std::countr_zero(m))];
        return sum;
    }

    BigInt descend(std::size_t pos) {
        if (pos == plan_.free_from) {
            BigInt product = 1;
            for (std::size_t p = pos; p < plan_.order.size() && product != 0; ++p)
                product *= mask_weight(candidates(p));
            return product;
        }
        BigInt sum = 0;
        for (Mask m = candidates(pos); m; m &= m - 1) {
            const auto c = static_cast<Vertex>(std::countr_zero(m));
            colour_[pos] = c;
            BigInt rest = descend(pos + 1);
            if (rest != 0)
                sum += weights_[c] * rest;
        }
        return sum;
    }

    const TargetGraph& h_;
    Plan plan_;
    std::vector<Vertex> colour_;
    Mask all_;
    std::vector<BigInt> weights_;
};

}  // namespace

std::vector<Vertex> coloring_order(const SimpleGraph& g) {
    const std::size_t n = g.order();
    std::vector<Vertex> order;
    order.reserve(n);
    Mask placed = 0;
    while (order.size() < n) {
        Mask frontier = 0;
        for (Vertex v : order)
            frontier |= g.neighbors(v);
        frontier &= ~placed;
        const Mask pool = frontier ? frontier : (low_mask(n) & ~placed);
        Vertex best = n;
        for (Mask m = pool; m; m &= m - 1) {
            auto v = static_cast<Vertex>(std::countr_zero(m));
            if (best == n)
                best = v;
            else if (std::pair(g.degree(v), popcount(g.neighbors(v) & placed)) >
                     std::pair(g.degree(best), popcount(g.neighbors(best) & placed)))
                best = v;
        }
        order.push_back(best);
        placed |= bit(best);
    }
    return order;
}

Count hom_brute(const SimpleGraph& g, const TargetGraph& h) { return UnitCounter(g, h).run(); }

Count hom(const SimpleGraph& g, const TargetGraph& h) {
    Count total = 1;
    for (const auto& comp : connected_components(g)) {
        total *= hom_brute(g.induced(comp), h);
        if (total.is_zero())
            break;
    }
    return total;
}

Rational z_weighted(const SimpleGraph& g, const TargetGraph& h) {
    BigInt scale = 1;
    for (const auto& w : h.weights())
        scale = mp::lcm(scale, BigInt(mp::denominator(w)));
    std::vector<BigInt> scaled;
    scaled.reserve(h.order());
    for (const auto& w : h.weights())
        scaled.push_back(mp::numerator(w) * (scale / mp::denominator(w)));
    BigInt sum = WeightedCounter(g, h, std::move(scaled)).run();
    return Rational(sum, pow(Count(scale), g.order()).value());
}

Count hom_star(std::size_t x, const TargetGraph& h) {
    if (x < 2)
        throw ParameterError("hom_star needs x >= 2, got " + std::to_string(x));
    Count total = 0;
    for (Vertex v = 0; v < h.order(); ++v)
        total += pow(Count(degree(h, v)), x - 1);
    return total;
}

Count hom_cycle(std::size_t k, const TargetGraph& h) {
    if (k < 3)
        throw ParameterError("hom_cycle needs k >= 3, got " + std::to_string(k));
    return matrix_power(adjacency_matrix<Count>(h), k).trace();
}

Count hom_path_pinned(std::size_t k, const TargetGraph& h, Vertex u, Vertex v) {
    if (k < 2)
        throw ParameterError("pinned path needs k >= 2 vertices, got " + std::to_string(k));
    if (u >= h.order() || v >= h.order())
        throw ParameterError("pinned endpoint out of range");
    return matrix_power(adjacency_matrix<Count>(h), k - 1)(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
}

Count hom_complete_bipartite(std::size_t a, std::size_t b, const TargetGraph& h, std::size_t cap) {
    if (a == 0 || b == 0)
        throw ParameterError("complete bipartite graph needs both classes nonempty");
    if (a > b)
        std::swap(a, b);
    if (a > cap)
        throw ResourceError("K_{" + std::to_string(a) + "," + std::to_string(b) + "} needs " + std::to_string(h.order()) +
                            "^" + std::to_string(a) + " tuples (cap " + std::to_string(cap) + "); use hom_brute");
    std::vector<Count> powers;
    for (std::size_t s = 0; s <= h.order(); ++s)
        powers.push_back(pow(Count(s), b));
    Tally total;
    const std::size_t q = h.order();
    auto walk = [&](auto&& self, std::size_t depth, Mask common) -> void {
        if (common == 0)
            return;
        if (depth == a) {
            total.add(powers[popcount(common)].value());
            return;
        }
        for (Vertex c = 0; c < q; ++c)
            self(self, depth + 1, common & h.neighbors(c));
    };
    walk(walk, 0, low_mask(q));
    return total.total();
}

Count hom_complete_bipartite_any(std::size_t a, std::size_t b, const TargetGraph& h) {
    if (std::min(a, b) <= kDefaultTupleCap)
        return hom_complete_bipartite(a, b, h);
    return hom_brute(complete_bipartite(a, b), h);
}

Count hom_complete(std::size_t k, const TargetGraph& h) {
    if (k == 0)
        return 1;
    Tally total;
    auto walk = [&](auto&& self, std::size_t depth, Mask allowed) -> void {
        if (depth + 1 == k) {
            total.add(static_cast<std::uint64_t>(popcount(allowed)));
            return;
        }
        for (Mask m = allowed; m; m &= m - 1)
            self(self, depth + 1, allowed & h.neighbors(static_cast<Vertex>(std::countr_zero(m))));
    };
    walk(walk, 0, low_mask(h.order()));
    return total.total();
}

}  // namespace homx
