#include "homx/canonical.hpp"

#include "homx/graph6.hpp"

#include "homx/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace homx {

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;
using Permutation = std::vector<Vertex>;

// Splits cells by neighbor counts into every cell until the partition is
// equitable. New cells are ordered by signature, so the result is invariant
// under relabeling.
void refine(const SimpleGraph& g, Partition& p) {
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<Mask> cell_mask(p.size(), 0);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (Vertex v : p[i])
                cell_mask[i] |= bit(v);
        for (std::size_t ci = 0; ci < p.size() && !changed; ++ci) {
            if (p[ci].size() < 2)
                continue;
            std::vector<std::pair<std::vector<std::uint8_t>, Vertex>> sig;
            sig.reserve(p[ci].size());
            for (Vertex v : p[ci]) {
                std::vector<std::uint8_t> counts(p.size());
                for (std::size_t j = 0; j < p.size(); ++j)
                    counts[j] = static_cast<std::uint8_t>(popcount(g.neighbors(v) & cell_mask[j]));
                sig.emplace_back(std::move(counts), v);
            }
            std::sort(sig.begin(), sig.end());
            if (sig.front().first == sig.back().first)
                continue;
            Partition groups;
            for (std::size_t k = 0; k < sig.size(); ++k) {
                if (k == 0 || sig[k].first != sig[k - 1].first)
                    groups.emplace_back();
                groups.back().push_back(sig[k].second);
            }
            p.erase(p.begin() + static_cast<std::ptrdiff_t>(ci));
            p.insert(p.begin() + static_cast<std::ptrdiff_t>(ci), groups.begin(), groups.end());
            changed = true;
        }
    }
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }
    Vertex find(Vertex v) {
        while (parent_[v] != v)
            v = parent_[v] = parent_[parent_[v]];
        return v;
    }
    void unite(Vertex a, Vertex b) { parent_[find(a)] = find(b); }

private:
    std::vector<Vertex> parent_;
};

// Canonical ordering of one connected graph.
class Canonizer {
public:
    explicit Canonizer(const SimpleGraph& g) : g_(g) { add_twin_automorphisms(); }

    std::vector<Vertex> run() {
        Partition p{Cell(g_.order())};
        std::iota(p[0].begin(), p[0].end(), Vertex{0});
        std::vector<Vertex> prefix;
        search(std::move(p), prefix);
        return best_order_;
    }

private:
    void add_twin_automorphisms() {
        const std::size_t n = g_.order();
        for (int closed = 0; closed < 2; ++closed) {
            std::vector<std::pair<Mask, Vertex>> keyed;
            for (Vertex v = 0; v < n; ++v)
                keyed.emplace_back(g_.neighbors(v) | (closed ? bit(v) : 0), v);
            std::sort(keyed.begin(), keyed.end());
            for (std::size_t k = 1; k < keyed.size(); ++k) {
                if (keyed[k].first != keyed[k - 1].first)
                    continue;
                Permutation t(n);
                std::iota(t.begin(), t.end(), Vertex{0});
                std::swap(t[keyed[k].second], t[keyed[k - 1].second]);
                autos_.push_back(std::move(t));
            }
        }
    }

    std::vector<Mask> code_of(const std::vector<Vertex>& order) const {
        const std::size_t n = order.size();
        std::vector<Mask> code(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (g_.adjacent(order[i], order[j]))
                    code[i] |= bit(j);
        return code;
    }

    void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
        Permutation gamma(from.size());
        bool identity = true;
        for (std::size_t i = 0; i < from.size(); ++i) {
            gamma[from[i]] = to[i];
            identity = identity && from[i] == to[i];
        }
        if (!identity)
            autos_.push_back(std::move(gamma));
    }

    void leaf(const Partition& p) {
        std::vector<Vertex> order;
        order.reserve(p.size());
        for (const auto& c : p)
            order.push_back(c.front());
        auto code = code_of(order);
        if (first_order_.empty()) {
            first_order_ = order;
            first_code_ = code;
        } else if (code == first_code_) {
            record_automorphism(first_order_, order);
        }
        if (best_order_.empty() || code > best_code_) {
            best_code_ = std::move(code);
            best_order_ = std::move(order);
        } else if (code == best_code_) {
            record_automorphism(best_order_, order);
        }
    }

    bool same_orbit_as_explored(Vertex v, const std::vector<Vertex>& explored, const std::vector<Vertex>& prefix) {
        if (explored.empty())
            return false;
        UnionFind uf(g_.order());
        for (const auto& gamma : autos_) {
            bool fixes_prefix =
                std::all_of(prefix.begin(), prefix.end(), [&](Vertex x) { return gamma[x] == x; });
            if (!fixes_prefix)
                continue;
            for (Vertex x = 0; x < gamma.size(); ++x)
                uf.unite(x, gamma[x]);
        }
        const Vertex root = uf.find(v);
        return std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return uf.find(u) == root; });
    }

    void search(Partition p, std::vector<Vertex>& prefix) {
        refine(g_, p);
        auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
        if (target == p.end()) {
            leaf(p);
            return;
        }
        const auto ci = static_cast<std::size_t>(target - p.begin());
        Cell cell = *target;
        std::sort(cell.begin(), cell.end());
        std::vector<Vertex> explored;
        for (Vertex v : cell) {
            if (same_orbit_as_explored(v, explored, prefix))
                continue;
            Partition child = p;
            Cell rest;
            for (Vertex u : cell)
                if (u != v)
                    rest.push_back(u);
            child[ci] = Cell{v};
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(ci) + 1, rest);
            prefix.push_back(v);
            search(std::move(child), prefix);
            prefix.pop_back();
            explored.push_back(v);
        }
    }

    const SimpleGraph& g_;
    std::vector<Permutation> autos_;
    std::vector<Vertex> first_order_;
    std::vector<Mask> first_code_;
    std::vector<Vertex> best_order_;
    std::vector<Mask> best_code_;
};

}  // namespace

namespace {

template <class Graph>
std::vector<std::vector<Vertex>> components_of(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    Mask seen = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen & bit(s))
            continue;
        Mask comp = bit(s);
        Mask frontier = bit(s);
        while (frontier) {
            Mask next = 0;
            for (Mask m = frontier; m; m &= m - 1)
                next |= g.neighbors(static_cast<Vertex>(std::countr_zero(m)));
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        std::vector<Vertex> vs;
        for (Mask m = comp; m; m &= m - 1)
            vs.push_back(static_cast<Vertex>(std::countr_zero(m)));
        out.push_back(std::move(vs));
    }
    return out;
}

}  // namespace

std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g) { return components_of(g); }
std::vector<std::vector<Vertex>> connected_components(const TargetGraph& h) { return components_of(h); }

CanonicalLabeling canonical_labeling(const SimpleGraph& g) {
    struct Piece {
        std::string key;
        std::vector<Vertex> order;
    };
    std::vector<Piece> pieces;
    for (const auto& comp : connected_components(g)) {
        SimpleGraph sub = g.induced(comp);
        std::vector<Vertex> local = comp.size() == 1 ? std::vector<Vertex>{0} : Canonizer(sub).run();
        std::vector<Vertex> order;
        order.reserve(local.size());
        for (Vertex v : local)
            order.push_back(comp[v]);
        pieces.push_back({write_graph6(g.induced(order)), std::move(order)});
    }
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.key < b.key; });

    CanonicalLabeling out;
    for (const auto& piece : pieces)
        out.order.insert(out.order.end(), piece.order.begin(), piece.order.end());
    out.graph = g.induced(out.order);
    return out;
}

CanonicalForm canonical_form(const SimpleGraph& g) { return {write_graph6(canonical_labeling(g).graph)}; }

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<SimpleGraph> all_graphs(std::size_t n) {
    if (n > kAllGraphsCap)
        throw ParameterError("exhaustive graph enumeration is capped at " + std::to_string(kAllGraphsCap) + " vertices");
    std::map<CanonicalForm, SimpleGraph> current;
    current.emplace(canonical_form(SimpleGraph(0)), SimpleGraph(0));
    for (std::size_t m = 0; m < n; ++m) {
        std::map<CanonicalForm, SimpleGraph> next;
        for (const auto& [key, g] : current)
            for (Mask nb = 0; nb < (Mask{1} << m); ++nb) {
                std::vector<Mask> rows = g.rows();
                for (Mask b = nb; b; b &= b - 1)
                    rows[static_cast<Vertex>(std::countr_zero(b))] |= bit(m);
                rows.push_back(nb);
                auto h = SimpleGraph::from_rows(std::move(rows));
                auto label = canonical_labeling(h);
                next.emplace(CanonicalForm{write_graph6(label.graph)}, std::move(label.graph));
            }
        current = std::move(next);
    }
    std::vector<SimpleGraph> out;
    out.reserve(current.size());
    for (auto& [key, g] : current)
        out.push_back(std::move(g));
    return out;
}

}  // namespace homx
