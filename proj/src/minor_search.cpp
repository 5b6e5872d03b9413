#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "gridlab/errors.hpp"
#include "gridlab/minor_models.hpp"

namespace gridlab {

namespace {

using Mask = std::uint32_t;

class MinorSearch {
public:
    MinorSearch(const SimpleGraph& h, const SimpleGraph& g) : h_(h), g_(g) {
        const int n = g.num_vertices();
        adj_.assign(n, 0);
        for (auto [u, v] : g.edges()) {
            adj_[u] |= Mask{1} << v;
            adj_[v] |= Mask{1} << u;
        }
        order_pattern();
        sets_.assign(h.num_vertices(), 0);
    }

    std::optional<MinorModel> run() {
        const int hn = h_.num_vertices();
        if (hn > g_.num_vertices() || h_.num_edges() > g_.num_edges()) return std::nullopt;
        if (hn == 0 || assign(0, 0)) {
            MinorModel m;
            m.pattern = h_;
            m.host = g_;
            for (Mask s : sets_) {
                VertexSet b;
                for (Mask t = s; t; t &= t - 1) b.push_back(std::countr_zero(t));
                m.branch_sets.push_back(std::move(b));
            }
            assign_edge_witnesses(m);
            auto check = verify_model(m);
            if (!check.ok()) throw ConstructionError("minor search produced an invalid model: " + check.message);
            return m;
        }
        return std::nullopt;
    }

private:
    const SimpleGraph& h_;
    const SimpleGraph& g_;
    std::vector<Mask> adj_;
    std::vector<Vertex> order_;    // pattern vertices in placement order
    std::vector<int> position_;    // inverse of order_
    std::vector<Mask> sets_;

    void order_pattern() {
        const int hn = h_.num_vertices();
        position_.assign(hn, -1);
        for (;;) {
            Vertex start = -1;
            for (Vertex v = 0; v < hn; ++v)
                if (position_[v] < 0 && (start < 0 || h_.degree(v) > h_.degree(start))) start = v;
            if (start < 0) break;
            std::size_t head = order_.size();
            position_[start] = static_cast<int>(order_.size());
            order_.push_back(start);
            while (head < order_.size()) {
                Vertex u = order_[head++];
                for (Vertex w : h_.neighbors(u))
                    if (position_[w] < 0) {
                        position_[w] = static_cast<int>(order_.size());
                        order_.push_back(w);
                    }
            }
        }
    }

    Mask neighborhood(Mask s) const {
        Mask out = 0;
        for (Mask t = s; t; t &= t - 1) out |= adj_[std::countr_zero(t)];
        return out & ~s;
    }

    int unplaced_neighbors(Vertex p, int placed) const {
        int c = 0;
        for (Vertex q : h_.neighbors(p))
            if (position_[q] >= placed) ++c;
        return c;
    }

    // Necessary conditions for extending a partial model with `placed`
    // pattern vertices fixed and `used` host vertices taken.
    bool feasible(int placed, Mask used) const {
        const int hn = h_.num_vertices();
        const Mask all = g_.num_vertices() == 32 ? ~Mask{0} : ((Mask{1} << g_.num_vertices()) - 1);
        const Mask free = all & ~used;
        if (std::popcount(free) < hn - placed) return false;
        for (int idx = 0; idx < placed; ++idx) {
            Vertex p = order_[idx];
            if (std::popcount(neighborhood(sets_[p]) & free) < unplaced_neighbors(p, placed)) return false;
        }
        // Components of the free vertices.
        std::vector<Mask> comps;
        for (Mask rest = free; rest;) {
            Mask comp = rest & (~rest + 1), grow = comp;
            while (grow) {
                Mask nb = 0;
                for (Mask t = grow; t; t &= t - 1) nb |= adj_[std::countr_zero(t)];
                grow = nb & free & ~comp;
                comp |= grow;
            }
            comps.push_back(comp);
            rest &= ~comp;
        }
        for (int idx = placed; idx < hn; ++idx) {
            Vertex p = order_[idx];
            bool ok = false;
            for (Mask comp : comps) {
                bool touches_all = true;
                for (Vertex q : h_.neighbors(p))
                    if (position_[q] < placed && !(neighborhood(sets_[q]) & comp)) {
                        touches_all = false;
                        break;
                    }
                if (touches_all) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    }

    bool assign(int idx, Mask used) {
        const int hn = h_.num_vertices();
        if (idx == hn) return true;
        const Vertex p = order_[idx];
        const Mask all = g_.num_vertices() == 32 ? ~Mask{0} : ((Mask{1} << g_.num_vertices()) - 1);
        const Mask free = all & ~used;
        const int max_size = std::popcount(free) - (hn - idx - 1);
        std::vector<Mask> need;
        for (Vertex q : h_.neighbors(p))
            if (position_[q] < idx) need.push_back(neighborhood(sets_[q]));

        // Connected subsets of `free`, each generated once from its smallest
        // vertex by extension (ESU order).
        std::function<bool(Mask, Mask, Mask, Mask)> extend = [&](Mask s, Mask ext, Mask nb_s, Mask allowed) {
            bool adjacent = true;
            for (Mask nm : need)
                if (!(nm & s)) {
                    adjacent = false;
                    break;
                }
            if (adjacent) {
                sets_[p] = s;
                if (feasible(idx + 1, used | s) && assign(idx + 1, used | s)) return true;
                sets_[p] = 0;
            }
            if (std::popcount(s) >= max_size) return false;
            while (ext) {
                const int w = std::countr_zero(ext);
                ext &= ext - 1;
                Mask wb = Mask{1} << w;
                Mask fresh = adj_[w] & allowed & ~s & ~nb_s & ~wb;
                if (extend(s | wb, ext | fresh, nb_s | adj_[w], allowed)) return true;
            }
            return false;
        };

        for (Mask rest = free; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            Mask above = v == 31 ? 0 : (~Mask{0} << (v + 1));
            Mask allowed = free & above;
            Mask vb = Mask{1} << v;
            if (extend(vb, adj_[v] & allowed, adj_[v] | vb, allowed)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<MinorModel> minor_containment_exact(const SimpleGraph& h, const SimpleGraph& g) {
    if (h.num_vertices() > kMinorPatternLimit)
        throw SizeLimitError("minor_containment_exact: pattern has " + std::to_string(h.num_vertices()) +
                             " vertices, limit " + std::to_string(kMinorPatternLimit));
    if (g.num_vertices() > kMinorHostLimit)
        throw SizeLimitError("minor_containment_exact: host has " + std::to_string(g.num_vertices()) +
                             " vertices, limit " + std::to_string(kMinorHostLimit));
    return MinorSearch(h, g).run();
}

GridMinor largest_grid_minor(const SimpleGraph& g) {
    const int n = g.num_vertices();
    GridMinor out;
    out.model.host = g;
    if (n == 0) return out;
    int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while ((r + 1) * (r + 1) <= n) ++r;
    while (r * r > n) --r;
    if (is_complete(g)) {
        CliqueWitness w;
        for (Vertex v = 0; v < r * r; ++v) w.vertices.push_back(v);
        w.pairwise_distance_bound = 1;
        out.r = r;
        out.model = clique_to_grid(w, r, g);
        return out;
    }
    if (n > kMinorHostLimit)
        throw SizeLimitError("largest_grid_minor: " + std::to_string(n) + " vertices, exhaustive limit " +
                             std::to_string(kMinorHostLimit));
    // Grid patterns above the public pattern limit only arise with r^2 = n,
    // where every branch set is a single vertex and the search stays small.
    for (; r >= 1; --r) {
        auto m = MinorSearch(grid_graph(r, r), g).run();
        if (m) {
            out.r = r;
            out.model = std::move(*m);
            return out;
        }
    }
    throw ConstructionError("largest_grid_minor: no 1x1 grid in a nonempty graph");
}

}  // namespace gridlab
