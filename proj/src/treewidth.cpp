#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "gridlab/errors.hpp"
#include "gridlab/tree_decomposition.hpp"

namespace gridlab {

TreeDecomposition decomposition_from_ordering(const SimpleGraph& g, std::span<const Vertex> order) {
    const int n = g.num_vertices();
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("elimination order has wrong length");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        if (v < 0 || v >= n || pos[v] != -1) throw std::invalid_argument("elimination order is not a permutation");
        pos[v] = i;
    }
    TreeDecomposition td;
    if (n == 0) {
        td.bags.emplace_back();
        return td;
    }
    std::vector<std::set<Vertex>> fill(n);
    for (auto [u, v] : g.edges()) {
        fill[u].insert(v);
        fill[v].insert(u);
    }
    td.bags.resize(n);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        std::vector<Vertex> later;
        for (Vertex w : fill[v])
            if (pos[w] > i) later.push_back(w);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b) {
                fill[later[a]].insert(later[b]);
                fill[later[b]].insert(later[a]);
            }
        VertexSet bag = later;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags[i] = std::move(bag);
        if (!later.empty()) {
            int up = n;
            for (Vertex w : later) up = std::min(up, pos[w]);
            td.tree_edges.emplace_back(i, up);
        } else if (i + 1 < n) {
            td.tree_edges.emplace_back(i, i + 1);
        }
    }
    return td;
}

namespace {

enum class Greedy { MinFill, MinDegree };

std::vector<Vertex> greedy_order(const SimpleGraph& g, Greedy rule) {
    const int n = g.num_vertices();
    std::vector<std::set<Vertex>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> gone(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        long long best_fill = 0;
        int best_deg = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (gone[v]) continue;
            int deg = static_cast<int>(adj[v].size());
            long long fill_in = 0;
            if (rule == Greedy::MinFill) {
                for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
                    for (auto b = std::next(a); b != adj[v].end(); ++b)
                        if (!adj[*a].count(*b)) ++fill_in;
            }
            if (best < 0 || fill_in < best_fill || (fill_in == best_fill && deg < best_deg)) {
                best = v;
                best_fill = fill_in;
                best_deg = deg;
            }
        }
        std::vector<Vertex> nb(adj[best].begin(), adj[best].end());
        for (std::size_t a = 0; a < nb.size(); ++a) {
            adj[nb[a]].erase(best);
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                adj[nb[a]].insert(nb[b]);
                adj[nb[b]].insert(nb[a]);
            }
        }
        adj[best].clear();
        gone[best] = 1;
        order.push_back(best);
    }
    return order;
}

// Contraction degeneracy estimate: repeatedly take a minimum-degree vertex
// and contract it into its lowest-degree neighbour. Never exceeds tw.
int minor_min_width(const SimpleGraph& g) {
    const int n = g.num_vertices();
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    std::uint32_t alive = n == 32 ? ~0u : ((1u << n) - 1);
    int lb = 0;
    while (std::popcount(alive) > 1) {
        Vertex v = -1;
        int dv = n + 1;
        for (Vertex x = 0; x < n; ++x)
            if ((alive >> x) & 1u) {
                int d = std::popcount(adj[x]);
                if (d < dv) {
                    dv = d;
                    v = x;
                }
            }
        lb = std::max(lb, dv);
        alive &= ~(1u << v);
        if (dv == 0) continue;
        Vertex u = -1;
        int du = n + 1;
        for (Vertex x = 0; x < n; ++x)
            if ((adj[v] >> x) & 1u) {
                int d = std::popcount(adj[x]);
                if (d < du) {
                    du = d;
                    u = x;
                }
            }
        std::uint32_t merged = (adj[u] | adj[v]) & ~(1u << u) & ~(1u << v);
        for (Vertex x = 0; x < n; ++x) {
            if (!((adj[v] >> x) & 1u)) continue;
            adj[x] &= ~(1u << v);
            if (x != u) adj[x] |= 1u << u;
        }
        adj[u] = merged;
        adj[v] = 0;
    }
    return lb;
}

// Vertices outside S + x reachable from x through S.
std::uint32_t q_set(const std::vector<std::uint32_t>& adj, std::uint32_t s, int x) {
    std::uint32_t inside = 1u << x, frontier = inside, reach = 0;
    while (frontier) {
        std::uint32_t nb = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) nb |= adj[std::countr_zero(f)];
        reach |= nb & ~s;
        frontier = nb & s & ~inside;
        inside |= frontier;
    }
    return reach & ~(1u << x);
}

}  // namespace

TreewidthResult treewidth_upper(const SimpleGraph& g) {
    TreewidthResult best;
    bool have = false;
    for (Greedy rule : {Greedy::MinFill, Greedy::MinDegree}) {
        auto order = greedy_order(g, rule);
        auto td = decomposition_from_ordering(g, order);
        if (!have || td.width() < best.width) {
            best.width = td.width();
            best.decomposition = std::move(td);
            have = true;
        }
    }
    return best;
}

TreewidthResult treewidth_exact(const SimpleGraph& g) {
    const int n = g.num_vertices();
    if (n > kExactTreewidthLimit)
        throw SizeLimitError("treewidth_exact: " + std::to_string(n) + " vertices exceeds limit " +
                             std::to_string(kExactTreewidthLimit));
    TreewidthResult heuristic = treewidth_upper(g);
    if (n <= 1 || heuristic.width <= minor_min_width(g)) return heuristic;

    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    struct State {
        int value;
        int last;
    };
    std::unordered_map<std::uint32_t, State> memo;
    memo.emplace(0u, State{0, -1});
    std::vector<std::uint32_t> layer{0u}, next_layer;
    int up = heuristic.width;
    std::uint32_t finish = 0;
    bool improved = false;

    for (int size = 0; size < n && !layer.empty(); ++size) {
        next_layer.clear();
        for (std::uint32_t s : layer) {
            int val = memo[s].value;
            if (val >= up) continue;
            int rest = n - size;
            if (std::max(val, rest - 1) < up) {
                up = std::max(val, rest - 1);
                finish = s;
                improved = true;
                continue;
            }
            for (int x = 0; x < n; ++x) {
                if ((s >> x) & 1u) continue;
                int nv = std::max(val, std::popcount(q_set(adj, s, x)));
                if (nv >= up) continue;
                std::uint32_t t = s | (1u << x);
                auto [it, fresh] = memo.try_emplace(t, State{nv, x});
                if (fresh)
                    next_layer.push_back(t);
                else if (nv < it->second.value)
                    it->second = State{nv, x};
            }
        }
        std::swap(layer, next_layer);
    }
    if (!improved) return heuristic;

    std::vector<Vertex> order;
    for (std::uint32_t s = finish; s != 0;) {
        int x = memo.at(s).last;
        order.push_back(x);
        s &= ~(1u << x);
    }
    std::reverse(order.begin(), order.end());
    for (int x = 0; x < n; ++x)
        if (!((finish >> x) & 1u)) order.push_back(x);

    TreewidthResult out;
    out.decomposition = decomposition_from_ordering(g, order);
    out.width = out.decomposition.width();
    if (out.width != up)
        throw ConstructionError("treewidth_exact: ordering width " + std::to_string(out.width) +
                                " disagrees with search value " + std::to_string(up));
    return out;
}

}  // namespace gridlab
