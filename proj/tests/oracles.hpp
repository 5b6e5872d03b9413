#pragma once

// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond SimpleGraph storage.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

#include "gridlab/simple_graph.hpp"

namespace oracle {

using gridlab::SimpleGraph;

inline std::vector<std::uint32_t> adjacency_masks(const SimpleGraph& g) {
    std::vector<std::uint32_t> adj(g.num_vertices(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

// Floyd-Warshall, -1 for unreachable.
inline std::vector<std::vector<int>> all_pairs_distances(const SimpleGraph& g) {
    const int n = g.num_vertices();
    const int inf = n + 1;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (d[u][w] + d[w][v] < d[u][v]) d[u][v] = d[u][w] + d[w][v];
    for (auto& row : d)
        for (int& x : row)
            if (x >= inf) x = -1;
    return d;
}

inline SimpleGraph power(const SimpleGraph& g, int k) {
    auto d = all_pairs_distances(g);
    SimpleGraph out(g.num_vertices());
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v = u + 1; v < g.num_vertices(); ++v)
            if (d[u][v] > 0 && d[u][v] <= k) out.add_edge(u, v);
    return out;
}

inline int max_degree_of_power(const SimpleGraph& g, int k) {
    auto d = all_pairs_distances(g);
    int best = 0;
    for (int u = 0; u < g.num_vertices(); ++u) {
        int deg = 0;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (u != v && d[u][v] > 0 && d[u][v] <= k) ++deg;
        best = std::max(best, deg);
    }
    return best;
}

// Width of the best elimination ordering, trying every permutation.
inline int treewidth_by_orderings(const SimpleGraph& g) {
    const int n = g.num_vertices();
    if (n == 0) return 0;
    auto base = adjacency_masks(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = n - 1;
    do {
        auto adj = base;
        std::uint32_t alive = (n == 32) ? ~0u : ((1u << n) - 1);
        int width = 0;
        for (int v : perm) {
            std::uint32_t nb = adj[v] & alive & ~(1u << v);
            width = std::max(width, __builtin_popcount(nb));
            if (width >= best) break;
            for (int u = 0; u < n; ++u)
                if (nb >> u & 1) adj[u] |= nb & ~(1u << u);
            alive &= ~(1u << v);
        }
        best = std::min(best, width);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline int min_vertex_cover(const SimpleGraph& g) {
    const int n = g.num_vertices();
    auto edges = g.edges();
    int best = n;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        int size = __builtin_popcount(s);
        if (size >= best) continue;
        bool ok = true;
        for (auto [u, v] : edges)
            if (!(s >> u & 1) && !(s >> v & 1)) {
                ok = false;
                break;
            }
        if (ok) best = size;
    }
    return best;
}

inline bool is_vertex_cover(const SimpleGraph& g, const std::vector<int>& cover) {
    std::vector<char> in(g.num_vertices(), 0);
    for (int v : cover) in[v] = 1;
    for (auto [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

inline int max_clique_size(const SimpleGraph& g) {
    const int n = g.num_vertices();
    auto adj = adjacency_masks(g);
    int best = n > 0 ? 1 : 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int size = __builtin_popcount(s);
        if (size <= best) continue;
        bool clique = true;
        for (int v = 0; v < n && clique; ++v)
            if ((s >> v & 1) && ((adj[v] | (1u << v)) & s) != s) clique = false;
        if (clique) best = size;
    }
    return best;
}

inline bool connected_within(const std::vector<std::uint32_t>& adj, std::uint32_t set) {
    if (set == 0) return false;
    std::uint32_t seen = set & (~set + 1);
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t grow = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) grow |= adj[__builtin_ctz(f)];
        grow &= set & ~seen;
        seen |= grow;
        frontier = grow;
    }
    return seen == set;
}

// h is a minor of g iff some partial map V(g) -> V(h) has connected,
// nonempty preimages with every h-edge realised. Tries all (|h|+1)^|g| maps.
inline bool is_minor_by_labeling(const SimpleGraph& h, const SimpleGraph& g) {
    const int hn = h.num_vertices(), gn = g.num_vertices();
    if (hn > gn) return false;
    if (hn == 0) return true;
    auto adj = adjacency_masks(g);
    auto hedges = h.edges();
    std::vector<int> label(gn, -1);
    while (true) {
        std::vector<std::uint32_t> cls(hn, 0);
        for (int v = 0; v < gn; ++v)
            if (label[v] >= 0) cls[label[v]] |= 1u << v;
        bool ok = true;
        for (int i = 0; i < hn && ok; ++i) ok = connected_within(adj, cls[i]);
        for (std::size_t e = 0; e < hedges.size() && ok; ++e) {
            auto [a, b] = hedges[e];
            bool touch = false;
            for (std::uint32_t s = cls[a]; s && !touch; s &= s - 1)
                if (adj[__builtin_ctz(s)] & cls[b]) touch = true;
            ok = touch;
        }
        if (ok) return true;
        int pos = 0;
        while (pos < gn && label[pos] == hn - 1) label[pos++] = -1;
        if (pos == gn) return false;
        ++label[pos];
    }
}

// Grid test by brute-force coordinates: g is the rows x cols grid iff the
// map (i,j) -> i*cols+j after some relabelling matches. Here the labelling is
// given, so this just compares edge sets.
inline bool is_labelled_grid(const SimpleGraph& g, int rows, int cols,
                             const std::vector<std::pair<int, int>>& coord) {
    if (g.num_vertices() != rows * cols || static_cast<int>(coord.size()) != rows * cols) return false;
    std::vector<int> at(rows * cols, -1);
    for (int v = 0; v < rows * cols; ++v) {
        auto [x, y] = coord[v];
        if (x < 0 || y < 0 || x >= rows || y >= cols || at[x * cols + y] >= 0) return false;
        at[x * cols + y] = v;
    }
    int expected = 0;
    for (int x = 0; x < rows; ++x)
        for (int y = 0; y < cols; ++y) {
            if (x + 1 < rows) {
                ++expected;
                if (!g.has_edge(at[x * cols + y], at[(x + 1) * cols + y])) return false;
            }
            if (y + 1 < cols) {
                ++expected;
                if (!g.has_edge(at[x * cols + y], at[x * cols + y + 1])) return false;
            }
        }
    return g.num_edges() == expected;
}

// Independent tree-decomposition check: tree shape, coverage, and per-vertex
// connectivity by BFS over the bags containing the vertex.
inline bool valid_decomposition(const std::vector<std::vector<int>>& bags,
                                const std::vector<std::pair<int, int>>& tree_edges, const SimpleGraph& g) {
    const int b = static_cast<int>(bags.size());
    if (b == 0) return false;
    if (static_cast<int>(tree_edges.size()) != b - 1) return false;
    std::vector<std::vector<int>> tadj(b);
    for (auto [x, y] : tree_edges) {
        if (x < 0 || y < 0 || x >= b || y >= b || x == y) return false;
        tadj[x].push_back(y);
        tadj[y].push_back(x);
    }
    auto reach = [&](const std::vector<char>& allowed, int start) {
        std::vector<char> seen(b, 0);
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        int count = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : tadj[x])
                if (allowed[y] && !seen[y]) {
                    seen[y] = 1;
                    ++count;
                    q.push(y);
                }
        }
        return count;
    };
    if (reach(std::vector<char>(b, 1), 0) != b) return false;
    auto holds = [&](int bag, int v) { return std::find(bags[bag].begin(), bags[bag].end(), v) != bags[bag].end(); };
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<char> allowed(b, 0);
        int first = -1, count = 0;
        for (int x = 0; x < b; ++x)
            if (holds(x, v)) {
                allowed[x] = 1;
                ++count;
                if (first < 0) first = x;
            }
        if (count == 0 || reach(allowed, first) != count) return false;
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int x = 0; x < b && !covered; ++x) covered = holds(x, u) && holds(x, v);
        if (!covered) return false;
    }
    return true;
}

}  // namespace oracle
