#include "gridlab/graph_ops.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <stdexcept>

#include "gridlab/errors.hpp"

namespace gridlab {

namespace {

// Distances from `source`, stopping once `limit` is exceeded.
std::vector<int> bounded_bfs(const SimpleGraph& g, Vertex source, int limit) {
    std::vector<int> dist(g.num_vertices(), kUnreachable);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        if (dist[u] == limit) continue;
        for (Vertex w : g.neighbors(u))
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

long long ipow(long long base, int e) {
    long long out = 1;
    while (e-- > 0) out *= base;
    return out;
}

}  // namespace

SimpleGraph power_graph(const SimpleGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("power_graph: k must be at least 1");
    SimpleGraph out(g.num_vertices());
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        auto dist = bounded_bfs(g, u, k);
        for (Vertex v = u + 1; v < g.num_vertices(); ++v)
            if (dist[v] != kUnreachable) out.add_edge(u, v);
    }
    return out;
}

HalfSquare half_square(const SimpleGraph& g, const Bipartition& bip) {
    if (!is_valid_bipartition(g, bip))
        throw std::invalid_argument("half_square: not a bipartition of the graph");
    HalfSquare hs{SimpleGraph(static_cast<int>(bip.left.size())), bip.left};
    std::vector<int> index(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(bip.left.size()); ++i) index[bip.left[i]] = i;
    for (int i = 0; i < static_cast<int>(bip.left.size()); ++i) {
        Vertex u = bip.left[i];
        for (Vertex mid : g.neighbors(u))
            for (Vertex w : g.neighbors(mid))
                if (w != u && index[w] > i) hs.graph.add_edge(i, index[w]);
    }
    return hs;
}

VertexSet k_neighborhood(const SimpleGraph& g, Vertex v, int k) {
    if (v < 0 || v >= g.num_vertices()) throw std::out_of_range("k_neighborhood: bad vertex");
    if (k < 0) throw std::invalid_argument("k_neighborhood: negative radius");
    auto dist = bounded_bfs(g, v, k);
    VertexSet out;
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        if (dist[u] != kUnreachable) out.push_back(u);
    return out;
}

int max_ball_size(const SimpleGraph& g, int k) {
    int best = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        best = std::max(best, static_cast<int>(k_neighborhood(g, v, k).size()));
    return best;
}

PowerCliqueResult power_clique_or_bound(const SimpleGraph& g, int k, int r) {
    if (g.num_vertices() == 0) throw std::invalid_argument("power_clique_or_bound: empty graph");
    if (k < 1 || r < 1) throw std::invalid_argument("power_clique_or_bound: k and r must be positive");
    const int n = g.num_vertices();
    const long long r2 = static_cast<long long>(r) * r;

    Vertex center = 0;
    int center_ball = -1;
    for (Vertex v = 0; v < n; ++v) {
        int s = static_cast<int>(k_neighborhood(g, v, k).size());
        if (s > center_ball) {
            center_ball = s;
            center = v;
        }
    }

    const std::vector<int> depth = bfs_distances(g, center);
    std::vector<Vertex> parent(n, -1);
    for (Vertex u = 0; u < n; ++u) {
        if (depth[u] <= 0) continue;
        for (Vertex w : g.neighbors(u))  // sorted, so the first hit is the smallest id
            if (depth[w] == depth[u] - 1) {
                parent[u] = w;
                break;
            }
    }
    auto ancestor_at = [&](Vertex u, int target) {
        while (depth[u] > target) u = parent[u];
        return u;
    };
    auto ball = [&](int radius) {
        VertexSet out;
        for (Vertex u = 0; u < n; ++u)
            if (depth[u] != kUnreachable && depth[u] <= radius) out.push_back(u);
        return out;
    };
    // Largest label class of ball(radius) under ancestor_at(., target); ties
    // go to the smallest label.
    auto largest_class = [&](int radius, int target) {
        std::vector<VertexSet> classes(n);
        for (Vertex u : ball(radius)) classes[ancestor_at(u, target)].push_back(u);
        VertexSet best;
        for (auto& c : classes)
            if (c.size() > best.size()) best = c;
        return best;
    };

    const int h = k / 2;
    BoundReport report;
    report.k = k;
    report.r = r;
    report.center = center;
    report.inner_radius = h;
    report.outer_ball_size = center_ball;

    PowerCliqueResult result;
    VertexSet inner = ball(h);
    report.inner_ball_size = static_cast<int>(inner.size());
    if (static_cast<long long>(inner.size()) >= r2) {
        result.outcome = CliqueWitness{std::move(inner), k};
        result.clique_case = PowerCase::InnerBall;
        return result;
    }

    const int middle_radius = (k % 2 == 0) ? k : k - 1;
    VertexSet cls = largest_class(middle_radius, h);
    report.largest_inner_class = static_cast<int>(cls.size());
    report.middle_ball_size = static_cast<int>(ball(middle_radius).size());
    if (static_cast<long long>(cls.size()) >= r2) {
        result.outcome = CliqueWitness{std::move(cls), k};
        result.clique_case = PowerCase::InnerLabels;
        return result;
    }

    if (k % 2 == 0) {
        report.certified_bound = r2 * r2;
        result.outcome = report;
        return result;
    }

    VertexSet outer = largest_class(k, k - 1);
    report.largest_outer_class = static_cast<int>(outer.size());
    if (static_cast<long long>(outer.size()) >= r2) {
        if (k == 1) {
            result.outcome = DegenerateReport{
                k, r, center, std::move(outer),
                "k = 1: the outer label class is a star of pairwise distance 2, not a clique of G^1"};
            return result;
        }
        result.outcome = CliqueWitness{std::move(outer), k};
        result.clique_case = PowerCase::OuterLabels;
        return result;
    }
    report.certified_bound = ipow(r, 6);
    result.outcome = report;
    return result;
}

bool verify_clique_witness(const SimpleGraph& g, const CliqueWitness& w) {
    for (Vertex u : w.vertices) {
        if (u < 0 || u >= g.num_vertices()) return false;
        auto dist = bfs_distances(g, u);
        for (Vertex v : w.vertices) {
            if (v == u) continue;
            if (dist[v] == kUnreachable || dist[v] > w.pairwise_distance_bound) return false;
        }
    }
    return true;
}

namespace {

struct CliqueSearch {
    std::vector<std::uint64_t> adj;
    std::uint64_t best = 0;
    int best_size = 0;

    void expand(std::uint64_t chosen, int chosen_size, std::uint64_t candidates) {
        if (candidates == 0) {
            if (chosen_size > best_size) {
                best_size = chosen_size;
                best = chosen;
            }
            return;
        }
        while (candidates != 0) {
            if (chosen_size + std::popcount(candidates) <= best_size) return;
            int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            expand(chosen | (std::uint64_t{1} << v), chosen_size + 1, candidates & adj[v]);
        }
        if (chosen_size > best_size) {
            best_size = chosen_size;
            best = chosen;
        }
    }
};

}  // namespace

VertexSet max_clique_exact(const SimpleGraph& g) {
    const int n = g.num_vertices();
    if (n > kMaxCliqueLimit)
        throw SizeLimitError("max_clique_exact: " + std::to_string(n) + " vertices exceeds the limit of " +
                             std::to_string(kMaxCliqueLimit));
    CliqueSearch s;
    s.adj.assign(n, 0);
    for (auto [u, v] : g.edges()) {
        s.adj[u] |= std::uint64_t{1} << v;
        s.adj[v] |= std::uint64_t{1} << u;
    }
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    s.expand(0, 0, all);
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (s.best >> v & 1) out.push_back(v);
    return out;
}

}  // namespace gridlab
