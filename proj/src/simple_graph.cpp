#include "gridlab/simple_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace gridlab {

SimpleGraph::SimpleGraph(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(n);
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

bool SimpleGraph::add_edge(Vertex u, Vertex v) {
    const int n = num_vertices();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::out_of_range("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} outside 0.." + std::to_string(n - 1));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return false;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++num_edges_;
    return true;
}

bool SimpleGraph::remove_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v)) return false;
    auto& au = adj_[u];
    au.erase(std::lower_bound(au.begin(), au.end(), v));
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --num_edges_;
    return true;
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int SimpleGraph::max_degree() const {
    int best = 0;
    for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
    return best;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool is_valid_bipartition(const SimpleGraph& g, const Bipartition& bip) {
    std::vector<int> side(g.num_vertices(), -1);
    for (int s = 0; s < 2; ++s) {
        for (Vertex v : s == 0 ? bip.left : bip.right) {
            if (v < 0 || v >= g.num_vertices() || side[v] != -1) return false;
            side[v] = s;
        }
    }
    if (std::find(side.begin(), side.end(), -1) != side.end()) return false;
    for (auto [u, v] : g.edges())
        if (side[u] == side[v]) return false;
    return true;
}

std::vector<int> bfs_distances(const SimpleGraph& g, Vertex source) {
    std::vector<int> dist(g.num_vertices(), kUnreachable);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> keep) {
    std::vector<int> index(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
    SimpleGraph out(static_cast<int>(keep.size()));
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        for (Vertex w : g.neighbors(keep[i]))
            if (index[w] > i) out.add_edge(i, index[w]);
    return out;
}

std::vector<int> connected_components(const SimpleGraph& g, int* count) {
    std::vector<int> comp(g.num_vertices(), -1);
    int c = 0;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<Vertex> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u))
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

bool is_connected(const SimpleGraph& g) {
    int c = 0;
    connected_components(g, &c);
    return c <= 1;
}

bool is_biconnected(const SimpleGraph& g) {
    const int n = g.num_vertices();
    if (n < 3 || !is_connected(g)) return false;
    // Iterative Hopcroft-Tarjan low-point computation.
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::size_t> next_child(n, 0);
    int timer = 0;
    int root_children = 0;
    std::vector<Vertex> stack{0};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        Vertex u = stack.back();
        const auto& nb = g.neighbors(u);
        if (next_child[u] < nb.size()) {
            Vertex w = nb[next_child[u]++];
            if (disc[w] == -1) {
                parent[w] = u;
                disc[w] = low[w] = timer++;
                if (u == 0) ++root_children;
                stack.push_back(w);
            } else if (w != parent[u]) {
                low[u] = std::min(low[u], disc[w]);
            }
        } else {
            stack.pop_back();
            Vertex p = parent[u];
            if (p >= 0) {
                low[p] = std::min(low[p], low[u]);
                if (p != 0 && low[u] >= disc[p]) return false;
            }
        }
    }
    return root_children <= 1;
}

bool is_complete(const SimpleGraph& g) {
    const long n = g.num_vertices();
    return g.num_edges() == n * (n - 1) / 2;
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    SimpleGraph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

SimpleGraph star_graph(int leaves) {
    SimpleGraph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

SimpleGraph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
    SimpleGraph g(rows * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols) g.add_edge(i * cols + j, i * cols + j + 1);
            if (i + 1 < rows) g.add_edge(i * cols + j, (i + 1) * cols + j);
        }
    return g;
}

SimpleGraph petersen_graph() {
    SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

}  // namespace gridlab
