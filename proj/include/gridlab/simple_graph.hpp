#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace gridlab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate free

inline constexpr int kUnreachable = -1;

/// Loop-free undirected graph on vertices 0..n-1. Adjacency lists are kept
/// sorted, so iteration order (and every result derived from it) is
/// deterministic.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    SimpleGraph(int n, std::span<const Edge> edges);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return num_edges_; }

    /// Adds {u,v}. Throws on a self-loop or out-of-range endpoint; a duplicate
    /// is ignored. Returns true when the edge is new.
    bool add_edge(Vertex u, Vertex v);
    bool remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    /// All edges as (u,v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool operator==(const SimpleGraph& other) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    int num_edges_ = 0;
};

/// Vertex 2-coloring of a graph. Both sides sorted.
struct Bipartition {
    VertexSet left;
    VertexSet right;

    Bipartition swapped() const { return {right, left}; }
};

/// True when `bip` partitions the vertices and no edge stays on one side.
bool is_valid_bipartition(const SimpleGraph& g, const Bipartition& bip);

/// BFS distances from `source`; kUnreachable for other components.
std::vector<int> bfs_distances(const SimpleGraph& g, Vertex source);

/// Graph induced on `keep` (sorted), re-indexed 0..|keep|-1 in that order.
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> keep);

/// Component id per vertex, ids assigned in order of smallest member.
std::vector<int> connected_components(const SimpleGraph& g, int* count = nullptr);

bool is_connected(const SimpleGraph& g);

/// True iff `g` is connected, has at least 3 vertices and no cut vertex.
bool is_biconnected(const SimpleGraph& g);

bool is_complete(const SimpleGraph& g);

SimpleGraph complete_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph star_graph(int leaves);  // center is vertex 0
SimpleGraph grid_graph(int rows, int cols);  // (i,j) -> i*cols + j
SimpleGraph petersen_graph();

}  // namespace gridlab
