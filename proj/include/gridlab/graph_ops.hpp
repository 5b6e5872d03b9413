#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gridlab/simple_graph.hpp"

namespace gridlab {

/// G^k: same vertices, {u,v} adjacent iff 1 <= dist_G(u,v) <= k.
/// Throws std::invalid_argument for k < 1.
SimpleGraph power_graph(const SimpleGraph& g, int k);

struct HalfSquare {
    SimpleGraph graph;
    std::vector<Vertex> original;  // graph vertex i is original[i] in the carrier
};

/// G^2[U] for U = bip.left: vertices of U, adjacent iff at distance exactly 2.
HalfSquare half_square(const SimpleGraph& g, const Bipartition& bip);

/// Closed ball of radius k around v, sorted.
VertexSet k_neighborhood(const SimpleGraph& g, Vertex v, int k);

/// Max over v of |N_k[v]| (ball includes v), i.e. Delta(G^k) + 1.
int max_ball_size(const SimpleGraph& g, int k);

/// Vertex set whose members are pairwise within `pairwise_distance_bound`
/// in the carrier graph, hence a clique of G^bound.
struct CliqueWitness {
    VertexSet vertices;
    int pairwise_distance_bound = 0;
};

enum class PowerCase {
    InnerBall,         // |N_{floor(k/2)}(v)| >= r^2
    InnerLabels,       // a class of the labeling into N_{floor(k/2)} reached r^2
    OuterLabels,       // odd k only: a class of the labeling into N_{k-1} reached r^2
};

/// Certificate that no case fired. Even k: every class < r^2 over < r^2
/// labels, so |N_k(v)| < r^4. Odd k: |N_{k-1}(v)| < r^4 and every outer
/// class < r^2, so |N_k(v)| < r^6.
struct BoundReport {
    int k = 0;
    int r = 0;
    Vertex center = 0;           // vertex maximising |N_k|
    int inner_radius = 0;        // floor(k/2)
    int inner_ball_size = 0;     // |N_{floor(k/2)}(center)|
    int largest_inner_class = 0;
    int middle_ball_size = 0;    // odd k: |N_{k-1}(center)|; even k: same as outer
    int largest_outer_class = 0; // odd k only
    int outer_ball_size = 0;     // |N_k(center)|
    long long certified_bound = 0;  // r^4 (even) or r^6 (odd); outer_ball_size < this
};

/// k = 1 with r >= 2 reaching the last labeling stage: the class found is a
/// star around its label, pairwise distance 2 > k, so it is not a clique of
/// G^1 and the counting bound does not hold either.
struct DegenerateReport {
    int k = 0;
    int r = 0;
    Vertex center = 0;
    VertexSet star_class;
    std::string reason;
};

struct PowerCliqueResult {
    std::variant<CliqueWitness, BoundReport, DegenerateReport> outcome;
    PowerCase clique_case = PowerCase::InnerBall;  // meaningful for CliqueWitness

    bool has_witness() const { return std::holds_alternative<CliqueWitness>(outcome); }
    bool has_bound() const { return std::holds_alternative<BoundReport>(outcome); }
};

/// Case analysis of the power-graph grid argument on the vertex of G whose
/// k-ball is largest (smallest id on ties). Labels come from a BFS tree rooted
/// there (parents chosen by smallest id); a vertex's label is its ancestor at
/// the target depth, or itself when shallower.
PowerCliqueResult power_clique_or_bound(const SimpleGraph& g, int k, int r);

/// Independent check of a witness: all pairs within the stated distance.
bool verify_clique_witness(const SimpleGraph& g, const CliqueWitness& w);

inline constexpr int kMaxCliqueLimit = 40;

/// A maximum clique (branch and bound over bitsets). Refuses n > 40 with
/// SizeLimitError.
VertexSet max_clique_exact(const SimpleGraph& g);

}  // namespace gridlab
