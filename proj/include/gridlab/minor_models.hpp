#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridlab/embedded_graph.hpp"
#include "gridlab/graph_ops.hpp"
#include "gridlab/simple_graph.hpp"

namespace gridlab {

struct GridPattern {
    int rows = 0;
    int cols = 0;

    Vertex at(int i, int j) const { return i * cols + j; }
    SimpleGraph graph() const { return grid_graph(rows, cols); }
};

/// Certificate that `pattern` is a minor of `host`. branch_sets[i] is the
/// sorted host vertex set standing for pattern vertex i; each pattern edge
/// is listed once in edge_witness with a host edge joining the two sets.
struct MinorModel {
    SimpleGraph pattern;
    SimpleGraph host;
    std::vector<VertexSet> branch_sets;
    std::vector<std::pair<Edge, Edge>> edge_witness;  // (pattern edge, host edge), both with first < second

    bool operator==(const MinorModel&) const = default;
};

enum class ModelViolation {
    None,
    BranchSetCount,    // branch_sets.size() != pattern vertices
    BadBranchSet,      // empty, unsorted, or out-of-range entry
    Overlap,           // two branch sets share a host vertex
    Disconnected,      // branch set does not induce a connected subgraph
    MissingWitness,    // a pattern edge has no witness, or a witness names a non-edge of the pattern
    BadWitness,        // witness is not a host edge between the right branch sets
};

struct ModelCheck {
    ModelViolation violated = ModelViolation::None;
    int pattern_vertex = -1;
    int other_pattern_vertex = -1;
    Vertex host_vertex = -1;
    Edge pattern_edge{-1, -1};
    std::string message;

    bool ok() const { return violated == ModelViolation::None; }
    explicit operator bool() const { return ok(); }
};

const char* to_string(ModelViolation v);

ModelCheck verify_model(const MinorModel& m);

/// Sets edge_witness to, for each pattern edge in sorted order, the
/// lexicographically smallest host edge between the two branch sets. Returns
/// false (leaving that edge out) when some pair of sets is not adjacent.
bool assign_edge_witnesses(MinorModel& m);

enum class MinorOpKind { Contract, DeleteEdge, DeleteVertex };

/// contract(u, v): v is merged into u and u survives. delete_vertex uses u only
/// (v = -1). Vertices are always named by their id in the original host.
struct MinorOp {
    MinorOpKind kind = MinorOpKind::Contract;
    Vertex u = -1;
    Vertex v = -1;

    bool operator==(const MinorOp&) const = default;
};

struct ContractionSequence {
    std::vector<MinorOp> ops;

    void contract(Vertex keep, Vertex merged) { ops.push_back({MinorOpKind::Contract, keep, merged}); }
    void delete_edge(Vertex u, Vertex v) { ops.push_back({MinorOpKind::DeleteEdge, u, v}); }
    void delete_vertex(Vertex u) { ops.push_back({MinorOpKind::DeleteVertex, u, -1}); }

    bool operator==(const ContractionSequence&) const = default;
};

struct ReplayOptions {
    bool skip_edge_deletions = false;
    bool skip_vertex_deletions = false;
};

/// Outcome of applying a sequence. Surviving host vertices are renumbered
/// 0..s-1 in increasing original id; labels[i] is the set of host vertices
/// merged into survivor i.
struct ReplayResult {
    SimpleGraph graph;
    std::vector<Vertex> survivors;
    std::vector<VertexSet> labels;

    /// Index of the survivor whose label holds host vertex x, or -1.
    int owner_of(Vertex x) const;
};

/// Applies the operations in order, dropping loops and duplicate edges after
/// each contraction. Throws std::invalid_argument naming the first operation
/// that refers to a vertex or edge not present at that step.
ReplayResult replay(const SimpleGraph& host, const ContractionSequence& seq,
                    ReplayOptions options = {});

/// Deletes host vertices outside every branch set, contracts each branch set
/// into its smallest vertex along a BFS tree, then deletes surplus edges. The
/// survivor of pattern vertex i is min(branch_sets[i]).
ContractionSequence sequence_from_model(const MinorModel& m);

inline constexpr int kMinorPatternLimit = 10;
inline constexpr int kMinorHostLimit = 16;

/// Exhaustive backtracking over connected branch sets. Returns a verified
/// model or nullopt when none exists. Refuses |V(h)| > 10 or |V(g)| > 16.
std::optional<MinorModel> minor_containment_exact(const SimpleGraph& h, const SimpleGraph& g);

struct GridMinor {
    int r = 0;
    MinorModel model;
};

/// Largest r with an r x r grid minor. Cliques take the analytic path
/// r = floor(sqrt(n)); other graphs are searched exhaustively (n <= 16).
GridMinor largest_grid_minor(const SimpleGraph& g);

/// r x r grid model on singleton branch sets: grid vertex (i,j) gets the
/// (i*r+j)-th witness vertex. The witness vertices must be pairwise adjacent
/// in `host`; otherwise std::invalid_argument.
MinorModel clique_to_grid(const CliqueWitness& witness, int r, const SimpleGraph& host);

struct CleanSubgrid {
    int top = 0;
    int left = 0;
    int side = 0;
    ContractionSequence sequence;  // on grid_graph(rows, cols) plus the extra edges
};

/// Largest square window whose interior holds no endpoint of an extra edge
/// (ties: smallest top, then left). The sequence folds every outside vertex
/// into the nearest boundary vertex of the window and deletes the leftover
/// extra edges, so replaying it leaves exactly the side x side grid.
CleanSubgrid clean_subgrid(int rows, int cols, const std::vector<Edge>& extra_edges);

/// The host grid_graph(rows, cols) with the extra edges added.
SimpleGraph augmented_grid(int rows, int cols, const std::vector<Edge>& extra_edges);

/// Model of G = underlying_graph(e) in R(R(G)), with every face a nation.
/// Each face of R(G) is a diamond v1-f1-v2-f2 around one edge v1v2 of G; its
/// vertex w in R(R(G)) joins the branch set of the larger of v1, v2. Rejects
/// (std::invalid_argument) an input whose underlying graph is not 2-connected.
MinorModel double_radial_minor(const EmbeddedGraph& e);

/// Host of double_radial_minor: radial graph of the all-nations radial
/// embedding of e. Vertex ids: primal, then faces of e, then faces of R(G).
SimpleGraph double_radial_graph(const EmbeddedGraph& e);

struct PrimalDualReport {
    int tw_primal = 0;
    int tw_dual = 0;
    int genus = 0;
    int primal_vertices = 0;
    int dual_vertices = 0;

    /// |tw(G) - tw(G*)| <= 1.
    bool within_one() const { return tw_primal - tw_dual <= 1 && tw_dual - tw_primal <= 1; }
};

/// Exact treewidth of the primal graph and of the all-faces dual.
PrimalDualReport primal_dual_width_report(const EmbeddedGraph& e);

}  // namespace gridlab
