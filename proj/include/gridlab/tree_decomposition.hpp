#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gridlab/embedded_graph.hpp"
#include "gridlab/simple_graph.hpp"

namespace gridlab {

/// Tree of bags. Node i owns bags[i]; bags are sorted and duplicate free.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges;

    int num_bags() const { return static_cast<int>(bags.size()); }
    int max_bag_size() const;
    /// max bag size - 1, and 0 for a decomposition whose bags are all empty.
    int width() const;

    bool operator==(const TreeDecomposition&) const = default;
};

enum class TdCondition {
    None,
    TreeShape,         // not a tree, or an endpoint out of range
    BagContents,       // bag vertex out of range, or bag not sorted/unique
    VertexCoverage,    // (T1) some vertex in no bag
    EdgeCoverage,      // (T2) some edge in no bag
    SubtreeConnected,  // (T3) bags holding a vertex do not form a subtree
};

struct TdValidation {
    TdCondition violated = TdCondition::None;
    Vertex vertex = -1;     // T1 / T3 / bag witness
    Edge edge{-1, -1};      // T2 witness
    std::string message;

    bool ok() const { return violated == TdCondition::None; }
    explicit operator bool() const { return ok(); }
};

/// Checks tree shape and the three decomposition conditions, reporting the
/// first violation found with a witness.
TdValidation validate(const TreeDecomposition& td, const SimpleGraph& g);

const char* to_string(TdCondition c);

struct TreewidthResult {
    int width = 0;
    TreeDecomposition decomposition;
};

inline constexpr int kExactTreewidthLimit = 20;

/// Minimum-width decomposition. Memoized dynamic programming over sets of
/// already-eliminated vertices, pruned by a heuristic upper bound. Refuses
/// graphs above kExactTreewidthLimit vertices with SizeLimitError.
TreewidthResult treewidth_exact(const SimpleGraph& g);

/// Min-fill and min-degree elimination; the narrower of the two.
TreewidthResult treewidth_upper(const SimpleGraph& g);

/// Decomposition induced by eliminating vertices in `order` (a permutation).
TreeDecomposition decomposition_from_ordering(const SimpleGraph& g, std::span<const Vertex> order);

/// Replaces every primal vertex in each bag of a radial-graph decomposition
/// by the nations around it. The result lives on the map graph's nation
/// numbering. Rejects (std::invalid_argument) a decomposition that does not
/// validate against radial_graph(e, fl).
TreeDecomposition lift_radial_to_map(const TreeDecomposition& td_radial, const EmbeddedGraph& e,
                                     const FaceLabeling& fl);

/// Replaces every vertex in each bag by its closed k-ball. Rejects an input
/// decomposition that does not validate against g.
TreeDecomposition lift_power(const TreeDecomposition& td, const SimpleGraph& g, int k);

struct VertexCoverResult {
    int size = 0;
    VertexSet cover;
};

inline constexpr int kVertexCoverBagLimit = 20;

/// Minimum vertex cover by dynamic programming over the decomposition.
/// Rejects an invalid decomposition; refuses bags above kVertexCoverBagLimit.
VertexCoverResult vertex_cover_dp(const SimpleGraph& g, const TreeDecomposition& td);

}  // namespace gridlab
