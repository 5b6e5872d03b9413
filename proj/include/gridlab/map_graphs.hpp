#pragma once

#include <vector>

#include "gridlab/embedded_graph.hpp"
#include "gridlab/simple_graph.hpp"

namespace gridlab {

// Nation-indexed graphs below number nation fl.nations()[i] as vertex i.

/// Modified dual: nations adjacent iff they share an edge.
SimpleGraph dual_graph(const EmbeddedGraph& e, const FaceLabeling& fl);

/// Map graph: nations adjacent iff they share a vertex.
SimpleGraph map_graph(const EmbeddedGraph& e, const FaceLabeling& fl);

/// Vertex-nation incidence graph. Vertex v of the embedding keeps id v;
/// nation i becomes num_primal + i. sides.left holds the primal vertices,
/// sides.right the nations.
struct RadialGraph {
    SimpleGraph graph;
    Bipartition sides;
    int num_primal = 0;

    Vertex nation_vertex(int nation) const { return num_primal + nation; }
};

RadialGraph radial_graph(const EmbeddedGraph& e, const FaceLabeling& fl);

/// R(G) plus the dual edges, on the radial vertex numbering.
SimpleGraph union_radial_dual(const EmbeddedGraph& e, const FaceLabeling& fl);

/// The radial graph drawn inside the embedding: one edge per nation corner,
/// vertices keep the radial numbering. A corner-free vertex (only lakes
/// around it) has no place in a rotation system and raises StructuralError.
EmbeddedGraph radial_embedding(const EmbeddedGraph& e, const FaceLabeling& fl);

/// Which of the three canonical-map properties hold.
struct CanonicalCheck {
    bool no_lake_only_vertex = true;
    bool no_lake_lake_edge = true;
    bool at_most_one_lake_corner = true;

    bool ok() const { return no_lake_only_vertex && no_lake_lake_edge && at_most_one_lake_corner; }
};

CanonicalCheck check_canonical(const EmbeddedGraph& e, const FaceLabeling& fl);
inline bool is_canonical(const EmbeddedGraph& e, const FaceLabeling& fl) { return check_canonical(e, fl).ok(); }

/// One connected component of a canonicalized map.
struct CanonicalMap {
    EmbeddedGraph graph;
    FaceLabeling labels;
    std::vector<FaceId> nation_origin;  // input face id of each output nation
    std::vector<FaceId> face_origin;    // input face id per output face (merged lakes: smallest id)
    std::vector<Vertex> vertex_origin;  // input vertex each output vertex came from (split copies included)
};

/// Removes lake-only vertices, deletes lake-lake edges (merging lakes), and
/// splits every vertex with two or more lake corners into a star so that no
/// vertex touches a lake more than once. Vertices are split in increasing id
/// order, wedges in rotation order. Components of the result are returned
/// separately, ordered by smallest input vertex. An input that is already
/// canonical and connected comes back unchanged.
std::vector<CanonicalMap> canonicalize(const EmbeddedGraph& e, const FaceLabeling& fl);

}  // namespace gridlab
