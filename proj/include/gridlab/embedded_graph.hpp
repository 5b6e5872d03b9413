#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gridlab/simple_graph.hpp"

namespace gridlab {

using Dart = int;
using FaceId = int;

/// A 2-cell embedded multigraph stored as a combinatorial map.
///
/// Each edge is a pair of darts (half-edges) joined by `twin`; `next` gives
/// the counterclockwise successor of a dart around its tail vertex. Faces are
/// the orbits of next(twin(.)); the corner between darts prev(d) and d at
/// vertex_of(d) belongs to the face of d. Faces are numbered by their smallest
/// dart, so face ids are a pure function of the three arrays.
///
/// Loops and parallel edges are allowed. Every vertex must carry at least one
/// dart, and the darts at a vertex must form a single `next` orbit.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;
    /// Throws StructuralError when the arrays do not form a valid map.
    EmbeddedGraph(std::vector<Dart> twin, std::vector<Dart> next, std::vector<Vertex> vertex_of);

    int num_darts() const { return static_cast<int>(twin_.size()); }
    int num_edges() const { return num_darts() / 2; }
    int num_vertices() const { return num_vertices_; }
    int num_faces() const { return static_cast<int>(faces_.size()); }
    int num_components() const { return num_components_; }

    Dart twin(Dart d) const { return twin_[d]; }
    Dart next(Dart d) const { return next_[d]; }
    Dart prev(Dart d) const { return prev_[d]; }
    Vertex vertex_of(Dart d) const { return vertex_of_[d]; }
    /// Head of the dart: the vertex it points to.
    Vertex head(Dart d) const { return vertex_of_[twin_[d]]; }
    FaceId face_of(Dart d) const { return face_of_[d]; }
    /// Next dart along the boundary walk of face_of(d).
    Dart face_next(Dart d) const { return next_[twin_[d]]; }

    const std::vector<Dart>& twins() const { return twin_; }
    const std::vector<Dart>& nexts() const { return next_; }
    const std::vector<Vertex>& vertex_ofs() const { return vertex_of_; }

    /// Boundary walk of every face, each starting at its smallest dart.
    const std::vector<std::vector<Dart>>& faces() const { return faces_; }

    /// Darts at v in counterclockwise order, starting from the smallest.
    std::vector<Dart> darts_at(Vertex v) const;
    int degree(Vertex v) const { return degree_[v]; }
    int max_degree() const;

    /// Component id (0-based, by smallest vertex) of each vertex.
    const std::vector<int>& component_of() const { return component_; }

    /// Sum over components of 2 - V + E - F. Zero iff every component is
    /// embedded in the sphere.
    int euler_genus() const;

    /// Underlying simple graph (loops dropped, parallel edges merged).
    SimpleGraph underlying_graph() const;

    bool operator==(const EmbeddedGraph& o) const {
        return twin_ == o.twin_ && next_ == o.next_ && vertex_of_ == o.vertex_of_;
    }

private:
    std::vector<Dart> twin_, next_, prev_;
    std::vector<Vertex> vertex_of_;
    std::vector<FaceId> face_of_;
    std::vector<std::vector<Dart>> faces_;
    std::vector<Dart> first_dart_;
    std::vector<int> degree_;
    std::vector<int> component_;
    int num_vertices_ = 0;
    int num_components_ = 0;
};

/// Face boundary walks; a thin alias of EmbeddedGraph::faces().
const std::vector<std::vector<Dart>>& faces(const EmbeddedGraph& e);

/// Euler genus of the given embedding (not minimised over embeddings).
int genus(const EmbeddedGraph& e);

/// Split of the faces into nations and lakes.
class FaceLabeling {
public:
    FaceLabeling() = default;
    /// Throws StructuralError unless `nations` is a nonempty duplicate-free
    /// subset of 0..num_faces-1.
    FaceLabeling(int num_faces, std::vector<FaceId> nations);

    static FaceLabeling all_nations(int num_faces);

    int num_faces() const { return static_cast<int>(nation_index_.size()); }
    int num_nations() const { return static_cast<int>(nations_.size()); }
    const std::vector<FaceId>& nations() const { return nations_; }
    const std::vector<FaceId>& lakes() const { return lakes_; }
    bool is_nation(FaceId f) const { return nation_index_[f] >= 0; }
    bool is_lake(FaceId f) const { return nation_index_[f] < 0; }
    /// Position of f in nations(), or -1 for a lake.
    int nation_index(FaceId f) const { return nation_index_[f]; }

    bool operator==(const FaceLabeling& o) const { return nations_ == o.nations_ && lakes_ == o.lakes_; }

private:
    std::vector<FaceId> nations_, lakes_;
    std::vector<int> nation_index_;
};

/// Builds a map from an edge list and, per vertex, the counterclockwise
/// order of incident darts. Edge i = (u,v) owns dart 2i (tail u) and dart
/// 2i+1 (tail v). rotation[v] lists dart ids.
EmbeddedGraph embedding_from_rotation(int num_vertices, std::span<const Edge> edges,
                                      const std::vector<std::vector<Dart>>& rotation);

struct Point {
    double x = 0;
    double y = 0;
};

/// Rotation system of a straight-line drawing: darts at each vertex sorted by
/// angle, counterclockwise. The drawing must be crossing free for the result
/// to be planar. Edge i owns darts 2i and 2i+1 as above.
EmbeddedGraph embedding_from_drawing(std::span<const Point> points, std::span<const Edge> edges);

/// Shoelace area of a face walk under the given vertex positions. Bounded
/// faces of a drawing come out negative (walks keep the face on the right),
/// the unbounded face positive.
double face_signed_area(const EmbeddedGraph& e, FaceId f, std::span<const Point> points);

}  // namespace gridlab
