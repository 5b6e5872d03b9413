#include "gridlab/embedded_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gridlab/errors.hpp"

namespace gridlab {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

EmbeddedGraph::EmbeddedGraph(std::vector<Dart> twin, std::vector<Dart> next, std::vector<Vertex> vertex_of)
    : twin_(std::move(twin)), next_(std::move(next)), vertex_of_(std::move(vertex_of)) {
    const int m = static_cast<int>(twin_.size());
    if (static_cast<int>(next_.size()) != m || static_cast<int>(vertex_of_.size()) != m)
        throw StructuralError("twin, next and vertex_of must have equal length");
    if (m % 2 != 0) throw StructuralError("dart count must be even");

    for (Dart d = 0; d < m; ++d) {
        Dart t = twin_[d];
        if (t < 0 || t >= m) throw StructuralError("twin(" + std::to_string(d) + ") out of range");
        if (t == d) throw StructuralError("twin has a fixed point at dart " + std::to_string(d));
        if (twin_[t] != d) throw StructuralError("twin is not an involution at dart " + std::to_string(d));
    }

    prev_.assign(m, -1);
    for (Dart d = 0; d < m; ++d) {
        Dart nx = next_[d];
        if (nx < 0 || nx >= m) throw StructuralError("next(" + std::to_string(d) + ") out of range");
        if (prev_[nx] != -1) throw StructuralError("next is not a permutation (dart " + std::to_string(nx) + ")");
        prev_[nx] = d;
    }

    num_vertices_ = 0;
    for (Dart d = 0; d < m; ++d) {
        if (vertex_of_[d] < 0) throw StructuralError("negative vertex id at dart " + std::to_string(d));
        num_vertices_ = std::max(num_vertices_, vertex_of_[d] + 1);
    }

    // Each vertex must own exactly one rotation orbit.
    first_dart_.assign(num_vertices_, -1);
    degree_.assign(num_vertices_, 0);
    std::vector<char> seen(m, 0);
    for (Dart d = 0; d < m; ++d) {
        if (seen[d]) continue;
        Vertex v = vertex_of_[d];
        if (first_dart_[v] != -1)
            throw StructuralError("darts of vertex " + std::to_string(v) + " form more than one rotation cycle");
        first_dart_[v] = d;
        Dart x = d;
        do {
            if (vertex_of_[x] != v)
                throw StructuralError("rotation cycle of dart " + std::to_string(d) + " mixes vertices");
            seen[x] = 1;
            ++degree_[v];
            x = next_[x];
        } while (x != d);
    }
    for (Vertex v = 0; v < num_vertices_; ++v)
        if (first_dart_[v] == -1) throw StructuralError("vertex " + std::to_string(v) + " has no darts");

    face_of_.assign(m, -1);
    for (Dart d = 0; d < m; ++d) {
        if (face_of_[d] != -1) continue;
        FaceId f = static_cast<FaceId>(faces_.size());
        faces_.emplace_back();
        Dart x = d;
        do {
            face_of_[x] = f;
            faces_.back().push_back(x);
            x = next_[twin_[x]];
        } while (x != d);
    }

    std::vector<int> parent(num_vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    for (Dart d = 0; d < m; ++d) {
        int a = find_root(parent, vertex_of_[d]), b = find_root(parent, vertex_of_[twin_[d]]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    component_.assign(num_vertices_, -1);
    std::vector<int> id_of_root(num_vertices_, -1);
    num_components_ = 0;
    for (Vertex v = 0; v < num_vertices_; ++v) {
        int root = find_root(parent, v);
        if (id_of_root[root] == -1) id_of_root[root] = num_components_++;
        component_[v] = id_of_root[root];
    }
}

std::vector<Dart> EmbeddedGraph::darts_at(Vertex v) const {
    std::vector<Dart> out;
    Dart d = first_dart_[v];
    Dart x = d;
    do {
        out.push_back(x);
        x = next_[x];
    } while (x != d);
    return out;
}

int EmbeddedGraph::max_degree() const {
    int best = 0;
    for (int deg : degree_) best = std::max(best, deg);
    return best;
}

int EmbeddedGraph::euler_genus() const {
    // Per-component 2 - V + E - F, summed: 2c - V + E - F.
    return 2 * num_components_ - num_vertices_ + num_edges() - num_faces();
}

SimpleGraph EmbeddedGraph::underlying_graph() const {
    SimpleGraph g(num_vertices_);
    for (Dart d = 0; d < num_darts(); ++d) {
        Vertex u = vertex_of_[d], v = vertex_of_[twin_[d]];
        if (u < v) g.add_edge(u, v);
    }
    return g;
}

const std::vector<std::vector<Dart>>& faces(const EmbeddedGraph& e) { return e.faces(); }

int genus(const EmbeddedGraph& e) { return e.euler_genus(); }

FaceLabeling::FaceLabeling(int num_faces, std::vector<FaceId> nations) : nations_(std::move(nations)) {
    std::sort(nations_.begin(), nations_.end());
    if (nations_.empty()) throw StructuralError("a face labeling needs at least one nation");
    if (std::adjacent_find(nations_.begin(), nations_.end()) != nations_.end())
        throw StructuralError("duplicate nation id");
    if (nations_.front() < 0 || nations_.back() >= num_faces)
        throw StructuralError("nation id outside 0.." + std::to_string(num_faces - 1));
    nation_index_.assign(num_faces, -1);
    for (int i = 0; i < static_cast<int>(nations_.size()); ++i) nation_index_[nations_[i]] = i;
    for (FaceId f = 0; f < num_faces; ++f)
        if (nation_index_[f] < 0) lakes_.push_back(f);
}

FaceLabeling FaceLabeling::all_nations(int num_faces) {
    std::vector<FaceId> all(num_faces);
    std::iota(all.begin(), all.end(), 0);
    return FaceLabeling(num_faces, std::move(all));
}

EmbeddedGraph embedding_from_rotation(int num_vertices, std::span<const Edge> edges,
                                      const std::vector<std::vector<Dart>>& rotation) {
    const int m = 2 * static_cast<int>(edges.size());
    std::vector<Dart> twin(m), next(m, -1);
    std::vector<Vertex> vertex_of(m);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        twin[2 * i] = 2 * i + 1;
        twin[2 * i + 1] = 2 * i;
        vertex_of[2 * i] = edges[i].first;
        vertex_of[2 * i + 1] = edges[i].second;
    }
    if (static_cast<int>(rotation.size()) != num_vertices)
        throw StructuralError("rotation must list every vertex");
    for (Vertex v = 0; v < num_vertices; ++v) {
        const auto& rot = rotation[v];
        for (std::size_t i = 0; i < rot.size(); ++i) {
            Dart d = rot[i];
            if (d < 0 || d >= m || vertex_of[d] != v)
                throw StructuralError("rotation of vertex " + std::to_string(v) + " lists a foreign dart");
            if (next[d] != -1) throw StructuralError("dart listed twice in rotations");
            next[d] = rot[(i + 1) % rot.size()];
        }
    }
    for (Dart d = 0; d < m; ++d)
        if (next[d] == -1) throw StructuralError("dart " + std::to_string(d) + " missing from rotations");
    return EmbeddedGraph(std::move(twin), std::move(next), std::move(vertex_of));
}

EmbeddedGraph embedding_from_drawing(std::span<const Point> points, std::span<const Edge> edges) {
    const int n = static_cast<int>(points.size());
    std::vector<std::vector<Dart>> rotation(n);
    std::vector<double> angle(2 * edges.size());
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        auto [u, v] = edges[i];
        angle[2 * i] = std::atan2(points[v].y - points[u].y, points[v].x - points[u].x);
        angle[2 * i + 1] = std::atan2(points[u].y - points[v].y, points[u].x - points[v].x);
        rotation[u].push_back(2 * i);
        rotation[v].push_back(2 * i + 1);
    }
    for (auto& rot : rotation)
        std::sort(rot.begin(), rot.end(), [&](Dart a, Dart b) {
            return angle[a] != angle[b] ? angle[a] < angle[b] : a < b;
        });
    return embedding_from_rotation(n, edges, rotation);
}

double face_signed_area(const EmbeddedGraph& e, FaceId f, std::span<const Point> points) {
    double twice = 0;
    for (Dart d : e.faces()[f]) {
        const Point& a = points[e.vertex_of(d)];
        const Point& b = points[e.head(d)];
        twice += a.x * b.y - b.x * a.y;
    }
    return twice / 2;
}

}  // namespace gridlab
