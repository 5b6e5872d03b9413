#include "gridlab/map_graphs.hpp"

#include <algorithm>
#include <string>

#include "gridlab/errors.hpp"

namespace gridlab {

namespace {

void require_match(const EmbeddedGraph& e, const FaceLabeling& fl) {
    if (fl.num_faces() != e.num_faces())
        throw StructuralError("face labeling covers " + std::to_string(fl.num_faces()) + " faces, embedding has " +
                              std::to_string(e.num_faces()));
}

}  // namespace

SimpleGraph dual_graph(const EmbeddedGraph& e, const FaceLabeling& fl) {
    require_match(e, fl);
    SimpleGraph d(fl.num_nations());
    for (Dart x = 0; x < e.num_darts(); ++x) {
        int a = fl.nation_index(e.face_of(x));
        int b = fl.nation_index(e.face_of(e.twin(x)));
        if (a >= 0 && b >= 0 && a != b) d.add_edge(a, b);
    }
    return d;
}

namespace {

// Distinct nation indices around each vertex.
std::vector<std::vector<int>> nations_at_vertices(const EmbeddedGraph& e, const FaceLabeling& fl) {
    require_match(e, fl);
    std::vector<std::vector<int>> out(e.num_vertices());
    for (Dart x = 0; x < e.num_darts(); ++x) {
        int a = fl.nation_index(e.face_of(x));
        if (a >= 0) out[e.vertex_of(x)].push_back(a);
    }
    for (auto& list : out) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return out;
}

}  // namespace

SimpleGraph map_graph(const EmbeddedGraph& e, const FaceLabeling& fl) {
    SimpleGraph m(fl.num_nations());
    for (const auto& list : nations_at_vertices(e, fl))
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) m.add_edge(list[i], list[j]);
    return m;
}

RadialGraph radial_graph(const EmbeddedGraph& e, const FaceLabeling& fl) {
    const int nv = e.num_vertices();
    RadialGraph r{SimpleGraph(nv + fl.num_nations()), {}, nv};
    auto incident = nations_at_vertices(e, fl);
    for (Vertex v = 0; v < nv; ++v)
        for (int a : incident[v]) r.graph.add_edge(v, nv + a);
    for (Vertex v = 0; v < nv; ++v) r.sides.left.push_back(v);
    for (int a = 0; a < fl.num_nations(); ++a) r.sides.right.push_back(nv + a);
    return r;
}

SimpleGraph union_radial_dual(const EmbeddedGraph& e, const FaceLabeling& fl) {
    RadialGraph r = radial_graph(e, fl);
    SimpleGraph out = r.graph;
    for (auto [a, b] : dual_graph(e, fl).edges()) out.add_edge(r.nation_vertex(a), r.nation_vertex(b));
    return out;
}

EmbeddedGraph radial_embedding(const EmbeddedGraph& e, const FaceLabeling& fl) {
    require_match(e, fl);
    const int nv = e.num_vertices();
    // One radial edge per nation corner; corner of dart x sits at vertex_of(x).
    std::vector<int> edge_of_corner(e.num_darts(), -1);
    std::vector<Edge> edges;
    for (Dart x = 0; x < e.num_darts(); ++x) {
        int a = fl.nation_index(e.face_of(x));
        if (a < 0) continue;
        edge_of_corner[x] = static_cast<int>(edges.size());
        edges.emplace_back(e.vertex_of(x), nv + a);
    }
    std::vector<std::vector<Dart>> rotation(nv + fl.num_nations());
    for (Vertex v = 0; v < nv; ++v) {
        for (Dart x : e.darts_at(v))
            if (edge_of_corner[x] >= 0) rotation[v].push_back(2 * edge_of_corner[x]);
        if (rotation[v].empty())
            throw StructuralError("vertex " + std::to_string(v) + " touches no nation; canonicalize first");
    }
    // Boundary walks keep the face on their right, so the counterclockwise
    // order around the face centre is the reversed walk.
    for (int a = 0; a < fl.num_nations(); ++a) {
        const auto& walk = e.faces()[fl.nations()[a]];
        auto& rot = rotation[nv + a];
        for (auto it = walk.rbegin(); it != walk.rend(); ++it) rot.push_back(2 * edge_of_corner[*it] + 1);
    }
    return embedding_from_rotation(nv + fl.num_nations(), edges, rotation);
}

CanonicalCheck check_canonical(const EmbeddedGraph& e, const FaceLabeling& fl) {
    require_match(e, fl);
    CanonicalCheck c;
    for (Vertex v = 0; v < e.num_vertices(); ++v) {
        int lake_corners = 0;
        for (Dart x : e.darts_at(v))
            if (fl.is_lake(e.face_of(x))) ++lake_corners;
        if (lake_corners == e.degree(v)) c.no_lake_only_vertex = false;
        if (lake_corners > 1) c.at_most_one_lake_corner = false;
    }
    for (Dart x = 0; x < e.num_darts(); ++x)
        if (fl.is_lake(e.face_of(x)) && fl.is_lake(e.face_of(e.twin(x)))) c.no_lake_lake_edge = false;
    return c;
}

}  // namespace gridlab
