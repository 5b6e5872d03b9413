#include <doctest.h>

#include <algorithm>
#include <set>

#include "gridlab/errors.hpp"
#include "gridlab/generators.hpp"
#include "gridlab/graph_ops.hpp"
#include "gridlab/map_graphs.hpp"
#include "maps.hpp"

using namespace gridlab;

namespace {

// Face count straight from the permutation arrays.
int count_faces(const EmbeddedGraph& e) {
    std::vector<char> seen(e.num_darts(), 0);
    int faces = 0;
    for (Dart d = 0; d < e.num_darts(); ++d) {
        if (seen[d]) continue;
        ++faces;
        for (Dart x = d; !seen[x]; x = e.nexts()[e.twins()[x]]) seen[x] = 1;
    }
    return faces;
}

// Map graph from the definition: nations sharing a vertex.
SimpleGraph map_graph_by_definition(const EmbeddedGraph& e, const FaceLabeling& fl) {
    const int n = fl.num_nations();
    std::vector<std::set<Vertex>> verts(n);
    for (int i = 0; i < n; ++i)
        for (Dart d : e.faces()[fl.nations()[i]]) verts[i].insert(e.vertex_of(d));
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (Vertex v : verts[i])
                if (verts[j].count(v)) {
                    g.add_edge(i, j);
                    break;
                }
    return g;
}

bool is_subgraph(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.num_vertices() != b.num_vertices()) return false;
    for (auto [u, v] : a.edges())
        if (!b.has_edge(u, v)) return false;
    return true;
}

}  // namespace

TEST_CASE("wheel map r = 2") {
    EmbeddedMap w = wheel_map(2);
    CHECK(w.graph.num_vertices() == 5);
    CHECK(w.graph.num_edges() == 8);
    CHECK(w.graph.num_faces() == 5);
    CHECK(count_faces(w.graph) == 5);
    CHECK(genus(w.graph) == 0);
    CHECK(w.labels.num_nations() == 4);
    CHECK(w.labels.lakes().size() == 1);
    CHECK(is_canonical(w.graph, w.labels));
    CHECK(map_graph(w.graph, w.labels) == complete_graph(4));
    CHECK(dual_graph(w.graph, w.labels) == cycle_graph(4));
    RadialGraph r = radial_graph(w.graph, w.labels);
    CHECK(r.graph.num_vertices() == 9);
    CHECK(r.graph.num_edges() == 12);
    CHECK(r.nation_vertex(0) == 5);
    CHECK(is_valid_bipartition(r.graph, r.sides));
}

TEST_CASE("wheel map r = 1 and r = 3") {
    EmbeddedMap w1 = wheel_map(1);
    CHECK(w1.labels.num_nations() == 1);
    CHECK(map_graph(w1.graph, w1.labels).num_vertices() == 1);
    CHECK(genus(w1.graph) == 0);
    EmbeddedMap w3 = wheel_map(3);
    CHECK(map_graph(w3.graph, w3.labels) == complete_graph(9));
    CHECK(dual_graph(w3.graph, w3.labels) == cycle_graph(9));
    CHECK(w3.graph.max_degree() == 9);
}

TEST_CASE("drawings give planar rotation systems with negative bounded faces") {
    for (const EmbeddedGraph& e : {maps::cube(), maps::octahedron()}) {
        CHECK(e.euler_genus() == 0);
        CHECK(count_faces(e) == e.num_faces());
    }
    EmbeddedGraph c = maps::cube();
    CHECK(c.num_faces() == 6);
    std::vector<Point> pts{{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 1}, {3, 1}, {3, 3}, {1, 3}};
    int positive = 0;
    for (FaceId f = 0; f < c.num_faces(); ++f)
        if (face_signed_area(c, f, pts) > 0) ++positive;
    CHECK(positive == 1);
    CHECK(maps::octahedron().num_faces() == 8);
}

TEST_CASE("structural errors") {
    CHECK_THROWS_AS(EmbeddedGraph({1, 0}, {0}, {0, 0}), StructuralError);
    CHECK_THROWS_AS(EmbeddedGraph({0, 1}, {0, 1}, {0, 1}), StructuralError);
    CHECK_THROWS_AS(EmbeddedGraph({1, 0, 3, 2}, {1, 0, 3, 2}, {0, 0, 0, 0}), StructuralError);
    CHECK_THROWS_AS(FaceLabeling(3, {}), StructuralError);
    CHECK_THROWS_AS(FaceLabeling(3, {0, 0}), StructuralError);
    CHECK_THROWS_AS(FaceLabeling(3, {3}), StructuralError);
    EmbeddedMap w = wheel_map(2);
    CHECK_THROWS_AS(map_graph(w.graph, FaceLabeling(2, {0})), std::invalid_argument);
}

TEST_CASE("map graph equals the half-square of the radial graph") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        EmbeddedMap m = random_canonical_map(3 + static_cast<int>(seed % 8), seed, 20);
        CAPTURE(seed);
        SimpleGraph M = map_graph(m.graph, m.labels);
        CHECK(M == map_graph_by_definition(m.graph, m.labels));
        RadialGraph r = radial_graph(m.graph, m.labels);
        HalfSquare hs = half_square(r.graph, r.sides.swapped());
        CHECK(hs.graph == M);
        CHECK(is_subgraph(dual_graph(m.graph, m.labels), M));
    }
}

TEST_CASE("union of radial and dual") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        EmbeddedMap m = random_canonical_map(6, seed, 20);
        RadialGraph r = radial_graph(m.graph, m.labels);
        SimpleGraph d = dual_graph(m.graph, m.labels);
        SimpleGraph u = union_radial_dual(m.graph, m.labels);
        SimpleGraph expect = r.graph;
        for (auto [a, b] : d.edges()) expect.add_edge(r.nation_vertex(a), r.nation_vertex(b));
        CHECK(u == expect);
    }
}

TEST_CASE("radial embedding is planar and realises the radial graph") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        EmbeddedMap m = random_canonical_map(5, seed, 20);
        EmbeddedGraph re = radial_embedding(m.graph, m.labels);
        CHECK(re.euler_genus() == 0);
        CHECK(re.underlying_graph() == radial_graph(m.graph, m.labels).graph);
    }
    EmbeddedGraph cube = maps::cube();
    auto all = FaceLabeling::all_nations(cube.num_faces());
    EmbeddedGraph re = radial_embedding(cube, all);
    // Every face of R(G) is a diamond around one edge of G.
    CHECK(re.num_faces() == cube.num_edges());
    for (const auto& walk : re.faces()) CHECK(walk.size() == 4);
}

TEST_CASE("canonical check flags each property") {
    // Bowtie with the outer face as lake: vertex 0 sees the lake twice.
    EmbeddedGraph b = maps::bowtie();
    std::vector<FaceId> nations;
    std::vector<Point> pts{{0, 0}, {-2, 1}, {-2, -1}, {2, 1}, {2, -1}};
    for (FaceId f = 0; f < b.num_faces(); ++f)
        if (face_signed_area(b, f, pts) < 0) nations.push_back(f);
    FaceLabeling fl(b.num_faces(), nations);
    auto check = check_canonical(b, fl);
    CHECK(check.no_lake_only_vertex);
    CHECK(check.no_lake_lake_edge);
    CHECK_FALSE(check.at_most_one_lake_corner);

    // Grid of 2x2 nations with two neighbouring squares turned into lakes.
    EmbeddedMap g = nation_grid_map(2);
    std::vector<FaceId> keep(g.labels.nations().begin(), g.labels.nations().begin() + 2);
    FaceLabeling two(g.graph.num_faces(), keep);
    auto c2 = check_canonical(g.graph, two);
    CHECK_FALSE(c2.ok());
}

TEST_CASE("canonicalize output is canonical, idempotent, and keeps the map graph") {
    auto run = [](const EmbeddedGraph& e, const FaceLabeling& fl) {
        auto parts = canonicalize(e, fl);
        int nations = 0;
        for (const auto& p : parts) {
            CHECK(is_canonical(p.graph, p.labels));
            CHECK(p.graph.euler_genus() == 0);
            nations += p.labels.num_nations();
            auto again = canonicalize(p.graph, p.labels);
            REQUIRE(again.size() == 1);
            CHECK(again[0].graph == p.graph);
            CHECK(again[0].labels == p.labels);
            // Map graph preserved, nations matched through nation_origin.
            SimpleGraph mp = map_graph(p.graph, p.labels);
            SimpleGraph orig = map_graph(e, fl);
            for (int i = 0; i < p.labels.num_nations(); ++i)
                for (int j = i + 1; j < p.labels.num_nations(); ++j)
                    CHECK(mp.has_edge(i, j) ==
                          orig.has_edge(fl.nation_index(p.nation_origin[i]), fl.nation_index(p.nation_origin[j])));
        }
        CHECK(nations == fl.num_nations());
        return parts;
    };
    EmbeddedGraph b = maps::bowtie();
    std::vector<Point> pts{{0, 0}, {-2, 1}, {-2, -1}, {2, 1}, {2, -1}};
    std::vector<FaceId> nations;
    for (FaceId f = 0; f < b.num_faces(); ++f)
        if (face_signed_area(b, f, pts) < 0) nations.push_back(f);
    auto parts = run(b, FaceLabeling(b.num_faces(), nations));
    CHECK(parts.size() == 1);

    EmbeddedMap g = nation_grid_map(3);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        std::vector<FaceId> keep;
        for (FaceId f : g.labels.nations())
            if (rng.uniform(3) != 0) keep.push_back(f);
        if (keep.empty()) keep.push_back(g.labels.nations()[0]);
        CAPTURE(seed);
        run(g.graph, FaceLabeling(g.graph.num_faces(), keep));
    }
}

TEST_CASE("canonical connected input comes back unchanged") {
    EmbeddedMap w = wheel_map(3);
    auto parts = canonicalize(w.graph, w.labels);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].graph == w.graph);
    CHECK(parts[0].labels == w.labels);
}

TEST_CASE("random triangulations are planar") {
    for (int n = 4; n <= 12; ++n)
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            EmbeddedGraph e = random_planar_triangulation(n, seed);
            CHECK(e.num_vertices() == n);
            CHECK(e.num_edges() == 3 * n - 6);
            CHECK(e.euler_genus() == 0);
            CHECK(e.underlying_graph().num_edges() == 3 * n - 6);
            for (const auto& f : e.faces()) CHECK(f.size() == 3);
        }
}
