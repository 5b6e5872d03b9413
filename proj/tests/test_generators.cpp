#include <doctest.h>

#include <set>
#include <stdexcept>

#include "gridlab/generators.hpp"
#include "gridlab/map_graphs.hpp"

using namespace gridlab;

TEST_CASE("rng is reproducible and bounded") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng c(7);
    std::set<int> seen;
    for (int i = 0; i < 2000; ++i) {
        int x = c.uniform(6);
        CHECK(x >= 0);
        CHECK(x < 6);
        seen.insert(x);
        double u = c.unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    CHECK(seen.size() == 6);
    CHECK_THROWS_AS(c.uniform(0), std::invalid_argument);
    std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7};
    c.shuffle(v);
    CHECK(std::set<int>(v.begin(), v.end()).size() == 8);
    // mt19937_64 default-seeded first output.
    CHECK(Rng(5489).next() == 14514284786278117030ull);
}

TEST_CASE("generators are pure functions of the seed") {
    CHECK(random_graph(10, 0.4, 3) == random_graph(10, 0.4, 3));
    CHECK(random_planar_triangulation(9, 4) == random_planar_triangulation(9, 4));
    EmbeddedMap a = random_canonical_map(7, 11, 20), b = random_canonical_map(7, 11, 20);
    CHECK(a.graph == b.graph);
    CHECK(a.labels == b.labels);
    CHECK(partially_triangulated_grid(4, 5, 2) == partially_triangulated_grid(4, 5, 2));
    TransferInstance t1 = checkerboard_transfer_instance(12, 9), t2 = checkerboard_transfer_instance(12, 9);
    CHECK(t1.sequence == t2.sequence);
}

TEST_CASE("random graph edge density") {
    CHECK(random_graph(12, 0.0, 1).num_edges() == 0);
    CHECK(random_graph(12, 1.0, 1).num_edges() == 66);
    CHECK(random_graph(0, 0.5, 1).num_vertices() == 0);
}

TEST_CASE("partially triangulated grid") {
    SimpleGraph g = partially_triangulated_grid(4, 4, 3);
    SimpleGraph base = grid_graph(4, 4);
    for (auto [u, v] : base.edges()) CHECK(g.has_edge(u, v));
    CHECK(g.num_edges() >= base.num_edges());
    CHECK(g.num_edges() <= base.num_edges() + 9);
}

TEST_CASE("random canonical maps") {
    for (int nations = 1; nations <= 12; ++nations)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            CAPTURE(nations);
            CAPTURE(seed);
            EmbeddedMap m = random_canonical_map(nations, seed, 20);
            CHECK(m.labels.num_nations() == nations);
            CHECK(is_canonical(m.graph, m.labels));
            CHECK(m.graph.euler_genus() == 0);
            CHECK(m.graph.num_components() == 1);
            CHECK(m.graph.num_vertices() + nations <= 20);
        }
    CHECK_THROWS_AS(random_canonical_map(0, 1), std::invalid_argument);
}

TEST_CASE("nation grid map") {
    EmbeddedMap m = nation_grid_map(3);
    CHECK(m.graph.num_vertices() == 16);
    CHECK(m.labels.num_nations() == 9);
    CHECK(m.labels.lakes().size() == 1);
    CHECK(is_canonical(m.graph, m.labels));
    CHECK(dual_graph(m.graph, m.labels) == grid_graph(3, 3));
}

TEST_CASE("family dispatch") {
    CHECK(parse_family("wheel_map") == Family::WheelMap);
    CHECK(parse_family("random_planar_triangulation") == Family::RandomPlanarTriangulation);
    CHECK_FALSE(parse_family("nope").has_value());
    for (Family f : {Family::WheelMap, Family::Grid, Family::PartiallyTriangulatedGrid, Family::RandomMap,
                     Family::RandomPlanarTriangulation})
        CHECK(parse_family(to_string(f)) == f);
    GeneratorSpec spec;
    spec.family = Family::WheelMap;
    spec.r = 2;
    Generated w = generate(spec);
    REQUIRE(w.map.has_value());
    CHECK(w.graph == w.map->graph.underlying_graph());
    spec.family = Family::Grid;
    spec.rows = 2;
    spec.cols = 3;
    Generated g = generate(spec);
    CHECK_FALSE(g.map.has_value());
    CHECK(g.graph == grid_graph(2, 3));
}
