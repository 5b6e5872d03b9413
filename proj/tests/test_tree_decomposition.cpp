#include <doctest.h>

#include <numeric>

#include "corpus.hpp"
#include "gridlab/errors.hpp"
#include "gridlab/graph_ops.hpp"
#include "gridlab/map_graphs.hpp"
#include "gridlab/tree_decomposition.hpp"
#include "oracles.hpp"

using namespace gridlab;

namespace {

bool oracle_valid(const TreeDecomposition& td, const SimpleGraph& g) {
    return oracle::valid_decomposition(td.bags, td.tree_edges, g);
}

}  // namespace

TEST_CASE("validate reports each condition") {
    SimpleGraph g = path_graph(3);
    TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
    CHECK(validate(td, g).ok());
    CHECK(td.width() == 1);

    TreeDecomposition cyclic{{{0, 1}, {1, 2}, {1}}, {{0, 1}, {1, 2}, {2, 0}}};
    CHECK(validate(cyclic, g).violated == TdCondition::TreeShape);
    TreeDecomposition forest{{{0, 1}, {1, 2}}, {}};
    CHECK(validate(forest, g).violated == TdCondition::TreeShape);

    TreeDecomposition unsorted{{{1, 0}, {1, 2}}, {{0, 1}}};
    CHECK(validate(unsorted, g).violated == TdCondition::BagContents);
    TreeDecomposition out_of_range{{{0, 1}, {1, 2, 7}}, {{0, 1}}};
    CHECK(validate(out_of_range, g).violated == TdCondition::BagContents);

    TreeDecomposition missing{{{0, 1}, {1}}, {{0, 1}}};
    auto t1 = validate(missing, g);
    CHECK(t1.violated == TdCondition::VertexCoverage);
    CHECK(t1.vertex == 2);

    TreeDecomposition no_edge{{{0, 1}, {2}}, {{0, 1}}};
    auto t2 = validate(no_edge, g);
    CHECK(t2.violated == TdCondition::EdgeCoverage);
    CHECK(t2.edge == Edge{1, 2});

    TreeDecomposition split{{{0, 1}, {0}, {1, 2}}, {{0, 2}, {2, 1}}};
    auto t3 = validate(split, g);
    CHECK(t3.violated == TdCondition::SubtreeConnected);
    CHECK(t3.vertex == 0);
    CHECK(std::string(to_string(TdCondition::SubtreeConnected)).size() > 0);
}

TEST_CASE("known treewidths") {
    CHECK(treewidth_exact(SimpleGraph(0)).width == 0);
    CHECK(treewidth_exact(SimpleGraph(4)).width == 0);
    CHECK(treewidth_exact(complete_graph(4)).width == 3);
    CHECK(treewidth_exact(complete_graph(7)).width == 6);
    CHECK(treewidth_exact(path_graph(8)).width == 1);
    CHECK(treewidth_exact(cycle_graph(8)).width == 2);
    CHECK(treewidth_exact(grid_graph(3, 3)).width == 3);
    CHECK(treewidth_exact(grid_graph(4, 4)).width == 4);
    CHECK(treewidth_exact(grid_graph(4, 5)).width == 4);
    CHECK(treewidth_exact(petersen_graph()).width == 4);
    CHECK(treewidth_upper(complete_graph(5)).width == 4);
    CHECK_THROWS_AS(treewidth_exact(path_graph(21)), SizeLimitError);
}

TEST_CASE("exact treewidth matches the brute-force oracle") {
    for (const auto& [name, g] : corpus::small_graphs(8)) {
        CAPTURE(name);
        auto res = treewidth_exact(g);
        CHECK(res.width == oracle::treewidth_by_orderings(g));
        CHECK(res.decomposition.width() == res.width);
        CHECK(validate(res.decomposition, g).ok());
        CHECK(oracle_valid(res.decomposition, g));
    }
}

TEST_CASE("upper bound is valid and never below exact") {
    for (const auto& [name, g] : corpus::small_graphs(12)) {
        CAPTURE(name);
        auto up = treewidth_upper(g);
        CHECK(validate(up.decomposition, g).ok());
        CHECK(up.decomposition.width() == up.width);
        CHECK(up.width >= treewidth_exact(g).width);
    }
    SimpleGraph big = grid_graph(6, 6);
    auto up = treewidth_upper(big);
    CHECK(validate(up.decomposition, big).ok());
    CHECK(up.width >= 6);
}

TEST_CASE("exact treewidth is deterministic") {
    SimpleGraph g = random_graph(14, 0.35, 5);
    auto a = treewidth_exact(g);
    auto b = treewidth_exact(g);
    CHECK(a.width == b.width);
    CHECK(a.decomposition == b.decomposition);
}

TEST_CASE("decomposition from an ordering") {
    SimpleGraph g = cycle_graph(5);
    std::vector<Vertex> order{0, 1, 2, 3, 4};
    TreeDecomposition td = decomposition_from_ordering(g, order);
    CHECK(validate(td, g).ok());
    CHECK(td.width() == 2);
    std::vector<Vertex> bad{0, 1, 1, 3, 4};
    CHECK_THROWS_AS(decomposition_from_ordering(g, bad), std::invalid_argument);
    TreeDecomposition empty = decomposition_from_ordering(SimpleGraph(0), {});
    CHECK(empty.num_bags() == 1);
    CHECK(empty.width() == 0);
}

TEST_CASE("radial-to-map lift") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        EmbeddedMap m = random_canonical_map(3 + static_cast<int>(seed % 10), seed, 20);
        CAPTURE(seed);
        RadialGraph r = radial_graph(m.graph, m.labels);
        auto tr = treewidth_exact(r.graph);
        TreeDecomposition lifted = lift_radial_to_map(tr.decomposition, m.graph, m.labels);
        SimpleGraph M = map_graph(m.graph, m.labels);
        CHECK(validate(lifted, M).ok());
        CHECK(oracle_valid(lifted, M));
        CHECK(lifted.max_bag_size() <= m.graph.max_degree() * tr.decomposition.max_bag_size());
        CHECK(treewidth_exact(M).width + 1 <= m.graph.max_degree() * (tr.width + 1));
    }
    EmbeddedMap w = wheel_map(2);
    TreeDecomposition broken{{{0}}, {}};
    CHECK_THROWS_AS(lift_radial_to_map(broken, w.graph, w.labels), std::invalid_argument);
}

TEST_CASE("power lift") {
    for (const auto& [name, g] : corpus::small_graphs(10)) {
        CAPTURE(name);
        auto tg = treewidth_exact(g);
        for (int k = 1; k <= 3; ++k) {
            SimpleGraph gk = power_graph(g, k);
            TreeDecomposition lifted = lift_power(tg.decomposition, g, k);
            CHECK(validate(lifted, gk).ok());
            CHECK(oracle_valid(lifted, gk));
            CHECK(lifted.max_bag_size() <= max_ball_size(g, k) * tg.decomposition.max_bag_size());
        }
    }
    CHECK_THROWS_AS(lift_power(treewidth_exact(path_graph(3)).decomposition, path_graph(3), 0),
                    std::invalid_argument);
}

TEST_CASE("vertex cover on a decomposition matches subset enumeration") {
    for (const auto& [name, g] : corpus::small_graphs(14)) {
        CAPTURE(name);
        auto td = treewidth_upper(g).decomposition;
        VertexCoverResult vc = vertex_cover_dp(g, td);
        CHECK(vc.size == oracle::min_vertex_cover(g));
        CHECK(static_cast<int>(vc.cover.size()) == vc.size);
        CHECK(oracle::is_vertex_cover(g, vc.cover));
    }
    CHECK(vertex_cover_dp(star_graph(6), treewidth_exact(star_graph(6)).decomposition).cover == VertexSet{0});
    TreeDecomposition huge{{VertexSet(21)}, {}};
    std::iota(huge.bags[0].begin(), huge.bags[0].end(), 0);
    CHECK_THROWS_AS(vertex_cover_dp(complete_graph(21), huge), SizeLimitError);
}
