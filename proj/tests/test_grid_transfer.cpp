#include <doctest.h>

#include <algorithm>

#include "gridlab/generators.hpp"
#include "gridlab/grid_transfer.hpp"
#include "gridlab/map_graphs.hpp"
#include "oracles.hpp"

using namespace gridlab;

TEST_CASE("grid recognition") {
    for (int k = 1; k <= 7; ++k) {
        SimpleGraph g = grid_graph(k, k);
        auto rec = recognize_grid(g);
        REQUIRE(rec.has_value());
        CHECK(rec->k == k);
        CHECK(oracle::is_labelled_grid(g, k, k, rec->coord));
        CHECK(rec->coord[0] == std::pair{0, 0});
    }
    // A relabelled grid is still recognised.
    SimpleGraph g = grid_graph(4, 4);
    std::vector<int> perm{5, 3, 9, 0, 14, 1, 7, 12, 2, 15, 11, 6, 13, 4, 8, 10};
    SimpleGraph h(16);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    auto rec = recognize_grid(h);
    REQUIRE(rec.has_value());
    CHECK(oracle::is_labelled_grid(h, 4, 4, rec->coord));

    CHECK_FALSE(recognize_grid(grid_graph(3, 4)).has_value());
    CHECK(recognize_grid(cycle_graph(4))->k == 2);
    CHECK_FALSE(recognize_grid(cycle_graph(8)).has_value());
    SimpleGraph extra = grid_graph(3, 3);
    extra.add_edge(0, 4);
    CHECK_FALSE(recognize_grid(extra).has_value());
    CHECK_FALSE(recognize_grid(SimpleGraph(0)).has_value());
}

TEST_CASE("transfer instances reduce to grids") {
    for (int k : {12, 13, 18}) {
        TransferInstance a = nation_grid_transfer_instance(k, 1);
        SimpleGraph host = union_radial_dual(a.map.graph, a.map.labels);
        auto g = recognize_grid(replay(host, a.sequence).graph);
        REQUIRE(g.has_value());
        CHECK(g->k == k);
        TransferInstance b = checkerboard_transfer_instance(k, 2);
        SimpleGraph hb = union_radial_dual(b.map.graph, b.map.labels);
        auto gb = recognize_grid(replay(hb, b.sequence).graph);
        REQUIRE(gb.has_value());
        CHECK(gb->k == k);
    }
}

TEST_CASE("transfer to the dual grid") {
    struct Case {
        bool checkerboard;
        int k;
        std::uint64_t seed;
    };
    for (Case c : {Case{false, 12, 0}, Case{true, 12, 0}, Case{false, 17, 3}, Case{true, 18, 4}, Case{true, 23, 5}}) {
        CAPTURE(c.k);
        CAPTURE(c.checkerboard);
        TransferInstance inst = c.checkerboard ? checkerboard_transfer_instance(c.k, c.seed)
                                               : nation_grid_transfer_instance(c.k, c.seed);
        DualGridTransfer t = radial_grid_to_dual_grid(inst.sequence, inst.map.graph, inst.map.labels);
        const int m = c.k / 6 - 1;
        CHECK(t.k == c.k);
        CHECK(t.m == m);
        CHECK(static_cast<int>(t.model.branch_sets.size()) == m * m);
        CHECK(t.model.pattern == grid_graph(m, m));
        CHECK(t.model.host == dual_graph(inst.map.graph, inst.map.labels));
        CHECK(verify_model(t.model).ok());
        CHECK(static_cast<int>(t.centers.size()) == m * m);
        for (int i = 0; i < m * m; ++i) {
            const auto& bs = t.model.branch_sets[i];
            CHECK(std::binary_search(bs.begin(), bs.end(), t.centers[i]));
        }
    }
}

TEST_CASE("transfer rejects small or malformed input") {
    TransferInstance small = nation_grid_transfer_instance(11, 0);
    CHECK_THROWS_AS(radial_grid_to_dual_grid(small.sequence, small.map.graph, small.map.labels),
                    std::invalid_argument);

    TransferInstance inst = nation_grid_transfer_instance(12, 0);
    ContractionSequence truncated = inst.sequence;
    truncated.ops.pop_back();
    CHECK_THROWS_AS(radial_grid_to_dual_grid(truncated, inst.map.graph, inst.map.labels), std::invalid_argument);

    // Same map with one square turned into a lake next to the outer lake.
    std::vector<FaceId> nations(inst.map.labels.nations().begin() + 1, inst.map.labels.nations().end());
    FaceLabeling other(inst.map.graph.num_faces(), nations);
    if (!is_canonical(inst.map.graph, other))
        CHECK_THROWS_AS(radial_grid_to_dual_grid(inst.sequence, inst.map.graph, other), std::invalid_argument);
}
