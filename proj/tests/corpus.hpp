#pragma once

#include <string>
#include <vector>

#include "gridlab/generators.hpp"
#include "gridlab/simple_graph.hpp"

namespace corpus {

struct Named {
    std::string name;
    gridlab::SimpleGraph graph;
};

// Small fixed graphs plus seeded G(n, p) samples, all with at most max_n vertices.
inline std::vector<Named> small_graphs(int max_n) {
    using namespace gridlab;
    std::vector<Named> out;
    auto add = [&](std::string name, SimpleGraph g) {
        if (g.num_vertices() <= max_n) out.push_back({std::move(name), std::move(g)});
    };
    add("empty0", SimpleGraph(0));
    add("single", SimpleGraph(1));
    add("edgeless5", SimpleGraph(5));
    for (int n = 2; n <= 7; ++n) add("K" + std::to_string(n), complete_graph(n));
    for (int n = 2; n <= 9; ++n) add("P" + std::to_string(n), path_graph(n));
    for (int n = 3; n <= 9; ++n) add("C" + std::to_string(n), cycle_graph(n));
    for (int l = 1; l <= 8; ++l) add("star" + std::to_string(l), star_graph(l));
    add("grid2x3", grid_graph(2, 3));
    add("grid2x4", grid_graph(2, 4));
    add("grid3x3", grid_graph(3, 3));
    add("grid3x4", grid_graph(3, 4));
    add("grid4x4", grid_graph(4, 4));
    add("petersen", petersen_graph());
    for (int n = 4; n <= max_n; ++n)
        for (std::uint64_t seed = 0; seed < 3; ++seed)
            for (double p : {0.25, 0.5})
                add("gnp" + std::to_string(n) + "_" + std::to_string(seed) + "_" + std::to_string(int(p * 100)),
                    random_graph(n, p, seed + 17 * n));
    return out;
}

}  // namespace corpus
