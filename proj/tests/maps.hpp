#pragma once

#include <vector>

#include "gridlab/embedded_graph.hpp"

namespace maps {

using gridlab::Edge;
using gridlab::EmbeddedGraph;
using gridlab::Point;

inline EmbeddedGraph cube() {
    std::vector<Point> pts{{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 1}, {3, 1}, {3, 3}, {1, 3}};
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                            {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    return gridlab::embedding_from_drawing(pts, edges);
}

inline EmbeddedGraph octahedron() {
    std::vector<Point> pts{{0, 0}, {6, 0}, {3, 6}, {3, 1}, {4, 3}, {2, 3}};
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                            {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}};
    return gridlab::embedding_from_drawing(pts, edges);
}

// Two triangles sharing vertex 0 (a bowtie), drawn in the plane.
inline EmbeddedGraph bowtie() {
    std::vector<Point> pts{{0, 0}, {-2, 1}, {-2, -1}, {2, 1}, {2, -1}};
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}};
    return gridlab::embedding_from_drawing(pts, edges);
}

}  // namespace maps
