#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gridlab/embedded_graph.hpp"
#include "gridlab/minor_models.hpp"

namespace gridlab {

/// Coordinates of a graph recognised as the k x k grid: coord[v] = (x, y),
/// 0 <= x, y < k, and u ~ v iff the coordinates differ by one in one axis.
struct GridCoordinates {
    int k = 0;
    std::vector<std::pair<int, int>> coord;
};

/// Recognises a k x k grid (k >= 1). The corner with the smallest id gets
/// (0,0); of the two corners at distance k-1 from it, the smaller id gets
/// (0,k-1).
std::optional<GridCoordinates> recognize_grid(const SimpleGraph& g);

struct DualGridTransfer {
    int k = 0;           // side of the grid produced by the input sequence
    int m = 0;           // side of the grid found in the dual, floor(k/6) - 1
    MinorModel model;    // pattern m x m grid, host dual_graph(e, fl)
    std::vector<Vertex> centers;  // dual vertex chosen for each grid vertex, row-major
};

/// Turns a sequence that reduces union_radial_dual(e, fl) to a k x k grid
/// into an m x m grid minor of dual_graph(e, fl), m = floor(k/6) - 1.
///
/// Edge deletions are dropped to get a partially triangulated grid K'.
/// Vertices the sequence deletes are first merged into the nearest surviving
/// label (multi-source BFS, smallest id first) so every label stays connected.
/// Paths between neighbouring centres are routed inside their rectangles and
/// then projected onto the dual by walking around shared primal vertices.
///
/// Rejects (std::invalid_argument) non-canonical maps, sequences that do not
/// produce a grid, and k < 12. Throws ConstructionError if a routed path
/// leaves its rectangle or two paths collide.
DualGridTransfer radial_grid_to_dual_grid(const ContractionSequence& seq, const EmbeddedGraph& e,
                                          const FaceLabeling& fl);

}  // namespace gridlab
