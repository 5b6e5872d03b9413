#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gridlab/embedded_graph.hpp"
#include "gridlab/minor_models.hpp"
#include "gridlab/simple_graph.hpp"

namespace gridlab {

/// Seeded source of randomness: std::mt19937_64 with its default seeding,
/// and bounded draws by rejection sampling (unlike the std distributions,
/// this makes the streams identical across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n), n >= 1.
    int uniform(int n);
    bool coin() { return (engine_() >> 63) != 0; }
    /// Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[uniform(i + 1)]);
    }

private:
    std::mt19937_64 engine_;
};

struct EmbeddedMap {
    EmbeddedGraph graph;
    FaceLabeling labels;
};

/// Hub 0 and rim 1..r^2 joined by spokes and a rim cycle. Bounded faces are
/// nations, the outer face the only lake. For r = 1 the rim cycle is a loop.
EmbeddedMap wheel_map(int r);

/// Grid with at most one diagonal per bounded square, by seeded coin flips.
SimpleGraph partially_triangulated_grid(int rows, int cols, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
SimpleGraph random_graph(int n, double p, std::uint64_t seed);

/// Triangulation by insertion of each new vertex into a uniformly chosen
/// face, followed by about 2n random edge flips that keep it simple.
EmbeddedGraph random_planar_triangulation(int n, std::uint64_t seed);

/// Random triangulation whose faces are merged by random edge deletions and
/// partly marked as lakes, then canonicalized. Retries until the result is
/// connected with exactly `nations` nations. A positive
/// `max_radial_vertices` bounds |V(G)| + nations (the radial graph size).
EmbeddedMap random_canonical_map(int nations, std::uint64_t seed, int max_radial_vertices = 0);

/// (side+1) x (side+1) vertex grid drawn in the plane; the side x side
/// squares are nations and the outer face is a lake. Vertex (x,y) has id
/// x*(side+1)+y.
EmbeddedMap nation_grid_map(int side);

/// A map together with a sequence reducing union_radial_dual of it to a
/// k x k grid.
struct TransferInstance {
    std::string family;
    int k = 0;
    EmbeddedMap map;
    ContractionSequence sequence;
};

/// D is the side x side grid of nations. Each primal vertex is either deleted
/// or merged into a random incident nation; surplus edges are then deleted,
/// leaving K = D (k = side).
TransferInstance nation_grid_transfer_instance(int side, std::uint64_t seed);

/// R u D of a (k+1) x (k+1) nation grid contains a k x k grid in rotated
/// coordinates whose vertices alternate between primal vertices and nations.
/// A window is chosen at random; outside vertices are deleted or merged
/// inward at random.
TransferInstance checkerboard_transfer_instance(int k, std::uint64_t seed);

enum class Family { WheelMap, Grid, PartiallyTriangulatedGrid, RandomMap, RandomPlanarTriangulation };

std::optional<Family> parse_family(const std::string& name);
std::string to_string(Family f);

struct GeneratorSpec {
    Family family = Family::Grid;
    int r = 1;
    int rows = 1;
    int cols = 1;
    int nations = 1;
    int n = 3;
    std::uint64_t seed = 0;
};

/// Generated instance. Embedded families fill `map`; `graph` is always the
/// plain graph (the underlying graph for embedded families).
struct Generated {
    std::optional<EmbeddedMap> map;
    SimpleGraph graph;
};

Generated generate(const GeneratorSpec& spec);

}  // namespace gridlab
