#include "gridlab/generators.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <queue>
#include <stdexcept>

#include "gridlab/errors.hpp"
#include "gridlab/grid_transfer.hpp"
#include "gridlab/map_graphs.hpp"

namespace gridlab {

int Rng::uniform(int n) {
    if (n < 1) throw std::invalid_argument("Rng::uniform: empty range");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t threshold = (0 - un) % un;
    for (;;) {
        std::uint64_t x = engine_();
        if (x >= threshold) return static_cast<int>(x % un);
    }
}

namespace {

using Rotation = std::vector<std::vector<Vertex>>;  // CCW neighbour order per vertex

EmbeddedGraph embedding_from_neighbors(const Rotation& rot) {
    const int n = static_cast<int>(rot.size());
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w : rot[u])
            if (u < w) edges.emplace_back(u, w);
    std::sort(edges.begin(), edges.end());
    std::map<Edge, int> index;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) index[edges[i]] = i;
    std::vector<std::vector<Dart>> darts(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w : rot[u]) {
            int i = index.at({std::min(u, w), std::max(u, w)});
            darts[u].push_back(u < w ? 2 * i : 2 * i + 1);
        }
    return embedding_from_rotation(n, edges, darts);
}

// Successor of `after` in the cyclic list, i.e. the next neighbour CCW.
Vertex succ(const std::vector<Vertex>& ring, Vertex after) {
    auto it = std::find(ring.begin(), ring.end(), after);
    ++it;
    return it == ring.end() ? ring.front() : *it;
}

void insert_after(std::vector<Vertex>& ring, Vertex after, Vertex x) {
    auto it = std::find(ring.begin(), ring.end(), after);
    ring.insert(it + 1, x);
}

void erase_value(std::vector<Vertex>& ring, Vertex x) { ring.erase(std::find(ring.begin(), ring.end(), x)); }

bool adjacent(const Rotation& rot, Vertex u, Vertex v) {
    return std::find(rot[u].begin(), rot[u].end(), v) != rot[u].end();
}

// Face walks go u -> v -> succ(rot[v], u), keeping each face on the right
// as in EmbeddedGraph.
Rotation random_triangulation(int n, Rng& rng) {
    if (n < 3) throw std::invalid_argument("random_planar_triangulation: need n >= 3");
    Rotation rot(n);
    rot[0] = {1, 2};
    rot[1] = {2, 0};
    rot[2] = {0, 1};
    std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {1, 0, 2}};
    for (Vertex w = 3; w < n; ++w) {
        int pick = rng.uniform(static_cast<int>(faces.size()));
        auto [a, b, c] = faces[pick];
        insert_after(rot[b], a, w);
        insert_after(rot[c], b, w);
        insert_after(rot[a], c, w);
        rot[w] = {b, a, c};
        faces[pick] = {a, b, w};
        faces.push_back({b, c, w});
        faces.push_back({c, a, w});
    }
    // Flips: edge uv with faces u,v,a and v,u,b becomes ab.
    for (int attempt = 0; attempt < 2 * n; ++attempt) {
        Vertex u = rng.uniform(n);
        Vertex v = rot[u][rng.uniform(static_cast<int>(rot[u].size()))];
        Vertex a = succ(rot[v], u);
        Vertex b = succ(rot[u], v);
        if (a == b || adjacent(rot, a, b) || rot[u].size() <= 3 || rot[v].size() <= 3) continue;
        erase_value(rot[u], v);
        erase_value(rot[v], u);
        insert_after(rot[a], v, b);
        insert_after(rot[b], u, a);
    }
    return rot;
}

}  // namespace

EmbeddedMap wheel_map(int r) {
    if (r < 1) throw std::invalid_argument("wheel_map: r must be positive");
    const int s = r * r;
    const int darts = 4 * s;
    std::vector<Dart> twin(darts), next(darts);
    std::vector<Vertex> vertex_of(darts);
    auto spoke_hub = [](int i) { return 2 * (i - 1); };
    auto spoke_rim = [](int i) { return 2 * (i - 1) + 1; };
    auto rim_out = [s](int i) { return 2 * s + 2 * (i - 1); };       // at rim i, towards i+1
    auto rim_in = [s](int i) { return 2 * s + 2 * (i - 1) + 1; };    // at rim i+1, from i
    for (int i = 1; i <= s; ++i) {
        const int nxt = i % s + 1, prv = i == 1 ? s : i - 1;
        twin[spoke_hub(i)] = spoke_rim(i);
        twin[spoke_rim(i)] = spoke_hub(i);
        twin[rim_out(i)] = rim_in(i);
        twin[rim_in(i)] = rim_out(i);
        vertex_of[spoke_hub(i)] = 0;
        vertex_of[spoke_rim(i)] = i;
        vertex_of[rim_out(i)] = i;
        vertex_of[rim_in(i)] = nxt;
        next[spoke_hub(i)] = spoke_hub(nxt);
        next[rim_out(i)] = spoke_rim(i);
        next[spoke_rim(i)] = rim_in(prv);
        next[rim_in(prv)] = rim_out(i);
    }
    EmbeddedMap out;
    out.graph = EmbeddedGraph(twin, next, vertex_of);
    std::vector<FaceId> nations;
    for (FaceId f = 0; f < out.graph.num_faces(); ++f) {
        const auto& walk = out.graph.faces()[f];
        if (std::any_of(walk.begin(), walk.end(), [&](Dart d) { return d < 2 * s; })) nations.push_back(f);
    }
    out.labels = FaceLabeling(out.graph.num_faces(), nations);
    return out;
}

SimpleGraph partially_triangulated_grid(int rows, int cols, std::uint64_t seed) {
    SimpleGraph g = grid_graph(rows, cols);
    Rng rng(seed);
    for (int i = 0; i + 1 < rows; ++i)
        for (int j = 0; j + 1 < cols; ++j) {
            if (!rng.coin()) continue;
            if (rng.coin())
                g.add_edge(i * cols + j, (i + 1) * cols + j + 1);
            else
                g.add_edge(i * cols + j + 1, (i + 1) * cols + j);
        }
    return g;
}

SimpleGraph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_graph: negative n");
    SimpleGraph g(n);
    Rng rng(seed);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.unit() < p) g.add_edge(u, v);
    return g;
}

EmbeddedGraph random_planar_triangulation(int n, std::uint64_t seed) {
    Rng rng(seed);
    return embedding_from_neighbors(random_triangulation(n, rng));
}

EmbeddedMap random_canonical_map(int nations, std::uint64_t seed, int max_radial_vertices) {
    if (nations < 1) throw std::invalid_argument("random_canonical_map: need at least one nation");
    Rng rng(seed);
    const int t_min = std::max(3, (nations + 5) / 2);
    if (max_radial_vertices > 0 && t_min + nations > max_radial_vertices)
        throw std::invalid_argument("random_canonical_map: " + std::to_string(nations) +
                                    " nations cannot fit the radial size bound");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int t = t_min + rng.uniform(2);
        if (max_radial_vertices > 0) t = std::min(t, max_radial_vertices - nations);
        Rotation rot = random_triangulation(t, rng);
        const int total = 2 * t - 4;
        const int lakes = rng.uniform(total - nations + 1);
        EmbeddedGraph e = embedding_from_neighbors(rot);
        while (e.num_faces() > nations + lakes) {
            std::vector<Dart> candidates;
            for (Dart d = 0; d < e.num_darts(); ++d)
                if (d < e.twin(d) && e.face_of(d) != e.face_of(e.twin(d)) && e.degree(e.vertex_of(d)) >= 2 &&
                    e.degree(e.head(d)) >= 2)
                    candidates.push_back(d);
            if (candidates.empty()) break;
            Dart d = candidates[rng.uniform(static_cast<int>(candidates.size()))];
            Vertex u = e.vertex_of(d), v = e.head(d);
            erase_value(rot[u], v);
            erase_value(rot[v], u);
            e = embedding_from_neighbors(rot);
        }
        if (e.num_faces() != nations + lakes) continue;
        std::vector<FaceId> ids(e.num_faces());
        for (FaceId f = 0; f < e.num_faces(); ++f) ids[f] = f;
        rng.shuffle(ids);
        std::vector<FaceId> chosen(ids.begin() + lakes, ids.end());
        std::sort(chosen.begin(), chosen.end());
        auto parts = canonicalize(e, FaceLabeling(e.num_faces(), chosen));
        if (parts.size() != 1) continue;
        auto& c = parts.front();
        if (c.labels.num_nations() != nations || !is_connected(map_graph(c.graph, c.labels))) continue;
        if (max_radial_vertices > 0 && c.graph.num_vertices() + nations > max_radial_vertices) continue;
        return {std::move(c.graph), std::move(c.labels)};
    }
    throw ConstructionError("random_canonical_map: no connected canonical map after 1000 attempts");
}

EmbeddedMap nation_grid_map(int side) {
    if (side < 1) throw std::invalid_argument("nation_grid_map: side must be positive");
    const int w = side + 1;
    std::vector<Point> pts(w * w);
    for (int x = 0; x < w; ++x)
        for (int y = 0; y < w; ++y) pts[x * w + y] = {static_cast<double>(x), static_cast<double>(y)};
    std::vector<Edge> edges = grid_graph(w, w).edges();
    EmbeddedMap out;
    out.graph = embedding_from_drawing(pts, edges);
    std::vector<FaceId> nations;
    for (FaceId f = 0; f < out.graph.num_faces(); ++f)
        if (face_signed_area(out.graph, f, pts) < 0) nations.push_back(f);
    out.labels = FaceLabeling(out.graph.num_faces(), nations);
    return out;
}

namespace {

// Host id of the nation whose lower-left corner is vertex (a,b).
std::vector<Vertex> nation_ids_by_corner(const EmbeddedMap& m, int side) {
    const int w = side + 1;
    const int nv = m.graph.num_vertices();
    std::vector<Vertex> out(side * side, -1);
    for (int i = 0; i < m.labels.num_nations(); ++i) {
        const auto& walk = m.graph.faces()[m.labels.nations()[i]];
        Vertex low = nv;
        for (Dart d : walk) low = std::min(low, m.graph.vertex_of(d));
        int a = low / w, b = low % w;
        out[a * side + b] = nv + i;
    }
    return out;
}

// Appends deletions of every survivor edge that is not a grid edge under
// `pos`, then checks the sequence produces a k x k grid.
void finish_as_grid(const SimpleGraph& host, ContractionSequence& seq, int k,
                    const std::map<Vertex, std::pair<int, int>>& pos) {
    ReplayResult r = replay(host, seq);
    for (auto [a, b] : r.graph.edges()) {
        Vertex x = r.survivors[a], y = r.survivors[b];
        auto px = pos.at(x), py = pos.at(y);
        if (std::abs(px.first - py.first) + std::abs(px.second - py.second) != 1) seq.delete_edge(x, y);
    }
    auto grid = recognize_grid(replay(host, seq).graph);
    if (!grid || grid->k != k) throw ConstructionError("transfer instance does not reduce to the expected grid");
}

}  // namespace

TransferInstance nation_grid_transfer_instance(int side, std::uint64_t seed) {
    Rng rng(seed);
    TransferInstance inst;
    inst.family = "nation_grid";
    inst.k = side;
    inst.map = nation_grid_map(side);
    SimpleGraph host = union_radial_dual(inst.map.graph, inst.map.labels);
    const int nv = inst.map.graph.num_vertices();
    for (Vertex u = 0; u < nv; ++u) {
        if (rng.coin()) {
            inst.sequence.delete_vertex(u);
        } else {
            const auto& nb = host.neighbors(u);
            inst.sequence.contract(nb[rng.uniform(static_cast<int>(nb.size()))], u);
        }
    }
    auto ids = nation_ids_by_corner(inst.map, side);
    std::map<Vertex, std::pair<int, int>> pos;
    for (int a = 0; a < side; ++a)
        for (int b = 0; b < side; ++b) pos[ids[a * side + b]] = {a, b};
    finish_as_grid(host, inst.sequence, side, pos);
    return inst;
}

TransferInstance checkerboard_transfer_instance(int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("checkerboard_transfer_instance: k must be positive");
    Rng rng(seed);
    const int side = k + 1, w = side + 1;
    TransferInstance inst;
    inst.family = "checkerboard";
    inst.k = k;
    inst.map = nation_grid_map(side);
    SimpleGraph host = union_radial_dual(inst.map.graph, inst.map.labels);
    auto ids = nation_ids_by_corner(inst.map, side);

    // Rotated coordinates: primal (x,y) -> (x+y, x-y); nation (a,b) -> (a+b+1, a-b).
    auto host_at = [&](int p, int q) -> Vertex {
        if ((p + q) % 2 == 0) {
            int x = (p + q) / 2, y = (p - q) / 2;
            return (x >= 0 && y >= 0 && x <= side && y <= side) ? x * w + y : -1;
        }
        int a = (p + q - 1) / 2, b = (p - q - 1) / 2;
        if (p + q - 1 < 0 || p - q - 1 < 0) return -1;
        return (a < side && b < side) ? ids[a * side + b] : -1;
    };
    std::vector<std::pair<int, int>> origins;
    for (int p0 = 0; p0 <= 2 * side; ++p0)
        for (int q0 = -side; q0 <= side; ++q0) {
            bool ok = true;
            for (int dp = 0; dp < k && ok; ++dp)
                for (int dq = 0; dq < k && ok; ++dq) ok = host_at(p0 + dp, q0 + dq) >= 0;
            if (ok) origins.emplace_back(p0, q0);
        }
    if (origins.empty()) throw ConstructionError("checkerboard_transfer_instance: no window fits");
    auto [p0, q0] = origins[rng.uniform(static_cast<int>(origins.size()))];

    std::map<Vertex, std::pair<int, int>> pos;
    std::vector<Vertex> rep(host.num_vertices(), -2);  // -2 unseen, -1 deleted
    std::vector<int> dist(host.num_vertices(), -1);
    std::queue<Vertex> q;
    for (int dp = 0; dp < k; ++dp)
        for (int dq = 0; dq < k; ++dq) {
            Vertex x = host_at(p0 + dp, q0 + dq);
            pos[x] = {dp, dq};
            rep[x] = x;
            dist[x] = 0;
        }
    for (auto& [x, c] : pos) q.push(x);
    std::vector<Vertex> order;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        for (Vertex y : host.neighbors(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                order.push_back(y);
                q.push(y);
            }
    }
    for (Vertex x : order) {
        std::vector<Vertex> inner;
        for (Vertex y : host.neighbors(x))
            if (dist[y] >= 0 && dist[y] < dist[x] && rep[y] >= 0) inner.push_back(rep[y]);
        if (!inner.empty() && rng.coin()) {
            rep[x] = inner[rng.uniform(static_cast<int>(inner.size()))];
            inst.sequence.contract(rep[x], x);
        } else {
            rep[x] = -1;
            inst.sequence.delete_vertex(x);
        }
    }
    finish_as_grid(host, inst.sequence, k, pos);
    return inst;
}

std::optional<Family> parse_family(const std::string& name) {
    if (name == "wheel_map") return Family::WheelMap;
    if (name == "grid") return Family::Grid;
    if (name == "partially_triangulated_grid") return Family::PartiallyTriangulatedGrid;
    if (name == "random_map") return Family::RandomMap;
    if (name == "random_planar_triangulation") return Family::RandomPlanarTriangulation;
    return std::nullopt;
}

std::string to_string(Family f) {
    switch (f) {
        case Family::WheelMap: return "wheel_map";
        case Family::Grid: return "grid";
        case Family::PartiallyTriangulatedGrid: return "partially_triangulated_grid";
        case Family::RandomMap: return "random_map";
        case Family::RandomPlanarTriangulation: return "random_planar_triangulation";
    }
    return "unknown";
}

Generated generate(const GeneratorSpec& spec) {
    Generated out;
    switch (spec.family) {
        case Family::WheelMap: out.map = wheel_map(spec.r); break;
        case Family::Grid:
            if (spec.rows < 1 || spec.cols < 1) throw std::invalid_argument("grid: rows and cols must be positive");
            out.graph = grid_graph(spec.rows, spec.cols);
            return out;
        case Family::PartiallyTriangulatedGrid:
            if (spec.rows < 1 || spec.cols < 1) throw std::invalid_argument("grid: rows and cols must be positive");
            out.graph = partially_triangulated_grid(spec.rows, spec.cols, spec.seed);
            return out;
        case Family::RandomMap: out.map = random_canonical_map(spec.nations, spec.seed); break;
        case Family::RandomPlanarTriangulation: {
            EmbeddedGraph e = random_planar_triangulation(spec.n, spec.seed);
            FaceLabeling fl = FaceLabeling::all_nations(e.num_faces());
            out.map = EmbeddedMap{std::move(e), std::move(fl)};
            break;
        }
    }
    out.graph = out.map->graph.underlying_graph();
    return out;
}

}  // namespace gridlab
