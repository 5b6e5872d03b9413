#include "gridlab/grid_transfer.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <stdexcept>

#include "gridlab/errors.hpp"
#include "gridlab/map_graphs.hpp"

namespace gridlab {

std::optional<GridCoordinates> recognize_grid(const SimpleGraph& g) {
    const int n = g.num_vertices();
    int k = 0;
    while ((k + 1) * (k + 1) <= n) ++k;
    if (k == 0 || k * k != n) return std::nullopt;
    if (g.num_edges() != 2 * k * (k - 1)) return std::nullopt;
    GridCoordinates out;
    out.k = k;
    if (k == 1) {
        out.coord = {{0, 0}};
        return out;
    }
    Vertex c0 = -1;
    for (Vertex v = 0; v < n && c0 < 0; ++v)
        if (g.degree(v) == 2) c0 = v;
    if (c0 < 0) return std::nullopt;
    auto d0 = bfs_distances(g, c0);
    Vertex c1 = -1;
    for (Vertex v = 0; v < n && c1 < 0; ++v)
        if (v != c0 && g.degree(v) == 2 && d0[v] == k - 1) c1 = v;
    if (c1 < 0) return std::nullopt;
    auto d1 = bfs_distances(g, c1);

    out.coord.resize(n);
    std::vector<char> taken(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (d0[v] == kUnreachable || d1[v] == kUnreachable) return std::nullopt;
        int s = d0[v] + d1[v] - (k - 1);
        if (s < 0 || s % 2 != 0) return std::nullopt;
        int x = s / 2, y = d0[v] - x;
        if (x < 0 || y < 0 || x >= k || y >= k || taken[x * k + y]) return std::nullopt;
        taken[x * k + y] = 1;
        out.coord[v] = {x, y};
    }
    for (auto [u, v] : g.edges()) {
        auto [xu, yu] = out.coord[u];
        auto [xv, yv] = out.coord[v];
        if (std::abs(xu - xv) + std::abs(yu - yv) != 1) return std::nullopt;
    }
    return out;
}

namespace {

struct Rect {
    int x0, x1, y0, y1;  // inclusive
    bool contains(std::pair<int, int> c) const {
        return c.first >= x0 && c.first <= x1 && c.second >= y0 && c.second <= y1;
    }
};

// Shortest path from s to t using only vertices accepted by `allowed`,
// neighbours taken in increasing id. Empty when t is unreachable.
template <class Pred>
std::vector<Vertex> bfs_path(const SimpleGraph& g, Vertex s, Vertex t, Pred allowed) {
    std::vector<Vertex> parent(g.num_vertices(), -2);
    std::queue<Vertex> q;
    parent[s] = -1;
    q.push(s);
    while (!q.empty() && parent[t] == -2) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
            if (parent[w] == -2 && allowed(w)) {
                parent[w] = u;
                q.push(w);
            }
    }
    if (parent[t] == -2) return {};
    std::vector<Vertex> path;
    for (Vertex x = t; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

class Transfer {
public:
    Transfer(const ContractionSequence& seq, const EmbeddedGraph& e, const FaceLabeling& fl)
        : e_(e), fl_(fl), nv_(e.num_vertices()), host_(union_radial_dual(e, fl)) {
        ReplayResult full = replay(host_, seq);
        auto grid = recognize_grid(full.graph);
        if (!grid) throw std::invalid_argument("radial_grid_to_dual_grid: sequence does not produce a square grid");
        k_ = grid->k;
        if (k_ < 12)
            throw std::invalid_argument("radial_grid_to_dual_grid: k = " + std::to_string(k_) +
                                        " leaves an empty grid (need k >= 12)");
        m_ = k_ / 6 - 1;
        coord_ = grid->coord;
        at_.assign(k_, std::vector<int>(k_, -1));
        for (int t = 0; t < static_cast<int>(coord_.size()); ++t) at_[coord_[t].first][coord_[t].second] = t;
        build_partial_triangulation(seq, full);
    }

    DualGridTransfer run() {
        DualGridTransfer out;
        out.k = k_;
        out.m = m_;
        const int cells = m_ * m_;
        std::vector<Vertex> center(cells);
        std::vector<int> chosen(cells);
        for (int i = 1; i <= m_; ++i)
            for (int j = 1; j <= m_; ++j) {
                int a = at_[6 * i + 1][6 * j + 1], b = at_[6 * i + 2][6 * j + 1];
                int v = facial(a) ? a : facial(b) ? b : -1;
                if (v < 0)
                    throw ConstructionError("radial_grid_to_dual_grid: adjacent vertices at (" +
                                            std::to_string(6 * i + 1) + "," + std::to_string(6 * j + 1) +
                                            ") are both nonfacial");
                chosen[cell(i, j)] = v;
                center[cell(i, j)] = first_nation(v);
            }

        assigned_.assign(host_.num_vertices(), -1);
        for (int c = 0; c < cells; ++c) claim(center[c], c);
        for (int i = 1; i <= m_; ++i)
            for (int j = 1; j <= m_; ++j) {
                if (j < m_) route(i, j, i, j + 1, chosen, center);
                if (i < m_) route(i, j, i + 1, j, chosen, center);
            }

        out.model.pattern = grid_graph(m_, m_);
        out.model.host = dual_graph(e_, fl_);
        out.model.branch_sets.assign(cells, {});
        for (Vertex x = 0; x < host_.num_vertices(); ++x)
            if (assigned_[x] >= 0) out.model.branch_sets[assigned_[x]].push_back(x - nv_);
        assign_edge_witnesses(out.model);
        auto check = verify_model(out.model);
        if (!check.ok()) throw ConstructionError("radial_grid_to_dual_grid: emitted model fails: " + check.message);
        for (Vertex c : center) out.centers.push_back(c - nv_);
        return out;
    }

private:
    const EmbeddedGraph& e_;
    const FaceLabeling& fl_;
    const int nv_;
    SimpleGraph host_;
    int k_ = 0, m_ = 0;
    std::vector<std::pair<int, int>> coord_;
    std::vector<std::vector<int>> at_;
    SimpleGraph kp_;                    // K'
    std::vector<VertexSet> label_;      // per K' vertex
    std::vector<int> owner_;            // host vertex -> K' vertex or -1
    std::vector<int> assigned_;         // host vertex -> grid cell or -1

    int cell(int i, int j) const { return (i - 1) * m_ + (j - 1); }

    bool is_nation(Vertex x) const { return x >= nv_; }

    bool facial(int t) const {
        return std::any_of(label_[t].begin(), label_[t].end(), [&](Vertex x) { return is_nation(x); });
    }

    Vertex first_nation(int t) const {
        for (Vertex x : label_[t])
            if (is_nation(x)) return x;
        return -1;
    }

    void build_partial_triangulation(const ContractionSequence& seq, const ReplayResult& full) {
        ReplayResult loose = replay(host_, seq, ReplayOptions{true, true});
        const int ln = loose.graph.num_vertices();
        // Loose survivors that also survive the real sequence keep their K index.
        std::vector<int> k_index(ln, -1);
        for (int a = 0, b = 0; a < ln; ++a) {
            while (b < static_cast<int>(full.survivors.size()) && full.survivors[b] < loose.survivors[a]) ++b;
            if (b < static_cast<int>(full.survivors.size()) && full.survivors[b] == loose.survivors[a]) k_index[a] = b;
        }
        // Deleted groups join the nearest real survivor.
        std::queue<int> q;
        for (int a = 0; a < ln; ++a)
            if (k_index[a] >= 0) q.push(a);
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int b : loose.graph.neighbors(a))
                if (k_index[b] < 0) {
                    k_index[b] = k_index[a];
                    q.push(b);
                }
        }
        const int kn = static_cast<int>(full.survivors.size());
        kp_ = SimpleGraph(kn);
        label_.assign(kn, {});
        owner_.assign(host_.num_vertices(), -1);
        for (int a = 0; a < ln; ++a) {
            if (k_index[a] < 0) continue;
            for (Vertex x : loose.labels[a]) {
                label_[k_index[a]].push_back(x);
                owner_[x] = k_index[a];
            }
        }
        for (auto& l : label_) std::sort(l.begin(), l.end());
        for (auto [a, b] : loose.graph.edges())
            if (k_index[a] >= 0 && k_index[b] >= 0 && k_index[a] != k_index[b]) kp_.add_edge(k_index[a], k_index[b]);
    }

    void claim(Vertex x, int c) {
        if (assigned_[x] >= 0 && assigned_[x] != c)
            throw ConstructionError("radial_grid_to_dual_grid: dual vertex " + std::to_string(x - nv_) +
                                    " is claimed by two grid cells; routed paths collide");
        assigned_[x] = c;
    }

    // Nations met around primal vertex u going from nation v to nation w
    // without crossing the lake corner, if any.
    std::vector<Vertex> fan(Vertex u, Vertex v, Vertex w) const {
        auto darts = e_.darts_at(u);
        const int deg = static_cast<int>(darts.size());
        std::vector<Vertex> corner(deg);
        for (int s = 0; s < deg; ++s) {
            int idx = fl_.nation_index(e_.face_of(darts[s]));
            corner[s] = idx >= 0 ? nv_ + idx : -1;
        }
        std::vector<Vertex> best;
        for (int p = 0; p < deg; ++p) {
            if (corner[p] != v) continue;
            for (int q = 0; q < deg; ++q) {
                if (corner[q] != w) continue;
                for (int dir : {1, -1}) {
                    std::vector<Vertex> seq;
                    bool blocked = false;
                    for (int s = p;; s = (s + dir + deg) % deg) {
                        if (corner[s] < 0) {
                            blocked = true;
                            break;
                        }
                        if (seq.empty() || seq.back() != corner[s]) seq.push_back(corner[s]);
                        if (s == q) break;
                    }
                    if (!blocked && (best.empty() || seq.size() < best.size())) best = std::move(seq);
                }
            }
        }
        if (best.empty())
            throw ConstructionError("radial_grid_to_dual_grid: no lake-free fan around primal vertex " +
                                    std::to_string(u));
        return best;
    }

    void route(int i, int j, int i2, int j2, const std::vector<int>& chosen, const std::vector<Vertex>& center) {
        const bool horizontal = (i == i2);
        const Rect thin = horizontal ? Rect{6 * i + 1, 6 * i + 2, 6 * j + 1, 6 * j + 8}
                                     : Rect{6 * i + 1, 6 * i + 8, 6 * j + 1, 6 * j + 2};
        const Rect thick = horizontal ? Rect{6 * i, 6 * i + 3, 6 * j, 6 * j + 9}
                                      : Rect{6 * i, 6 * i + 9, 6 * j, 6 * j + 3};
        const int from = chosen[cell(i, j)], to = chosen[cell(i2, j2)];
        const Vertex src = center[cell(i, j)], dst = center[cell(i2, j2)];

        auto pk = bfs_path(kp_, from, to, [&](int t) { return thin.contains(coord_[t]); });
        if (pk.empty()) throw ConstructionError("radial_grid_to_dual_grid: no path inside the routing strip");

        // Lift to R u D through the labels.
        std::vector<Vertex> walk;
        Vertex cur = src;
        auto within = [&](int t) { return [this, t](Vertex x) { return owner_[x] == t; }; };
        for (std::size_t s = 0; s + 1 < pk.size(); ++s) {
            const int a = pk[s], b = pk[s + 1];
            Vertex x = -1, y = -1;
            for (Vertex cand : label_[a]) {
                for (Vertex nb : host_.neighbors(cand))
                    if (owner_[nb] == b) {
                        x = cand;
                        y = nb;
                        break;
                    }
                if (x >= 0) break;
            }
            auto seg = bfs_path(host_, cur, x, within(a));
            if (seg.empty()) throw ConstructionError("radial_grid_to_dual_grid: label set is not connected");
            walk.insert(walk.end(), seg.begin(), seg.end());
            cur = y;
        }
        auto last = bfs_path(host_, cur, dst, within(pk.back()));
        if (last.empty()) throw ConstructionError("radial_grid_to_dual_grid: label set is not connected");
        walk.insert(walk.end(), last.begin(), last.end());

        // Project onto the dual.
        std::vector<Vertex> dwalk{walk.front()};
        for (std::size_t s = 1; s < walk.size(); ++s) {
            if (!is_nation(walk[s])) continue;
            if (!is_nation(walk[s - 1])) {
                auto f = fan(walk[s - 1], dwalk.back(), walk[s]);
                dwalk.insert(dwalk.end(), f.begin() + 1, f.end());
            } else {
                dwalk.push_back(walk[s]);
            }
        }
        std::vector<char> on_walk(host_.num_vertices(), 0);
        for (Vertex x : dwalk) on_walk[x] = 1;
        auto pd = bfs_path(host_, src, dst, [&](Vertex x) { return on_walk[x] != 0; });
        if (pd.empty()) throw ConstructionError("radial_grid_to_dual_grid: projected walk is disconnected");

        for (Vertex x : pd)
            if (owner_[x] < 0 || !thick.contains(coord_[owner_[x]]))
                throw ConstructionError("radial_grid_to_dual_grid: dual vertex " + std::to_string(x - nv_) +
                                        " on a routed path lies outside its rectangle");

        const int boundary = horizontal ? 6 * j + 4 : 6 * i + 4;
        auto axis = [&](Vertex x) {
            auto c = coord_[owner_[x]];
            return horizontal ? c.second : c.first;
        };
        std::size_t cut = pd.size();
        for (std::size_t s = 0; s + 1 < pd.size(); ++s)
            if (axis(pd[s]) <= boundary && axis(pd[s + 1]) > boundary) {
                cut = s;
                break;
            }
        if (cut == pd.size())
            throw ConstructionError("radial_grid_to_dual_grid: routed path never crosses its cut line");
        for (std::size_t s = 0; s < pd.size(); ++s) claim(pd[s], s <= cut ? cell(i, j) : cell(i2, j2));
    }
};

}  // namespace

DualGridTransfer radial_grid_to_dual_grid(const ContractionSequence& seq, const EmbeddedGraph& e,
                                          const FaceLabeling& fl) {
    if (!is_canonical(e, fl)) throw std::invalid_argument("radial_grid_to_dual_grid: map is not canonical");
    return Transfer(seq, e, fl).run();
}

}  // namespace gridlab
