#include "gridlab/minor_models.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <stdexcept>

#include "gridlab/errors.hpp"
#include "gridlab/map_graphs.hpp"
#include "gridlab/tree_decomposition.hpp"

namespace gridlab {

const char* to_string(ModelViolation v) {
    switch (v) {
        case ModelViolation::None: return "ok";
        case ModelViolation::BranchSetCount: return "branch-set-count";
        case ModelViolation::BadBranchSet: return "bad-branch-set";
        case ModelViolation::Overlap: return "disjointness";
        case ModelViolation::Disconnected: return "connectivity";
        case ModelViolation::MissingWitness: return "missing-witness";
        case ModelViolation::BadWitness: return "bad-witness";
    }
    return "unknown";
}

namespace {

std::string edge_str(Edge e) { return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}"; }

bool induces_connected(const SimpleGraph& g, const VertexSet& set) {
    if (set.empty()) return false;
    std::vector<char> in(g.num_vertices(), 0), seen(g.num_vertices(), 0);
    for (Vertex v : set) in[v] = 1;
    std::vector<Vertex> stack{set.front()};
    seen[set.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == set.size();
}

}  // namespace

ModelCheck verify_model(const MinorModel& m) {
    ModelCheck r;
    auto fail = [&](ModelViolation v, std::string msg) {
        r.violated = v;
        r.message = std::move(msg);
        return r;
    };
    const int h = m.pattern.num_vertices();
    const int n = m.host.num_vertices();
    if (static_cast<int>(m.branch_sets.size()) != h)
        return fail(ModelViolation::BranchSetCount, std::to_string(m.branch_sets.size()) + " branch sets for " +
                                                        std::to_string(h) + " pattern vertices");
    std::vector<int> owner(n, -1);
    for (int i = 0; i < h; ++i) {
        const auto& b = m.branch_sets[i];
        r.pattern_vertex = i;
        if (b.empty()) return fail(ModelViolation::BadBranchSet, "branch set " + std::to_string(i) + " is empty");
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] < 0 || b[j] >= n || (j > 0 && b[j - 1] >= b[j])) {
                r.host_vertex = b[j];
                return fail(ModelViolation::BadBranchSet,
                            "branch set " + std::to_string(i) + " is not a sorted set of host vertices");
            }
            if (owner[b[j]] >= 0) {
                r.host_vertex = b[j];
                r.other_pattern_vertex = owner[b[j]];
                return fail(ModelViolation::Overlap, "host vertex " + std::to_string(b[j]) + " lies in branch sets " +
                                                         std::to_string(owner[b[j]]) + " and " + std::to_string(i));
            }
            owner[b[j]] = i;
        }
    }
    for (int i = 0; i < h; ++i)
        if (!induces_connected(m.host, m.branch_sets[i])) {
            r.pattern_vertex = i;
            return fail(ModelViolation::Disconnected, "branch set " + std::to_string(i) + " is not connected");
        }
    r.pattern_vertex = -1;

    std::set<Edge> witnessed;
    for (const auto& [pe, he] : m.edge_witness) {
        r.pattern_edge = pe;
        if (pe.first < 0 || pe.second >= h || pe.first >= pe.second || !m.pattern.has_edge(pe.first, pe.second))
            return fail(ModelViolation::MissingWitness, "witness given for non-edge " + edge_str(pe));
        if (!witnessed.insert(pe).second)
            return fail(ModelViolation::BadWitness, "pattern edge " + edge_str(pe) + " witnessed twice");
        if (he.first < 0 || he.second < 0 || he.first >= n || he.second >= n || he.first == he.second ||
            !m.host.has_edge(he.first, he.second))
            return fail(ModelViolation::BadWitness, "witness " + edge_str(he) + " is not a host edge");
        int a = owner[he.first], b = owner[he.second];
        if (!((a == pe.first && b == pe.second) || (a == pe.second && b == pe.first)))
            return fail(ModelViolation::BadWitness,
                        "witness " + edge_str(he) + " does not join the branch sets of " + edge_str(pe));
    }
    for (Edge pe : m.pattern.edges())
        if (!witnessed.count(pe)) {
            r.pattern_edge = pe;
            return fail(ModelViolation::MissingWitness, "pattern edge " + edge_str(pe) + " has no witness");
        }
    return {};
}

bool assign_edge_witnesses(MinorModel& m) {
    std::vector<int> owner(m.host.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(m.branch_sets.size()); ++i)
        for (Vertex x : m.branch_sets[i]) owner[x] = i;
    m.edge_witness.clear();
    bool all = true;
    for (auto [a, b] : m.pattern.edges()) {
        bool found = false;
        Edge best{-1, -1};
        for (Vertex x : m.branch_sets[a])
            for (Vertex y : m.host.neighbors(x))
                if (owner[y] == b) {
                    Edge cand{std::min(x, y), std::max(x, y)};
                    if (!found || cand < best) best = cand;
                    found = true;
                }
        if (found)
            m.edge_witness.push_back({{a, b}, best});
        else
            all = false;
    }
    return all;
}

int ReplayResult::owner_of(Vertex x) const {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        if (std::binary_search(labels[i].begin(), labels[i].end(), x)) return i;
    return -1;
}

ReplayResult replay(const SimpleGraph& host, const ContractionSequence& seq, ReplayOptions options) {
    const int n = host.num_vertices();
    std::vector<std::set<Vertex>> adj(n);
    for (auto [u, v] : host.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> alive(n, 1);
    std::vector<std::vector<Vertex>> label(n);
    for (Vertex v = 0; v < n; ++v) label[v] = {v};

    auto bad = [](std::size_t step, const std::string& why) {
        return std::invalid_argument("operation " + std::to_string(step) + ": " + why);
    };
    auto check_vertex = [&](std::size_t step, Vertex x) {
        if (x < 0 || x >= n) throw bad(step, "vertex " + std::to_string(x) + " out of range");
        if (!alive[x]) throw bad(step, "vertex " + std::to_string(x) + " no longer exists");
    };

    for (std::size_t step = 0; step < seq.ops.size(); ++step) {
        const MinorOp& op = seq.ops[step];
        switch (op.kind) {
            case MinorOpKind::Contract: {
                check_vertex(step, op.u);
                check_vertex(step, op.v);
                if (op.u == op.v || !adj[op.u].count(op.v))
                    throw bad(step, "no edge " + edge_str({op.u, op.v}) + " to contract");
                for (Vertex w : adj[op.v]) {
                    adj[w].erase(op.v);
                    if (w != op.u) {
                        adj[w].insert(op.u);
                        adj[op.u].insert(w);
                    }
                }
                adj[op.v].clear();
                alive[op.v] = 0;
                label[op.u].insert(label[op.u].end(), label[op.v].begin(), label[op.v].end());
                label[op.v].clear();
                break;
            }
            case MinorOpKind::DeleteEdge: {
                if (options.skip_edge_deletions) break;
                check_vertex(step, op.u);
                check_vertex(step, op.v);
                if (!adj[op.u].erase(op.v)) throw bad(step, "no edge " + edge_str({op.u, op.v}) + " to delete");
                adj[op.v].erase(op.u);
                break;
            }
            case MinorOpKind::DeleteVertex: {
                if (options.skip_vertex_deletions) break;
                check_vertex(step, op.u);
                for (Vertex w : adj[op.u]) adj[w].erase(op.u);
                adj[op.u].clear();
                alive[op.u] = 0;
                label[op.u].clear();
                break;
            }
        }
    }

    ReplayResult out;
    std::vector<int> index(n, -1);
    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) {
            index[v] = static_cast<int>(out.survivors.size());
            out.survivors.push_back(v);
            std::sort(label[v].begin(), label[v].end());
            out.labels.push_back(std::move(label[v]));
        }
    out.graph = SimpleGraph(static_cast<int>(out.survivors.size()));
    for (Vertex v : out.survivors)
        for (Vertex w : adj[v])
            if (v < w) out.graph.add_edge(index[v], index[w]);
    return out;
}

ContractionSequence sequence_from_model(const MinorModel& m) {
    auto check = verify_model(m);
    if (!check.ok()) throw std::invalid_argument("sequence_from_model: " + check.message);
    const int n = m.host.num_vertices();
    std::vector<int> owner(n, -1);
    for (int i = 0; i < static_cast<int>(m.branch_sets.size()); ++i)
        for (Vertex x : m.branch_sets[i]) owner[x] = i;

    ContractionSequence seq;
    for (Vertex x = 0; x < n; ++x)
        if (owner[x] < 0) seq.delete_vertex(x);

    std::vector<char> seen(n, 0);
    for (int i = 0; i < static_cast<int>(m.branch_sets.size()); ++i) {
        Vertex root = m.branch_sets[i].front();
        std::queue<Vertex> q;
        q.push(root);
        seen[root] = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : m.host.neighbors(u))
                if (owner[w] == i && !seen[w]) {
                    seen[w] = 1;
                    seq.contract(root, w);
                    q.push(w);
                }
        }
    }

    std::set<Edge> present;
    for (auto [x, y] : m.host.edges()) {
        int a = owner[x], b = owner[y];
        if (a >= 0 && b >= 0 && a != b) present.insert({std::min(a, b), std::max(a, b)});
    }
    for (auto [a, b] : present)
        if (!m.pattern.has_edge(a, b)) {
            Vertex ra = m.branch_sets[a].front(), rb = m.branch_sets[b].front();
            seq.delete_edge(std::min(ra, rb), std::max(ra, rb));
        }
    return seq;
}

MinorModel clique_to_grid(const CliqueWitness& witness, int r, const SimpleGraph& host) {
    if (r < 1) throw std::invalid_argument("clique_to_grid: r must be positive");
    const auto& vs = witness.vertices;
    if (static_cast<int>(vs.size()) < r * r)
        throw std::invalid_argument("clique_to_grid: witness has " + std::to_string(vs.size()) +
                                    " vertices, fewer than r^2 = " + std::to_string(r * r));
    for (int a = 0; a < r * r; ++a) {
        if (vs[a] < 0 || vs[a] >= host.num_vertices())
            throw std::invalid_argument("clique_to_grid: witness vertex out of range");
        for (int b = a + 1; b < r * r; ++b)
            if (!host.has_edge(vs[a], vs[b]))
                throw std::invalid_argument("clique_to_grid: witness vertices " + std::to_string(vs[a]) + " and " +
                                            std::to_string(vs[b]) + " are not adjacent in the host");
    }
    MinorModel m;
    m.pattern = grid_graph(r, r);
    m.host = host;
    for (int idx = 0; idx < r * r; ++idx) m.branch_sets.push_back({vs[idx]});
    assign_edge_witnesses(m);
    auto check = verify_model(m);
    if (!check.ok()) throw ConstructionError("clique_to_grid: " + check.message);
    return m;
}

SimpleGraph augmented_grid(int rows, int cols, const std::vector<Edge>& extra_edges) {
    SimpleGraph g = grid_graph(rows, cols);
    for (auto [u, v] : extra_edges) {
        if (u < 0 || v < 0 || u >= rows * cols || v >= rows * cols)
            throw std::invalid_argument("augmented_grid: extra edge endpoint out of range");
        if (u != v) g.add_edge(u, v);
    }
    return g;
}

CleanSubgrid clean_subgrid(int rows, int cols, const std::vector<Edge>& extra_edges) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("clean_subgrid: empty grid");
    SimpleGraph host = augmented_grid(rows, cols, extra_edges);

    // pre[i][j]: marked endpoints in rows < i, cols < j.
    std::vector<std::vector<int>> pre(rows + 1, std::vector<int>(cols + 1, 0));
    std::vector<char> mark(rows * cols, 0);
    for (auto [u, v] : extra_edges) mark[u] = mark[v] = 1;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            pre[i + 1][j + 1] = pre[i][j + 1] + pre[i + 1][j] - pre[i][j] + mark[i * cols + j];
    auto count = [&](int r0, int c0, int r1, int c1) {  // half-open
        if (r1 <= r0 || c1 <= c0) return 0;
        return pre[r1][c1] - pre[r0][c1] - pre[r1][c0] + pre[r0][c0];
    };

    CleanSubgrid out;
    for (int side = std::min(rows, cols); side >= 1 && out.side == 0; --side)
        for (int top = 0; top + side <= rows && out.side == 0; ++top)
            for (int left = 0; left + side <= cols; ++left)
                if (count(top + 1, left + 1, top + side - 1, left + side - 1) == 0) {
                    out.top = top;
                    out.left = left;
                    out.side = side;
                    break;
                }

    const int bottom = out.top + out.side - 1, right = out.left + out.side - 1;
    auto target = [&](int i, int j) {
        return std::clamp(i, out.top, bottom) * cols + std::clamp(j, out.left, right);
    };
    auto inside = [&](int i, int j) { return i >= out.top && i <= bottom && j >= out.left && j <= right; };

    // Fold each outside region into its boundary vertex, growing from it.
    std::vector<char> done(rows * cols, 0);
    for (int i = out.top; i <= bottom; ++i)
        for (int j = out.left; j <= right; ++j) {
            if (i != out.top && i != bottom && j != out.left && j != right) continue;
            const Vertex t = i * cols + j;
            std::queue<Vertex> q;
            q.push(t);
            while (!q.empty()) {
                Vertex x = q.front();
                q.pop();
                int xi = x / cols, xj = x % cols;
                const int di[] = {-1, 0, 0, 1}, dj[] = {0, -1, 1, 0};
                for (int s = 0; s < 4; ++s) {
                    int yi = xi + di[s], yj = xj + dj[s];
                    if (yi < 0 || yj < 0 || yi >= rows || yj >= cols || inside(yi, yj)) continue;
                    Vertex y = yi * cols + yj;
                    if (done[y] || target(yi, yj) != t) continue;
                    done[y] = 1;
                    out.sequence.contract(t, y);
                    q.push(y);
                }
            }
        }

    ReplayResult folded = replay(host, out.sequence);
    for (auto [a, b] : folded.graph.edges()) {
        Vertex x = folded.survivors[a], y = folded.survivors[b];
        int xi = x / cols, xj = x % cols, yi = y / cols, yj = y % cols;
        if (std::abs(xi - yi) + std::abs(xj - yj) != 1) out.sequence.delete_edge(x, y);
    }
    return out;
}

SimpleGraph double_radial_graph(const EmbeddedGraph& e) {
    EmbeddedGraph r1 = radial_embedding(e, FaceLabeling::all_nations(e.num_faces()));
    return radial_graph(r1, FaceLabeling::all_nations(r1.num_faces())).graph;
}

MinorModel double_radial_minor(const EmbeddedGraph& e) {
    SimpleGraph g = e.underlying_graph();
    if (!is_biconnected(g)) throw std::invalid_argument("double_radial_minor: graph is not 2-connected");
    const int nv = e.num_vertices(), nf = e.num_faces();
    EmbeddedGraph r1 = radial_embedding(e, FaceLabeling::all_nations(nf));

    MinorModel m;
    m.pattern = g;
    m.host = radial_graph(r1, FaceLabeling::all_nations(r1.num_faces())).graph;
    m.branch_sets.resize(nv);
    for (Vertex v = 0; v < nv; ++v) m.branch_sets[v] = {v};

    std::set<Edge> covered;
    for (FaceId j = 0; j < r1.num_faces(); ++j) {
        const auto& walk = r1.faces()[j];
        std::vector<Vertex> primal, face;
        for (Dart d : walk) (r1.vertex_of(d) < nv ? primal : face).push_back(r1.vertex_of(d));
        bool alternating = walk.size() == 4;
        for (std::size_t s = 0; alternating && s < 4; ++s)
            alternating = (r1.vertex_of(walk[s]) < nv) != (r1.vertex_of(walk[(s + 1) % 4]) < nv);
        if (!alternating || primal.size() != 2 || primal[0] == primal[1] || !g.has_edge(primal[0], primal[1]))
            throw ConstructionError("double_radial_minor: face " + std::to_string(j) +
                                    " of the radial graph is not a diamond around a primal edge");
        Vertex a = std::min(primal[0], primal[1]), b = std::max(primal[0], primal[1]);
        Vertex w = nv + nf + j;
        m.branch_sets[b].push_back(w);
        if (covered.insert({a, b}).second) m.edge_witness.push_back({{a, b}, {a, w}});
    }
    std::sort(m.edge_witness.begin(), m.edge_witness.end());
    auto check = verify_model(m);
    if (!check.ok()) throw ConstructionError("double_radial_minor: " + check.message);
    return m;
}

PrimalDualReport primal_dual_width_report(const EmbeddedGraph& e) {
    PrimalDualReport rep;
    SimpleGraph primal = e.underlying_graph();
    SimpleGraph dual = dual_graph(e, FaceLabeling::all_nations(e.num_faces()));
    rep.primal_vertices = primal.num_vertices();
    rep.dual_vertices = dual.num_vertices();
    rep.tw_primal = treewidth_exact(primal).width;
    rep.tw_dual = treewidth_exact(dual).width;
    rep.genus = genus(e);
    return rep;
}

}  // namespace gridlab
