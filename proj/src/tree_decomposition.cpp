#include "gridlab/tree_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "gridlab/errors.hpp"
#include "gridlab/graph_ops.hpp"
#include "gridlab/map_graphs.hpp"

namespace gridlab {

int TreeDecomposition::max_bag_size() const {
    int best = 0;
    for (const auto& b : bags) best = std::max(best, static_cast<int>(b.size()));
    return best;
}

int TreeDecomposition::width() const { return std::max(0, max_bag_size() - 1); }

const char* to_string(TdCondition c) {
    switch (c) {
        case TdCondition::None: return "ok";
        case TdCondition::TreeShape: return "tree-shape";
        case TdCondition::BagContents: return "bag-contents";
        case TdCondition::VertexCoverage: return "T1-vertex-coverage";
        case TdCondition::EdgeCoverage: return "T2-edge-coverage";
        case TdCondition::SubtreeConnected: return "T3-subtree-connectivity";
    }
    return "unknown";
}

namespace {

TdValidation fail(TdCondition c, std::string msg) {
    TdValidation v;
    v.violated = c;
    v.message = std::move(msg);
    return v;
}

}  // namespace

TdValidation validate(const TreeDecomposition& td, const SimpleGraph& g) {
    const int b = td.num_bags();
    const int n = g.num_vertices();

    if (b == 0) {
        if (n == 0) return {};
        auto v = fail(TdCondition::VertexCoverage, "no bags; vertex 0 uncovered");
        v.vertex = 0;
        return v;
    }
    if (static_cast<int>(td.tree_edges.size()) != b - 1)
        return fail(TdCondition::TreeShape, "tree has " + std::to_string(td.tree_edges.size()) +
                                                " edges for " + std::to_string(b) + " bags");
    std::vector<int> parent(b);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [x, y] : td.tree_edges) {
        if (x < 0 || y < 0 || x >= b || y >= b)
            return fail(TdCondition::TreeShape, "tree edge endpoint out of range");
        int rx = find(x), ry = find(y);
        if (rx == ry)
            return fail(TdCondition::TreeShape,
                        "tree edge " + std::to_string(x) + "-" + std::to_string(y) + " closes a cycle");
        parent[rx] = ry;
    }

    std::vector<std::vector<int>> nodes_of(n);
    for (int i = 0; i < b; ++i) {
        const auto& bag = td.bags[i];
        for (std::size_t j = 0; j < bag.size(); ++j) {
            if (bag[j] < 0 || bag[j] >= n || (j > 0 && bag[j - 1] >= bag[j])) {
                auto v = fail(TdCondition::BagContents,
                              "bag " + std::to_string(i) + " is not a sorted set of graph vertices");
                v.vertex = bag[j];
                return v;
            }
            nodes_of[bag[j]].push_back(i);
        }
    }

    for (Vertex v = 0; v < n; ++v)
        if (nodes_of[v].empty()) {
            auto r = fail(TdCondition::VertexCoverage, "vertex " + std::to_string(v) + " is in no bag");
            r.vertex = v;
            return r;
        }

    for (auto [u, w] : g.edges()) {
        const auto& a = nodes_of[u];
        const auto& c = nodes_of[w];
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(common));
        if (common.empty()) {
            auto r = fail(TdCondition::EdgeCoverage,
                          "edge {" + std::to_string(u) + "," + std::to_string(w) + "} is in no bag");
            r.edge = {u, w};
            return r;
        }
    }

    // Bags holding v span a subtree iff they induce (count - 1) tree edges.
    std::vector<int> inner_edges(n, 0);
    for (auto [x, y] : td.tree_edges) {
        const auto& bx = td.bags[x];
        const auto& by = td.bags[y];
        std::vector<Vertex> common;
        std::set_intersection(bx.begin(), bx.end(), by.begin(), by.end(), std::back_inserter(common));
        for (Vertex v : common) ++inner_edges[v];
    }
    for (Vertex v = 0; v < n; ++v)
        if (inner_edges[v] != static_cast<int>(nodes_of[v].size()) - 1) {
            auto r = fail(TdCondition::SubtreeConnected,
                          "bags containing vertex " + std::to_string(v) + " are not connected in the tree");
            r.vertex = v;
            return r;
        }
    return {};
}

namespace {

void require_valid(const TreeDecomposition& td, const SimpleGraph& g, const char* who) {
    auto rep = validate(td, g);
    if (!rep.ok())
        throw std::invalid_argument(std::string(who) + ": invalid decomposition (" + to_string(rep.violated) +
                                    "): " + rep.message);
}

VertexSet sorted_unique(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

TreeDecomposition lift_radial_to_map(const TreeDecomposition& td_radial, const EmbeddedGraph& e,
                                     const FaceLabeling& fl) {
    RadialGraph rg = radial_graph(e, fl);
    require_valid(td_radial, rg.graph, "lift_radial_to_map");
    const int nv = rg.num_primal;
    TreeDecomposition out;
    out.tree_edges = td_radial.tree_edges;
    out.bags.reserve(td_radial.bags.size());
    for (const auto& bag : td_radial.bags) {
        std::vector<Vertex> lifted;
        for (Vertex x : bag) {
            if (x >= nv) {
                lifted.push_back(x - nv);
            } else {
                for (Vertex f : rg.graph.neighbors(x)) lifted.push_back(f - nv);
            }
        }
        out.bags.push_back(sorted_unique(std::move(lifted)));
    }
    return out;
}

TreeDecomposition lift_power(const TreeDecomposition& td, const SimpleGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("lift_power: k must be at least 1");
    require_valid(td, g, "lift_power");
    std::vector<VertexSet> ball(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) ball[v] = k_neighborhood(g, v, k);
    TreeDecomposition out;
    out.tree_edges = td.tree_edges;
    for (const auto& bag : td.bags) {
        std::vector<Vertex> lifted;
        for (Vertex v : bag) lifted.insert(lifted.end(), ball[v].begin(), ball[v].end());
        out.bags.push_back(sorted_unique(std::move(lifted)));
    }
    return out;
}

VertexCoverResult vertex_cover_dp(const SimpleGraph& g, const TreeDecomposition& td) {
    require_valid(td, g, "vertex_cover_dp");
    if (td.max_bag_size() > kVertexCoverBagLimit)
        throw SizeLimitError("vertex_cover_dp: bag of size " + std::to_string(td.max_bag_size()) +
                             " exceeds limit " + std::to_string(kVertexCoverBagLimit));
    const int b = td.num_bags();
    if (b == 0) return {};

    std::vector<std::vector<int>> adj(b);
    for (auto [x, y] : td.tree_edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    // Root at node 0; order[] is a preorder so reverse order visits children first.
    std::vector<int> parent(b, -1), order;
    order.reserve(b);
    std::vector<char> seen(b, 0);
    order.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : adj[order[i]])
            if (!seen[c]) {
                seen[c] = 1;
                parent[c] = order[i];
                order.push_back(c);
            }

    constexpr int kInf = INT_MAX / 4;
    struct ChildLink {
        int child;
        std::uint32_t parent_shared_mask;      // shared vertices, parent-local bits
        std::vector<int> best;                 // indexed by parent-local shared subset
        std::vector<std::uint32_t> argbest;    // child-local set achieving best
    };
    std::vector<std::vector<int>> table(b);
    std::vector<std::vector<ChildLink>> links(b);

    auto local_index = [&](int node, Vertex v) {
        const auto& bag = td.bags[node];
        return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
    };

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int x = *it;
        const auto& bag = td.bags[x];
        const int s = static_cast<int>(bag.size());
        std::vector<std::pair<int, int>> inner;
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                if (g.has_edge(bag[i], bag[j])) inner.emplace_back(i, j);

        auto& t = table[x];
        t.assign(std::size_t{1} << s, kInf);
        for (std::uint32_t set = 0; set < t.size(); ++set) {
            bool covers = true;
            for (auto [i, j] : inner)
                if (!((set >> i) & 1u) && !((set >> j) & 1u)) {
                    covers = false;
                    break;
                }
            if (covers) t[set] = std::popcount(set);
        }

        for (int c : adj[x]) {
            if (c == parent[x]) continue;
            const auto& cbag = td.bags[c];
            const int cs = static_cast<int>(cbag.size());
            std::vector<int> to_parent(cs, -1);
            std::uint32_t child_shared = 0, parent_shared = 0;
            for (int i = 0; i < cs; ++i) {
                int li = local_index(x, cbag[i]);
                if (li < s && bag[li] == cbag[i]) {
                    to_parent[i] = li;
                    child_shared |= 1u << i;
                    parent_shared |= 1u << li;
                }
            }
            ChildLink link{c, parent_shared, std::vector<int>(std::size_t{1} << s, kInf),
                           std::vector<std::uint32_t>(std::size_t{1} << s, 0)};
            const auto& ct = table[c];
            for (std::uint32_t cset = 0; cset < ct.size(); ++cset) {
                if (ct[cset] >= kInf) continue;
                std::uint32_t key = 0;
                for (int i = 0; i < cs; ++i)
                    if (((cset >> i) & 1u) && to_parent[i] >= 0) key |= 1u << to_parent[i];
                int val = ct[cset] - std::popcount(cset & child_shared);
                if (val < link.best[key]) {
                    link.best[key] = val;
                    link.argbest[key] = cset;
                }
            }
            for (std::uint32_t set = 0; set < t.size(); ++set) {
                if (t[set] >= kInf) continue;
                int add = link.best[set & parent_shared];
                t[set] = add >= kInf ? kInf : t[set] + add;
            }
            links[x].push_back(std::move(link));
        }
    }

    // Top-down reconstruction.
    std::vector<std::uint32_t> chosen(b, 0);
    const auto& root = table[0];
    chosen[0] = static_cast<std::uint32_t>(std::min_element(root.begin(), root.end()) - root.begin());
    VertexCoverResult out;
    out.size = root[chosen[0]];
    std::vector<Vertex> cover;
    for (int x : order) {
        for (int i = 0; i < static_cast<int>(td.bags[x].size()); ++i)
            if ((chosen[x] >> i) & 1u) cover.push_back(td.bags[x][i]);
        for (const auto& link : links[x]) chosen[link.child] = link.argbest[chosen[x] & link.parent_shared_mask];
    }
    out.cover = sorted_unique(std::move(cover));
    if (static_cast<int>(out.cover.size()) != out.size)
        throw ConstructionError("vertex_cover_dp: reconstructed cover size disagrees with table value");
    return out;
}

}  // namespace gridlab
