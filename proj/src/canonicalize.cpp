#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "gridlab/errors.hpp"
#include "gridlab/map_graphs.hpp"

namespace gridlab {

namespace {

// Mutable combinatorial map used during surgery. Every dart remembers which
// input face its corner belonged to; lake darts stay lake darts through all
// three steps, which is what lets face labels be recovered afterwards.
struct WorkMap {
    std::vector<Dart> twin, next, prev;
    std::vector<Vertex> vertex_of;
    std::vector<char> alive;
    std::vector<char> lake;
    std::vector<FaceId> origin;
    std::vector<Vertex> vertex_origin;
    std::vector<int> degree;

    explicit WorkMap(const EmbeddedGraph& e, const FaceLabeling& fl)
        : twin(e.twins()), next(e.nexts()), vertex_of(e.vertex_ofs()) {
        const int m = e.num_darts();
        prev.resize(m);
        for (Dart d = 0; d < m; ++d) prev[next[d]] = d;
        alive.assign(m, 1);
        lake.resize(m);
        origin.resize(m);
        for (Dart d = 0; d < m; ++d) {
            origin[d] = e.face_of(d);
            lake[d] = fl.is_lake(origin[d]);
        }
        vertex_origin.resize(e.num_vertices());
        std::iota(vertex_origin.begin(), vertex_origin.end(), 0);
        degree.resize(e.num_vertices());
        for (Vertex v = 0; v < e.num_vertices(); ++v) degree[v] = e.degree(v);
    }

    void unlink(Dart d) {
        Dart p = prev[d], n = next[d];
        if (p != d) {
            next[p] = n;
            prev[n] = p;
        }
        next[d] = prev[d] = d;
        --degree[vertex_of[d]];
        alive[d] = 0;
    }

    void delete_edge(Dart d) {
        Dart t = twin[d];
        unlink(d);
        unlink(t);
    }

    Dart new_dart(Vertex v, bool is_lake, FaceId from) {
        Dart d = static_cast<Dart>(twin.size());
        twin.push_back(-1);
        next.push_back(d);
        prev.push_back(d);
        vertex_of.push_back(v);
        alive.push_back(1);
        lake.push_back(is_lake);
        origin.push_back(from);
        return d;
    }

    std::vector<Dart> rotation_from(Dart start) const {
        std::vector<Dart> out;
        Dart x = start;
        do {
            out.push_back(x);
            x = next[x];
        } while (x != start);
        return out;
    }
};

// Smallest live dart at each vertex, -1 once a vertex has lost all its darts.
std::vector<Dart> first_darts(const WorkMap& w) {
    std::vector<Dart> first(w.degree.size(), -1);
    for (Dart d = 0; d < static_cast<Dart>(w.twin.size()); ++d)
        if (w.alive[d] && first[w.vertex_of[d]] == -1) first[w.vertex_of[d]] = d;
    return first;
}

void split_multi_lake_vertices(WorkMap& w) {
    const int original_count = static_cast<int>(w.degree.size());
    std::vector<Dart> first = first_darts(w);
    for (Vertex v = 0; v < original_count; ++v) {
        if (first[v] == -1) continue;
        std::vector<Dart> wedges;  // dart d whose corner (prev(d), d) is a lake
        for (Dart d : w.rotation_from(first[v]))
            if (w.lake[d]) wedges.push_back(d);
        if (wedges.size() < 2) continue;
        for (Dart d : wedges) {
            Dart p = w.prev[d];
            if (p == d || w.lake[p])
                throw ConstructionError("lake wedge shares a dart after lake-lake edges were removed");
            Dart before = w.prev[p];
            Dart after = w.next[d];
            Vertex split = static_cast<Vertex>(w.degree.size());
            w.degree.push_back(0);
            w.vertex_origin.push_back(w.vertex_origin[v]);

            // Star edge: s at the new vertex, t at v. The corner after d at
            // the new vertex inherits the face that followed d at v; the
            // corner t opens at v inherits the face that preceded p.
            Dart s = w.new_dart(split, w.lake[after], w.origin[after]);
            Dart t = w.new_dart(v, w.lake[p], w.origin[p]);
            w.twin[s] = t;
            w.twin[t] = s;

            w.next[before] = t;
            w.prev[t] = before;
            w.next[t] = after;
            w.prev[after] = t;

            w.vertex_of[p] = split;
            w.vertex_of[d] = split;
            w.next[p] = d;
            w.prev[d] = p;
            w.next[d] = s;
            w.prev[s] = d;
            w.next[s] = p;
            w.prev[p] = s;
            w.degree[split] = 3;
            w.degree[v] += 1 - 2;
        }
    }
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

std::vector<CanonicalMap> canonicalize(const EmbeddedGraph& e, const FaceLabeling& fl) {
    if (fl.num_faces() != e.num_faces()) throw StructuralError("face labeling does not match the embedding");
    WorkMap w(e, fl);
    const int m0 = e.num_darts();

    // Vertices whose every corner is a lake.
    for (Vertex v = 0; v < e.num_vertices(); ++v) {
        auto around = e.darts_at(v);
        bool only_lakes = std::all_of(around.begin(), around.end(), [&](Dart d) { return w.lake[d]; });
        if (!only_lakes) continue;
        for (Dart d : around)
            if (w.alive[d]) w.delete_edge(d);
    }
    // Edges with a lake on both sides; the lakes merge.
    for (Dart d = 0; d < m0; ++d)
        if (w.alive[d] && w.lake[d] && w.lake[w.twin[d]]) w.delete_edge(d);

    split_multi_lake_vertices(w);

    const int total_darts = static_cast<int>(w.twin.size());
    const int total_vertices = static_cast<int>(w.degree.size());
    std::vector<int> parent(total_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    for (Dart d = 0; d < total_darts; ++d) {
        if (!w.alive[d]) continue;
        int a = find_root(parent, w.vertex_of[d]), b = find_root(parent, w.vertex_of[w.twin[d]]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    std::map<int, std::vector<Vertex>> members;  // root -> vertices with darts, increasing id
    for (Vertex v = 0; v < total_vertices; ++v)
        if (w.degree[v] > 0) members[find_root(parent, v)].push_back(v);

    std::vector<CanonicalMap> out;
    for (const auto& [root, verts] : members) {
        std::vector<int> new_vertex(total_vertices, -1);
        for (int i = 0; i < static_cast<int>(verts.size()); ++i) new_vertex[verts[i]] = i;
        std::vector<Dart> kept;
        for (Dart d = 0; d < total_darts; ++d)
            if (w.alive[d] && new_vertex[w.vertex_of[d]] >= 0) kept.push_back(d);
        std::vector<int> new_dart(total_darts, -1);
        for (int i = 0; i < static_cast<int>(kept.size()); ++i) new_dart[kept[i]] = i;

        std::vector<Dart> twin(kept.size()), next(kept.size());
        std::vector<Vertex> vertex_of(kept.size());
        for (int i = 0; i < static_cast<int>(kept.size()); ++i) {
            Dart d = kept[i];
            twin[i] = new_dart[w.twin[d]];
            next[i] = new_dart[w.next[d]];
            vertex_of[i] = new_vertex[w.vertex_of[d]];
        }
        EmbeddedGraph g(std::move(twin), std::move(next), std::move(vertex_of));

        CanonicalMap cm;
        std::vector<FaceId> nations;
        cm.face_origin.assign(g.num_faces(), -1);
        std::vector<FaceId> nation_from(g.num_faces(), -1);
        for (FaceId f = 0; f < g.num_faces(); ++f) {
            const auto& walk = g.faces()[f];
            bool is_lake = w.lake[kept[walk.front()]];
            FaceId from = w.origin[kept[walk.front()]];
            for (Dart x : walk) {
                Dart d = kept[x];
                if (static_cast<bool>(w.lake[d]) != is_lake || (!is_lake && w.origin[d] != from))
                    throw ConstructionError("face " + std::to_string(f) + " mixes input faces after canonicalization");
                from = std::min(from, w.origin[d]);
            }
            cm.face_origin[f] = from;
            if (!is_lake) {
                nations.push_back(f);
                nation_from[f] = from;
            }
        }
        if (nations.empty()) throw ConstructionError("canonical component without nations");
        cm.labels = FaceLabeling(g.num_faces(), nations);
        for (FaceId f : cm.labels.nations()) cm.nation_origin.push_back(nation_from[f]);
        for (Vertex v : verts) cm.vertex_origin.push_back(w.vertex_origin[v]);
        cm.graph = std::move(g);
        out.push_back(std::move(cm));
    }
    return out;
}

}  // namespace gridlab
