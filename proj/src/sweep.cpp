#include "gridlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <type_traits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gridlab/generators.hpp"
#include "gridlab/graph_ops.hpp"
#include "gridlab/map_graphs.hpp"
#include "gridlab/minor_models.hpp"
#include "gridlab/tree_decomposition.hpp"

namespace gridlab {

bool ExperimentRecord::passed() const {
    if (!error.empty()) return false;
    for (const auto& v : {ok_map_lift, ok_radial, ok_power_lift, ok_wheel, ok_primal_dual})
        if (v && !*v) return false;
    return true;
}

bool is_sweep_family(const std::string& family) {
    return family == "wheel" || family == "map" || family == "power" || family == "triangulation";
}

namespace {

void map_columns(ExperimentRecord& rec, const EmbeddedGraph& e, const FaceLabeling& fl) {
    SimpleGraph m = map_graph(e, fl);
    RadialGraph r = radial_graph(e, fl);
    auto tw_r = treewidth_exact(r.graph);
    rec.num_vertices = e.num_vertices();
    rec.tw_map = treewidth_exact(m).width;
    rec.tw_radial = tw_r.width;
    rec.tw_dual = treewidth_exact(dual_graph(e, fl)).width;
    rec.tw_union = treewidth_exact(union_radial_dual(e, fl)).width;
    rec.delta_graph = e.max_degree();
    auto lifted = lift_radial_to_map(tw_r.decomposition, e, fl);
    rec.ok_map_lift = validate(lifted, m).ok() && *rec.tw_map + 1 <= *rec.delta_graph * (*rec.tw_radial + 1) &&
                      lifted.max_bag_size() <= *rec.delta_graph * tw_r.decomposition.max_bag_size();
    rec.ok_radial = *rec.tw_dual <= *rec.tw_union;
}

}  // namespace

ExperimentRecord run_instance(const std::string& family, int param, std::uint64_t seed, int k) {
    ExperimentRecord rec;
    rec.family = family;
    rec.param = param;
    rec.seed = seed;
    rec.instance_id = family + "-p" + std::to_string(param) + "-s" + std::to_string(seed);
    auto start = std::chrono::steady_clock::now();
    try {
        if (family == "wheel") {
            EmbeddedMap w = wheel_map(param);
            map_columns(rec, w.graph, w.labels);
            SimpleGraph m = map_graph(w.graph, w.labels);
            rec.grid_map = largest_grid_minor(m).r;
            rec.ok_wheel = *rec.tw_map == param * param - 1 && *rec.grid_map == param;
        } else if (family == "map") {
            EmbeddedMap mp = random_canonical_map(param, seed, kExactTreewidthLimit);
            map_columns(rec, mp.graph, mp.labels);
        } else if (family == "power") {
            rec.k = k;
            SimpleGraph g = random_graph(param, 0.3, seed);
            rec.num_vertices = param;
            auto tw_g = treewidth_exact(g);
            SimpleGraph gk = power_graph(g, k);
            rec.tw_graph = tw_g.width;
            rec.tw_power = treewidth_exact(gk).width;
            rec.delta_graph = g.max_degree();
            rec.delta_power = gk.max_degree();
            auto lifted = lift_power(tw_g.decomposition, g, k);
            // Edgeless G: Delta(G^k) = 0, so the ball size |N_k| = 1 is the factor.
            const int factor = *rec.delta_power > 0 ? *rec.delta_power : max_ball_size(g, k);
            rec.ok_power_lift = validate(lifted, gk).ok() &&
                                *rec.tw_power + 1 <= factor * (*rec.tw_graph + 1) &&
                                lifted.max_bag_size() <= max_ball_size(g, k) * tw_g.decomposition.max_bag_size();
        } else if (family == "triangulation") {
            EmbeddedGraph e = random_planar_triangulation(param, seed);
            auto rep = primal_dual_width_report(e);
            rec.num_vertices = param;
            rec.tw_graph = rep.tw_primal;
            rec.tw_planar_dual = rep.tw_dual;
            rec.delta_graph = e.max_degree();
            rec.ok_primal_dual = rep.genus == 0 && rep.within_one();
        } else {
            throw std::invalid_argument("unknown sweep family '" + family + "'");
        }
    } catch (const std::exception& err) {
        rec.error = err.what();
    }
    rec.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

std::vector<ExperimentRecord> run_sweep(const SweepSpec& spec) {
    if (!is_sweep_family(spec.family)) throw std::invalid_argument("unknown sweep family '" + spec.family + "'");
    struct Task {
        int param;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (int p = spec.param_lo; p <= spec.param_hi; ++p)
        for (std::uint64_t s = spec.seed_lo; s <= spec.seed_hi; ++s) {
            tasks.push_back({p, s});
            if (s == spec.seed_hi) break;
        }
    std::vector<ExperimentRecord> rows(tasks.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t i; (i = cursor.fetch_add(1)) < tasks.size();)
            rows[i] = run_instance(spec.family, tasks[i].param, tasks[i].seed, spec.k);
    };
    const int threads = std::max(1, std::min<int>(spec.threads, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return rows;
}

namespace {

template <class T>
std::string cell(const std::optional<T>& v) {
    if (!v) return "NA";
    if constexpr (std::is_same_v<T, bool>)
        return *v ? "true" : "false";
    else
        return std::to_string(*v);
}

std::string quoted(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c == '\n' ? ' ' : c;
    }
    return out + "\"";
}

}  // namespace

std::string sweep_csv_header() {
    return "schema_version,instance_id,family,param,seed,k,n_vertices,tw_M,tw_R,tw_D,tw_RD,tw_G,tw_Gk,tw_Gdual,"
           "delta_G,delta_Gk,grid_M,ok_map_lift,ok_radial_subgraph,ok_power_lift,ok_wheel,ok_primal_dual,"
           "runtime_ms,error\n";
}

std::string sweep_csv(const std::vector<ExperimentRecord>& rows) {
    std::ostringstream os;
    os << sweep_csv_header();
    for (const auto& r : rows) {
        os << kSweepSchemaVersion << ',' << r.instance_id << ',' << r.family << ',' << r.param << ',' << r.seed
           << ',' << r.k << ',' << r.num_vertices << ',' << cell(r.tw_map) << ',' << cell(r.tw_radial) << ','
           << cell(r.tw_dual) << ',' << cell(r.tw_union) << ',' << cell(r.tw_graph) << ',' << cell(r.tw_power)
           << ',' << cell(r.tw_planar_dual) << ',' << cell(r.delta_graph) << ',' << cell(r.delta_power) << ','
           << cell(r.grid_map) << ',' << cell(r.ok_map_lift) << ',' << cell(r.ok_radial) << ','
           << cell(r.ok_power_lift) << ',' << cell(r.ok_wheel) << ',' << cell(r.ok_primal_dual) << ',';
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", r.runtime_ms);
        os << buf << ',' << quoted(r.error) << '\n';
    }
    return os.str();
}

}  // namespace gridlab
