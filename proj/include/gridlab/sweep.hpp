#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gridlab {

inline constexpr int kSweepSchemaVersion = 1;

/// One instance of a sweep. Empty optionals are written as NA.
struct ExperimentRecord {
    std::string instance_id;
    std::string family;
    int param = 0;
    std::uint64_t seed = 0;
    int k = 0;
    int num_vertices = 0;

    std::optional<int> tw_map, tw_radial, tw_dual, tw_union, tw_graph, tw_power, tw_planar_dual;
    std::optional<int> delta_graph, delta_power;
    std::optional<int> grid_map;

    std::optional<bool> ok_map_lift;      // tw(M)+1 <= Delta(G)*(tw(R)+1), lifted td validates
    std::optional<bool> ok_radial;        // tw(D) <= tw(R u D)
    std::optional<bool> ok_power_lift;    // tw(G^k)+1 <= Delta(G^k)*(tw(G)+1) (edgeless G: |N_k| for Delta), lifted td validates
    std::optional<bool> ok_wheel;         // tw(M) = r^2-1 and largest grid minor r x r
    std::optional<bool> ok_primal_dual;   // |tw(G) - tw(G*)| <= 1

    double runtime_ms = 0;
    std::string error;

    /// False when any verdict is false or the row recorded an error.
    bool passed() const;
};

/// Families: "wheel" (param r), "map" (param = nations), "power" (param = n,
/// G(n, 0.3), power k), "triangulation" (param = n).
struct SweepSpec {
    std::string family;
    int param_lo = 1;
    int param_hi = 0;
    std::uint64_t seed_lo = 0;
    std::uint64_t seed_hi = 0;
    int k = 2;
    int threads = 1;
};

bool is_sweep_family(const std::string& family);

/// Runs every (param, seed) instance; failures are recorded per row. Rows come
/// back sorted by (family, param, seed) whatever the thread count.
std::vector<ExperimentRecord> run_sweep(const SweepSpec& spec);

ExperimentRecord run_instance(const std::string& family, int param, std::uint64_t seed, int k);

std::string sweep_csv_header();
std::string sweep_csv(const std::vector<ExperimentRecord>& rows);

}  // namespace gridlab
