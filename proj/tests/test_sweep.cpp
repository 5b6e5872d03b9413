#include <doctest.h>

#include <sstream>

#include "gridlab/sweep.hpp"

using namespace gridlab;

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

}  // namespace

TEST_CASE("wheel sweep reads 0, 3, 8") {
    SweepSpec spec{"wheel", 1, 3, 0, 0, 2, 1};
    auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 3);
    CHECK(*rows[0].tw_map == 0);
    CHECK(*rows[1].tw_map == 3);
    CHECK(*rows[2].tw_map == 8);
    for (const auto& r : rows) {
        CHECK(r.passed());
        CHECK(r.ok_wheel.value_or(false));
        CHECK(*r.grid_map == r.param);
    }
}

TEST_CASE("empty range writes only the header") {
    SweepSpec spec{"map", 5, 4, 0, 0, 2, 2};
    auto rows = run_sweep(spec);
    CHECK(rows.empty());
    CHECK(sweep_csv(rows) == sweep_csv_header());
}

TEST_CASE("csv header and row shape") {
    auto header = split(sweep_csv_header().substr(0, sweep_csv_header().size() - 1));
    CHECK(header.front() == "schema_version");
    CHECK(header.back() == "error");
    auto rows = run_sweep(SweepSpec{"power", 6, 7, 0, 1, 2, 1});
    std::string csv = sweep_csv(rows);
    std::stringstream ss(csv);
    std::string line;
    std::getline(ss, line);
    int count = 0;
    while (std::getline(ss, line)) {
        ++count;
        auto cells = split(line);
        CHECK(cells.size() == header.size());
        CHECK(cells[0] == std::to_string(kSweepSchemaVersion));
    }
    CHECK(count == 4);
}

TEST_CASE("rows are ordered and thread count does not change results") {
    SweepSpec one{"map", 3, 8, 0, 2, 2, 1};
    SweepSpec many = one;
    many.threads = 4;
    auto a = run_sweep(one), b = run_sweep(many);
    REQUIRE(a.size() == 18);
    REQUIRE(b.size() == a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].instance_id == b[i].instance_id);
        CHECK(a[i].tw_map == b[i].tw_map);
        CHECK(a[i].tw_radial == b[i].tw_radial);
        CHECK(a[i].ok_map_lift == b[i].ok_map_lift);
        if (i > 0) CHECK((a[i - 1].param < a[i].param || (a[i - 1].param == a[i].param && a[i - 1].seed < a[i].seed)));
        CHECK(a[i].passed());
    }
}

TEST_CASE("triangulation rows check primal-dual widths") {
    auto rows = run_sweep(SweepSpec{"triangulation", 6, 9, 0, 1, 2, 2});
    for (const auto& r : rows) {
        CHECK(r.error.empty());
        CHECK(r.ok_primal_dual.value_or(false));
    }
}

TEST_CASE("failures are recorded per row") {
    // Above the exact-treewidth limit: the row records the refusal.
    ExperimentRecord r = run_instance("power", 22, 0, 2);
    CHECK_FALSE(r.error.empty());
    CHECK_FALSE(r.passed());
    CHECK_THROWS_AS(run_sweep(SweepSpec{"nope", 1, 2, 0, 0, 2, 1}), std::invalid_argument);
}
