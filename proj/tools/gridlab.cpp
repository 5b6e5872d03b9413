// gridlab: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 size-limit refusal.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <thread>

#include "gridlab/errors.hpp"
#include "gridlab/formats.hpp"
#include "gridlab/generators.hpp"
#include "gridlab/graph_ops.hpp"
#include "gridlab/grid_transfer.hpp"
#include "gridlab/map_graphs.hpp"
#include "gridlab/minor_models.hpp"
#include "gridlab/sweep.hpp"
#include "gridlab/tree_decomposition.hpp"

using namespace gridlab;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSize = 3;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

EmbFile load_map(const std::string& path) {
    EmbFile f = read_emb(read_text_file(path));
    if (!f.labels) f.labels = FaceLabeling::all_nations(f.graph.num_faces());
    return f;
}

int thread_cap(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("GRIDLAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return n;
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::string transfer;
    GeneratorSpec spec;
    int k = 12;
    std::string out, graph_out, sequence_out;
};

int run_gen(const GenArgs& a) {
    Json report;
    if (!a.transfer.empty()) {
        TransferInstance inst;
        if (a.transfer == "nation_grid")
            inst = nation_grid_transfer_instance(a.k, a.spec.seed);
        else if (a.transfer == "checkerboard")
            inst = checkerboard_transfer_instance(a.k, a.spec.seed);
        else
            throw std::invalid_argument("unknown transfer family '" + a.transfer + "'");
        write_text_file(a.out, write_emb(inst.map.graph, &inst.map.labels));
        SimpleGraph host = union_radial_dual(inst.map.graph, inst.map.labels);
        if (!a.sequence_out.empty())
            write_text_file(a.sequence_out, write_sequence_json({inst.sequence, "union(" + a.out + ")",
                                                                 host.num_vertices(), host.num_edges()}));
        report = {{"family", inst.family}, {"k", inst.k}, {"emb", a.out}, {"operations", inst.sequence.ops.size()}};
        if (!a.sequence_out.empty()) report["sequence"] = a.sequence_out;
        emit(report);
        return kExitOk;
    }
    auto fam = parse_family(a.family);
    if (!fam) throw std::invalid_argument("unknown family '" + a.family + "'");
    GeneratorSpec spec = a.spec;
    spec.family = *fam;
    Generated g = generate(spec);
    report["family"] = to_string(*fam);
    report["seed"] = spec.seed;
    if (g.map) {
        write_text_file(a.out, write_emb(g.map->graph, &g.map->labels));
        report["emb"] = a.out;
        report["vertices"] = g.map->graph.num_vertices();
        report["faces"] = g.map->graph.num_faces();
        report["nations"] = g.map->labels.num_nations();
        if (!a.graph_out.empty()) {
            write_text_file(a.graph_out, write_gr(g.graph));
            report["gr"] = a.graph_out;
        }
    } else {
        write_text_file(a.out, write_gr(g.graph));
        report["gr"] = a.out;
        report["vertices"] = g.graph.num_vertices();
        report["edges"] = g.graph.num_edges();
    }
    emit(report);
    return kExitOk;
}

// ---- derive ---------------------------------------------------------------

struct DeriveArgs {
    std::string input, out;
    bool map = false, dual = false, radial = false, uni = false, canonicalize = false;
};

int run_derive(const DeriveArgs& a) {
    if (a.map + a.dual + a.radial + a.uni + a.canonicalize != 1)
        throw std::invalid_argument("choose exactly one of --map, --dual, --radial, --union, --canonicalize");
    EmbFile f = load_map(a.input);
    Json report{{"input", a.input}};
    if (a.canonicalize) {
        auto parts = canonicalize(f.graph, *f.labels);
        Json files = Json::array();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            std::string path = a.out;
            if (parts.size() > 1) {
                std::string stem = ends_with(path, ".emb") ? path.substr(0, path.size() - 4) : path;
                path = stem + "." + std::to_string(i) + ".emb";
            }
            write_text_file(path, write_emb(parts[i].graph, &parts[i].labels));
            files.push_back(path);
        }
        report["components"] = parts.size();
        report["emb"] = files;
        emit(report);
        return kExitOk;
    }
    SimpleGraph g;
    if (a.map) g = map_graph(f.graph, *f.labels);
    if (a.dual) g = dual_graph(f.graph, *f.labels);
    if (a.radial) g = radial_graph(f.graph, *f.labels).graph;
    if (a.uni) g = union_radial_dual(f.graph, *f.labels);
    write_text_file(a.out, write_gr(g));
    report["gr"] = a.out;
    report["vertices"] = g.num_vertices();
    report["edges"] = g.num_edges();
    if (a.radial || a.uni) report["primal_vertices"] = f.graph.num_vertices();
    emit(report);
    return kExitOk;
}

// ---- tw -------------------------------------------------------------------

struct TwArgs {
    std::string input, out;
    bool exact = false, upper = false;
};

int run_tw(const TwArgs& a) {
    if (a.exact == a.upper) throw std::invalid_argument("choose exactly one of --exact, --upper");
    SimpleGraph g = read_gr(read_text_file(a.input));
    TreewidthResult r = a.exact ? treewidth_exact(g) : treewidth_upper(g);
    Json report{{"input", a.input}, {"method", a.exact ? "exact" : "upper"}, {"width", r.width}};
    if (!a.out.empty()) {
        write_text_file(a.out, write_td(r.decomposition, g.num_vertices()));
        report["td"] = a.out;
    }
    emit(report);
    return kExitOk;
}

// ---- lift -----------------------------------------------------------------

struct LiftArgs {
    bool radial_to_map = false;
    int power = 0;
    std::string emb, graph, td, out;
};

int run_lift(const LiftArgs& a) {
    if (a.radial_to_map == (a.power > 0)) throw std::invalid_argument("choose exactly one of --radial-to-map, --power");
    TdFile in = read_td(read_text_file(a.td));
    TreeDecomposition lifted;
    SimpleGraph target;
    Json report{{"input_td", a.td}, {"input_width", in.td.width()}};
    if (a.radial_to_map) {
        if (a.emb.empty()) throw std::invalid_argument("--radial-to-map needs --emb");
        EmbFile f = load_map(a.emb);
        lifted = lift_radial_to_map(in.td, f.graph, *f.labels);
        target = map_graph(f.graph, *f.labels);
        report["mode"] = "radial-to-map";
        report["max_degree"] = f.graph.max_degree();
        report["bound_bag_size"] = f.graph.max_degree() * in.td.max_bag_size();
    } else {
        if (a.graph.empty()) throw std::invalid_argument("--power needs --graph");
        SimpleGraph g = read_gr(read_text_file(a.graph));
        lifted = lift_power(in.td, g, a.power);
        target = power_graph(g, a.power);
        report["mode"] = "power";
        report["k"] = a.power;
        report["max_ball"] = max_ball_size(g, a.power);
        report["bound_bag_size"] = max_ball_size(g, a.power) * in.td.max_bag_size();
    }
    auto check = validate(lifted, target);
    report["width"] = lifted.width();
    report["max_bag_size"] = lifted.max_bag_size();
    report["valid"] = check.ok();
    if (!a.out.empty()) {
        write_text_file(a.out, write_td(lifted, target.num_vertices()));
        report["td"] = a.out;
    }
    emit(report);
    return check.ok() ? kExitOk : kExitVerify;
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
    std::string artifact, against;
};

int run_check(const CheckArgs& a) {
    SimpleGraph g = read_gr(read_text_file(a.against));
    std::string text = read_text_file(a.artifact);
    Json report{{"artifact", a.artifact}, {"against", a.against}};
    bool ok = false;
    if (ends_with(a.artifact, ".json")) {
        std::string type = certificate_type(text);
        report["type"] = type;
        if (type == "minor_model") {
            MinorModel m = read_model_json(text, g);
            auto check = verify_model(m);
            ok = check.ok();
            report["violation"] = to_string(check.violated);
            if (!ok) report["message"] = check.message;
            report["pattern_vertices"] = m.pattern.num_vertices();
        } else if (type == "contraction_sequence") {
            SequenceCertificate c = read_sequence_json(text);
            if (c.host_vertices != g.num_vertices() || c.host_edges != g.num_edges())
                throw std::invalid_argument("sequence was recorded for a different host");
            try {
                ReplayResult r = replay(g, c.sequence);
                ok = true;
                report["result_vertices"] = r.graph.num_vertices();
                report["result_edges"] = r.graph.num_edges();
                auto grid = recognize_grid(r.graph);
                report["grid_side"] = grid ? grid->k : 0;
            } catch (const std::invalid_argument& err) {
                report["message"] = err.what();
            }
        } else {
            throw ParseError("unknown certificate type '" + type + "'");
        }
    } else {
        TdFile td = read_td(text);
        if (td.num_vertices != g.num_vertices())
            throw std::invalid_argument("decomposition is for " + std::to_string(td.num_vertices) +
                                        " vertices, graph has " + std::to_string(g.num_vertices()));
        auto check = validate(td.td, g);
        ok = check.ok();
        report["type"] = "tree_decomposition";
        report["violation"] = to_string(check.violated);
        if (!ok) report["message"] = check.message;
        report["width"] = td.td.width();
    }
    report["ok"] = ok;
    emit(report);
    return ok ? kExitOk : kExitVerify;
}

// ---- power ----------------------------------------------------------------

struct PowerArgs {
    std::string input, model_out;
    int k = 2, r = 2;
    double c = 0, alpha = 0;
};

int run_power(const PowerArgs& a) {
    SimpleGraph g = read_gr(read_text_file(a.input));
    if (g.num_vertices() == 0) throw std::invalid_argument("power: empty graph");
    PowerCliqueResult res = power_clique_or_bound(g, a.k, a.r);
    SimpleGraph gk = power_graph(g, a.k);
    Json report{{"input", a.input}, {"k", a.k}, {"r", a.r}, {"max_degree_power", gk.max_degree()}};
    bool ok = true;
    if (auto* w = std::get_if<CliqueWitness>(&res.outcome)) {
        bool verified = verify_clique_witness(g, *w);
        ok = verified;
        const char* names[] = {"inner_ball", "inner_labels", "outer_labels"};
        report["outcome"] = "clique";
        report["case"] = names[static_cast<int>(res.clique_case)];
        report["clique"] = w->vertices;
        report["verified"] = verified;
        if (verified && !a.model_out.empty()) {
            MinorModel m = clique_to_grid(*w, a.r, gk);
            write_text_file(a.model_out, write_model_json(m, "power(" + a.input + "," + std::to_string(a.k) + ")"));
            report["model"] = a.model_out;
        }
    } else if (auto* b = std::get_if<BoundReport>(&res.outcome)) {
        bool confirmed = gk.max_degree() < b->certified_bound;
        ok = confirmed;
        report["outcome"] = "bound";
        report["center"] = b->center;
        report["inner_ball_size"] = b->inner_ball_size;
        report["largest_inner_class"] = b->largest_inner_class;
        report["middle_ball_size"] = b->middle_ball_size;
        report["largest_outer_class"] = b->largest_outer_class;
        report["outer_ball_size"] = b->outer_ball_size;
        report["certified_bound"] = b->certified_bound;
        report["confirmed"] = confirmed;
    } else {
        const auto& d = std::get<DegenerateReport>(res.outcome);
        report["outcome"] = "degenerate";
        report["center"] = d.center;
        report["star_class"] = d.star_class;
        report["reason"] = d.reason;
    }
    if (a.c > 0 && a.alpha > 0) {
        double exponent = a.alpha + (a.k % 2 == 0 ? 4 : 6);
        double threshold = a.c * std::pow(static_cast<double>(a.r), exponent);
        bool exact = gk.num_vertices() <= kExactTreewidthLimit;
        int tw = exact ? treewidth_exact(gk).width : treewidth_upper(gk).width;
        report["hypothesis"] = {{"threshold", threshold},
                                {"tw_power", tw},
                                {"tw_exact", exact},
                                {"meets_threshold", exact && tw >= threshold}};
    }
    emit(report);
    return ok ? kExitOk : kExitVerify;
}

// ---- grid-minor -----------------------------------------------------------

struct GridArgs {
    std::string input, model_out;
};

int run_grid_minor(const GridArgs& a) {
    SimpleGraph g = read_gr(read_text_file(a.input));
    GridMinor gm = largest_grid_minor(g);
    bool ok = gm.r == 0 || verify_model(gm.model).ok();
    Json report{{"input", a.input}, {"r", gm.r}, {"clique_path", is_complete(g)}, {"verified", ok}};
    if (!a.model_out.empty() && gm.r > 0) {
        write_text_file(a.model_out, write_model_json(gm.model, a.input));
        report["model"] = a.model_out;
    }
    emit(report);
    return ok ? kExitOk : kExitVerify;
}

// ---- transfer -------------------------------------------------------------

struct TransferArgs {
    std::string emb, sequence, model_out;
};

int run_transfer(const TransferArgs& a) {
    EmbFile f = load_map(a.emb);
    SequenceCertificate c = read_sequence_json(read_text_file(a.sequence));
    SimpleGraph host = union_radial_dual(f.graph, *f.labels);
    if (c.host_vertices != host.num_vertices() || c.host_edges != host.num_edges())
        throw std::invalid_argument("sequence was recorded for a different host than R u D of the map");
    DualGridTransfer t = radial_grid_to_dual_grid(c.sequence, f.graph, *f.labels);
    bool ok = verify_model(t.model).ok();
    Json report{{"emb", a.emb}, {"k", t.k}, {"m", t.m}, {"branch_sets", t.model.branch_sets.size()},
                {"verified", ok}};
    if (!a.model_out.empty()) {
        write_text_file(a.model_out, write_model_json(t.model, "dual(" + a.emb + ")"));
        report["model"] = a.model_out;
    }
    emit(report);
    return ok ? kExitOk : kExitVerify;
}

// ---- sweep ----------------------------------------------------------------

struct SweepArgs {
    SweepSpec spec;
    std::string out;
};

int run_sweep_cmd(SweepArgs a) {
    a.spec.threads = thread_cap(a.spec.threads);
    auto rows = run_sweep(a.spec);
    std::string csv = sweep_csv(rows);
    if (a.out.empty())
        std::cout << csv;
    else
        write_text_file(a.out, csv);
    bool all = std::all_of(rows.begin(), rows.end(), [](const ExperimentRecord& r) { return r.passed(); });
    if (!a.out.empty()) {
        int failed = static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                                    [](const ExperimentRecord& r) { return !r.passed(); }));
        emit({{"csv", a.out}, {"rows", rows.size()}, {"failed", failed}});
    }
    return all ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gridlab: map graphs, graph powers, tree decompositions and grid-minor certificates"};
    app.require_subcommand(1);
    std::function<int()> action;

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance (.emb for maps, .gr for graphs)");
    gen_cmd->add_option("--family", gen.family,
                        "wheel_map | grid | partially_triangulated_grid | random_map | random_planar_triangulation");
    gen_cmd->add_option("--transfer", gen.transfer, "nation_grid | checkerboard: map plus grid-reducing sequence");
    gen_cmd->add_option("--r", gen.spec.r, "wheel parameter (r^2 spokes)");
    gen_cmd->add_option("--rows", gen.spec.rows, "grid rows");
    gen_cmd->add_option("--cols", gen.spec.cols, "grid columns");
    gen_cmd->add_option("--nations", gen.spec.nations, "nations of a random map");
    gen_cmd->add_option("--n", gen.spec.n, "vertices of a random triangulation");
    gen_cmd->add_option("--k", gen.k, "grid side for --transfer instances");
    gen_cmd->add_option("--seed", gen.spec.seed, "random seed");
    gen_cmd->add_option("--out", gen.out, "output file")->required();
    gen_cmd->add_option("--graph-out", gen.graph_out, "also write the underlying graph (.gr) of a map");
    gen_cmd->add_option("--sequence-out", gen.sequence_out, "sequence certificate for --transfer (.json)");
    gen_cmd->callback([&] { action = [&] { return run_gen(gen); }; });

    DeriveArgs derive;
    auto* derive_cmd = app.add_subcommand("derive", "Derive a graph or canonical map from an .emb map");
    derive_cmd->add_option("input", derive.input, "input .emb")->required();
    derive_cmd->add_flag("--map", derive.map, "map graph (nations sharing a vertex)");
    derive_cmd->add_flag("--dual", derive.dual, "dual graph (nations sharing an edge)");
    derive_cmd->add_flag("--radial", derive.radial, "radial graph (vertex-nation incidence)");
    derive_cmd->add_flag("--union", derive.uni, "radial graph plus dual edges");
    derive_cmd->add_flag("--canonicalize", derive.canonicalize, "canonical map(s) as .emb");
    derive_cmd->add_option("--out", derive.out, "output file")->required();
    derive_cmd->callback([&] { action = [&] { return run_derive(derive); }; });

    TwArgs tw;
    auto* tw_cmd = app.add_subcommand("tw", "Treewidth of a .gr graph");
    tw_cmd->add_option("input", tw.input, "input .gr")->required();
    tw_cmd->add_flag("--exact", tw.exact, "exact (at most 20 vertices)");
    tw_cmd->add_flag("--upper", tw.upper, "min-fill / min-degree upper bound");
    tw_cmd->add_option("--out", tw.out, "write the decomposition (.td)");
    tw_cmd->callback([&] { action = [&] { return run_tw(tw); }; });

    LiftArgs lift;
    auto* lift_cmd = app.add_subcommand("lift", "Lift a decomposition to the map graph or a graph power");
    lift_cmd->add_flag("--radial-to-map", lift.radial_to_map, "radial-graph decomposition to map-graph decomposition");
    lift_cmd->add_option("--power", lift.power, "lift a decomposition of G to G^k");
    lift_cmd->add_option("--emb", lift.emb, "map (.emb) for --radial-to-map");
    lift_cmd->add_option("--graph", lift.graph, "graph (.gr) for --power");
    lift_cmd->add_option("--td", lift.td, "input decomposition (.td)")->required();
    lift_cmd->add_option("--out", lift.out, "output decomposition (.td)");
    lift_cmd->callback([&] { action = [&] { return run_lift(lift); }; });

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Validate a .td or a JSON certificate against a .gr graph");
    check_cmd->alias("verify");
    check_cmd->add_option("artifact", check.artifact, ".td or .json")->required();
    check_cmd->add_option("--against", check.against, "graph (.gr)")->required();
    check_cmd->callback([&] { action = [&] { return run_check(check); }; });

    PowerArgs power;
    auto* power_cmd = app.add_subcommand("power", "Clique-or-bound case analysis on G^k");
    power_cmd->add_option("input", power.input, "graph (.gr)")->required();
    power_cmd->add_option("--k", power.k, "power")->check(CLI::PositiveNumber);
    power_cmd->add_option("--r", power.r, "grid side")->check(CLI::PositiveNumber);
    power_cmd->add_option("--c", power.c, "constant c in the hypothesis tw >= c*r^alpha => r x r grid minor");
    power_cmd->add_option("--alpha", power.alpha, "exponent alpha in the same hypothesis");
    power_cmd->add_option("--model-out", power.model_out, "write the r x r grid model in G^k (.json)");
    power_cmd->callback([&] { action = [&] { return run_power(power); }; });

    GridArgs grid;
    auto* grid_cmd = app.add_subcommand("grid-minor", "Largest square grid minor");
    grid_cmd->add_option("input", grid.input, "graph (.gr)")->required();
    grid_cmd->add_option("--model-out", grid.model_out, "write the model (.json)");
    grid_cmd->callback([&] { action = [&] { return run_grid_minor(grid); }; });

    TransferArgs transfer;
    auto* transfer_cmd = app.add_subcommand("transfer", "Grid minor of R u D to a grid minor of the dual");
    transfer_cmd->add_option("--emb", transfer.emb, "canonical map (.emb)")->required();
    transfer_cmd->add_option("--sequence", transfer.sequence, "sequence certificate (.json)")->required();
    transfer_cmd->add_option("--model-out", transfer.model_out, "write the dual grid model (.json)");
    transfer_cmd->callback([&] { action = [&] { return run_transfer(transfer); }; });

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Experiment sweep, one CSV row per instance");
    sweep_cmd->add_option("--family", sweep.spec.family, "wheel | map | power | triangulation")->required();
    sweep_cmd->add_option("--from", sweep.spec.param_lo, "first parameter value");
    sweep_cmd->add_option("--to", sweep.spec.param_hi, "last parameter value");
    sweep_cmd->add_option("--seed-from", sweep.spec.seed_lo, "first seed");
    sweep_cmd->add_option("--seed-to", sweep.spec.seed_hi, "last seed");
    sweep_cmd->add_option("--k", sweep.spec.k, "power for the power family")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--threads", sweep.spec.threads, "worker threads (capped by GRIDLAB_THREADS)");
    sweep_cmd->add_option("--out", sweep.out, "CSV path (default stdout)");
    sweep_cmd->callback([&] { action = [&] { return run_sweep_cmd(sweep); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return action();
    } catch (const SizeLimitError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitSize;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConstructionError& e) {
        std::cerr << "construction failed: " << e.what() << '\n';
        return kExitVerify;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
