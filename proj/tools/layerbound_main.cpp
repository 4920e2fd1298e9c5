// Command-line front end for the layerbound library: family generation,
// drawing and k-planarity checks, pathwidth, node-search simulation, minor
// verification and the combined certification pipeline.
//
// Exit codes: 0 success/pass, 1 verified failure, 2 usage error, 3 unknown
// (budget exhausted).

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "layerbound/certify.hpp"
#include "layerbound/drawing.hpp"
#include "layerbound/families.hpp"
#include "layerbound/io.hpp"
#include "layerbound/minors.hpp"
#include "layerbound/nodesearch.hpp"
#include "layerbound/pathwidth.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

using namespace layerbound;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        io::write_file(out_path, content);
}

Graph make_family_graph(const std::string& family, int k) {
    if (family == "grid") return gen_grid(k).graph;
    if (family == "wall") return gen_wall(k).graph;
    throw CLI::ValidationError("--family must be grid or wall");
}

int run(int argc, char** argv) {
    CLI::App app{"Constructions, drawings and width certificates for 2-layer "
                 "k-planar lower-bound graphs"};
    app.require_subcommand(1);

    std::string family = "grid", out_path, svg_path;
    std::string graph_path, drawing_path, pd_path, strategy_path;
    std::string pattern_path, host_path, model_path;
    int k = 1, decide_w = -1;
    bool annotate = false, assert_observation = false;
    Budget budget;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget-ms", budget.max_millis, "wall-time budget");
        cmd->add_option("--budget-nodes", budget.max_nodes,
                        "explored-node budget (the reproducible limit)");
    };

    auto* generate = app.add_subcommand("generate", "emit a family graph as JSON");
    generate->add_option("--family", family, "grid|wall")->required();
    generate->add_option("--k", k, "family parameter, k >= 1")->required();
    generate->add_option("--out", out_path, "output file (default stdout)");

    auto* draw = app.add_subcommand(
        "draw", "canonical drawing of the wall graph, as JSON and/or SVG");
    draw->add_option("--family", family, "must be wall");
    draw->add_option("--k", k, "family parameter, k >= 1")->required();
    draw->add_option("--out", out_path, "drawing JSON output");
    draw->add_option("--svg", svg_path, "SVG output");
    draw->add_flag("--annotate", annotate, "write per-edge crossing counts");

    auto* checkk = app.add_subcommand("check-kplanar",
                                      "exit 0 iff the drawing is k-planar");
    checkk->add_option("--graph", graph_path)->required();
    checkk->add_option("--drawing", drawing_path)->required();
    checkk->add_option("--k", k)->required();

    auto* pathw = app.add_subcommand("pathwidth",
                                     "exact pathwidth, or decide pw <= W");
    pathw->add_option("--graph", graph_path)->required();
    pathw->add_option("--decide", decide_w, "decide pw <= W instead of solving");
    add_budget(pathw);

    auto* verify_pd = app.add_subcommand("verify-pd", "verify a path decomposition");
    verify_pd->add_option("--graph", graph_path)->required();
    verify_pd->add_option("--pd", pd_path)->required();

    auto* simulate = app.add_subcommand("ns-simulate",
                                        "simulate and verify a search strategy");
    simulate->add_option("--graph", graph_path)->required();
    simulate->add_option("--strategy", strategy_path)->required();
    simulate->add_flag("--assert-observation", assert_observation,
                       "also check the guarded-frontier invariant per step");

    auto* sweep = app.add_subcommand("ns-sweep",
                                     "emit the sweep strategy of a family graph");
    sweep->add_option("--family", family, "grid|wall")->required();
    sweep->add_option("--k", k, "family parameter, k >= 1")->required();
    sweep->add_option("--out", out_path, "strategy JSON output (default stdout)");

    auto* vminor = app.add_subcommand("verify-minor", "verify a minor model");
    vminor->add_option("--pattern", pattern_path)->required();
    vminor->add_option("--host", host_path)->required();
    vminor->add_option("--model", model_path)->required();

    auto* cert = app.add_subcommand("certify",
                                    "run the full certification pipeline for k");
    cert->add_option("--k", k, "k >= 0")->required();
    add_budget(cert);

    auto* oracle = app.add_subcommand("oracle-min-crossings",
                                      "brute-force minimum local crossings");
    oracle->add_option("--graph", graph_path)->required();
    oracle->add_option("--out", out_path, "witness drawing JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (generate->parsed()) {
        emit(out_path, io::graph_to_json(make_family_graph(family, k)));
        return kExitPass;
    }

    if (draw->parsed()) {
        if (family != "wall")
            throw CLI::ValidationError("draw supports --family wall only");
        WallFamilyInstance wall = gen_wall(k);
        TwoLayerDrawing d = canonical_wall_drawing(wall);
        if (!svg_path.empty())
            io::write_file(svg_path, render_svg(wall.graph, d, {40, annotate}));
        if (svg_path.empty() || !out_path.empty())
            emit(out_path, io::drawing_to_json(d));
        return kExitPass;
    }

    if (checkk->parsed()) {
        Graph g = io::graph_from_json(io::read_file(graph_path));
        TwoLayerDrawing d = io::drawing_from_json(io::read_file(drawing_path));
        CrossingProfile prof = crossing_profile(g, d);
        std::cout << "max crossing count: " << prof.max_count << "\n";
        return prof.max_count <= k ? kExitPass : kExitFail;
    }

    if (pathw->parsed()) {
        Graph g = io::graph_from_json(io::read_file(graph_path));
        if (decide_w >= 0) {
            DecideResult d = decide_pathwidth_le(g, decide_w, budget);
            if (d.value == Tri::Unknown) {
                std::cout << "UNKNOWN\n";
                return kExitUnknown;
            }
            std::cout << (d.value == Tri::True ? "true" : "false") << "\n";
            return kExitPass;
        }
        PathwidthResult pw = exact_pathwidth(g, budget);
        if (pw.unknown()) {
            std::cout << "UNKNOWN\n";
            return kExitUnknown;
        }
        std::cout << *pw.width << "\n";
        return kExitPass;
    }

    if (verify_pd->parsed()) {
        Graph g = io::graph_from_json(io::read_file(graph_path));
        PathDecomposition pd = io::decomposition_from_json(io::read_file(pd_path));
        auto res = verify_decomposition(g, pd);
        if (!res.ok()) {
            std::cout << "INVALID: " << res.violation->message << "\n";
            return kExitFail;
        }
        std::cout << "width " << *res.width << "\n";
        return kExitPass;
    }

    if (simulate->parsed()) {
        Graph g = io::graph_from_json(io::read_file(graph_path));
        SearchStrategy strat = io::strategy_from_json(io::read_file(strategy_path));
        StrategyVerification v = verify_strategy(g, strat);
        if (!v.ok) {
            std::cout << "FAILED: " << v.failure << "\n";
            return kExitFail;
        }
        std::cout << "cost " << v.cost << ", monotone "
                  << (v.monotone ? "yes" : "no") << "\n";
        if (assert_observation) {
            int step = check_guarded_frontier(g, strat);
            if (step >= 0) {
                std::cout << "observation violated after move " << step << "\n";
                return kExitFail;
            }
            std::cout << "observation holds at every step\n";
        }
        return kExitPass;
    }

    if (sweep->parsed()) {
        SearchStrategy strat;
        if (family == "grid")
            strat = grid_sweep_strategy(gen_grid(k));
        else if (family == "wall")
            strat = wall_sweep_strategy(gen_wall(k));
        else
            throw CLI::ValidationError("--family must be grid or wall");
        emit(out_path, io::strategy_to_json(strat));
        return kExitPass;
    }

    if (vminor->parsed()) {
        Graph pattern = io::graph_from_json(io::read_file(pattern_path));
        Graph host = io::graph_from_json(io::read_file(host_path));
        MinorModel model = io::minor_model_from_json(io::read_file(model_path));
        auto res = verify_minor(pattern, host, model);
        if (!res.ok()) {
            std::cout << "INVALID: " << res.violation->message << "\n";
            return kExitFail;
        }
        std::cout << "certificate with " << res.certificate->realizing_edges.size()
                  << " realizing edges\n";
        return kExitPass;
    }

    if (cert->parsed()) {
        CertificationReport report = certify(k, budget);
        std::cout << format_report(report);
        if (report.overall) return kExitPass;
        return report.any_unknown() ? kExitUnknown : kExitFail;
    }

    if (oracle->parsed()) {
        Graph g = io::graph_from_json(io::read_file(graph_path));
        BruteforceResult res = min_local_crossings_bruteforce(g);
        std::cout << "minimum local crossing number: " << res.k_star << "\n";
        if (!out_path.empty())
            io::write_file(out_path, io::drawing_to_json(res.witness));
        return kExitPass;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
