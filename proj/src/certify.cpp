#include "layerbound/certify.hpp"

#include <sstream>

#include "layerbound/drawing.hpp"
#include "layerbound/families.hpp"
#include "layerbound/minors.hpp"
#include "layerbound/nodesearch.hpp"

namespace layerbound {

namespace {

CertificationCheck check_k0_drawing() {
    Graph g = gen_k0();
    TwoLayerDrawing d{{0}, {1}};
    int max = crossing_profile(g, d).max_count;
    return {"drawing-0-planar", max == 0 ? CheckStatus::Pass : CheckStatus::Fail,
            "max crossing count " + std::to_string(max)};
}

CertificationCheck check_k0_pathwidth(const Budget& budget) {
    PathwidthResult pw = exact_pathwidth(gen_k0(), budget);
    if (!pw.width) return {"pathwidth-1", CheckStatus::Unknown, "budget exhausted"};
    return {"pathwidth-1", *pw.width == 1 ? CheckStatus::Pass : CheckStatus::Fail,
            "pathwidth " + std::to_string(*pw.width)};
}

CertificationCheck check_drawing(int k, const WallFamilyInstance& wall) {
    CrossingProfile prof = crossing_profile(wall.graph, canonical_wall_drawing(wall));
    bool ok = prof.max_count == k;
    int non_row_bad = 0;
    for (int ei = 0; ei < wall.graph.num_edges(); ++ei) {
        const Edge& e = wall.graph.edges()[ei];
        if (classify_edge(wall.graph, e) != EdgeClass::NonRowEdge) continue;
        // The step edge on columns 1-2 has no columns to its left and crosses
        // only 1 row edge; every other non-row edge crosses exactly k.
        const bool leftmost_step = wall.graph.label(e.u) == Coord{1, 1};
        if (prof.per_edge[ei] != (leftmost_step ? 1 : k)) ++non_row_bad;
    }
    ok = ok && non_row_bad == 0;
    return {"canonical-drawing-k-planar",
            ok ? CheckStatus::Pass : CheckStatus::Fail,
            "max crossing count " + std::to_string(prof.max_count) + ", " +
                std::to_string(non_row_bad) + " non-row edges off target"};
}

CertificationCheck check_minor(const GridFamilyInstance& grid,
                               const WallFamilyInstance& wall) {
    MinorModel model{branch_sets(wall)};
    auto result = verify_minor(grid.graph, wall.graph, model);
    if (!result.ok())
        return {"grid-minor-of-wall", CheckStatus::Fail, result.violation->message};
    Graph contracted = contract(wall.graph, model.branch_sets, &grid.graph.labels());
    bool iso = labeled_isomorphic(contracted, grid.graph);
    return {"grid-minor-of-wall", iso ? CheckStatus::Pass : CheckStatus::Fail,
            iso ? "certificate complete, contraction label-isomorphic"
                : "contraction is not label-isomorphic to the grid graph"};
}

CertificationCheck check_upper_bound(int k, const WallFamilyInstance& wall) {
    SearchStrategy strat = wall_sweep_strategy(wall);
    StrategyVerification v = verify_strategy(wall.graph, strat);
    if (!v.ok || !v.monotone || v.cost != k + 2)
        return {"wall-sweep-upper-bound", CheckStatus::Fail,
                "cost " + std::to_string(v.cost) + ", monotone " +
                    (v.monotone ? "yes" : "no") + (v.ok ? "" : ", " + v.failure)};
    PathDecomposition pd = strategy_to_decomposition(wall.graph, strat);
    auto vd = verify_decomposition(wall.graph, pd);
    bool ok = vd.ok() && *vd.width == k + 1;
    return {"wall-sweep-upper-bound", ok ? CheckStatus::Pass : CheckStatus::Fail,
            vd.ok() ? "decomposition width " + std::to_string(*vd.width)
                    : vd.violation->message};
}

CertificationCheck check_lower_bound(int k, const GridFamilyInstance& grid,
                                     const Budget& budget) {
    DecideResult d = decide_pathwidth_le(grid.graph, k, budget);
    switch (d.value) {
        case Tri::False:
            return {"grid-pathwidth-lower-bound", CheckStatus::Pass,
                    "no layout of separation <= " + std::to_string(k)};
        case Tri::True:
            return {"grid-pathwidth-lower-bound", CheckStatus::Fail,
                    "found a layout of separation <= " + std::to_string(k)};
        default:
            return {"grid-pathwidth-lower-bound", CheckStatus::Unknown,
                    "budget exhausted after " + std::to_string(d.nodes_explored) +
                        " nodes"};
    }
}

}  // namespace

CertificationReport certify(int k, const Budget& budget) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    CertificationReport report;
    report.k = k;
    if (k == 0) {
        report.checks.push_back(check_k0_drawing());
        report.checks.push_back(check_k0_pathwidth(budget));
    } else {
        GridFamilyInstance grid = gen_grid(k);
        WallFamilyInstance wall = gen_wall(k);
        report.checks.push_back(check_drawing(k, wall));
        report.checks.push_back(check_minor(grid, wall));
        report.checks.push_back(check_upper_bound(k, wall));
        report.checks.push_back(check_lower_bound(k, grid, budget));
    }
    report.overall = true;
    for (const auto& c : report.checks)
        if (c.status != CheckStatus::Pass) report.overall = false;
    return report;
}

std::string format_report(const CertificationReport& report) {
    std::ostringstream os;
    os << "certify k=" << report.k << "\n";
    for (const auto& c : report.checks) {
        const char* status = c.status == CheckStatus::Pass ? "PASS"
                             : c.status == CheckStatus::Fail ? "FAIL"
                                                             : "UNKNOWN";
        os << "  [" << status << "] " << c.name << ": " << c.detail << "\n";
    }
    os << "overall: " << (report.overall ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace layerbound
