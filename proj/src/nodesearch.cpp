#include "layerbound/nodesearch.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace layerbound {

GameState initial_state(const Graph& g) {
    return GameState{DynamicBitset(g.num_vertices()), DynamicBitset(g.num_edges())};
}

namespace {

void clean_around(const Graph& g, GameState& s, VertexId v) {
    for (VertexId w : g.neighbors(v))
        if (s.guards.test(w)) s.clean_edges.set(g.edge_index(v, w));
}

// Recontamination fixed point after removing the guard on v. Seeds are the
// contaminated edges at v; contamination spreads across unguarded endpoints.
void recontaminate_from(const Graph& g, GameState& s, VertexId v) {
    std::deque<VertexId> open{v};
    while (!open.empty()) {
        VertexId u = open.front();
        open.pop_front();
        bool u_has_contaminated = false;
        for (VertexId w : g.neighbors(u))
            if (!s.clean_edges.test(g.edge_index(u, w))) u_has_contaminated = true;
        if (!u_has_contaminated) continue;
        for (VertexId w : g.neighbors(u)) {
            int ei = g.edge_index(u, w);
            if (s.clean_edges.test(ei)) {
                s.clean_edges.reset(ei);
                if (!s.guards.test(w)) open.push_back(w);
            }
        }
    }
}

}  // namespace

GameState apply_move(const Graph& g, const GameState& s, const Move& m) {
    GameState next = s;
    if (m.vertex < 0 || m.vertex >= g.num_vertices())
        throw IllegalMove("vertex out of range");
    if (m.kind == Move::Kind::Place) {
        if (next.guards.test(m.vertex))
            throw IllegalMove("Place on an already guarded vertex");
        next.guards.set(m.vertex);
        clean_around(g, next, m.vertex);
    } else {
        if (!next.guards.test(m.vertex))
            throw IllegalMove("Remove on an unguarded vertex");
        next.guards.reset(m.vertex);
        recontaminate_from(g, next, m.vertex);
    }
    return next;
}

StrategyVerification verify_strategy(const Graph& g, const SearchStrategy& s) {
    StrategyVerification res;
    GameState state = initial_state(g);
    for (int i = 0; i < static_cast<int>(s.moves.size()); ++i) {
        int clean_before = state.clean_edges.count();
        try {
            state = apply_move(g, state, s.moves[i]);
        } catch (const IllegalMove& e) {
            res.failure = std::string("IllegalMove at step ") + std::to_string(i) +
                          ": " + e.what();
            res.fail_step = i;
            return res;
        }
        if (state.clean_edges.count() < clean_before) res.monotone = false;
        res.cost = std::max(res.cost, state.guards.count());
    }
    if (!state.clean_edges.all()) {
        for (int ei = 0; ei < g.num_edges(); ++ei)
            if (!state.clean_edges.test(ei)) {
                res.dirty_edge = g.edges()[ei];
                break;
            }
        res.failure = "NotAllClean";
        return res;
    }
    res.ok = true;
    return res;
}

SearchStrategy grid_sweep_strategy(const GridFamilyInstance& inst) {
    const int k = inst.k;
    const Graph& g = inst.graph;
    auto at = [&](int x, int y) { return *g.vertex_at(Coord{x, y}); };
    SearchStrategy s;
    auto place = [&](int x, int y) {
        s.moves.push_back({Move::Kind::Place, at(x, y)});
    };
    auto remove = [&](int x, int y) {
        s.moves.push_back({Move::Kind::Remove, at(x, y)});
    };

    for (int x = 1; x <= k + 2; ++x) place(x, 1);
    for (int c = 1; c <= inst.num_cols() - 1; ++c) {
        remove(k + 1, c);
        remove(k + 2, c);
        for (int x = 1; x <= k; ++x) {  // advance the top k guards, row 1 first
            place(x, c + 1);
            remove(x, c);
        }
        place(k + 1, c + 1);
        place(k + 2, c + 1);
    }
    return s;
}

SearchStrategy wall_sweep_strategy(const WallFamilyInstance& inst) {
    const int k = inst.k;
    const Graph& g = inst.graph;
    auto at = [&](int x, int y) { return *g.vertex_at(Coord{x, y}); };
    SearchStrategy s;
    auto place = [&](int x, int y) {
        s.moves.push_back({Move::Kind::Place, at(x, y)});
    };
    auto remove = [&](int x, int y) {
        s.moves.push_back({Move::Kind::Remove, at(x, y)});
    };
    // Hair blocks attach at columns 4ky - 3.
    auto handle_hair = [&](int col) {
        if ((col + 3) % (4 * k) != 0) return;
        int y = (col + 3) / (4 * k);
        if (y < 1 || y > 3 * k + 6) return;
        place(k + 1, 4 * k * y - 2);
        place(k + 2, 4 * k * y - 1);
        remove(k + 2, 4 * k * y - 1);
        remove(k + 1, 4 * k * y - 2);
    };

    for (int x = 1; x <= k; ++x) place(x, 1);
    handle_hair(1);  // for k = 1 the first hair attaches at column 1
    for (int c = 1; c <= inst.ell - 1; ++c) {
        // Bottom row first, so each inter-row edge {(x,a),(x+1,a+1)} gets both
        // endpoints guarded while row x still sits on column a.
        place(k, c + 1);
        remove(k, c);
        handle_hair(c + 1);
        for (int x = k - 1; x >= 1; --x) {
            place(x, c + 1);
            remove(x, c);
        }
    }
    return s;
}

PathDecomposition strategy_to_decomposition(const Graph& g, const SearchStrategy& s) {
    StrategyVerification v = verify_strategy(g, s);
    if (!v.ok) throw IllegalMove("NotSuccessful: " + v.failure);
    if (!v.monotone) throw IllegalMove("NotMonotone: strategy recontaminates");

    std::vector<char> ever_placed(g.num_vertices(), 0);
    GameState state = initial_state(g);
    PathDecomposition pd;
    for (const Move& m : s.moves) {
        state = apply_move(g, state, m);
        if (m.kind == Move::Kind::Place) {
            if (ever_placed[m.vertex])
                throw IllegalMove("strategy guards vertex " +
                                  std::to_string(m.vertex) + " more than once");
            ever_placed[m.vertex] = 1;
            VertexSet bag;
            for (VertexId u = 0; u < g.num_vertices(); ++u)
                if (state.guards.test(u)) bag.push_back(u);
            pd.bags.push_back(std::move(bag));
        }
    }
    return pd;
}

SearchNumberResult exact_search_number(const Graph& g, const Budget& budget) {
    PathwidthResult pw = exact_pathwidth(g, budget);
    SearchNumberResult res;
    res.nodes_explored = pw.nodes_explored;
    if (pw.width) res.number = *pw.width + 1;
    return res;
}

int check_guarded_frontier(const Graph& g, const SearchStrategy& s) {
    if (!g.has_labels()) throw GraphError("graph has no coordinate labels");
    // Edge groups: row edges per row, column edges per column. Rows or
    // columns without own edges form no group.
    std::map<int, std::vector<int>> row_edges, col_edges;
    std::map<int, VertexSet> row_verts, col_verts;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        row_verts[g.label(v).row].push_back(v);
        col_verts[g.label(v).col].push_back(v);
    }
    for (int ei = 0; ei < g.num_edges(); ++ei) {
        const Edge& e = g.edges()[ei];
        const Coord &a = g.label(e.u), &b = g.label(e.v);
        if (a.row == b.row) row_edges[a.row].push_back(ei);
        if (a.col == b.col) col_edges[a.col].push_back(ei);
    }

    auto mixed_unguarded = [&](const std::vector<int>& group, const VertexSet& verts,
                               const GameState& st) {
        bool has_clean = false, has_dirty = false;
        for (int ei : group)
            (st.clean_edges.test(ei) ? has_clean : has_dirty) = true;
        if (!has_clean || !has_dirty) return false;
        for (VertexId v : verts)
            if (st.guards.test(v)) return false;
        return true;
    };

    GameState state = initial_state(g);
    for (int i = 0; i < static_cast<int>(s.moves.size()); ++i) {
        state = apply_move(g, state, s.moves[i]);
        for (const auto& [r, group] : row_edges)
            if (mixed_unguarded(group, row_verts[r], state)) return i;
        for (const auto& [c, group] : col_edges)
            if (mixed_unguarded(group, col_verts[c], state)) return i;
    }
    return -1;
}

}  // namespace layerbound
