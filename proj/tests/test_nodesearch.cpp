#include <doctest.h>

#include <random>

#include "layerbound/families.hpp"
#include "layerbound/nodesearch.hpp"
#include "layerbound/pathwidth.hpp"
#include "oracles.hpp"

using namespace layerbound;

namespace {

SearchStrategy place_all(const Graph& g, std::vector<VertexId> order) {
    SearchStrategy s;
    for (VertexId v : order) s.moves.push_back({Move::Kind::Place, v});
    return s;
}

// Closure: no clean edge may share an unguarded endpoint with a
// contaminated edge.
bool closed(const Graph& g, const GameState& st) {
    for (int ei = 0; ei < g.num_edges(); ++ei) {
        if (st.clean_edges.test(ei)) continue;
        const Edge& e = g.edges()[ei];
        for (VertexId v : {e.u, e.v}) {
            if (st.guards.test(v)) continue;
            for (VertexId w : g.neighbors(v))
                if (st.clean_edges.test(g.edge_index(v, w))) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("apply_move cleans and recontaminates per the rules") {
    Graph p3(3, {{0, 1}, {1, 2}});
    GameState st = initial_state(p3);
    st = apply_move(p3, st, {Move::Kind::Place, 0});
    st = apply_move(p3, st, {Move::Kind::Place, 1});
    CHECK(st.clean_edges.test(p3.edge_index(0, 1)));
    CHECK(!st.clean_edges.test(p3.edge_index(1, 2)));

    SUBCASE("removing the shared endpoint recontaminates") {
        st = apply_move(p3, st, {Move::Kind::Remove, 1});
        CHECK(!st.clean_edges.test(p3.edge_index(0, 1)));
    }
    SUBCASE("with everything clean, removal is harmless") {
        st = apply_move(p3, st, {Move::Kind::Place, 2});
        st = apply_move(p3, st, {Move::Kind::Remove, 1});
        CHECK(st.clean_edges.all());
    }
}

TEST_CASE("recontamination propagates to a fixed point") {
    // Path a-b-c-d, clean ab,bc; removing c exposes bc to cd, and the
    // contamination must travel on to ab across unguarded b.
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    GameState st = initial_state(p4);
    for (VertexId v : {0, 1, 2}) st = apply_move(p4, st, {Move::Kind::Place, v});
    st = apply_move(p4, st, {Move::Kind::Remove, 1});
    CHECK(st.clean_edges.test(p4.edge_index(0, 1)));  // b removed, no dirt at a/b yet?
    st = apply_move(p4, st, {Move::Kind::Remove, 2});
    CHECK(!st.clean_edges.test(p4.edge_index(1, 2)));
    CHECK(!st.clean_edges.test(p4.edge_index(0, 1)));
}

TEST_CASE("apply_move rejects illegal moves") {
    Graph k2(2, {{0, 1}});
    GameState st = initial_state(k2);
    CHECK_THROWS_AS(apply_move(k2, st, {Move::Kind::Remove, 0}), IllegalMove);
    st = apply_move(k2, st, {Move::Kind::Place, 0});
    CHECK_THROWS_AS(apply_move(k2, st, {Move::Kind::Place, 0}), IllegalMove);
}

TEST_CASE("verify_strategy on K_2") {
    Graph k2(2, {{0, 1}});
    auto v = verify_strategy(k2, place_all(k2, {0, 1}));
    REQUIRE(v.ok);
    CHECK(v.cost == 2);
    CHECK(v.monotone);

    auto empty = verify_strategy(k2, {});
    CHECK(!empty.ok);
    CHECK(empty.failure == "NotAllClean");
    CHECK(empty.dirty_edge == Edge{0, 1});
}

TEST_CASE("grid sweep strategy is monotone with cost k+2") {
    for (int k : {1, 2, 3}) {
        CAPTURE(k);
        GridFamilyInstance inst = gen_grid(k);
        SearchStrategy s = grid_sweep_strategy(inst);
        auto v = verify_strategy(inst.graph, s);
        REQUIRE(v.ok);
        CHECK(v.cost == k + 2);
        CHECK(v.monotone);
        CHECK(check_guarded_frontier(inst.graph, s) == -1);
    }
}

TEST_CASE("wall sweep strategy is monotone with cost k+2") {
    for (int k : {1, 2, 3}) {
        CAPTURE(k);
        WallFamilyInstance inst = gen_wall(k);
        SearchStrategy s = wall_sweep_strategy(inst);
        auto v = verify_strategy(inst.graph, s);
        REQUIRE(v.ok);
        CHECK(v.cost == k + 2);
        CHECK(v.monotone);
    }
}

TEST_CASE("states stay closed under the recontamination rule") {
    std::mt19937 rng(3);
    for (int it = 0; it < 20; ++it) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = oracles::random_connected_graph(rng, n, 0.5);
        GameState st = initial_state(g);
        for (int step = 0; step < 40; ++step) {
            // Random legal move.
            std::vector<Move> legal;
            for (VertexId v = 0; v < n; ++v)
                legal.push_back({st.guards.test(v) ? Move::Kind::Remove
                                                   : Move::Kind::Place,
                                 v});
            Move m = legal[rng() % legal.size()];
            int clean_before = st.clean_edges.count();
            st = apply_move(g, st, m);
            CHECK(closed(g, st));
            if (m.kind == Move::Kind::Place)  // placement never recontaminates
                CHECK(st.clean_edges.count() >= clean_before);
        }
    }
}

TEST_CASE("strategy_to_decomposition basics") {
    Graph k2(2, {{0, 1}});
    auto pd = strategy_to_decomposition(k2, place_all(k2, {0, 1}));
    REQUIRE(pd.bags.size() == 2);
    CHECK(pd.bags[0] == VertexSet{0});
    CHECK(pd.bags[1] == VertexSet{0, 1});
}

TEST_CASE("strategy_to_decomposition rejects unusable strategies") {
    Graph k2(2, {{0, 1}});
    CHECK_THROWS_AS(strategy_to_decomposition(k2, {}), IllegalMove);

    Graph p3(3, {{0, 1}, {1, 2}});
    SearchStrategy recont = place_all(p3, {0, 1});
    recont.moves.push_back({Move::Kind::Remove, 1});
    recont.moves.push_back({Move::Kind::Place, 1});
    recont.moves.push_back({Move::Kind::Place, 2});
    CHECK_THROWS_AS(strategy_to_decomposition(p3, recont), IllegalMove);
}

TEST_CASE("sweep strategies convert to optimal-width decompositions") {
    for (int k : {1, 2}) {
        CAPTURE(k);
        GridFamilyInstance grid = gen_grid(k);
        auto pd = strategy_to_decomposition(grid.graph, grid_sweep_strategy(grid));
        auto res = verify_decomposition(grid.graph, pd);
        REQUIRE(res.ok());
        CHECK(*res.width == k + 1);

        WallFamilyInstance wall = gen_wall(k);
        auto wpd = strategy_to_decomposition(wall.graph, wall_sweep_strategy(wall));
        auto wres = verify_decomposition(wall.graph, wpd);
        REQUIRE(wres.ok());
        CHECK(*wres.width == k + 1);
    }
}

TEST_CASE("exact search number equals pathwidth plus one") {
    CHECK(*exact_search_number(Graph(2, {{0, 1}})).number == 2);
    CHECK(*exact_search_number(gen_grid(1).graph).number == 3);
}

TEST_CASE("game-tree oracle agrees with the pathwidth correspondence") {
    std::mt19937 rng(17);
    for (int it = 0; it < 25; ++it) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = oracles::random_connected_graph(rng, n, 0.4);
        CHECK(oracles::brute_force_search_number(g) ==
              *exact_search_number(g).number);
    }
}

TEST_CASE("successful strategies never beat the search number") {
    for (int k : {1, 2}) {
        GridFamilyInstance inst = gen_grid(k);
        auto v = verify_strategy(inst.graph, grid_sweep_strategy(inst));
        REQUIRE(v.ok);
        CHECK(v.cost >= *exact_search_number(inst.graph).number);
    }
}
