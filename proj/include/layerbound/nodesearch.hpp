#ifndef LAYERBOUND_NODESEARCH_HPP
#define LAYERBOUND_NODESEARCH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "layerbound/dynamic_bitset.hpp"
#include "layerbound/families.hpp"
#include "layerbound/graph.hpp"
#include "layerbound/pathwidth.hpp"

namespace layerbound {

struct Move {
    enum class Kind { Place, Remove };
    Kind kind;
    VertexId vertex;
};

struct SearchStrategy {
    std::vector<Move> moves;
};

class IllegalMove : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Game configuration. States are always closed under the recontamination
/// rule: no clean edge shares an unguarded endpoint with a contaminated edge.
struct GameState {
    DynamicBitset guards;       // over vertices
    DynamicBitset clean_edges;  // over Graph::edges() indices
};

GameState initial_state(const Graph& g);

/// Applies one move. Place cleans every edge whose endpoints are now both
/// guarded; Remove propagates recontamination to a fixed point. Throws
/// IllegalMove on placing a guarded vertex or removing an unguarded one.
GameState apply_move(const Graph& g, const GameState& s, const Move& m);

struct StrategyVerification {
    bool ok = false;
    int cost = 0;
    bool monotone = true;
    std::string failure;          // empty when ok
    int fail_step = -1;           // move index of an illegal move
    std::optional<Edge> dirty_edge;  // witness when not all clean at the end
};

/// Simulates a strategy from the all-contaminated, guard-free configuration.
/// cost is the maximum number of simultaneous guards; monotone means no edge
/// ever went from clean back to contaminated.
StrategyVerification verify_strategy(const Graph& g, const SearchStrategy& s);

/// The column sweep of the grid graph: guard column 1, then repeatedly free
/// the two bottom guards and advance the top k guards to the next column,
/// row 1 first. Monotone with cost exactly k+2.
SearchStrategy grid_sweep_strategy(const GridFamilyInstance& inst);

/// A left-to-right column sweep of the wall graph: one guard per long row,
/// advanced bottom row first so inter-row edges clean in passing, plus two
/// transient guards for each hair. Monotone with cost exactly k+2.
SearchStrategy wall_sweep_strategy(const WallFamilyInstance& inst);

/// Bags are the guard sets after each Place move. Requires a monotone,
/// successful strategy that guards every vertex at most once; the result
/// satisfies all decomposition axioms with width <= cost - 1.
/// Throws IllegalMove with reason NotMonotone / NotSuccessful otherwise.
PathDecomposition strategy_to_decomposition(const Graph& g, const SearchStrategy& s);

struct SearchNumberResult {
    std::optional<int> number;
    long long nodes_explored = 0;
    bool unknown() const { return !number.has_value(); }
};

/// Exact node search number via ns(G) = pw(G) + 1.
SearchNumberResult exact_search_number(const Graph& g, const Budget& budget = {});

/// Per-step invariant of the sweep strategies: every row and every column
/// whose own (row/column) edges are partly clean and partly contaminated must
/// hold a guard. Returns the index of the first move after which the
/// invariant breaks, or -1 if it holds throughout.
int check_guarded_frontier(const Graph& g, const SearchStrategy& s);

}  // namespace layerbound

#endif
