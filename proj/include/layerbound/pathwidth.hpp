#ifndef LAYERBOUND_PATHWIDTH_HPP
#define LAYERBOUND_PATHWIDTH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "layerbound/graph.hpp"

namespace layerbound {

struct PathDecomposition {
    std::vector<VertexSet> bags;
};

/// First violated decomposition axiom, with a witness.
struct DecompositionViolation {
    enum class Kind { UncoveredVertex, UncoveredEdge, BrokenTrace, BadBag };
    Kind kind;
    VertexId vertex = -1;
    Edge edge{-1, -1};
    std::string message;
};

struct VerifyDecompositionResult {
    std::optional<int> width;
    std::optional<DecompositionViolation> violation;
    bool ok() const { return width.has_value(); }
};

VerifyDecompositionResult verify_decomposition(const Graph& g,
                                               const PathDecomposition& pd);

/// A vertex ordering; position of order[i] is i+1.
using Layout = std::vector<VertexId>;

/// Vertex separation of a layout: the maximum, over prefixes, of the number
/// of placed vertices that still have an unplaced neighbor.
int separation(const Graph& g, const Layout& l);

/// Standard layout-to-decomposition conversion: bag i is the separator after
/// the first i-1 vertices plus the i-th vertex itself. The result is always a
/// valid decomposition with width equal to separation(l).
PathDecomposition layout_to_decomposition(const Graph& g, const Layout& l);

enum class Tri { False, True, Unknown };

/// Budgets for the exact solvers. The node count is the reproducible limit;
/// wall time is a safety valve.
struct Budget {
    long long max_nodes = 50'000'000;
    long long max_millis = 600'000;
};

struct DecideResult {
    Tri value = Tri::Unknown;
    std::optional<Layout> layout;  // witness when value == True
    long long nodes_explored = 0;
};

/// Exact decision pw(g) <= w by branch and bound over layout prefixes,
/// memoizing refuted placed-vertex sets. Deterministic: candidates are tried
/// by ascending boundary growth, ties by ascending vertex id.
DecideResult decide_pathwidth_le(const Graph& g, int w, const Budget& budget = {});

struct PathwidthResult {
    std::optional<int> width;
    std::optional<Layout> layout;
    long long nodes_explored = 0;
    bool unknown() const { return !width.has_value(); }
};

/// Smallest w with decide_pathwidth_le true, searched upward from 0 and
/// capped by a greedy upper-bound layout.
PathwidthResult exact_pathwidth(const Graph& g, const Budget& budget = {});

/// Greedy layout minimizing boundary growth at each step; its separation is
/// an upper bound for pathwidth.
Layout greedy_layout(const Graph& g);

}  // namespace layerbound

#endif
