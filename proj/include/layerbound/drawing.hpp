#ifndef LAYERBOUND_DRAWING_HPP
#define LAYERBOUND_DRAWING_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "layerbound/families.hpp"
#include "layerbound/graph.hpp"

namespace layerbound {

class DrawingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A 2-layer drawing: the X-layer and Y-layer vertices listed in position
/// order (positions are 1-based, left to right).
struct TwoLayerDrawing {
    std::vector<VertexId> order_x;
    std::vector<VertexId> order_y;
};

/// Positions and layer sides of a drawing, resolved against a graph.
/// Throws DrawingError if the drawing is not a bijective placement of a
/// proper bipartition of g.
class DrawingIndex {
public:
    DrawingIndex(const Graph& g, const TwoLayerDrawing& d);

    bool on_x_layer(VertexId v) const { return side_.at(v) == 0; }
    int position(VertexId v) const { return pos_.at(v); }

private:
    std::vector<int> side_;  // 0 = X layer, 1 = Y layer
    std::vector<int> pos_;
};

struct CrossingProfile {
    std::vector<int> per_edge;  // indexed like Graph::edges()
    int max_count = 0;
    std::vector<std::pair<int, int>> crossing_pairs;  // edge index pairs, i < j
};

/// True iff e1 and e2 cross: with each edge split as (x on the X layer, y on
/// the Y layer), the x-orders and y-orders disagree strictly. Edges sharing
/// an endpoint never cross.
bool crosses(const Graph& g, const TwoLayerDrawing& d, const Edge& e1, const Edge& e2);

/// Exhaustive pairwise crossing counts over all edge pairs.
CrossingProfile crossing_profile(const Graph& g, const TwoLayerDrawing& d);

/// Same, restricted to the given edge indices (counts for other edges are 0).
CrossingProfile crossing_profile_subset(const Graph& g, const TwoLayerDrawing& d,
                                        const std::vector<int>& edge_indices);

bool is_k_planar(const Graph& g, const TwoLayerDrawing& d, int k);

/// The wall graph's lexicographic drawing: odd-column vertices on the X
/// layer, even-column on the Y layer, each sorted by key (col, row).
TwoLayerDrawing canonical_wall_drawing(const WallFamilyInstance& w);

struct BruteforceResult {
    int k_star = 0;
    TwoLayerDrawing witness;
};

/// Minimum over all 2-layer drawings of the maximum per-edge crossing count,
/// with a witness drawing. Components are placed contiguously and both layer
/// orientations are tried per component; within a component the search prunes
/// order pairs whose X-order is lexicographically above its own reverse
/// (reversing both layers preserves all crossings). The witness is the
/// lexicographically smallest optimal (order_x, order_y).
/// Throws DrawingError on non-bipartite input or a component layer larger
/// than 8 vertices.
BruteforceResult min_local_crossings_bruteforce(const Graph& g);

struct SvgOptions {
    int unit = 40;          // horizontal spacing per position
    bool annotate = false;  // write per-edge crossing counts at midpoints
};

/// Deterministic SVG rendering: two horizontal layers, straight-line edges.
std::string render_svg(const Graph& g, const TwoLayerDrawing& d,
                       const SvgOptions& opts = {});

}  // namespace layerbound

#endif
