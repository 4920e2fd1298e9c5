#ifndef LAYERBOUND_FAMILIES_HPP
#define LAYERBOUND_FAMILIES_HPP

#include <array>
#include <vector>

#include "layerbound/graph.hpp"

namespace layerbound {

/// The grid-like lower-bound witness: k+2 rows by 3k+6 columns, with column
/// edges everywhere and row edges only on the top k rows.
struct GridFamilyInstance {
    int k = 0;
    Graph graph;

    int num_rows() const { return k + 2; }
    int num_cols() const { return 3 * k + 6; }
};

/// One pendant two-edge path attached to row k of the wall graph.
struct Hair {
    Coord attach;  // (k, 4ky-3)
    Coord mid;     // (k+1, 4ky-2)
    Coord tip;     // (k+2, 4ky-1)
};

/// The wall-like graph: k long rows of ell = 4k(3k+6) vertices, sparse
/// inter-row edges every 4k columns, and one hair per column block.
struct WallFamilyInstance {
    int k = 0;
    int ell = 0;
    Graph graph;
    std::vector<Hair> hairs;

    int num_rows() const { return k; }
};

enum class EdgeClass { RowEdge, ColumnEdge, NonRowEdge };

GridFamilyInstance gen_grid(int k);
WallFamilyInstance gen_wall(int k);

/// The k = 0 witness: a path on two vertices.
Graph gen_k0();

/// Branch sets certifying that the wall graph contains the grid graph as a
/// minor. Entry i is the host vertex set representing grid vertex i (in
/// gen_grid numbering); together the sets partition V(W_k).
std::vector<VertexSet> branch_sets(const WallFamilyInstance& w);

/// Vertices of row x (coordinates (x, *)) in a labeled graph, sorted by id.
VertexSet row_vertices(const Graph& g, int x);
/// Vertices of column y (coordinates (*, y)) in a labeled graph, sorted by id.
VertexSet column_vertices(const Graph& g, int y);

/// Classify an edge of a labeled graph by its endpoint coordinates. Edges in
/// the same row are RowEdge; same column, ColumnEdge; anything else (the wall
/// graph's inter-row and hair edges) is NonRowEdge.
EdgeClass classify_edge(const Graph& g, const Edge& e);

}  // namespace layerbound

#endif
