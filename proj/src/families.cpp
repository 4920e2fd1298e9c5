#include "layerbound/families.hpp"

#include <stdexcept>

namespace layerbound {

namespace {

void require_positive_k(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
}

}  // namespace

GridFamilyInstance gen_grid(int k) {
    require_positive_k(k);
    const int rows = k + 2;
    const int cols = 3 * k + 6;
    // Row-major numbering: (x, y) -> (x-1)*cols + (y-1).
    auto id = [cols](int x, int y) { return (x - 1) * cols + (y - 1); };

    std::vector<Coord> labels(rows * cols);
    for (int x = 1; x <= rows; ++x)
        for (int y = 1; y <= cols; ++y) labels[id(x, y)] = Coord{x, y};

    std::vector<Edge> edges;
    for (int x = 1; x <= k + 1; ++x)  // column edges
        for (int y = 1; y <= cols; ++y)
            edges.push_back(make_edge(id(x, y), id(x + 1, y)));
    for (int x = 1; x <= k; ++x)  // row edges, top k rows only
        for (int y = 1; y <= cols - 1; ++y)
            edges.push_back(make_edge(id(x, y), id(x, y + 1)));

    return GridFamilyInstance{k, Graph(rows * cols, std::move(edges), std::move(labels))};
}

WallFamilyInstance gen_wall(int k) {
    require_positive_k(k);
    const int blocks = 3 * k + 6;
    const int ell = 4 * k * blocks;
    // Base rows are numbered row-major; the hair vertices of block y follow,
    // mid before tip.
    auto base_id = [ell](int x, int y) { return (x - 1) * ell + (y - 1); };
    auto hair_mid_id = [k, ell](int y) { return k * ell + 2 * (y - 1); };
    auto hair_tip_id = [k, ell](int y) { return k * ell + 2 * (y - 1) + 1; };

    const int n = k * ell + 2 * blocks;
    std::vector<Coord> labels(n);
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= ell; ++y) labels[base_id(x, y)] = Coord{x, y};

    std::vector<Edge> edges;
    for (int x = 1; x <= k; ++x)  // the k long row paths
        for (int y = 1; y <= ell - 1; ++y)
            edges.push_back(make_edge(base_id(x, y), base_id(x, y + 1)));

    std::vector<Hair> hairs;
    for (int y = 1; y <= blocks; ++y) {
        for (int x = 1; x <= k - 1; ++x) {
            int a = 4 * k * (y - 1) + 4 * x - 3;
            edges.push_back(make_edge(base_id(x, a), base_id(x + 1, a + 1)));
        }
        Hair h{Coord{k, 4 * k * y - 3}, Coord{k + 1, 4 * k * y - 2},
               Coord{k + 2, 4 * k * y - 1}};
        labels[hair_mid_id(y)] = h.mid;
        labels[hair_tip_id(y)] = h.tip;
        edges.push_back(make_edge(base_id(k, 4 * k * y - 3), hair_mid_id(y)));
        edges.push_back(make_edge(hair_mid_id(y), hair_tip_id(y)));
        hairs.push_back(h);
    }

    return WallFamilyInstance{k, ell, Graph(n, std::move(edges), std::move(labels)),
                              std::move(hairs)};
}

Graph gen_k0() { return Graph(2, {Edge{0, 1}}, {Coord{1, 1}, Coord{1, 2}}); }

std::vector<VertexSet> branch_sets(const WallFamilyInstance& w) {
    const int k = w.k;
    const int blocks = 3 * k + 6;
    const Graph& host = w.graph;
    // Indexed by gen_grid(k)'s row-major vertex numbering.
    std::vector<VertexSet> sets((k + 2) * blocks);
    auto grid_id = [blocks](int x, int y) { return (x - 1) * blocks + (y - 1); };
    for (int x = 1; x <= k; ++x) {
        for (int y = 1; y <= blocks; ++y) {
            VertexSet s;
            for (int yy = 4 * k * (y - 1) + 1; yy <= 4 * k * y; ++yy)
                s.push_back(*host.vertex_at(Coord{x, yy}));
            sets[grid_id(x, y)] = std::move(s);
        }
    }
    for (int y = 1; y <= blocks; ++y) {
        sets[grid_id(k + 1, y)] = {*host.vertex_at(Coord{k + 1, 4 * k * y - 2})};
        sets[grid_id(k + 2, y)] = {*host.vertex_at(Coord{k + 2, 4 * k * y - 1})};
    }
    return sets;
}

VertexSet row_vertices(const Graph& g, int x) {
    if (!g.has_labels()) throw GraphError("graph has no coordinate labels");
    VertexSet s;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.label(v).row == x) s.push_back(v);
    if (s.empty()) throw std::out_of_range("row index out of range");
    return s;
}

VertexSet column_vertices(const Graph& g, int y) {
    if (!g.has_labels()) throw GraphError("graph has no coordinate labels");
    VertexSet s;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.label(v).col == y) s.push_back(v);
    if (s.empty()) throw std::out_of_range("column index out of range");
    return s;
}

EdgeClass classify_edge(const Graph& g, const Edge& e) {
    if (!g.has_labels()) throw GraphError("graph has no coordinate labels");
    const Coord& a = g.label(e.u);
    const Coord& b = g.label(e.v);
    if (a.row == b.row) return EdgeClass::RowEdge;
    if (a.col == b.col) return EdgeClass::ColumnEdge;
    return EdgeClass::NonRowEdge;
}

}  // namespace layerbound
