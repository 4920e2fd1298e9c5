#include "layerbound/drawing.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace layerbound {

DrawingIndex::DrawingIndex(const Graph& g, const TwoLayerDrawing& d)
    : side_(g.num_vertices(), -1), pos_(g.num_vertices(), 0) {
    if (static_cast<int>(d.order_x.size() + d.order_y.size()) != g.num_vertices())
        throw DrawingError("drawing does not place every vertex exactly once");
    auto place = [&](const std::vector<VertexId>& order, int side) {
        for (int i = 0; i < static_cast<int>(order.size()); ++i) {
            VertexId v = order[i];
            if (v < 0 || v >= g.num_vertices() || side_[v] != -1)
                throw DrawingError("drawing is not a bijective placement");
            side_[v] = side;
            pos_[v] = i + 1;
        }
    };
    place(d.order_x, 0);
    place(d.order_y, 1);
    for (const Edge& e : g.edges())
        if (side_[e.u] == side_[e.v])
            throw DrawingError("layers are not a proper bipartition of the graph");
}

bool crosses(const Graph& g, const TwoLayerDrawing& d, const Edge& e1, const Edge& e2) {
    if (g.edge_index(e1.u, e1.v) < 0 || g.edge_index(e2.u, e2.v) < 0)
        throw DrawingError("edge not in graph");
    DrawingIndex idx(g, d);
    auto split = [&](const Edge& e) {
        VertexId x = idx.on_x_layer(e.u) ? e.u : e.v;
        VertexId y = idx.on_x_layer(e.u) ? e.v : e.u;
        return std::pair{idx.position(x), idx.position(y)};
    };
    auto [px1, py1] = split(e1);
    auto [px2, py2] = split(e2);
    return (px1 < px2 && py1 > py2) || (px1 > px2 && py1 < py2);
}

namespace {

CrossingProfile profile_impl(const Graph& g, const DrawingIndex& idx,
                             const std::vector<int>& edge_indices) {
    CrossingProfile prof;
    prof.per_edge.assign(g.num_edges(), 0);
    const auto& edges = g.edges();
    std::vector<std::pair<int, int>> pts;  // (x-layer pos, y-layer pos) per edge
    pts.reserve(edge_indices.size());
    for (int ei : edge_indices) {
        const Edge& e = edges[ei];
        VertexId x = idx.on_x_layer(e.u) ? e.u : e.v;
        VertexId y = idx.on_x_layer(e.u) ? e.v : e.u;
        pts.emplace_back(idx.position(x), idx.position(y));
    }
    for (std::size_t i = 0; i < edge_indices.size(); ++i) {
        for (std::size_t j = i + 1; j < edge_indices.size(); ++j) {
            long dx = pts[i].first - pts[j].first;
            long dy = pts[i].second - pts[j].second;
            if (dx * dy < 0) {
                ++prof.per_edge[edge_indices[i]];
                ++prof.per_edge[edge_indices[j]];
                prof.crossing_pairs.emplace_back(
                    std::min(edge_indices[i], edge_indices[j]),
                    std::max(edge_indices[i], edge_indices[j]));
            }
        }
    }
    for (int c : prof.per_edge) prof.max_count = std::max(prof.max_count, c);
    std::sort(prof.crossing_pairs.begin(), prof.crossing_pairs.end());
    return prof;
}

}  // namespace

CrossingProfile crossing_profile(const Graph& g, const TwoLayerDrawing& d) {
    std::vector<int> all(g.num_edges());
    std::iota(all.begin(), all.end(), 0);
    return profile_impl(g, DrawingIndex(g, d), all);
}

CrossingProfile crossing_profile_subset(const Graph& g, const TwoLayerDrawing& d,
                                        const std::vector<int>& edge_indices) {
    return profile_impl(g, DrawingIndex(g, d), edge_indices);
}

bool is_k_planar(const Graph& g, const TwoLayerDrawing& d, int k) {
    if (k < 0) throw DrawingError("k must be non-negative");
    return crossing_profile(g, d).max_count <= k;
}

TwoLayerDrawing canonical_wall_drawing(const WallFamilyInstance& w) {
    const Graph& g = w.graph;
    TwoLayerDrawing d;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        (g.label(v).col % 2 == 1 ? d.order_x : d.order_y).push_back(v);
    auto by_col_row = [&g](VertexId a, VertexId b) {
        return std::pair{g.label(a).col, g.label(a).row} <
               std::pair{g.label(b).col, g.label(b).row};
    };
    std::sort(d.order_x.begin(), d.order_x.end(), by_col_row);
    std::sort(d.order_y.begin(), d.order_y.end(), by_col_row);
    return d;
}

namespace {

// Max per-edge crossing count of a component drawing; edges given as
// (x-vertex, y-vertex) with positions looked up in pos.
int component_max_count(const std::vector<std::pair<VertexId, VertexId>>& edges,
                        const std::vector<int>& pos) {
    int m = static_cast<int>(edges.size());
    std::vector<int> cnt(m, 0);
    int best = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            long dx = pos[edges[i].first] - pos[edges[j].first];
            long dy = pos[edges[i].second] - pos[edges[j].second];
            if (dx * dy < 0) {
                ++cnt[i];
                ++cnt[j];
            }
        }
        best = std::max(best, cnt[i]);
    }
    for (int c : cnt) best = std::max(best, c);
    return best;
}

struct ComponentBest {
    int value = -1;
    std::vector<VertexId> order_x, order_y;
};

void search_component(const Graph& g, const VertexSet& xs, const VertexSet& ys,
                      ComponentBest& best) {
    std::vector<std::pair<VertexId, VertexId>> edges;  // (x endpoint, y endpoint)
    std::vector<char> is_x(g.num_vertices(), 0);
    for (VertexId v : xs) is_x[v] = 1;
    for (VertexId v : xs)
        for (VertexId w : g.neighbors(v)) edges.emplace_back(v, w);

    std::vector<VertexId> px(xs), py(ys);
    std::vector<int> pos(g.num_vertices(), 0);
    do {
        // Reversing both layer orders preserves all crossings; keep only the
        // X-orders that are lexicographically no larger than their reverse.
        std::vector<VertexId> rev(px.rbegin(), px.rend());
        if (rev < px) continue;
        for (int i = 0; i < static_cast<int>(px.size()); ++i) pos[px[i]] = i + 1;
        std::sort(py.begin(), py.end());
        do {
            for (int i = 0; i < static_cast<int>(py.size()); ++i) pos[py[i]] = i + 1;
            int value = component_max_count(edges, pos);
            if (best.value < 0 || value < best.value ||
                (value == best.value &&
                 std::pair{px, py} < std::pair{best.order_x, best.order_y})) {
                best.value = value;
                best.order_x = px;
                best.order_y = py;
            }
        } while (std::next_permutation(py.begin(), py.end()));
    } while (std::next_permutation(px.begin(), px.end()));
}

}  // namespace

BruteforceResult min_local_crossings_bruteforce(const Graph& g) {
    auto bip = bipartition(g);
    if (!bip.ok()) throw DrawingError("NotBipartite: graph has an odd cycle");
    std::vector<char> first_side(g.num_vertices(), 0);
    for (VertexId v : bip.parts->first) first_side[v] = 1;

    BruteforceResult result;
    for (const VertexSet& comp : connected_components(g)) {
        VertexSet a, b;
        for (VertexId v : comp) (first_side[v] ? a : b).push_back(v);
        if (a.size() > 8 || b.size() > 8)
            throw DrawingError("TooLarge: component layer exceeds 8 vertices");
        ComponentBest best;
        search_component(g, a, b, best);  // canonical orientation
        ComponentBest flipped;
        search_component(g, b, a, flipped);  // mirrored orientation
        if (flipped.value < best.value ||
            (flipped.value == best.value &&
             std::pair{flipped.order_x, flipped.order_y} <
                 std::pair{best.order_x, best.order_y}))
            best = flipped;
        result.k_star = std::max(result.k_star, best.value);
        result.witness.order_x.insert(result.witness.order_x.end(),
                                      best.order_x.begin(), best.order_x.end());
        result.witness.order_y.insert(result.witness.order_y.end(),
                                      best.order_y.begin(), best.order_y.end());
    }
    return result;
}

std::string render_svg(const Graph& g, const TwoLayerDrawing& d, const SvgOptions& opts) {
    DrawingIndex idx(g, d);
    const int top = 40, bottom = 200, radius = 5, margin = 40;
    auto xpos = [&](VertexId v) { return margin + (idx.position(v) - 1) * opts.unit; };
    auto ypos = [&](VertexId v) { return idx.on_x_layer(v) ? top : bottom; };

    int width = margin * 2 +
                opts.unit * std::max<int>(1, static_cast<int>(std::max(
                                                 d.order_x.size(), d.order_y.size())) -
                                                 1);
    CrossingProfile prof;
    if (opts.annotate) prof = crossing_profile(g, d);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << bottom + margin << "\">\n";
    for (int ei = 0; ei < g.num_edges(); ++ei) {
        const Edge& e = g.edges()[ei];
        os << "<line x1=\"" << xpos(e.u) << "\" y1=\"" << ypos(e.u) << "\" x2=\""
           << xpos(e.v) << "\" y2=\"" << ypos(e.v)
           << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        if (opts.annotate) {
            int mx = (xpos(e.u) + xpos(e.v)) / 2;
            int my = (ypos(e.u) + ypos(e.v)) / 2;
            os << "<text x=\"" << mx << "\" y=\"" << my
               << "\" font-size=\"10\" fill=\"red\">" << prof.per_edge[ei]
               << "</text>\n";
        }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        os << "<circle cx=\"" << xpos(v) << "\" cy=\"" << ypos(v) << "\" r=\""
           << radius << "\" fill=\"white\" stroke=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace layerbound
