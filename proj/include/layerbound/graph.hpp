#ifndef LAYERBOUND_GRAPH_HPP
#define LAYERBOUND_GRAPH_HPP

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace layerbound {

using VertexId = int;
using VertexSet = std::vector<VertexId>;  // sorted, no duplicates

/// Grid coordinate of a vertex; rows and columns are 1-based.
struct Coord {
    int row = 0;
    int col = 0;
    auto operator<=>(const Coord&) const = default;
};

/// Undirected edge, normalized so that u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph over dense vertex ids 0..n-1, immutable after
/// construction. Vertices may carry coordinate labels (injective when present).
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);
    Graph(int n, std::vector<Edge> edges, std::vector<Coord> labels);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    /// Edges sorted lexicographically, each with u < v.
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }
    int degree(VertexId v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(VertexId u, VertexId v) const;

    /// Index of edge {u,v} in edges(), or -1 if absent.
    int edge_index(VertexId u, VertexId v) const;

    bool has_labels() const { return !labels_.empty(); }
    const Coord& label(VertexId v) const { return labels_.at(v); }
    const std::vector<Coord>& labels() const { return labels_; }
    std::optional<VertexId> vertex_at(Coord c) const;

    std::string to_dot() const;

private:
    void build_adjacency();
    void validate() const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<Coord> labels_;  // empty when unlabeled
    std::map<Coord, VertexId> by_coord_;
};

inline Edge make_edge(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// Proper 2-coloring of a graph. Per connected component, the side containing
/// the component's smallest vertex id goes to `first`.
struct Bipartition {
    VertexSet first;
    VertexSet second;
};

/// Result of bipartition(): either the two sides or an odd cycle witness
/// (vertex sequence of odd length whose consecutive elements, cyclically,
/// are adjacent).
struct BipartitionResult {
    std::optional<Bipartition> parts;
    std::vector<VertexId> odd_cycle;

    bool ok() const { return parts.has_value(); }
};

BipartitionResult bipartition(const Graph& g);

/// True iff the subgraph induced by `s` is connected. The empty set counts
/// as connected by convention.
bool is_connected(const Graph& g, const VertexSet& s);

/// Quotient of g by a partition into connected parts. Part i becomes vertex i
/// of the result; duplicate quotient edges are merged and self-loops dropped.
/// When `part_labels` is given, part i is labeled part_labels[i].
/// Throws GraphError (PartInvalid) if the parts do not partition V(g) or a
/// part is disconnected.
Graph contract(const Graph& g, const std::vector<VertexSet>& partition,
               const std::vector<Coord>* part_labels = nullptr);

std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace layerbound

#endif
