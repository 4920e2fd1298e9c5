#include "layerbound/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace layerbound {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) e = make_edge(e.u, e.v);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    validate();
    build_adjacency();
}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<Coord> labels)
    : Graph(n, std::move(edges)) {
    labels_ = std::move(labels);
    if (static_cast<int>(labels_.size()) != n_)
        throw GraphError("label table size does not match vertex count");
    for (VertexId v = 0; v < n_; ++v) {
        auto [it, fresh] = by_coord_.emplace(labels_[v], v);
        if (!fresh) throw GraphError("label table is not injective");
    }
}

void Graph::validate() const {
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= n_) throw GraphError("edge endpoint out of range");
        if (e.u == e.v) throw GraphError("self-loop not allowed");
    }
}

void Graph::build_adjacency() {
    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    return edge_index(u, v) >= 0;
}

int Graph::edge_index(VertexId u, VertexId v) const {
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::optional<VertexId> Graph::vertex_at(Coord c) const {
    auto it = by_coord_.find(c);
    if (it == by_coord_.end()) return std::nullopt;
    return it->second;
}

std::string Graph::to_dot() const {
    std::ostringstream os;
    os << "graph G {\n";
    for (VertexId v = 0; v < n_; ++v) {
        os << "  " << v;
        if (has_labels())
            os << " [label=\"(" << labels_[v].row << "," << labels_[v].col << ")\"]";
        os << ";\n";
    }
    for (const Edge& e : edges_) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

BipartitionResult bipartition(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> color(n, -1);
    std::vector<VertexId> parent(n, -1);
    BipartitionResult res;
    Bipartition parts;
    for (VertexId root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (VertexId w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    // Odd cycle: walk both BFS paths to the root, trim the
                    // common suffix, and close the cycle over edge {u,w}.
                    std::vector<VertexId> pu, pw;
                    for (VertexId x = u; x != -1; x = parent[x]) pu.push_back(x);
                    for (VertexId x = w; x != -1; x = parent[x]) pw.push_back(x);
                    while (pu.size() > 1 && pw.size() > 1 &&
                           pu[pu.size() - 1] == pw[pw.size() - 1] &&
                           pu[pu.size() - 2] == pw[pw.size() - 2]) {
                        pu.pop_back();
                        pw.pop_back();
                    }
                    res.odd_cycle = pu;
                    for (auto it = pw.rbegin(); it != pw.rend(); ++it)
                        if (*it != pu.back()) res.odd_cycle.push_back(*it);
                    while (res.odd_cycle.size() > 1 &&
                           res.odd_cycle.back() == res.odd_cycle.front())
                        res.odd_cycle.pop_back();
                    return res;
                }
            }
        }
    }
    for (VertexId v = 0; v < n; ++v)
        (color[v] == 0 ? parts.first : parts.second).push_back(v);
    res.parts = std::move(parts);
    return res;
}

bool is_connected(const Graph& g, const VertexSet& s) {
    if (s.empty()) return true;  // empty set is connected by convention
    std::vector<char> in_set(g.num_vertices(), 0), seen(g.num_vertices(), 0);
    for (VertexId v : s) {
        if (v < 0 || v >= g.num_vertices()) throw GraphError("vertex out of range");
        in_set[v] = 1;
    }
    std::deque<VertexId> queue{s.front()};
    seen[s.front()] = 1;
    int reached = 0;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        ++reached;
        for (VertexId w : g.neighbors(u)) {
            if (in_set[w] && !seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return reached == static_cast<int>(s.size());
}

Graph contract(const Graph& g, const std::vector<VertexSet>& partition,
               const std::vector<Coord>* part_labels) {
    const int n = g.num_vertices();
    std::vector<int> part_of(n, -1);
    for (int i = 0; i < static_cast<int>(partition.size()); ++i) {
        if (partition[i].empty())
            throw GraphError("PartInvalid: part " + std::to_string(i) + " is empty");
        for (VertexId v : partition[i]) {
            if (v < 0 || v >= n) throw GraphError("PartInvalid: vertex out of range");
            if (part_of[v] != -1)
                throw GraphError("PartInvalid: vertex " + std::to_string(v) +
                                 " appears in parts " + std::to_string(part_of[v]) +
                                 " and " + std::to_string(i));
            part_of[v] = i;
        }
        if (!is_connected(g, partition[i]))
            throw GraphError("PartInvalid: part " + std::to_string(i) +
                             " induces a disconnected subgraph");
    }
    for (VertexId v = 0; v < n; ++v)
        if (part_of[v] == -1)
            throw GraphError("PartInvalid: vertex " + std::to_string(v) +
                             " not covered by any part");

    std::vector<Edge> quotient;
    for (const Edge& e : g.edges()) {
        int pu = part_of[e.u], pv = part_of[e.v];
        if (pu != pv) quotient.push_back(make_edge(pu, pv));
    }
    int parts = static_cast<int>(partition.size());
    if (part_labels) {
        if (static_cast<int>(part_labels->size()) != parts)
            throw GraphError("PartInvalid: label list size mismatch");
        return Graph(parts, std::move(quotient), *part_labels);
    }
    return Graph(parts, std::move(quotient));
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> result;
    for (VertexId root = 0; root < n; ++root) {
        if (comp[root] != -1) continue;
        int id = static_cast<int>(result.size());
        result.emplace_back();
        std::deque<VertexId> queue{root};
        comp[root] = id;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            result[id].push_back(u);
            for (VertexId w : g.neighbors(u))
                if (comp[w] == -1) {
                    comp[w] = id;
                    queue.push_back(w);
                }
        }
        std::sort(result[id].begin(), result[id].end());
    }
    return result;
}

}  // namespace layerbound
