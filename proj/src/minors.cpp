#include "layerbound/minors.hpp"

namespace layerbound {

VerifyMinorResult verify_minor(const Graph& pattern, const Graph& host,
                               const MinorModel& m) {
    VerifyMinorResult res;
    auto fail = [&](MinorViolation v) {
        res.violation = std::move(v);
        return res;
    };
    if (static_cast<int>(m.branch_sets.size()) != pattern.num_vertices())
        return fail({MinorViolation::Kind::BadSet, -1, {},
                     "model must have one branch set per pattern vertex"});

    std::vector<int> owner(host.num_vertices(), -1);
    for (VertexId p = 0; p < pattern.num_vertices(); ++p) {
        const VertexSet& s = m.branch_sets[p];
        if (s.empty())
            return fail({MinorViolation::Kind::BadSet, p, {},
                         "branch set " + std::to_string(p) + " is empty"});
        for (VertexId v : s) {
            if (v < 0 || v >= host.num_vertices())
                return fail({MinorViolation::Kind::BadSet, p, {},
                             "branch set " + std::to_string(p) +
                                 " contains out-of-range vertex"});
            if (owner[v] != -1)
                return fail({MinorViolation::Kind::OverlappingSets, p, {},
                             "host vertex " + std::to_string(v) + " is in sets " +
                                 std::to_string(owner[v]) + " and " +
                                 std::to_string(p)});
            owner[v] = p;
        }
        if (!is_connected(host, s))
            return fail({MinorViolation::Kind::DisconnectedSet, p, {},
                         "branch set " + std::to_string(p) + " is disconnected"});
    }

    MinorCertificate cert;
    for (const Edge& pe : pattern.edges()) {
        std::optional<Edge> realizing;
        for (VertexId v : m.branch_sets[pe.u]) {
            for (VertexId w : host.neighbors(v)) {
                if (owner[w] == pe.v) {
                    realizing = make_edge(v, w);
                    break;
                }
            }
            if (realizing) break;
        }
        if (!realizing)
            return fail({MinorViolation::Kind::MissingEdge, -1, pe,
                         "no host edge realizes pattern edge {" +
                             std::to_string(pe.u) + "," + std::to_string(pe.v) + "}"});
        cert.realizing_edges.push_back(*realizing);
    }
    res.certificate = std::move(cert);
    return res;
}

bool labeled_isomorphic(const Graph& a, const Graph& b) {
    if (!a.has_labels() || !b.has_labels())
        throw GraphError("MissingLabels: labeled_isomorphic needs coordinate labels");
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        return false;
    std::vector<VertexId> map_ab(a.num_vertices());
    for (VertexId v = 0; v < a.num_vertices(); ++v) {
        auto w = b.vertex_at(a.label(v));
        if (!w) return false;  // label map is not onto V(b)
        map_ab[v] = *w;
    }
    for (const Edge& e : a.edges())
        if (!b.has_edge(map_ab[e.u], map_ab[e.v])) return false;
    // Equal edge counts plus one direction of preservation give the converse.
    return true;
}

}  // namespace layerbound
