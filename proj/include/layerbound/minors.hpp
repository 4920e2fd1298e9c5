#ifndef LAYERBOUND_MINORS_HPP
#define LAYERBOUND_MINORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "layerbound/graph.hpp"

namespace layerbound {

/// Branch sets of a minor model: entry i is the host vertex set representing
/// pattern vertex i.
struct MinorModel {
    std::vector<VertexSet> branch_sets;
};

struct MinorViolation {
    enum class Kind { BadSet, OverlappingSets, DisconnectedSet, MissingEdge };
    Kind kind;
    VertexId pattern_vertex = -1;  // offending set, when applicable
    Edge pattern_edge{-1, -1};     // unrealized edge for MissingEdge
    std::string message;
};

/// One realizing host edge per pattern edge, listed in pattern edge order.
struct MinorCertificate {
    std::vector<Edge> realizing_edges;
};

struct VerifyMinorResult {
    std::optional<MinorCertificate> certificate;
    std::optional<MinorViolation> violation;
    bool ok() const { return certificate.has_value(); }
};

/// Checks that the branch sets are nonempty, pairwise disjoint and connected
/// in the host, and that every pattern edge is realized by a host edge
/// between the corresponding sets.
VerifyMinorResult verify_minor(const Graph& pattern, const Graph& host,
                               const MinorModel& m);

/// True iff the coordinate-label map is a bijection V(a) -> V(b) preserving
/// edges in both directions. Throws GraphError if either graph is unlabeled.
bool labeled_isomorphic(const Graph& a, const Graph& b);

}  // namespace layerbound

#endif
