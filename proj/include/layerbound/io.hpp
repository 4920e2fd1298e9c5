#ifndef LAYERBOUND_IO_HPP
#define LAYERBOUND_IO_HPP

#include <string>

#include "layerbound/drawing.hpp"
#include "layerbound/graph.hpp"
#include "layerbound/minors.hpp"
#include "layerbound/nodesearch.hpp"
#include "layerbound/pathwidth.hpp"

namespace layerbound::io {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Graph: {"n": int, "edges": [[u,v],...], "labels": [{"id","row","col"},...]}
// with edges sorted lexicographically and labels optional.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// Drawing: {"partX":[ids], "partY":[ids], "posX":[ids in order], "posY":[...]}.
std::string drawing_to_json(const TwoLayerDrawing& d);
TwoLayerDrawing drawing_from_json(const std::string& text);

// Decomposition: {"bags": [[ids],...]}.
std::string decomposition_to_json(const PathDecomposition& pd);
PathDecomposition decomposition_from_json(const std::string& text);

// Strategy: {"moves": [{"op":"place"|"remove","v":id},...]}.
std::string strategy_to_json(const SearchStrategy& s);
SearchStrategy strategy_from_json(const std::string& text);

// Minor model: {"sets": {"patternId": [hostIds], ...}}.
std::string minor_model_to_json(const MinorModel& m);
MinorModel minor_model_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace layerbound::io

#endif
