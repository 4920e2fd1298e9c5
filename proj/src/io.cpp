#include "layerbound/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace layerbound::io {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError("invalid JSON");
    return j;
}

std::vector<VertexId> id_list(const json& j) {
    std::vector<VertexId> out;
    for (const auto& x : j) out.push_back(x.get<VertexId>());
    return out;
}

}  // namespace

std::string graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.num_vertices();
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    if (g.has_labels()) {
        json labels = json::array();
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            labels.push_back(
                {{"id", v}, {"row", g.label(v).row}, {"col", g.label(v).col}});
        }
        j["labels"] = std::move(labels);
    }
    return j.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text) {
    json j = parse(text);
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
    if (j.contains("labels")) {
        std::vector<Coord> labels(n);
        std::vector<char> have(n, 0);
        for (const auto& l : j.at("labels")) {
            int id = l.at("id").get<int>();
            if (id < 0 || id >= n) throw IoError("label id out of range");
            labels[id] = Coord{l.at("row").get<int>(), l.at("col").get<int>()};
            have[id] = 1;
        }
        for (char h : have)
            if (!h) throw IoError("label table must cover all vertices");
        return Graph(n, std::move(edges), std::move(labels));
    }
    return Graph(n, std::move(edges));
}

std::string drawing_to_json(const TwoLayerDrawing& d) {
    json j;
    std::vector<VertexId> px(d.order_x), py(d.order_y);
    std::sort(px.begin(), px.end());
    std::sort(py.begin(), py.end());
    j["partX"] = px;
    j["partY"] = py;
    j["posX"] = d.order_x;
    j["posY"] = d.order_y;
    return j.dump(2) + "\n";
}

TwoLayerDrawing drawing_from_json(const std::string& text) {
    json j = parse(text);
    TwoLayerDrawing d;
    d.order_x = id_list(j.at("posX"));
    d.order_y = id_list(j.at("posY"));
    // partX/partY are redundant with the position lists; cross-check them.
    std::vector<VertexId> px = id_list(j.at("partX")), py = id_list(j.at("partY"));
    std::vector<VertexId> sx(d.order_x), sy(d.order_y);
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (px != sx || py != sy)
        throw IoError("partX/partY do not match posX/posY");
    return d;
}

std::string decomposition_to_json(const PathDecomposition& pd) {
    json j;
    j["bags"] = json::array();
    for (const VertexSet& bag : pd.bags) j["bags"].push_back(bag);
    return j.dump(2) + "\n";
}

PathDecomposition decomposition_from_json(const std::string& text) {
    json j = parse(text);
    PathDecomposition pd;
    for (const auto& bag : j.at("bags")) pd.bags.push_back(id_list(bag));
    return pd;
}

std::string strategy_to_json(const SearchStrategy& s) {
    json j;
    j["moves"] = json::array();
    for (const Move& m : s.moves) {
        j["moves"].push_back(
            {{"op", m.kind == Move::Kind::Place ? "place" : "remove"},
             {"v", m.vertex}});
    }
    return j.dump(2) + "\n";
}

SearchStrategy strategy_from_json(const std::string& text) {
    json j = parse(text);
    SearchStrategy s;
    for (const auto& m : j.at("moves")) {
        std::string op = m.at("op").get<std::string>();
        if (op != "place" && op != "remove") throw IoError("unknown move op: " + op);
        s.moves.push_back({op == "place" ? Move::Kind::Place : Move::Kind::Remove,
                           m.at("v").get<int>()});
    }
    return s;
}

std::string minor_model_to_json(const MinorModel& m) {
    json sets = json::object();
    for (int p = 0; p < static_cast<int>(m.branch_sets.size()); ++p)
        sets[std::to_string(p)] = m.branch_sets[p];
    json j;
    j["sets"] = std::move(sets);
    return j.dump(2) + "\n";
}

MinorModel minor_model_from_json(const std::string& text) {
    json j = parse(text);
    const json& sets = j.at("sets");
    MinorModel m;
    m.branch_sets.resize(sets.size());
    for (auto it = sets.begin(); it != sets.end(); ++it) {
        int p = std::stoi(it.key());
        if (p < 0 || p >= static_cast<int>(m.branch_sets.size()))
            throw IoError("pattern ids must be 0..#sets-1");
        m.branch_sets[p] = id_list(it.value());
    }
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << content;
}

}  // namespace layerbound::io
