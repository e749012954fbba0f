#ifndef METRIZED_IO_HPP
#define METRIZED_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "metrized/graph.hpp"

namespace metrized::io {

struct ParseError : GraphError {
    using GraphError::GraphError;
};

/// Graph JSON: {"vertices": ["a","b"], "edges": [{"u":"a","v":"b","len":"1/2"}]}
inline MetrizedGraph from_json(const nlohmann::json& j) {
    if (!j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph JSON needs 'vertices' and 'edges'");
    std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == name) return static_cast<int>(i);
        throw ParseError("edge endpoint '" + name + "' is not a declared vertex");
    };
    for (const auto& e : j.at("edges")) {
        std::string len = e.at("len").is_string() ? e.at("len").get<std::string>()
                                                  : e.at("len").dump();
        edges.push_back({index_of(e.at("u").get<std::string>()),
                         index_of(e.at("v").get<std::string>()), parse_rational(len)});
    }
    int v = static_cast<int>(labels.size());
    return MetrizedGraph(v, std::move(edges), std::move(labels));
}

inline nlohmann::json to_json(const MetrizedGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.labels();
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges())
        j["edges"].push_back({{"u", g.label(e.u)}, {"v", g.label(e.v)},
                              {"len", to_string(e.len)}});
    return j;
}

/// Plain edge list: one `u v len` per line, '#' comments, labels are words.
inline MetrizedGraph from_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == name) return static_cast<int>(i);
        labels.push_back(name);
        return static_cast<int>(labels.size()) - 1;
    };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string u, v, len;
        if (!(ls >> u)) continue;
        if (!(ls >> v >> len))
            throw ParseError("line " + std::to_string(lineno) + ": expected 'u v len'");
        edges.push_back({index_of(u), index_of(v), parse_rational(len)});
    }
    if (labels.empty()) throw ParseError("empty edge list");
    int v = static_cast<int>(labels.size());
    return MetrizedGraph(v, std::move(edges), std::move(labels));
}

inline std::string to_edge_list(const MetrizedGraph& g) {
    std::string out;
    for (const Edge& e : g.edges())
        out += g.label(e.u) + " " + g.label(e.v) + " " + to_string(e.len) + "\n";
    return out;
}

/// Load a graph from a .json or edge-list file (sniffed by first character).
inline MetrizedGraph load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j = nlohmann::json::parse(text);
        return from_json(j);
    }
    std::istringstream ss(text);
    return from_edge_list(ss);
}

}  // namespace metrized::io

#endif
