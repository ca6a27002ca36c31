#include "kempe/io.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kempe/errors.hpp"
#include "kempe/graph_ops.hpp"

namespace kempe {

using json = nlohmann::ordered_json;

namespace {

std::vector<Edge> parse_edge_array(const json& arr, const char* field) {
    if (!arr.is_array()) throw input_error(std::string(field) + " must be an array");
    std::vector<Edge> out;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw input_error(std::string(field) + " entries must be [u,v] index pairs");
        out.push_back({item[0].get<int>(), item[1].get<int>()});
    }
    return out;
}

json edges_to_json(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (const auto& [u, v] : edges) arr.push_back(json::array({u, v}));
    return arr;
}

} // namespace

Graph GraphDocument::to_graph() const {
    std::vector<Edge> all = base_edges;
    all.insert(all.end(), added_edges.begin(), added_edges.end());
    return Graph(n, all);
}

PartitionedGraph GraphDocument::to_partitioned() const {
    if (!partite) throw input_error("document has no partite sets");
    return PartitionedGraph(to_graph(), partite->first, partite->second, base_edges,
                            added_edges);
}

Coloring GraphDocument::coloring(const std::string& name) const {
    auto it = colorings.find(name);
    if (it == colorings.end()) throw input_error("no coloring named '" + name + "'");
    if (!k) throw input_error("document carries colorings but no palette size k");
    if (static_cast<int>(it->second.size()) != n)
        throw input_error("coloring '" + name + "' covers " +
                          std::to_string(it->second.size()) + " vertices, n=" +
                          std::to_string(n));
    return Coloring(*k, it->second);
}

GraphDocument GraphDocument::from_graph(const Graph& g) {
    GraphDocument doc;
    doc.n = g.vertex_count();
    doc.base_edges = g.edges();
    return doc;
}

GraphDocument GraphDocument::from_partitioned(const PartitionedGraph& pg) {
    GraphDocument doc;
    doc.n = pg.graph().vertex_count();
    doc.partite = {pg.side_s(), pg.side_t()};
    doc.base_edges = pg.base_edges();
    doc.added_edges = pg.added_edges();
    return doc;
}

GraphDocument parse_graph(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) throw input_error("document root must be an object");
    if (!root.contains("n") || !root["n"].is_number_integer())
        throw input_error("missing integer field 'n'");

    GraphDocument doc;
    doc.n = root["n"].get<int>();
    if (doc.n < 0) throw input_error("'n' must be >= 0");
    if (root.contains("base_edges")) doc.base_edges = parse_edge_array(root["base_edges"], "base_edges");
    if (root.contains("added_edges"))
        doc.added_edges = parse_edge_array(root["added_edges"], "added_edges");
    if (root.contains("k")) {
        if (!root["k"].is_number_integer() || root["k"].get<int>() < 1)
            throw input_error("'k' must be a positive integer");
        doc.k = root["k"].get<int>();
    }
    if (root.contains("partite")) {
        const auto& p = root["partite"];
        if (!p.is_object() || !p.contains("S") || !p.contains("T"))
            throw input_error("'partite' must be an object with 'S' and 'T'");
        auto side = [&](const char* name) {
            std::vector<int> out;
            for (const auto& item : p[name]) {
                if (!item.is_number_integer())
                    throw input_error(std::string("partite.") + name + " must hold indices");
                out.push_back(item.get<int>());
            }
            return out;
        };
        doc.partite = {side("S"), side("T")};
    }
    if (root.contains("colorings")) {
        if (!root["colorings"].is_object())
            throw input_error("'colorings' must be an object of named color vectors");
        for (const auto& [name, vec] : root["colorings"].items()) {
            if (!vec.is_array())
                throw input_error("coloring '" + name + "' must be an array");
            std::vector<int> colors;
            for (const auto& item : vec) {
                if (!item.is_number_integer())
                    throw input_error("coloring '" + name + "' must hold integers");
                colors.push_back(item.get<int>());
            }
            doc.colorings[name] = std::move(colors);
        }
    }

    // Validate the structure eagerly so load errors carry the offending edge.
    doc.to_graph();
    if (doc.partite) doc.to_partitioned();
    if (doc.k)
        for (const auto& [name, colors] : doc.colorings)
            doc.coloring(name);
    return doc;
}

std::string serialize_graph(const GraphDocument& doc) {
    json root;
    root["n"] = doc.n;
    if (doc.partite) {
        root["partite"] = json{{"S", doc.partite->first}, {"T", doc.partite->second}};
    }
    root["base_edges"] = edges_to_json(doc.base_edges);
    if (!doc.added_edges.empty() || doc.partite)
        root["added_edges"] = edges_to_json(doc.added_edges);
    if (doc.k) root["k"] = *doc.k;
    if (!doc.colorings.empty()) {
        json cols = json::object();
        for (const auto& [name, vec] : doc.colorings) cols[name] = vec;
        root["colorings"] = cols;
    }
    return root.dump(2) + "\n";
}

namespace {

// Fill palette for rendered colors 1..12.
constexpr const char* kDotPalette[12] = {
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff"};

std::string dot_body(const Graph& g, const Coloring* c, const std::vector<Edge>* bold) {
    std::ostringstream out;
    out << "graph G {\n";
    bool colored = c != nullptr;
    if (c && c->k() > 12) {
        out << "  // warning: palette size " << c->k()
            << " exceeds the 12-color DOT palette; nodes left uncolored\n";
        colored = false;
    }
    out << "  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (colored)
            out << " [style=filled, fillcolor=\"" << kDotPalette[c->color(v) - 1]
                << "\", label=\"" << v << ":" << c->color(v) << "\"]";
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges()) {
        bool is_bold = bold && std::binary_search(bold->begin(), bold->end(), Edge{u, v});
        out << "  " << u << " -- " << v;
        if (is_bold) out << " [style=bold, penwidth=2]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace

std::string export_dot(const Graph& g, const Coloring* c) {
    if (c && !is_proper(g, *c)) throw input_error("export_dot requires a proper coloring");
    return dot_body(g, c, nullptr);
}

std::string export_dot(const PartitionedGraph& pg, const Coloring* c) {
    if (c && !is_proper(pg.graph(), *c))
        throw input_error("export_dot requires a proper coloring");
    const auto& bold = pg.added_edges();
    return dot_body(pg.graph(), c, &bold);
}

} // namespace kempe
