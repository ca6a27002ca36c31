#include "kempe/graph.hpp"

#include <algorithm>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

Edge make_edge(int u, int v) {
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw input_error("negative vertex count");
    adj_.resize(static_cast<size_t>(n));
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw input_error("edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") out of range for n=" + std::to_string(n));
        edges_.push_back(make_edge(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        auto it = std::adjacent_find(edges_.begin(), edges_.end());
        throw input_error("duplicate edge (" + std::to_string(it->first) + "," +
                          std::to_string(it->second) + ")");
    }
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw input_error("vertex " + std::to_string(v) + " out of range");
    return adj_[static_cast<size_t>(v)];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    const auto& nb = neighbors(u);
    if (v < 0 || v >= n_) throw input_error("vertex " + std::to_string(v) + " out of range");
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph remove_edge(const Graph& g, int u, int v) {
    Edge target = make_edge(u, v);
    if (!g.has_edge(u, v))
        throw input_error("edge (" + std::to_string(target.first) + "," +
                          std::to_string(target.second) + ") not present");
    std::vector<Edge> edges;
    edges.reserve(g.edges().size() - 1);
    for (const auto& e : g.edges())
        if (e != target) edges.push_back(e);
    return Graph(g.vertex_count(), edges);
}

Graph remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw input_error("vertex " + std::to_string(v) + " out of range");
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        edges.push_back({a > v ? a - 1 : a, b > v ? b - 1 : b});
    }
    return Graph(g.vertex_count() - 1, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw input_error("duplicate vertex in induced_subgraph");
    std::vector<int> position(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count())
            throw input_error("vertex " + std::to_string(v) + " out of range");
        position[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (int v : vertices)
        for (int u : g.neighbors(v))
            if (u > v && position[static_cast<size_t>(u)] >= 0)
                edges.push_back({position[static_cast<size_t>(v)], position[static_cast<size_t>(u)]});
    return InducedSubgraph{Graph(static_cast<int>(vertices.size()), edges), std::move(vertices)};
}

} // namespace kempe
