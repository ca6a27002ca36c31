#ifndef KEMPE_GRAPH_HPP
#define KEMPE_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace kempe {

// Undirected edge, stored normalized with first < second.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction; construction validates simplicity
/// (no loops, no duplicate edges) and symmetry is built in.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    // Normalized (u < v), sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
};

// Copy of g without edge uv. The edge must exist.
Graph remove_edge(const Graph& g, int u, int v);

// Copy of g without vertex v; remaining vertices are re-indexed densely,
// preserving relative order.
Graph remove_vertex(const Graph& g, int v);

/// Subgraph induced by a vertex subset, with the map back to the host graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent; // new index -> original index, ascending
};

// `vertices` need not be sorted; duplicates are an input error.
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices);

} // namespace kempe

#endif
