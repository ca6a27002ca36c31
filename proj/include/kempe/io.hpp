#ifndef KEMPE_IO_HPP
#define KEMPE_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/partitioned.hpp"

namespace kempe {

/// JSON-serializable description of a graph instance. Schema:
///   {
///     "n": 9,
///     "partite": {"S": [0,1], "T": [2]},        // optional
///     "base_edges": [[0,2],[1,2]],
///     "added_edges": [[0,1]],                    // optional, default []
///     "k": 3,                                    // optional
///     "colorings": {"c1": [1,2,3,...], ...}      // optional, 1-based
///   }
/// Round-trips losslessly; partitioned documents validate the
/// PartitionedGraph invariants on load.
struct GraphDocument {
    int n = 0;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> partite; // S, T
    std::vector<Edge> base_edges;
    std::vector<Edge> added_edges;
    std::optional<int> k;
    std::map<std::string, std::vector<int>> colorings; // name -> 1-based colors

    bool is_partitioned() const { return partite.has_value(); }
    Graph to_graph() const;                    // all edges together
    PartitionedGraph to_partitioned() const;   // requires partite
    Coloring coloring(const std::string& name) const; // requires k

    static GraphDocument from_graph(const Graph& g);
    static GraphDocument from_partitioned(const PartitionedGraph& pg);

    bool operator==(const GraphDocument&) const = default;
};

// Parse + validate a GraphDocument; all structural invariants are checked
// and violations reported with the offending edge/index.
GraphDocument parse_graph(const std::string& text);

std::string serialize_graph(const GraphDocument& doc);

// Graphviz export. Colors (1-based) render as fill colors from a fixed
// 12-color palette; added edges are drawn bold. A coloring with k beyond
// the palette falls back to uncolored nodes with a warning comment.
std::string export_dot(const Graph& g, const Coloring* c = nullptr);
std::string export_dot(const PartitionedGraph& pg, const Coloring* c = nullptr);

} // namespace kempe

#endif
