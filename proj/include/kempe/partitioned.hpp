#ifndef KEMPE_PARTITIONED_HPP
#define KEMPE_PARTITIONED_HPP

#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

/// A B+E_l graph: bipartite base B with partite sets S and T, plus l edges
/// added inside S or inside T. Construction validates:
///   - side_s and side_t partition 0..n-1
///   - every base edge joins S to T
///   - every added edge lies within one side
///   - base and added edges are disjoint and together are exactly E(graph)
/// When the added edges are pairwise vertex-disjoint this is a B+M_l graph.
class PartitionedGraph {
public:
    PartitionedGraph() = default;
    PartitionedGraph(Graph graph, std::vector<int> side_s, std::vector<int> side_t,
                     std::vector<Edge> base_edges, std::vector<Edge> added_edges);

    const Graph& graph() const { return graph_; }
    const std::vector<int>& side_s() const { return side_s_; }
    const std::vector<int>& side_t() const { return side_t_; }
    const std::vector<Edge>& base_edges() const { return base_edges_; }
    const std::vector<Edge>& added_edges() const { return added_edges_; }

    bool in_s(int v) const { return in_s_[static_cast<size_t>(v)]; }
    int ell() const { return static_cast<int>(added_edges_.size()); }
    bool is_matching() const { return is_matching_; }

    bool operator==(const PartitionedGraph& other) const = default;

private:
    Graph graph_;
    std::vector<int> side_s_, side_t_;       // sorted
    std::vector<Edge> base_edges_, added_edges_; // normalized, sorted
    std::vector<char> in_s_;
    bool is_matching_ = true;
};

} // namespace kempe

#endif
