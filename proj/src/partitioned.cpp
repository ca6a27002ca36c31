#include "kempe/partitioned.hpp"

#include <algorithm>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

namespace {

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

} // namespace

PartitionedGraph::PartitionedGraph(Graph graph, std::vector<int> side_s,
                                   std::vector<int> side_t, std::vector<Edge> base_edges,
                                   std::vector<Edge> added_edges)
    : graph_(std::move(graph)),
      side_s_(std::move(side_s)),
      side_t_(std::move(side_t)) {
    const int n = graph_.vertex_count();
    in_s_.assign(static_cast<size_t>(n), 0);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    auto take = [&](const std::vector<int>& side, char s_flag) {
        for (int v : side) {
            if (v < 0 || v >= n) throw input_error("side vertex " + std::to_string(v) + " out of range");
            if (seen[static_cast<size_t>(v)])
                throw input_error("vertex " + std::to_string(v) + " on both sides");
            seen[static_cast<size_t>(v)] = 1;
            in_s_[static_cast<size_t>(v)] = s_flag;
        }
    };
    take(side_s_, 1);
    take(side_t_, 0);
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw input_error("vertex " + std::to_string(v) + " on neither side");
    std::sort(side_s_.begin(), side_s_.end());
    std::sort(side_t_.begin(), side_t_.end());

    base_edges_.reserve(base_edges.size());
    for (const auto& [u, v] : base_edges) base_edges_.push_back(make_edge(u, v));
    added_edges_.reserve(added_edges.size());
    for (const auto& [u, v] : added_edges) added_edges_.push_back(make_edge(u, v));
    std::sort(base_edges_.begin(), base_edges_.end());
    std::sort(added_edges_.begin(), added_edges_.end());

    for (const auto& e : base_edges_)
        if (in_s(e.first) == in_s(e.second))
            throw input_error("base edge " + edge_str(e) + " does not join S to T");
    std::vector<char> touched(static_cast<size_t>(n), 0);
    is_matching_ = true;
    for (const auto& e : added_edges_) {
        if (in_s(e.first) != in_s(e.second))
            throw input_error("added edge " + edge_str(e) + " crosses S-T");
        if (touched[static_cast<size_t>(e.first)] || touched[static_cast<size_t>(e.second)])
            is_matching_ = false;
        touched[static_cast<size_t>(e.first)] = 1;
        touched[static_cast<size_t>(e.second)] = 1;
    }

    // base + added must tile E(graph) exactly
    std::vector<Edge> all;
    all.reserve(base_edges_.size() + added_edges_.size());
    std::merge(base_edges_.begin(), base_edges_.end(), added_edges_.begin(),
               added_edges_.end(), std::back_inserter(all));
    auto dup = std::adjacent_find(all.begin(), all.end());
    if (dup != all.end())
        throw input_error("edge " + edge_str(*dup) + " listed twice");
    if (all != graph_.edges())
        throw input_error("base and added edges do not tile the graph's edge set");
}

} // namespace kempe
