#ifndef KEMPE_GRAPH_OPS_HPP
#define KEMPE_GRAPH_OPS_HPP

#include <optional>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

// True iff no edge of g is monochromatic under c.
bool is_proper(const Graph& g, const Coloring& c);

// The set {c(v) : v in r}, sorted ascending, 1-based.
std::vector<int> colors_used(const Coloring& c, const std::vector<int>& r);

struct Bipartition {
    std::vector<int> side_a, side_b; // sorted

    bool operator==(const Bipartition&) const = default;
};

// A proper 2-partition if g is bipartite, else nullopt. Per connected
// component, the component's lowest-index vertex lands on side_a.
std::optional<Bipartition> bipartition(const Graph& g);

// Degeneracy by min-degree peeling, ties broken toward the lowest index.
// Empty graph has degeneracy 0.
int degeneracy(const Graph& g);

inline constexpr int kDefaultChromaticSizeCap = 30;

// Exact chromatic number by iterated k-colorability backtracking.
// Throws capacity_error when g has more than size_cap vertices.
int chromatic_number(const Graph& g, int size_cap = kDefaultChromaticSizeCap);

// Exact k-colorability decision (same engine as chromatic_number).
bool is_k_colorable(const Graph& g, int k, int size_cap = kDefaultChromaticSizeCap);

// chi(g) == k, and every single-edge and single-vertex deletion is
// (k-1)-colorable.
bool is_k_critical(const Graph& g, int k, int size_cap = kDefaultChromaticSizeCap);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

} // namespace kempe

#endif
