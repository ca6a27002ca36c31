#ifndef KEMPE_KEMPE_HPP
#define KEMPE_KEMPE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/partitioned.hpp"

namespace kempe {

/// A maximal connected component of the bicolored subgraph G(i,j).
/// Carries the fingerprint of the coloring it was computed from so that a
/// component cannot silently be applied to a coloring it no longer matches.
struct KempeComponent {
    int color_i = 0, color_j = 0;  // 1-based, color_i < color_j
    std::vector<int> vertices;     // sorted
    uint64_t source_fingerprint = 0;

    bool operator==(const KempeComponent&) const = default;
};

/// A replayable Kempe move: swap color_i and color_j on `vertices`.
/// Valid against a coloring only if `vertices` is exactly one component
/// of its (i,j)-bicolored subgraph; replay_changes checks that.
struct KempeChange {
    int color_i = 0, color_j = 0;
    std::vector<int> vertices;

    bool operator==(const KempeChange&) const = default;
};

// Subgraph induced by {v : c(v) in {i,j}} with the index map back to g.
InducedSubgraph bicolored_subgraph(const Graph& g, const Coloring& c, int i, int j);

// All connected components of G(i,j), ordered by smallest contained vertex.
// Isolated bicolored vertices are genuine singleton components.
std::vector<KempeComponent> kempe_components(const Graph& g, const Coloring& c,
                                             int i, int j);

// Swap comp's two colors on comp.vertices. Rejects components computed from
// a different coloring (stale fingerprint).
Coloring apply_kempe_change(const Coloring& c, const KempeComponent& comp);

// Every coloring exactly one Kempe change away from c, over all color pairs
// and components, deduplicated by full coloring equality. Sorted lex.
std::vector<Coloring> kempe_neighbors(const Graph& g, const Coloring& c);

/// Result of a constructive normalization: the reached coloring plus the
/// Kempe changes that realize it (replayable witness).
struct RecoloringResult {
    Coloring coloring;
    std::vector<KempeChange> changes;
};

// Observation-1 procedure. Requires that no added edge of pg is an
// (i,j)-edge under c; produces a Kempe-equivalent coloring with
// i not in C(S) and j not in C(T) by flipping the appropriate
// (i,j)-components.
RecoloringResult clear_color_from_sides(const PartitionedGraph& pg, const Coloring& c,
                                        int i, int j);

// Observation-2 procedure. Requires i not in C(S), j not in C(T) and
// ell < C(k,2); gives every component of G[S] a j-colored vertex and every
// component of G[T] an i-colored vertex via singleton Kempe changes.
RecoloringResult seed_color_in_components(const PartitionedGraph& pg, const Coloring& c,
                                          int i, int j);

// Single-vertex recoloring: c(v) := color. Requires no neighbor of v to
// carry `color` (the move is a Kempe change on a singleton component).
Coloring recolor_free_vertex(const Graph& g, const Coloring& c, int v, int color);

// Apply a change list in order, validating each change against the current
// coloring (its vertex set must be exactly one Kempe component).
Coloring replay_changes(const Graph& g, const Coloring& start,
                        std::span<const KempeChange> changes);

} // namespace kempe

#endif
