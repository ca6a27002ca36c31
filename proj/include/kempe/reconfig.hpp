#ifndef KEMPE_RECONFIG_HPP
#define KEMPE_RECONFIG_HPP

#include <functional>
#include <optional>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/kempe.hpp"

namespace kempe {

inline constexpr long long kDefaultStateCap = 5'000'000;

// Visits every proper k-coloring of g in lexicographic order of the color
// vector. The visitor may return false to stop early.
void for_each_coloring(const Graph& g, int k,
                       const std::function<bool(const Coloring&)>& visit);

// All proper k-colorings in lex order. Throws capacity_error (carrying the
// partial count) once more than cap colorings have been produced.
std::vector<Coloring> enumerate_colorings(const Graph& g, int k,
                                          long long cap = kDefaultStateCap);

/// Result of exploring the Kempe reconfiguration graph of (g, k).
struct KempeClassReport {
    int k = 0;
    long long num_colorings = 0;
    long long num_classes = 0;
    std::vector<Coloring> representatives; // lex-least coloring of each class
    bool truncated = false;                // true iff the state cap was hit
};

// Exact Kc(g,k) by union-find over all proper k-colorings with edges given
// by single Kempe changes. If the coloring count exceeds cap the report is
// truncated (counts cover only the enumerated prefix, never silently wrong).
KempeClassReport count_kempe_classes(const Graph& g, int k,
                                     long long cap = kDefaultStateCap);

enum class Verdict { equivalent, not_equivalent, undecided };

struct EquivalenceResult {
    Verdict verdict = Verdict::undecided;
    // For `equivalent`: Kempe changes transforming c1 into c2 (replayable).
    std::vector<KempeChange> witness;
    long long visited = 0;
};

// Bidirectional BFS between c1 and c2 over the reconfiguration graph.
// `not_equivalent` is only reported once one side's class is exhausted;
// exceeding cap yields `undecided`.
EquivalenceResult are_kempe_equivalent(const Graph& g, const Coloring& c1,
                                       const Coloring& c2,
                                       long long cap = kDefaultStateCap);

// Color permutation pi with pi(c1) = c2 if one exists. pi is represented
// 1-based: pi[i-1] is the image of color i.
std::optional<std::vector<int>> same_up_to_color_permutation(const Coloring& c1,
                                                             const Coloring& c2);

// Certifies non-equivalence: true iff (a) under c1 every bicolored subgraph
// G(i,j) has at most one connected component, and (b) c2 is not a color
// permutation of c1. Under (a) every Kempe change is a global swap of two
// colors, so the class of c1 is exactly its permutation orbit.
bool rigidity_obstruction(const Graph& g, const Coloring& c1, const Coloring& c2);

} // namespace kempe

#endif
