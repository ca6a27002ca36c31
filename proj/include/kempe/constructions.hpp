#ifndef KEMPE_CONSTRUCTIONS_HPP
#define KEMPE_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/partitioned.hpp"

namespace kempe {

/// A graph with two k-colorings certified non-Kempe-equivalent via the
/// rigidity obstruction (every bicolored subgraph of c1 connected, c2 not a
/// color permutation of c1). Generators self-check all invariants.
struct CertifiedPair {
    PartitionedGraph pg;
    Coloring c1; // canonical coloring, read off the construction
    Coloring c2; // alternative coloring
    int k = 0;
};

// Tight example for k >= 3: B+M_l graph with l = C(k,2) and Kc(G,k) >= 2.
// S carries one added edge per color pair {p,q} (endpoints colored p,q),
// T is k isolated vertices colored 1..k, base = all S-T pairs with
// differing canonical colors. c2 colors every added edge (2,3) and all of
// T with 1.
CertifiedPair prop3_graph(int k);

// Tight example for k >= 4: (k-1)-colorable B+E_l graph with l = C(k,2)
// and Kc(G,k) >= 2. Added edges induce K_{k-2} plus 2k-3 independent
// edges; |S| = 5k-8, |T| = k. c2 is found by lexicographic search for a
// proper coloring that is not a color permutation of c1.
CertifiedPair prop4i_graph(int k);

// Tight example for k >= 4: k-chromatic B+E_l graph with l = C(k,2)-1 and
// Kc(G,k) >= 2. |S| = k, |T| = 3 with one added edge in T.
CertifiedPair prop4ii_graph(int k);

/// The gadget expansion G -> G**: each vertex v becomes an independent set
/// I_v of size deg(v) plus an apex pair x_v, y_v joined to each other and
/// to all of I_v; each base edge uv becomes one matching edge between I_u
/// and I_v (these matching edges form G*).
struct GadgetMap {
    Graph base;
    Graph gadget;                             // G**
    std::vector<std::vector<int>> i_sets;     // per base vertex
    std::vector<std::pair<int, int>> apex;    // per base vertex: (x_v, y_v)
    std::vector<Edge> matching;               // E(G*), one per base edge
    PartitionedGraph partitioned;             // B+M_l witness, l = |E|+|V|
};

// Requires base connected with no degree-0 vertex. Vertex order in G**:
// all I-sets grouped by base vertex, then apex pairs.
GadgetMap gstarstar(const Graph& base);

enum class AddedShape { matching, paths, cycles4plus, complete_bipartite, any };

AddedShape parse_added_shape(const std::string& name); // throws input_error
std::string added_shape_name(AddedShape shape);

struct RandomBpeParams {
    int n_s = 0, n_t = 0;
    double base_density = 0.5;
    int ell = 0;
    AddedShape shape = AddedShape::any;
    uint64_t seed = 0;
};

// Seeded random B+E_l instance whose added-edge components belong to the
// requested shape class. Deterministic under seed; infeasible parameter
// combinations are an input error.
PartitionedGraph random_bpe(const RandomBpeParams& params);

enum class ComponentClass { path, cycle, complete_bipartite, other };

struct AddedComponent {
    std::vector<int> vertices; // sorted
    ComponentClass cls = ComponentClass::other;
    int cycle_length = 0;      // set when cls == cycle
    int part_a = 0, part_b = 0; // set when cls == complete_bipartite
};

// Connected components of (V, added_edges), isolated vertices omitted,
// classified exactly. Single edges classify as path; triangles as cycle(3);
// classification precedence is path, cycle, complete bipartite, other.
std::vector<AddedComponent> classify_added_components(const PartitionedGraph& pg);

// True iff every added component is a path, a cycle of length >= 4 or a
// complete bipartite graph (the added-component hypothesis of the main
// reconfiguration theorem).
bool added_components_admissible(const PartitionedGraph& pg);

} // namespace kempe

#endif
