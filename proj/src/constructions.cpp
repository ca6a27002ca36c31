#include "kempe/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <tuple>

#include "kempe/errors.hpp"
#include "kempe/graph_ops.hpp"
#include "kempe/reconfig.hpp"
#include "kempe/rng.hpp"

namespace kempe {

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

void certify(CertifiedPair& pair, const char* who) {
    if (!is_proper(pair.pg.graph(), pair.c1) || !is_proper(pair.pg.graph(), pair.c2))
        throw internal_error(std::string(who) + ": generated coloring is not proper");
    if (!rigidity_obstruction(pair.pg.graph(), pair.c1, pair.c2))
        throw internal_error(std::string(who) + ": rigidity certificate failed");
}

// Lexicographically first proper k-coloring that is not a color permutation
// of c1. Every generated family admits one; the scan is bounded so a
// construction bug cannot spin forever.
Coloring search_non_permutation_coloring(const Graph& g, int k, const Coloring& c1) {
    std::optional<Coloring> found;
    long long budget = 2'000'000;
    for_each_coloring(g, k, [&](const Coloring& cand) {
        if (!same_up_to_color_permutation(c1, cand).has_value()) {
            found = cand;
            return false;
        }
        return --budget > 0;
    });
    if (!found)
        throw internal_error("no non-permutation coloring found within search budget");
    return *found;
}

} // namespace

CertifiedPair prop3_graph(int k) {
    if (k < 3) throw input_error("prop3_graph requires k >= 3");
    const int n_s = k * (k - 1);
    const int n = n_s + k;

    std::vector<int> canonical(static_cast<size_t>(n), 0);
    std::vector<int> alt(static_cast<size_t>(n), 0);
    std::vector<Edge> added;
    // One added edge per color pair {p,q}; the p-colored endpoint gets the
    // lower vertex index.
    int next = 0;
    for (int p = 1; p <= k; ++p)
        for (int q = p + 1; q <= k; ++q) {
            canonical[static_cast<size_t>(next)] = p;
            canonical[static_cast<size_t>(next + 1)] = q;
            alt[static_cast<size_t>(next)] = 2;
            alt[static_cast<size_t>(next + 1)] = 3;
            added.push_back({next, next + 1});
            next += 2;
        }
    for (int col = 1; col <= k; ++col) {
        canonical[static_cast<size_t>(n_s + col - 1)] = col;
        alt[static_cast<size_t>(n_s + col - 1)] = 1;
    }

    std::vector<Edge> base;
    for (int s = 0; s < n_s; ++s)
        for (int t = n_s; t < n; ++t)
            if (canonical[static_cast<size_t>(s)] != canonical[static_cast<size_t>(t)])
                base.push_back({s, t});

    std::vector<Edge> all = base;
    all.insert(all.end(), added.begin(), added.end());
    std::vector<int> side_s(static_cast<size_t>(n_s)), side_t(static_cast<size_t>(k));
    for (int v = 0; v < n_s; ++v) side_s[static_cast<size_t>(v)] = v;
    for (int v = n_s; v < n; ++v) side_t[static_cast<size_t>(v - n_s)] = v;

    CertifiedPair pair;
    pair.pg = PartitionedGraph(Graph(n, all), side_s, side_t, base, added);
    pair.c1 = Coloring(k, canonical);
    pair.c2 = Coloring(k, alt);
    pair.k = k;
    if (pair.pg.ell() != choose2(k) || !pair.pg.is_matching())
        throw internal_error("prop3_graph: added edges are not a C(k,2) matching");
    certify(pair, "prop3_graph");
    return pair;
}

CertifiedPair prop4i_graph(int k) {
    if (k < 4) throw input_error("prop4i_graph requires k >= 4");
    const int clique_size = k - 2;
    const int n_pairs = 2 * k - 3;
    const int n_s = clique_size + 2 * n_pairs; // = 5k - 8
    const int n = n_s + k;

    std::vector<int> canonical(static_cast<size_t>(n), 0);
    std::vector<Edge> added;
    for (int v = 0; v < clique_size; ++v) {
        canonical[static_cast<size_t>(v)] = v + 1;
        for (int u = 0; u < v; ++u) added.push_back({u, v});
    }
    // Independent edges colored (1,k-1),...,(k-2,k-1),(1,k),...,(k-1,k).
    std::vector<std::pair<int, int>> pair_colors;
    for (int p = 1; p <= k - 2; ++p) pair_colors.push_back({p, k - 1});
    for (int p = 1; p <= k - 1; ++p) pair_colors.push_back({p, k});
    int next = clique_size;
    for (const auto& [p, q] : pair_colors) {
        canonical[static_cast<size_t>(next)] = p;
        canonical[static_cast<size_t>(next + 1)] = q;
        added.push_back({next, next + 1});
        next += 2;
    }
    for (int col = 1; col <= k; ++col) canonical[static_cast<size_t>(n_s + col - 1)] = col;

    std::vector<Edge> base;
    for (int s = 0; s < n_s; ++s)
        for (int t = n_s; t < n; ++t)
            if (canonical[static_cast<size_t>(s)] != canonical[static_cast<size_t>(t)])
                base.push_back({s, t});

    std::vector<Edge> all = base;
    all.insert(all.end(), added.begin(), added.end());
    std::vector<int> side_s, side_t;
    for (int v = 0; v < n_s; ++v) side_s.push_back(v);
    for (int v = n_s; v < n; ++v) side_t.push_back(v);

    CertifiedPair pair;
    pair.pg = PartitionedGraph(Graph(n, all), side_s, side_t, base, added);
    pair.c1 = Coloring(k, canonical);
    pair.k = k;
    if (pair.pg.ell() != choose2(k))
        throw internal_error("prop4i_graph: expected C(k,2) added edges");
    if (!is_k_colorable(pair.pg.graph(), k - 1))
        throw internal_error("prop4i_graph: instance is not (k-1)-colorable");
    pair.c2 = search_non_permutation_coloring(pair.pg.graph(), k, pair.c1);
    certify(pair, "prop4i_graph");
    return pair;
}

CertifiedPair prop4ii_graph(int k) {
    if (k < 4) throw input_error("prop4ii_graph requires k >= 4");
    const int n_s = k; // K_{k-1} on 0..k-2 plus v = k-1
    const int n = n_s + 3;
    const int x = n_s, y = n_s + 1, z = n_s + 2;

    std::vector<int> canonical(static_cast<size_t>(n), 0);
    std::vector<Edge> added;
    for (int v = 0; v < k - 1; ++v) {
        canonical[static_cast<size_t>(v)] = v + 1;
        for (int u = 0; u < v; ++u) added.push_back({u, v});
    }
    canonical[static_cast<size_t>(k - 1)] = k - 2; // v, beside the clique
    for (int u = 0; u <= k - 4; ++u) added.push_back({u, k - 1}); // v joins colors 1..k-3
    added.push_back({x, y});
    canonical[static_cast<size_t>(x)] = k - 1;
    canonical[static_cast<size_t>(y)] = k;
    canonical[static_cast<size_t>(z)] = k;

    // Complete bipartite S x {x,y,z} minus the edge {x, clique vertex colored
    // k-1} and minus the edge {y, clique vertex colored k-2}.
    std::vector<Edge> base;
    for (int s = 0; s < n_s; ++s)
        for (int t : {x, y, z}) {
            if (t == x && s == k - 2) continue;
            if (t == y && s == k - 3) continue;
            base.push_back({s, t});
        }

    std::vector<Edge> all = base;
    all.insert(all.end(), added.begin(), added.end());
    std::vector<int> side_s, side_t{x, y, z};
    for (int v = 0; v < n_s; ++v) side_s.push_back(v);

    CertifiedPair pair;
    pair.pg = PartitionedGraph(Graph(n, all), side_s, side_t, base, added);
    pair.c1 = Coloring(k, canonical);
    pair.k = k;
    if (pair.pg.ell() != choose2(k) - 1)
        throw internal_error("prop4ii_graph: expected C(k,2)-1 added edges");
    if (chromatic_number(pair.pg.graph()) != k)
        throw internal_error("prop4ii_graph: instance is not k-chromatic");
    pair.c2 = search_non_permutation_coloring(pair.pg.graph(), k, pair.c1);
    certify(pair, "prop4ii_graph");
    return pair;
}

GadgetMap gstarstar(const Graph& base) {
    const int n = base.vertex_count();
    if (n == 0) throw input_error("gstarstar requires a nonempty base graph");
    for (int v = 0; v < n; ++v)
        if (base.degree(v) == 0)
            throw input_error("gstarstar: base vertex " + std::to_string(v) +
                              " has degree 0");
    if (!is_connected(base)) throw input_error("gstarstar: base graph is disconnected");

    const int m = base.edge_count();
    GadgetMap map;
    map.base = base;
    map.i_sets.resize(static_cast<size_t>(n));
    int next = 0;
    for (int v = 0; v < n; ++v) {
        for (int d = 0; d < base.degree(v); ++d) map.i_sets[static_cast<size_t>(v)].push_back(next++);
    }
    for (int v = 0; v < n; ++v) {
        map.apex.push_back({next, next + 1});
        next += 2;
    }

    // One matching edge per base edge, consuming I-set slots in edge order.
    std::vector<size_t> cursor(static_cast<size_t>(n), 0);
    std::vector<Edge> edges;
    for (const auto& [u, v] : base.edges()) {
        int a = map.i_sets[static_cast<size_t>(u)][cursor[static_cast<size_t>(u)]++];
        int b = map.i_sets[static_cast<size_t>(v)][cursor[static_cast<size_t>(v)]++];
        map.matching.push_back(make_edge(a, b));
    }
    edges = map.matching;
    std::vector<Edge> apex_edges;
    for (int v = 0; v < n; ++v) {
        auto [xv, yv] = map.apex[static_cast<size_t>(v)];
        apex_edges.push_back({xv, yv});
        for (int w : map.i_sets[static_cast<size_t>(v)]) {
            edges.push_back(make_edge(w, xv));
            edges.push_back(make_edge(w, yv));
        }
    }
    edges.insert(edges.end(), apex_edges.begin(), apex_edges.end());
    map.gadget = Graph(2 * m + 2 * n, edges);

    // B+M_l witness: remove the candidate added set (G* matching plus the
    // apex-apex edges) and 2-color what remains.
    std::vector<Edge> candidate = map.matching;
    candidate.insert(candidate.end(), apex_edges.begin(), apex_edges.end());
    std::sort(candidate.begin(), candidate.end());
    std::vector<Edge> remaining;
    for (const auto& e : map.gadget.edges())
        if (!std::binary_search(candidate.begin(), candidate.end(), e))
            remaining.push_back(e);
    auto parts = bipartition(Graph(map.gadget.vertex_count(), remaining));
    if (!parts) throw internal_error("gstarstar: residual graph is not bipartite");
    map.partitioned = PartitionedGraph(map.gadget, parts->side_a, parts->side_b,
                                       remaining, candidate);
    if (!map.partitioned.is_matching())
        throw internal_error("gstarstar: added edges do not form a matching");
    return map;
}

AddedShape parse_added_shape(const std::string& name) {
    if (name == "matching") return AddedShape::matching;
    if (name == "paths") return AddedShape::paths;
    if (name == "cycles4plus") return AddedShape::cycles4plus;
    if (name == "complete_bipartite") return AddedShape::complete_bipartite;
    if (name == "any") return AddedShape::any;
    throw input_error("unknown added-edge shape: " + name);
}

std::string added_shape_name(AddedShape shape) {
    switch (shape) {
        case AddedShape::matching: return "matching";
        case AddedShape::paths: return "paths";
        case AddedShape::cycles4plus: return "cycles4plus";
        case AddedShape::complete_bipartite: return "complete_bipartite";
        case AddedShape::any: return "any";
    }
    throw internal_error("unreachable shape");
}

namespace {

// Pop a uniformly chosen vertex from a free list (order not preserved).
int take_random(std::vector<int>& free_list, SeededRng& rng) {
    size_t at = static_cast<size_t>(rng.below(free_list.size()));
    int v = free_list[at];
    free_list[at] = free_list.back();
    free_list.pop_back();
    return v;
}

} // namespace

PartitionedGraph random_bpe(const RandomBpeParams& params) {
    const int n_s = params.n_s, n_t = params.n_t, ell = params.ell;
    if (n_s < 0 || n_t < 0) throw input_error("negative side size");
    if (ell < 0) throw input_error("negative ell");
    if (params.base_density < 0.0 || params.base_density > 1.0)
        throw input_error("base_density outside [0,1]");
    const int n = n_s + n_t;
    SeededRng rng(params.seed);

    // Free vertices per side, drawn from as shaped components are placed.
    std::vector<int> free_side[2];
    for (int v = 0; v < n_s; ++v) free_side[0].push_back(v);
    for (int v = n_s; v < n; ++v) free_side[1].push_back(v);

    std::vector<Edge> added;
    auto sides_with = [&](size_t need) {
        std::vector<int> out;
        for (int s : {0, 1})
            if (free_side[s].size() >= need) out.push_back(s);
        return out;
    };

    int remaining = ell;
    switch (params.shape) {
        case AddedShape::matching: {
            while (remaining > 0) {
                auto sides = sides_with(2);
                if (sides.empty())
                    throw input_error("matching of size " + std::to_string(ell) +
                                      " does not fit the sides");
                int s = rng.pick(sides);
                int a = take_random(free_side[s], rng);
                int b = take_random(free_side[s], rng);
                added.push_back(make_edge(a, b));
                --remaining;
            }
            break;
        }
        case AddedShape::paths: {
            while (remaining > 0) {
                auto sides = sides_with(2);
                if (sides.empty())
                    throw input_error("paths totalling " + std::to_string(ell) +
                                      " edges do not fit the sides");
                int s = rng.pick(sides);
                int max_len = std::min<int>(remaining,
                                            static_cast<int>(free_side[s].size()) - 1);
                int len = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_len)));
                int prev = take_random(free_side[s], rng);
                for (int step = 0; step < len; ++step) {
                    int cur = take_random(free_side[s], rng);
                    added.push_back(make_edge(prev, cur));
                    prev = cur;
                }
                remaining -= len;
            }
            break;
        }
        case AddedShape::cycles4plus: {
            while (remaining > 0) {
                std::vector<std::pair<int, int>> options; // (side, length)
                for (int s : {0, 1}) {
                    int cap = std::min<int>(remaining, static_cast<int>(free_side[s].size()));
                    for (int len = 4; len <= cap; ++len)
                        if (remaining - len == 0 || remaining - len >= 4)
                            options.push_back({s, len});
                }
                if (options.empty())
                    throw input_error("cannot decompose ell=" + std::to_string(ell) +
                                      " into cycles of length >= 4 within the sides");
                auto [s, len] = options[static_cast<size_t>(rng.below(options.size()))];
                std::vector<int> ring;
                for (int step = 0; step < len; ++step) ring.push_back(take_random(free_side[s], rng));
                for (int step = 0; step < len; ++step)
                    added.push_back(make_edge(ring[static_cast<size_t>(step)],
                                              ring[static_cast<size_t>((step + 1) % len)]));
                remaining -= len;
            }
            break;
        }
        case AddedShape::complete_bipartite: {
            while (remaining > 0) {
                std::vector<std::tuple<int, int, int>> options; // (side, a, b)
                for (int s : {0, 1}) {
                    int free_count = static_cast<int>(free_side[s].size());
                    for (int a = 1; a <= free_count; ++a)
                        for (int b = a; a + b <= free_count; ++b)
                            if (a * b <= remaining) options.push_back({s, a, b});
                }
                if (options.empty())
                    throw input_error("cannot fit complete-bipartite components totalling " +
                                      std::to_string(ell) + " edges");
                auto [s, a, b] = options[static_cast<size_t>(rng.below(options.size()))];
                std::vector<int> left, right;
                for (int step = 0; step < a; ++step) left.push_back(take_random(free_side[s], rng));
                for (int step = 0; step < b; ++step) right.push_back(take_random(free_side[s], rng));
                for (int u : left)
                    for (int v : right) added.push_back(make_edge(u, v));
                remaining -= a * b;
            }
            break;
        }
        case AddedShape::any: {
            std::vector<Edge> pool;
            for (int u = 0; u < n_s; ++u)
                for (int v = u + 1; v < n_s; ++v) pool.push_back({u, v});
            for (int u = n_s; u < n; ++u)
                for (int v = u + 1; v < n; ++v) pool.push_back({u, v});
            if (static_cast<size_t>(ell) > pool.size())
                throw input_error("ell exceeds the number of within-side pairs");
            for (int step = 0; step < ell; ++step) {
                size_t at = static_cast<size_t>(rng.below(pool.size()));
                added.push_back(pool[at]);
                pool[at] = pool.back();
                pool.pop_back();
            }
            std::sort(added.begin(), added.end());
            break;
        }
    }

    std::vector<Edge> base;
    for (int s = 0; s < n_s; ++s)
        for (int t = n_s; t < n; ++t)
            if (rng.unit() < params.base_density) base.push_back({s, t});

    std::vector<Edge> all = base;
    all.insert(all.end(), added.begin(), added.end());
    std::vector<int> side_s, side_t;
    for (int v = 0; v < n_s; ++v) side_s.push_back(v);
    for (int v = n_s; v < n; ++v) side_t.push_back(v);
    return PartitionedGraph(Graph(n, all), side_s, side_t, base, added);
}

std::vector<AddedComponent> classify_added_components(const PartitionedGraph& pg) {
    const int n = pg.graph().vertex_count();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& [u, v] : pg.added_edges()) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<AddedComponent> out;
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<size_t>(root)] || adj[static_cast<size_t>(root)].empty()) continue;
        std::vector<int> comp{root};
        seen[static_cast<size_t>(root)] = 1;
        for (size_t head = 0; head < comp.size(); ++head)
            for (int u : adj[static_cast<size_t>(comp[head])])
                if (!seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());

        AddedComponent item;
        item.vertices = comp;
        int edge_count = 0, max_degree = 0;
        for (int v : comp) {
            int d = static_cast<int>(adj[static_cast<size_t>(v)].size());
            edge_count += d;
            max_degree = std::max(max_degree, d);
        }
        edge_count /= 2;
        const int size = static_cast<int>(comp.size());
        bool all_degree_two = true;
        for (int v : comp)
            if (static_cast<int>(adj[static_cast<size_t>(v)].size()) != 2) all_degree_two = false;

        if (edge_count == size - 1 && max_degree <= 2) {
            item.cls = ComponentClass::path;
        } else if (all_degree_two && edge_count == size) {
            item.cls = ComponentClass::cycle;
            item.cycle_length = size;
        } else {
            // Complete bipartite? 2-color the component and count.
            auto sub = induced_subgraph(Graph(n, pg.added_edges()), comp);
            auto parts = bipartition(sub.graph);
            if (parts &&
                static_cast<int>(parts->side_a.size() * parts->side_b.size()) == edge_count) {
                item.cls = ComponentClass::complete_bipartite;
                item.part_a = static_cast<int>(
                    std::min(parts->side_a.size(), parts->side_b.size()));
                item.part_b = static_cast<int>(
                    std::max(parts->side_a.size(), parts->side_b.size()));
            } else {
                item.cls = ComponentClass::other;
            }
        }
        out.push_back(std::move(item));
    }
    return out;
}

bool added_components_admissible(const PartitionedGraph& pg) {
    for (const auto& comp : classify_added_components(pg)) {
        switch (comp.cls) {
            case ComponentClass::path:
            case ComponentClass::complete_bipartite: break;
            case ComponentClass::cycle:
                if (comp.cycle_length < 4) return false;
                break;
            case ComponentClass::other: return false;
        }
    }
    return true;
}

} // namespace kempe
