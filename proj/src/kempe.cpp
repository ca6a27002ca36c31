#include "kempe/kempe.hpp"

#include <algorithm>
#include <string>

#include "kempe/errors.hpp"
#include "kempe/graph_ops.hpp"

namespace kempe {

namespace {

void check_color_pair(const Coloring& c, int i, int j) {
    if (i == j) throw input_error("color pair requires two distinct colors, got i=j=" +
                                  std::to_string(i));
    if (i < 1 || i > c.k() || j < 1 || j > c.k())
        throw input_error("color pair (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside palette 1.." + std::to_string(c.k()));
}

void check_sizes(const Graph& g, const Coloring& c) {
    if (c.size() != g.vertex_count())
        throw input_error("coloring covers " + std::to_string(c.size()) +
                          " vertices, graph has " + std::to_string(g.vertex_count()));
}

// Connected components of G(i,j) via BFS restricted to bicolored vertices,
// roots taken in ascending vertex order (so components come out ordered by
// their smallest vertex).
std::vector<std::vector<int>> bicolored_components(const Graph& g, const Coloring& c,
                                                   int i, int j) {
    const int n = g.vertex_count();
    const uint8_t a = static_cast<uint8_t>(i - 1), b = static_cast<uint8_t>(j - 1);
    const auto& raw = c.raw();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> out;
    std::vector<int> queue;
    auto in_pair = [&](int v) {
        uint8_t cv = raw[static_cast<size_t>(v)];
        return cv == a || cv == b;
    };
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<size_t>(root)] || !in_pair(root)) continue;
        seen[static_cast<size_t>(root)] = 1;
        queue.assign(1, root);
        for (size_t head = 0; head < queue.size(); ++head)
            for (int u : g.neighbors(queue[head]))
                if (!seen[static_cast<size_t>(u)] && in_pair(u)) {
                    seen[static_cast<size_t>(u)] = 1;
                    queue.push_back(u);
                }
        std::sort(queue.begin(), queue.end());
        out.push_back(queue);
    }
    return out;
}

std::vector<uint8_t> swapped_raw(const Coloring& c, int i, int j,
                                 const std::vector<int>& vertices) {
    const uint8_t a = static_cast<uint8_t>(i - 1), b = static_cast<uint8_t>(j - 1);
    std::vector<uint8_t> raw = c.raw();
    for (int v : vertices) {
        uint8_t& cv = raw[static_cast<size_t>(v)];
        if (cv == a)
            cv = b;
        else if (cv == b)
            cv = a;
        else
            throw input_error("vertex " + std::to_string(v) + " is not colored " +
                              std::to_string(i) + " or " + std::to_string(j));
    }
    return raw;
}

} // namespace

InducedSubgraph bicolored_subgraph(const Graph& g, const Coloring& c, int i, int j) {
    check_sizes(g, c);
    check_color_pair(c, i, j);
    std::vector<int> vertices;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.color(v) == i || c.color(v) == j) vertices.push_back(v);
    return induced_subgraph(g, std::move(vertices));
}

std::vector<KempeComponent> kempe_components(const Graph& g, const Coloring& c, int i,
                                             int j) {
    check_sizes(g, c);
    check_color_pair(c, i, j);
    if (i > j) std::swap(i, j);
    const uint64_t fp = c.fingerprint();
    std::vector<KempeComponent> out;
    for (auto& verts : bicolored_components(g, c, i, j))
        out.push_back(KempeComponent{i, j, std::move(verts), fp});
    return out;
}

Coloring apply_kempe_change(const Coloring& c, const KempeComponent& comp) {
    if (comp.source_fingerprint != c.fingerprint())
        throw input_error("stale Kempe component: computed from a different coloring");
    return Coloring::from_raw(c.k(), swapped_raw(c, comp.color_i, comp.color_j, comp.vertices));
}

std::vector<Coloring> kempe_neighbors(const Graph& g, const Coloring& c) {
    check_sizes(g, c);
    std::vector<Coloring> out;
    for (int i = 1; i <= c.k(); ++i)
        for (int j = i + 1; j <= c.k(); ++j)
            for (const auto& verts : bicolored_components(g, c, i, j))
                out.push_back(Coloring::from_raw(c.k(), swapped_raw(c, i, j, verts)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void require_proper(const Graph& g, const Coloring& c, const char* who) {
    if (!is_proper(g, c))
        throw input_error(std::string(who) + " requires a proper coloring");
}

// Components of one side's induced subgraph G[S] (edges are exactly the
// added edges inside that side), ordered by smallest vertex.
std::vector<std::vector<int>> side_components(const PartitionedGraph& pg, bool s_side) {
    const auto& side = s_side ? pg.side_s() : pg.side_t();
    const int n = pg.graph().vertex_count();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& [u, v] : pg.added_edges())
        if (pg.in_s(u) == s_side) {
            adj[static_cast<size_t>(u)].push_back(v);
            adj[static_cast<size_t>(v)].push_back(u);
        }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> out;
    std::vector<int> queue;
    for (int root : side) {
        if (seen[static_cast<size_t>(root)]) continue;
        seen[static_cast<size_t>(root)] = 1;
        queue.assign(1, root);
        for (size_t head = 0; head < queue.size(); ++head)
            for (int u : adj[static_cast<size_t>(queue[head])])
                if (!seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = 1;
                    queue.push_back(u);
                }
        std::sort(queue.begin(), queue.end());
        out.push_back(queue);
    }
    return out;
}

} // namespace

RecoloringResult clear_color_from_sides(const PartitionedGraph& pg, const Coloring& c,
                                        int i, int j) {
    const Graph& g = pg.graph();
    check_sizes(g, c);
    check_color_pair(c, i, j);
    require_proper(g, c, "clear_color_from_sides");

    for (const auto& [u, v] : pg.added_edges()) {
        int cu = c.color(u), cv = c.color(v);
        if ((cu == i && cv == j) || (cu == j && cv == i))
            throw input_error("added edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") is a (" + std::to_string(i) + "," + std::to_string(j) +
                              ")-edge");
    }

    std::vector<uint8_t> raw = c.raw();
    std::vector<KempeChange> changes;
    for (const auto& comp : bicolored_components(g, c, std::min(i, j), std::max(i, j))) {
        // With no added (i,j)-edge, every edge of this component crosses S-T,
        // so the color is constant on each side of the component.
        int s_color = 0, t_color = 0;
        for (int v : comp) {
            int col = c.color(v);
            int& slot = pg.in_s(v) ? s_color : t_color;
            if (slot == 0)
                slot = col;
            else if (slot != col)
                throw internal_error("bicolored component mixes colors within one side");
        }
        if (s_color != 0 && t_color != 0 && s_color == t_color)
            throw internal_error("bicolored component has equal colors on both sides");
        bool flip = (s_color == i) || (s_color == 0 && t_color == j);
        if (!flip) continue;
        changes.push_back(KempeChange{std::min(i, j), std::max(i, j), comp});
        for (int v : comp) {
            uint8_t& cv = raw[static_cast<size_t>(v)];
            cv = (cv == static_cast<uint8_t>(i - 1)) ? static_cast<uint8_t>(j - 1)
                                                     : static_cast<uint8_t>(i - 1);
        }
    }

    Coloring result = Coloring::from_raw(c.k(), std::move(raw));
    for (int v : pg.side_s())
        if (result.color(v) == i)
            throw internal_error("clear_color_from_sides left color i in S");
    for (int v : pg.side_t())
        if (result.color(v) == j)
            throw internal_error("clear_color_from_sides left color j in T");
    return RecoloringResult{std::move(result), std::move(changes)};
}

RecoloringResult seed_color_in_components(const PartitionedGraph& pg, const Coloring& c,
                                          int i, int j) {
    const Graph& g = pg.graph();
    check_sizes(g, c);
    check_color_pair(c, i, j);
    require_proper(g, c, "seed_color_in_components");

    const long long pairs = static_cast<long long>(c.k()) * (c.k() - 1) / 2;
    if (pg.ell() >= pairs)
        throw input_error("requires ell < C(k,2): ell=" + std::to_string(pg.ell()) +
                          ", C(k,2)=" + std::to_string(pairs));
    for (int v : pg.side_s())
        if (c.color(v) == i)
            throw input_error("color " + std::to_string(i) + " already used in S (vertex " +
                              std::to_string(v) + ")");
    for (int v : pg.side_t())
        if (c.color(v) == j)
            throw input_error("color " + std::to_string(j) + " already used in T (vertex " +
                              std::to_string(v) + ")");

    std::vector<uint8_t> raw = c.raw();
    std::vector<KempeChange> changes;
    auto color_at = [&raw](int v) { return static_cast<int>(raw[static_cast<size_t>(v)]) + 1; };

    // Give every component of G[S] a j vertex (resp. G[T] an i vertex) by a
    // Kempe change on a singleton component: the chosen vertex is isolated in
    // G(r, target) because properness bars r on neighbors, the component bars
    // the target inside the side, and the opposite side does not use it.
    auto seed_side = [&](bool s_side, int target) {
        for (const auto& comp : side_components(pg, s_side)) {
            bool has_target = false;
            for (int v : comp)
                if (color_at(v) == target) {
                    has_target = true;
                    break;
                }
            if (has_target) continue;
            int v = comp.front();
            int r = color_at(v);
            for (int u : g.neighbors(v))
                if (color_at(u) == target)
                    throw internal_error("seed vertex is not isolated in its bicolored subgraph");
            raw[static_cast<size_t>(v)] = static_cast<uint8_t>(target - 1);
            changes.push_back(
                KempeChange{std::min(r, target), std::max(r, target), {v}});
        }
    };
    seed_side(true, j);
    seed_side(false, i);

    Coloring result = Coloring::from_raw(c.k(), std::move(raw));
    for (bool s_side : {true, false}) {
        int target = s_side ? j : i;
        for (const auto& comp : side_components(pg, s_side)) {
            bool has_target = false;
            for (int v : comp)
                if (result.color(v) == target) has_target = true;
            if (!has_target)
                throw internal_error("seed_color_in_components left an unseeded component");
        }
    }
    return RecoloringResult{std::move(result), std::move(changes)};
}

Coloring recolor_free_vertex(const Graph& g, const Coloring& c, int v, int color) {
    check_sizes(g, c);
    if (v < 0 || v >= g.vertex_count())
        throw input_error("vertex " + std::to_string(v) + " out of range");
    if (color < 1 || color > c.k())
        throw input_error("color " + std::to_string(color) + " outside palette");
    if (c.color(v) == color) return c;
    for (int u : g.neighbors(v))
        if (c.color(u) == color)
            throw input_error("neighbor " + std::to_string(u) + " of vertex " +
                              std::to_string(v) + " already has color " +
                              std::to_string(color));
    std::vector<uint8_t> raw = c.raw();
    raw[static_cast<size_t>(v)] = static_cast<uint8_t>(color - 1);
    return Coloring::from_raw(c.k(), std::move(raw));
}

Coloring replay_changes(const Graph& g, const Coloring& start,
                        std::span<const KempeChange> changes) {
    Coloring current = start;
    for (size_t step = 0; step < changes.size(); ++step) {
        const KempeChange& ch = changes[step];
        bool matched = false;
        for (const auto& comp : kempe_components(g, current, ch.color_i, ch.color_j)) {
            if (comp.vertices == ch.vertices) {
                current = apply_kempe_change(current, comp);
                matched = true;
                break;
            }
        }
        if (!matched)
            throw input_error("change " + std::to_string(step) +
                              " does not match any Kempe component of the current coloring");
    }
    return current;
}

} // namespace kempe
