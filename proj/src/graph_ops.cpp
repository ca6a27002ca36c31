#include "kempe/graph_ops.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

bool is_proper(const Graph& g, const Coloring& c) {
    if (c.size() != g.vertex_count())
        throw input_error("coloring covers " + std::to_string(c.size()) +
                          " vertices, graph has " + std::to_string(g.vertex_count()));
    for (const auto& [u, v] : g.edges())
        if (c.color(u) == c.color(v)) return false;
    return true;
}

std::vector<int> colors_used(const Coloring& c, const std::vector<int>& r) {
    std::vector<char> seen(static_cast<size_t>(c.k()) + 1, 0);
    for (int v : r) {
        if (v < 0 || v >= c.size())
            throw input_error("vertex " + std::to_string(v) + " out of range");
        seen[static_cast<size_t>(c.color(v))] = 1;
    }
    std::vector<int> out;
    for (int col = 1; col <= c.k(); ++col)
        if (seen[static_cast<size_t>(col)]) out.push_back(col);
    return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<size_t>(n), -1);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (side[static_cast<size_t>(root)] != -1) continue;
        side[static_cast<size_t>(root)] = 0;
        queue.assign(1, root);
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int u : g.neighbors(v)) {
                if (side[static_cast<size_t>(u)] == -1) {
                    side[static_cast<size_t>(u)] = 1 - side[static_cast<size_t>(v)];
                    queue.push_back(u);
                } else if (side[static_cast<size_t>(u)] == side[static_cast<size_t>(v)]) {
                    return std::nullopt; // odd cycle
                }
            }
        }
    }
    Bipartition out;
    for (int v = 0; v < n; ++v)
        (side[static_cast<size_t>(v)] == 0 ? out.side_a : out.side_b).push_back(v);
    return out;
}

int degeneracy(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    std::vector<char> removed(static_cast<size_t>(n), 0);
    int result = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (removed[static_cast<size_t>(v)]) continue;
            if (best == -1 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(best)])
                best = v; // ties fall to the lowest index
        }
        result = std::max(result, deg[static_cast<size_t>(best)]);
        removed[static_cast<size_t>(best)] = 1;
        for (int u : g.neighbors(best))
            if (!removed[static_cast<size_t>(u)]) --deg[static_cast<size_t>(u)];
    }
    return result;
}

namespace {

// Backtracking k-colorability over a fixed vertex order, with the classic
// symmetry cut: a vertex may only open one color beyond those already used.
class ColorabilitySearch {
public:
    explicit ColorabilitySearch(const Graph& g) : g_(g) {
        const int n = g.vertex_count();
        order_.resize(static_cast<size_t>(n));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        earlier_.resize(static_cast<size_t>(n));
        std::vector<int> pos(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order_[static_cast<size_t>(i)])] = i;
        for (int i = 0; i < n; ++i) {
            int v = order_[static_cast<size_t>(i)];
            for (int u : g.neighbors(v))
                if (pos[static_cast<size_t>(u)] < i)
                    earlier_[static_cast<size_t>(i)].push_back(u);
        }
    }

    bool colorable(int k) {
        if (k < 0) return false;
        if (g_.vertex_count() == 0) return true;
        if (k == 0) return false;
        color_.assign(static_cast<size_t>(g_.vertex_count()), 0);
        return place(0, k, 0);
    }

private:
    bool place(int idx, int k, int used) {
        if (idx == static_cast<int>(order_.size())) return true;
        int v = order_[static_cast<size_t>(idx)];
        int limit = std::min(k, used + 1);
        for (int col = 1; col <= limit; ++col) {
            bool ok = true;
            for (int u : earlier_[static_cast<size_t>(idx)])
                if (color_[static_cast<size_t>(u)] == col) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color_[static_cast<size_t>(v)] = col;
            if (place(idx + 1, k, std::max(used, col))) return true;
            color_[static_cast<size_t>(v)] = 0;
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> order_;
    std::vector<std::vector<int>> earlier_; // per order position, earlier neighbors
    std::vector<int> color_;
};

int greedy_clique_bound(const Graph& g) {
    // Greedy clique from each vertex; a cheap chi lower bound.
    int best = g.vertex_count() > 0 ? 1 : 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> clique{s};
        for (int v : g.neighbors(s)) {
            bool joins = true;
            for (int u : clique)
                if (!g.has_edge(u, v)) {
                    joins = false;
                    break;
                }
            if (joins) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

void check_size_cap(const Graph& g, int size_cap) {
    if (g.vertex_count() > size_cap)
        throw capacity_error("graph has " + std::to_string(g.vertex_count()) +
                                 " vertices, exact coloring capped at " +
                                 std::to_string(size_cap),
                             g.vertex_count());
}

} // namespace

bool is_k_colorable(const Graph& g, int k, int size_cap) {
    check_size_cap(g, size_cap);
    return ColorabilitySearch(g).colorable(k);
}

int chromatic_number(const Graph& g, int size_cap) {
    check_size_cap(g, size_cap);
    if (g.vertex_count() == 0) return 0;
    if (g.edge_count() == 0) return 1;
    ColorabilitySearch search(g);
    int k = std::max(2, greedy_clique_bound(g));
    while (!search.colorable(k)) ++k;
    return k;
}

bool is_k_critical(const Graph& g, int k, int size_cap) {
    check_size_cap(g, size_cap);
    if (k < 1) throw input_error("k must be >= 1");
    if (chromatic_number(g, size_cap) != k) return false;
    for (const auto& [u, v] : g.edges())
        if (!is_k_colorable(remove_edge(g, u, v), k - 1, size_cap)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!is_k_colorable(remove_vertex(g, v), k - 1, size_cap)) return false;
    return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> out;
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<size_t>(root)]) continue;
        seen[static_cast<size_t>(root)] = 1;
        queue.assign(1, root);
        for (size_t head = 0; head < queue.size(); ++head)
            for (int u : g.neighbors(queue[head]))
                if (!seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = 1;
                    queue.push_back(u);
                }
        std::sort(queue.begin(), queue.end());
        out.push_back(queue);
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

} // namespace kempe
