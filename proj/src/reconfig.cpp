#include "kempe/reconfig.hpp"

#include <algorithm>
#include <cstring>
#include <string>
#include <unordered_map>

#include "kempe/errors.hpp"
#include "kempe/graph_ops.hpp"

namespace kempe {

namespace {

// Iterative backtracking over proper colorings in lexicographic order of the
// (0-based) color vector. `visit` returns false to stop the enumeration.
template <class F>
void enumerate_raw(const Graph& g, int k, F&& visit) {
    if (k < 1) throw input_error("palette size must be >= 1");
    const int n = g.vertex_count();
    if (n == 0) {
        std::vector<uint8_t> empty;
        visit(empty);
        return;
    }
    std::vector<std::vector<int>> earlier(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (u < v) earlier[static_cast<size_t>(v)].push_back(u);

    std::vector<uint8_t> raw(static_cast<size_t>(n), 0);
    std::vector<int> trial(static_cast<size_t>(n), 0);
    int depth = 0;
    while (true) {
        if (trial[static_cast<size_t>(depth)] >= k) {
            trial[static_cast<size_t>(depth)] = 0;
            if (--depth < 0) return;
            ++trial[static_cast<size_t>(depth)];
            continue;
        }
        const auto col = static_cast<uint8_t>(trial[static_cast<size_t>(depth)]);
        bool ok = true;
        for (int u : earlier[static_cast<size_t>(depth)])
            if (raw[static_cast<size_t>(u)] == col) {
                ok = false;
                break;
            }
        if (!ok) {
            ++trial[static_cast<size_t>(depth)];
            continue;
        }
        raw[static_cast<size_t>(depth)] = col;
        if (depth == n - 1) {
            if (!visit(raw)) return;
            ++trial[static_cast<size_t>(depth)];
        } else {
            ++depth;
            trial[static_cast<size_t>(depth)] = 0;
        }
    }
}

// Reusable scratch for enumerating connected components of bicolored
// subgraphs directly on raw color buffers.
class ComponentScanner {
public:
    explicit ComponentScanner(const Graph& g) : g_(g) {
        seen_.assign(static_cast<size_t>(g.vertex_count()), 0);
    }

    // Components of the subgraph on {v : raw[v] == a or raw[v] == b},
    // rooted in ascending vertex order. Component vertices are NOT sorted.
    template <class F>
    void scan(const uint8_t* raw, uint8_t a, uint8_t b, F&& visit) {
        const int n = g_.vertex_count();
        std::fill(seen_.begin(), seen_.end(), 0);
        for (int root = 0; root < n; ++root) {
            uint8_t cr = raw[root];
            if (seen_[static_cast<size_t>(root)] || (cr != a && cr != b)) continue;
            comp_.assign(1, root);
            seen_[static_cast<size_t>(root)] = 1;
            for (size_t head = 0; head < comp_.size(); ++head)
                for (int u : g_.neighbors(comp_[head])) {
                    uint8_t cu = raw[u];
                    if (!seen_[static_cast<size_t>(u)] && (cu == a || cu == b)) {
                        seen_[static_cast<size_t>(u)] = 1;
                        comp_.push_back(u);
                    }
                }
            visit(comp_);
        }
    }

private:
    const Graph& g_;
    std::vector<char> seen_;
    std::vector<int> comp_;
};

void swap_colors_on(std::vector<uint8_t>& raw, uint8_t a, uint8_t b,
                    const std::vector<int>& vertices) {
    for (int v : vertices) raw[static_cast<size_t>(v)] = raw[static_cast<size_t>(v)] == a ? b : a;
}

std::string raw_key(const std::vector<uint8_t>& raw) {
    return std::string(reinterpret_cast<const char*>(raw.data()), raw.size());
}

} // namespace

void for_each_coloring(const Graph& g, int k,
                       const std::function<bool(const Coloring&)>& visit) {
    enumerate_raw(g, k, [&](const std::vector<uint8_t>& raw) {
        return visit(Coloring::from_raw(k, raw));
    });
}

std::vector<Coloring> enumerate_colorings(const Graph& g, int k, long long cap) {
    if (cap < 0) throw input_error("cap must be >= 0");
    std::vector<Coloring> out;
    bool over = false;
    enumerate_raw(g, k, [&](const std::vector<uint8_t>& raw) {
        if (static_cast<long long>(out.size()) == cap) {
            over = true;
            return false;
        }
        out.push_back(Coloring::from_raw(k, raw));
        return true;
    });
    if (over)
        throw capacity_error("more than " + std::to_string(cap) + " proper colorings",
                             static_cast<long long>(out.size()));
    return out;
}

namespace {

struct UnionFind {
    std::vector<int64_t> parent;
    explicit UnionFind(long long n) : parent(static_cast<size_t>(n)) {
        for (long long i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    long long find(long long x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(long long a, long long b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b); // keep the smaller index as root
        parent[static_cast<size_t>(b)] = a;
    }
};

} // namespace

KempeClassReport count_kempe_classes(const Graph& g, int k, long long cap) {
    if (cap < 0) throw input_error("cap must be >= 0");
    const int n = g.vertex_count();
    KempeClassReport report;
    report.k = k;

    // Lex-ordered arena of all proper colorings (prefix, if the cap is hit).
    std::vector<uint8_t> arena;
    long long count = 0;
    bool truncated = false;
    enumerate_raw(g, k, [&](const std::vector<uint8_t>& raw) {
        if (count == cap) {
            truncated = true;
            return false;
        }
        arena.insert(arena.end(), raw.begin(), raw.end());
        ++count;
        return true;
    });
    report.num_colorings = count;
    report.truncated = truncated;
    if (count == 0) return report;
    if (n == 0) {
        report.num_classes = 1;
        report.representatives.push_back(Coloring::from_raw(k, {}));
        return report;
    }

    auto slice = [&](long long idx) { return arena.data() + idx * n; };
    auto locate = [&](const uint8_t* raw) -> long long {
        long long lo = 0, hi = count;
        while (lo < hi) {
            long long mid = lo + (hi - lo) / 2;
            int cmp = std::memcmp(slice(mid), raw, static_cast<size_t>(n));
            if (cmp < 0)
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo < count && std::memcmp(slice(lo), raw, static_cast<size_t>(n)) == 0) return lo;
        return -1;
    };

    UnionFind uf(count);
    ComponentScanner scanner(g);
    std::vector<uint8_t> tmp(static_cast<size_t>(n));
    for (long long idx = 0; idx < count; ++idx) {
        const uint8_t* raw = slice(idx);
        for (uint8_t a = 0; a + 1 < k; ++a)
            for (uint8_t b = a + 1; b < k; ++b)
                scanner.scan(raw, a, b, [&](const std::vector<int>& comp) {
                    std::memcpy(tmp.data(), raw, static_cast<size_t>(n));
                    swap_colors_on(tmp, a, b, comp);
                    long long other = locate(tmp.data());
                    if (other < 0) {
                        // Kempe changes preserve properness, so a miss can
                        // only mean the neighbor fell past the cap.
                        if (!truncated)
                            throw internal_error("Kempe neighbor missing from full enumeration");
                        return;
                    }
                    uf.unite(idx, other);
                });
    }

    for (long long idx = 0; idx < count; ++idx) {
        if (uf.find(idx) != idx) continue;
        ++report.num_classes;
        report.representatives.push_back(Coloring::from_raw(
            k, std::vector<uint8_t>(slice(idx), slice(idx) + n)));
    }
    return report;
}

namespace {

struct SearchNode {
    std::vector<uint8_t> raw;
    long long parent = -1; // slot in the same side's node list
    uint8_t move_a = 0, move_b = 0;
    int move_root = -1; // any vertex of the flipped component
};

// The component flipped to move away from `from` at `root` for pair (a,b);
// the flip preserves that component's vertex set, so the same change is
// valid in both directions.
KempeChange change_for(const Graph& g, const std::vector<uint8_t>& from, uint8_t a,
                       uint8_t b, int root) {
    ComponentScanner scanner(g);
    KempeChange out;
    out.color_i = static_cast<int>(a) + 1;
    out.color_j = static_cast<int>(b) + 1;
    scanner.scan(from.data(), a, b, [&](const std::vector<int>& comp) {
        if (std::find(comp.begin(), comp.end(), root) != comp.end() && out.vertices.empty())
            out.vertices = comp;
    });
    if (out.vertices.empty()) throw internal_error("lost track of a Kempe component");
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

} // namespace

EquivalenceResult are_kempe_equivalent(const Graph& g, const Coloring& c1,
                                       const Coloring& c2, long long cap) {
    if (c1.k() != c2.k())
        throw input_error("palette mismatch: k=" + std::to_string(c1.k()) + " vs k=" +
                          std::to_string(c2.k()));
    if (!is_proper(g, c1) || !is_proper(g, c2))
        throw input_error("are_kempe_equivalent requires proper colorings");
    if (cap < 0) throw input_error("cap must be >= 0");

    EquivalenceResult result;
    if (c1.raw() == c2.raw()) {
        result.verdict = Verdict::equivalent;
        result.visited = 2;
        return result;
    }

    const int n = g.vertex_count();
    const int k = c1.k();
    std::vector<SearchNode> nodes[2];
    std::unordered_map<std::string, long long> seen[2];
    std::vector<long long> frontier[2];
    for (int side : {0, 1}) {
        nodes[side].push_back(SearchNode{side == 0 ? c1.raw() : c2.raw(), -1, 0, 0, -1});
        seen[side].emplace(raw_key(nodes[side][0].raw), 0);
        frontier[side].push_back(0);
    }

    ComponentScanner scanner(g);
    std::vector<uint8_t> tmp(static_cast<size_t>(n));

    // Chain of (pair, component root) moves from each side's start to the
    // meeting coloring; assembled into a replayable witness below.
    struct Meeting {
        long long from_slot;  // expanded node (side s)
        uint8_t a, b;
        int root;
        long long other_slot; // matching node on the other side
        int side;
    };
    std::optional<Meeting> meeting;

    auto total_visited = [&]() {
        return static_cast<long long>(nodes[0].size() + nodes[1].size());
    };

    while (!meeting) {
        int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        if (frontier[s].empty()) {
            // This side's whole class is enumerated and never met the other.
            result.verdict = Verdict::not_equivalent;
            result.visited = total_visited();
            return result;
        }
        std::vector<long long> next;
        std::vector<uint8_t> cur;
        for (long long slot : frontier[s]) {
            if (meeting) break;
            // nodes[s] grows inside the scan callback and may reallocate, so
            // work on a copy of the expanded coloring.
            cur = nodes[s][static_cast<size_t>(slot)].raw;
            for (uint8_t a = 0; a + 1 < k && !meeting; ++a)
                for (uint8_t b = a + 1; b < k && !meeting; ++b) {
                    scanner.scan(cur.data(), a, b, [&](const std::vector<int>& comp) {
                        if (meeting) return;
                        tmp = cur;
                        swap_colors_on(tmp, a, b, comp);
                        std::string key = raw_key(tmp);
                        if (seen[s].contains(key)) return;
                        auto other_it = seen[1 - s].find(key);
                        if (other_it != seen[1 - s].end()) {
                            meeting = Meeting{slot, a, b, comp.front(), other_it->second, s};
                            return;
                        }
                        long long new_slot = static_cast<long long>(nodes[s].size());
                        nodes[s].push_back(SearchNode{tmp, slot, a, b, comp.front()});
                        seen[s].emplace(std::move(key), new_slot);
                        next.push_back(new_slot);
                    });
                }
        }
        if (meeting) break;
        if (total_visited() > cap) {
            result.verdict = Verdict::undecided;
            result.visited = total_visited();
            return result;
        }
        frontier[s] = std::move(next);
    }

    // Abstract move chain c1 -> ... -> c2: walk up the c1 side, cross the
    // meeting edge, then walk down the c2 side (Kempe moves are involutions).
    struct Step {
        uint8_t a, b;
        int root;
    };
    std::vector<Step> steps;
    {
        std::vector<Step> up;
        long long at = meeting->side == 0 ? meeting->from_slot : meeting->other_slot;
        for (; at > 0; at = nodes[0][static_cast<size_t>(at)].parent) {
            const auto& node = nodes[0][static_cast<size_t>(at)];
            up.push_back(Step{node.move_a, node.move_b, node.move_root});
        }
        steps.assign(up.rbegin(), up.rend());
        steps.push_back(Step{meeting->a, meeting->b, meeting->root});
        at = meeting->side == 1 ? meeting->from_slot : meeting->other_slot;
        for (; at > 0; at = nodes[1][static_cast<size_t>(at)].parent) {
            const auto& node = nodes[1][static_cast<size_t>(at)];
            steps.push_back(Step{node.move_a, node.move_b, node.move_root});
        }
    }

    std::vector<uint8_t> current = c1.raw();
    for (const auto& step : steps) {
        KempeChange change = change_for(g, current, step.a, step.b, step.root);
        swap_colors_on(current, step.a, step.b, change.vertices);
        result.witness.push_back(std::move(change));
    }
    if (current != c2.raw()) throw internal_error("witness reconstruction mismatch");

    result.verdict = Verdict::equivalent;
    result.visited = total_visited();
    return result;
}

std::optional<std::vector<int>> same_up_to_color_permutation(const Coloring& c1,
                                                             const Coloring& c2) {
    if (c1.k() != c2.k()) throw input_error("palette mismatch");
    if (c1.size() != c2.size()) throw input_error("vertex count mismatch");
    const int k = c1.k();
    std::vector<int> image(static_cast<size_t>(k), 0);   // color -> color, 0 unset
    std::vector<char> taken(static_cast<size_t>(k) + 1, 0);
    for (int v = 0; v < c1.size(); ++v) {
        int a = c1.color(v), b = c2.color(v);
        int& slot = image[static_cast<size_t>(a - 1)];
        if (slot == 0) {
            if (taken[static_cast<size_t>(b)]) return std::nullopt;
            slot = b;
            taken[static_cast<size_t>(b)] = 1;
        } else if (slot != b) {
            return std::nullopt;
        }
    }
    // Extend to a full permutation: unmapped colors take the free targets
    // in ascending order.
    int next_free = 1;
    for (int a = 1; a <= k; ++a) {
        if (image[static_cast<size_t>(a - 1)] != 0) continue;
        while (taken[static_cast<size_t>(next_free)]) ++next_free;
        image[static_cast<size_t>(a - 1)] = next_free;
        taken[static_cast<size_t>(next_free)] = 1;
    }
    return image;
}

bool rigidity_obstruction(const Graph& g, const Coloring& c1, const Coloring& c2) {
    if (c1.k() != c2.k()) throw input_error("palette mismatch");
    if (!is_proper(g, c1) || !is_proper(g, c2))
        throw input_error("rigidity_obstruction requires proper colorings");
    ComponentScanner scanner(g);
    for (uint8_t a = 0; a + 1 < c1.k(); ++a)
        for (uint8_t b = a + 1; b < c1.k(); ++b) {
            int components = 0;
            scanner.scan(c1.raw().data(), a, b, [&](const std::vector<int>&) { ++components; });
            if (components > 1) return false;
        }
    return !same_up_to_color_permutation(c1, c2).has_value();
}

} // namespace kempe
