#include "wheelkit/wheels.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>

#include "wheelkit/cycle3.hpp"
#include "wheelkit/menger.hpp"

namespace wheelkit {

namespace {

int spoke_count(const Graph& g, Vertex center, std::span<const Vertex> vs) {
    int c = 0;
    for (Vertex v : vs)
        if (g.has_edge(center, v)) ++c;
    return c;
}

// Shrink the rim across chords while at least k spokes and min_rim vertices
// survive.
Cycle tighten(const Graph& g, Vertex center, Cycle c, int k, int min_rim) {
    for (;;) {
        const auto& cv = c.vertices;
        const std::size_t len = cv.size();
        std::vector<int> pos(g.n(), -1);
        for (std::size_t i = 0; i < len; ++i) pos[cv[i]] = static_cast<int>(i);
        std::optional<std::vector<Vertex>> best;
        for (std::size_t i = 0; i < len; ++i) {
            for (Vertex w : g.adj(cv[i])) {
                int j = pos[w];
                if (j < 0 || j <= static_cast<int>(i)) continue;
                std::size_t ju = static_cast<std::size_t>(j);
                if (ju == i + 1 || (i == 0 && ju == len - 1)) continue;
                std::vector<Vertex> inner(cv.begin() + i, cv.begin() + ju + 1);
                std::vector<Vertex> outer(cv.begin() + ju, cv.end());
                outer.insert(outer.end(), cv.begin(), cv.begin() + i + 1);
                for (auto* arc : {&inner, &outer}) {
                    if (static_cast<int>(arc->size()) < min_rim || spoke_count(g, center, *arc) < k) continue;
                    if (!best || arc->size() < best->size()) best = *arc;
                }
            }
        }
        if (!best) return canonical(std::move(c));
        c.vertices = std::move(*best);
    }
}

WheelWitness make_witness(const Graph& g, Vertex center, Cycle rim, int k) {
    WheelWitness w;
    w.center = center;
    w.k = k;
    w.rim = std::move(rim);
    for (Vertex v : w.rim.vertices)
        if (g.has_edge(center, v)) w.spokes.push_back(v);
    std::sort(w.spokes.begin(), w.spokes.end());
    return w;
}

// Exhaustive search for a cycle through every vertex of `required` with at
// least min_len vertices.
std::optional<Cycle> cycle_through_all(const Graph& g, const VertexSet& required, int min_len) {
    const Vertex root = required.front();
    VertexMask need(g.n(), 0);
    for (Vertex r : required) need[r] = 1;
    VertexMask on(g.n(), 0);
    std::vector<Vertex> path{root};
    on[root] = 1;
    int covered = 1;
    std::optional<Cycle> found;

    auto remaining_reachable = [&](Vertex end) {
        VertexMask blocked = on;
        blocked[end] = 0;
        blocked[root] = 0;
        auto seen = reachable(g, std::array{end}, &blocked);
        for (Vertex r : required)
            if (!on[r] && !seen[r]) return false;
        return true;
    };

    auto dfs = [&](auto& self, Vertex u) -> void {
        if (found) return;
        for (Vertex w : g.adj(u)) {
            if (found) return;
            if (w == root) {
                if (covered == static_cast<int>(required.size()) && static_cast<int>(path.size()) >= std::max(3, min_len))
                    found = Cycle{path};
                continue;
            }
            if (on[w]) continue;
            on[w] = 1;
            path.push_back(w);
            covered += need[w];
            if (remaining_reachable(w)) self(self, w);
            covered -= need[w];
            path.pop_back();
            on[w] = 0;
        }
    };
    dfs(dfs, root);
    return found;
}

template <class Body>
void for_each_vertex(int n, Exec exec, Body body) {
    std::exception_ptr error;
    std::mutex mu;
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
    for (int v = 0; v < n; ++v) {
        try {
            body(v);
        } catch (...) {
            std::lock_guard lock(mu);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

std::optional<WheelWitness> first_hub(const Graph& g, int k, int min_rim, Exec exec) {
    if (k < 3) throw PreconditionError("hub order k must be at least 3");
    const int n = g.n();
    std::atomic<int> best{n};
    std::vector<std::optional<WheelWitness>> found(n);
    for_each_vertex(n, exec, [&](int v) {
        if (v > best.load()) return;
        found[v] = hub_at(g, v, k, min_rim);
        if (!found[v]) return;
        int cur = best.load();
        while (v < cur && !best.compare_exchange_weak(cur, v)) {
        }
    });
    if (best.load() == n) return std::nullopt;
    return found[best.load()];
}

}  // namespace

std::optional<WheelWitness> hub_at(const Graph& g, Vertex v, int k, int min_rim) {
    if (k < 3) throw PreconditionError("hub order k must be at least 3");
    if (!g.valid(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    if (g.degree(v) < k) return std::nullopt;

    const std::array<Vertex, 1> removed{v};
    Subgraph h = remove_vertices(g, removed);
    auto bd = blocks(h.graph);

    // Neighbors of v (local ids, increasing) and the 2-connected blocks
    // holding each of them.
    std::vector<Vertex> nbrs;
    for (Vertex w : g.adj(v)) nbrs.push_back(h.from_parent[w]);
    std::vector<std::vector<int>> block_of(h.graph.n());
    for (int b = 0; b < static_cast<int>(bd.blocks.size()); ++b) {
        if (bd.blocks[b].kind != BlockKind::biconnected) continue;
        for (Vertex u : bd.blocks[b].vertices) block_of[u].push_back(b);
    }
    std::vector<std::optional<Subgraph>> block_graph(bd.blocks.size());
    auto graph_of = [&](int b) -> const Subgraph& {
        if (!block_graph[b]) block_graph[b] = induced_subgraph(h.graph, bd.blocks[b].vertices);
        return *block_graph[b];
    };
    auto lift_cycle = [&](const Subgraph& bg, const Cycle& c) {
        Cycle out;
        for (Vertex u : c.vertices) out.vertices.push_back(h.lift(bg.lift(u)));
        return out;
    };

    const int d = static_cast<int>(nbrs.size());
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        // Blocks containing the whole subset.
        std::vector<int> common = block_of[nbrs[idx[0]]];
        for (int i = 1; i < k && !common.empty(); ++i) {
            std::vector<int> next;
            const auto& other = block_of[nbrs[idx[i]]];
            std::set_intersection(common.begin(), common.end(), other.begin(), other.end(), std::back_inserter(next));
            common = std::move(next);
        }
        if (!common.empty()) {
            const int b = common.front();
            const Subgraph& bg = graph_of(b);
            VertexSet subset;
            for (int i = 0; i < k; ++i) subset.push_back(bg.from_parent[nbrs[idx[i]]]);
            auto res = cycle_or_splitter(bg.graph, subset[0], subset[1], subset[2]);
            if (auto* c = std::get_if<Cycle>(&res)) {
                Cycle rim = lift_cycle(bg, *c);
                std::optional<Cycle> good;
                if (spoke_count(g, v, rim.vertices) >= k && static_cast<int>(rim.length()) >= min_rim) {
                    good = rim;
                } else if (k == 3 && bg.graph.n() >= 4) {
                    // A triangle through the three spokes; detour through a
                    // fourth block vertex.
                    Vertex extra = 0;
                    while (c->contains(extra)) ++extra;
                    auto fan = k_fan(bg.graph, extra, c->vertices, 2);
                    const auto& fp = std::get<Fan>(fan).paths;
                    Vertex p = fp[0].back(), q = fp[1].back();
                    Vertex r = subset[0] + subset[1] + subset[2] - p - q;
                    std::array<VertexPath, 4> parts{fp[0], fp[1], VertexPath{{q, r}}, VertexPath{{r, p}}};
                    auto long_cycle = cycle_from_paths(parts);
                    if (!long_cycle) throw std::logic_error("hub_at: detour is not a cycle");
                    good = lift_cycle(bg, *long_cycle);
                } else if (k > 3) {
                    std::sort(subset.begin(), subset.end());
                    if (auto all = cycle_through_all(bg.graph, subset, min_rim)) good = lift_cycle(bg, *all);
                }
                if (good) return make_witness(g, v, tighten(g, v, *good, k, min_rim), k);
            }
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == d - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return std::nullopt;
}

std::optional<WheelWitness> find_hub(const Graph& g, int k, Exec exec) { return first_hub(g, k, 3, exec); }

std::optional<WheelWitness> find_wheel(const Graph& g, Exec exec) { return first_hub(g, 3, 3, exec); }

std::optional<WheelWitness> find_long_wheel(const Graph& g, Exec exec) { return first_hub(g, 3, 4, exec); }

VertexSet wheel_centers(const Graph& g, Exec exec) {
    std::vector<char> is_center(g.n(), 0);
    for_each_vertex(g.n(), exec, [&](int v) { is_center[v] = hub_at(g, v, 3).has_value(); });
    VertexSet out;
    for (Vertex v = 0; v < g.n(); ++v)
        if (is_center[v]) out.push_back(v);
    return out;
}

bool is_almost_wheel_free(const Graph& g, const VertexSet& centers) {
    if (centers.empty()) return true;
    if (centers.size() == 1) return g.degree(centers[0]) == 3;
    if (centers.size() == 2)
        return g.degree(centers[0]) == 3 && g.degree(centers[1]) == 3 && g.has_edge(centers[0], centers[1]);
    return false;
}

Classification classify(const Graph& g, Exec exec) {
    Classification c;
    c.centers = wheel_centers(g, exec);
    if (c.centers.empty()) c.kind = WheelClass::wheel_free;
    else if (is_almost_wheel_free(g, c.centers)) c.kind = WheelClass::almost_wheel_free;
    else c.kind = WheelClass::neither;
    return c;
}

std::string to_string(WheelClass c) {
    switch (c) {
        case WheelClass::wheel_free: return "WheelFree";
        case WheelClass::almost_wheel_free: return "AlmostWheelFree";
        case WheelClass::neither: return "Neither";
    }
    return "unknown";
}

Verdict verify_witness(const Graph& g, const WheelWitness& w, int min_rim) {
    Verdict out;
    if (w.k < 3) out.add("k", "hub order " + std::to_string(w.k) + " is below 3");
    if (!g.valid(w.center)) {
        out.add("center", "center " + std::to_string(w.center) + " out of range");
        return out;
    }
    for (auto& v : verify_cycle_through(g, w.rim, {}).violations) out.add("rim", v.detail);
    if (w.rim.contains(w.center)) out.add("center", "center " + std::to_string(w.center) + " lies on the rim");
    VertexSet sorted = w.spokes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) out.add("spokes", "a spoke is listed twice");
    for (Vertex s : w.spokes) {
        if (!g.valid(s)) {
            out.add("spoke", "spoke " + std::to_string(s) + " out of range");
            continue;
        }
        if (!w.rim.contains(s)) out.add("spoke", "spoke " + std::to_string(s) + " is not on the rim");
        if (!g.has_edge(w.center, s))
            out.add("spoke", "spoke " + std::to_string(s) + " is not adjacent to the center");
    }
    if (static_cast<int>(w.spokes.size()) < w.k)
        out.add("spokes", std::to_string(w.spokes.size()) + " spokes, need " + std::to_string(w.k));
    if (static_cast<int>(w.rim.length()) < min_rim)
        out.add("long", "rim has length " + std::to_string(w.rim.length()) + ", need " + std::to_string(min_rim));
    return out;
}

}  // namespace wheelkit
