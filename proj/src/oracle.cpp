#include "wheelkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>

namespace wheelkit {

namespace {

void check_size(const Graph& g, const OracleBudget& budget, const char* what) {
    if (g.n() > budget.max_vertices)
        throw BudgetExceeded(std::string(what) + ": " + std::to_string(g.n()) + " vertices exceed the budget of " +
                             std::to_string(budget.max_vertices));
}

class Clock {
public:
    explicit Clock(double cap) : cap_(cap), start_(std::chrono::steady_clock::now()) {}
    void tick(const char* what) {
        if (++ticks_ % 4096) return;
        std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
        if (d.count() > cap_) throw BudgetExceeded(std::string(what) + ": time cap exceeded");
    }

private:
    double cap_;
    std::chrono::steady_clock::time_point start_;
    unsigned long ticks_ = 0;
};

using Bits = std::uint64_t;

std::vector<Bits> adjacency_bits(const Graph& g) {
    std::vector<Bits> a(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.adj(v)) a[v] |= Bits{1} << w;
    return a;
}

int max_clique(const std::vector<Bits>& adj, Bits cand, int size, int best, Clock& clock) {
    if (!cand) return std::max(size, best);
    if (size + std::popcount(cand) <= best) return best;
    while (cand) {
        clock.tick("alpha_omega");
        if (size + std::popcount(cand) <= best) break;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        best = max_clique(adj, cand & adj[v], size + 1, best, clock);
    }
    return best;
}

bool colorable(const Graph& g, int k, std::vector<int>& color, const std::vector<Vertex>& order, std::size_t i,
               Clock& clock) {
    if (i == order.size()) return true;
    clock.tick("chromatic_number");
    Vertex v = order[i];
    int top = 0;
    for (std::size_t j = 0; j < i; ++j) top = std::max(top, color[order[j]] + 1);
    for (int c = 0; c < std::min(k, top + 1); ++c) {
        bool ok = true;
        for (Vertex w : g.adj(v))
            if (color[w] == c) ok = false;
        if (!ok) continue;
        color[v] = c;
        if (colorable(g, k, color, order, i + 1, clock)) return true;
        color[v] = -1;
    }
    return false;
}

}  // namespace

OracleBudget cycle_budget() { return {}; }

OracleBudget chromatic_budget() {
    OracleBudget b;
    b.max_vertices = 16;
    return b;
}

OracleBudget k33_budget() {
    OracleBudget b;
    b.max_vertices = 13;
    return b;
}

void for_each_cycle(const Graph& g, const OracleBudget& budget,
                    const std::function<bool(const std::vector<Vertex>&)>& visit) {
    check_size(g, budget, "cycle enumeration");
    Clock clock(budget.time_cap);
    long count = 0;
    const int n = g.n();
    std::vector<Vertex> path;
    VertexMask on(n, 0);
    bool stop = false;
    for (Vertex root = 0; root < n && !stop; ++root) {
        path.assign(1, root);
        on[root] = 1;
        auto dfs = [&](auto& self, Vertex u) -> void {
            for (Vertex w : g.adj(u)) {
                if (stop) return;
                clock.tick("cycle enumeration");
                if (w == root && path.size() >= 3 && path[1] < path.back()) {
                    if (++count > budget.max_cycles) throw BudgetExceeded("cycle enumeration: cycle cap exceeded");
                    if (!visit(path)) stop = true;
                    continue;
                }
                if (w <= root || on[w]) continue;
                on[w] = 1;
                path.push_back(w);
                self(self, w);
                path.pop_back();
                on[w] = 0;
            }
        };
        dfs(dfs, root);
        on[root] = 0;
    }
}

std::optional<Cycle> brute_cycle_through(const Graph& g, Vertex x, Vertex y, Vertex z, const OracleBudget& budget) {
    for (Vertex v : {x, y, z})
        if (!g.valid(v)) throw PreconditionError("vertex out of range");
    std::optional<Cycle> found;
    for_each_cycle(g, budget, [&](const std::vector<Vertex>& c) {
        auto has = [&](Vertex v) { return std::find(c.begin(), c.end(), v) != c.end(); };
        if (has(x) && has(y) && has(z)) {
            found = Cycle{c};
            return false;
        }
        return true;
    });
    return found;
}

std::optional<WheelWitness> brute_hub(const Graph& g, int k, const OracleBudget& budget, int min_rim) {
    if (k < 3) throw PreconditionError("hub order k must be at least 3");
    std::optional<WheelWitness> found;
    std::vector<int> hits(g.n());
    for_each_cycle(g, budget, [&](const std::vector<Vertex>& c) {
        if (static_cast<int>(c.size()) < min_rim) return true;
        std::fill(hits.begin(), hits.end(), 0);
        for (Vertex u : c)
            for (Vertex w : g.adj(u)) ++hits[w];
        for (Vertex u : c) hits[u] = -1;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (hits[v] < k) continue;
            WheelWitness w;
            w.center = v;
            w.rim = Cycle{c};
            w.k = k;
            for (Vertex u : c)
                if (g.has_edge(u, v)) w.spokes.push_back(u);
            std::sort(w.spokes.begin(), w.spokes.end());
            found = std::move(w);
            return false;
        }
        return true;
    });
    return found;
}

std::optional<WheelWitness> brute_wheel(const Graph& g, const OracleBudget& budget) { return brute_hub(g, 3, budget); }

std::optional<WheelWitness> brute_long_wheel(const Graph& g, const OracleBudget& budget) {
    return brute_hub(g, 3, budget, 4);
}

VertexSet brute_wheel_centers(const Graph& g, const OracleBudget& budget) {
    VertexMask center(g.n(), 0);
    int found = 0;
    std::vector<int> hits(g.n());
    for_each_cycle(g, budget, [&](const std::vector<Vertex>& c) {
        std::fill(hits.begin(), hits.end(), 0);
        for (Vertex u : c)
            for (Vertex w : g.adj(u)) ++hits[w];
        for (Vertex u : c) hits[u] = -1;
        for (Vertex v = 0; v < g.n(); ++v)
            if (hits[v] >= 3 && !center[v]) {
                center[v] = 1;
                ++found;
            }
        return found < g.n();
    });
    VertexSet out;
    for (Vertex v = 0; v < g.n(); ++v)
        if (center[v]) out.push_back(v);
    return out;
}

int chromatic_number(const Graph& g, const OracleBudget& budget) {
    check_size(g, budget, "chromatic_number");
    if (g.n() == 0) return 0;
    Clock clock(budget.time_cap);
    std::vector<Vertex> order(g.n());
    for (Vertex v = 0; v < g.n(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (int k = 1;; ++k) {
        std::vector<int> color(g.n(), -1);
        if (colorable(g, k, color, order, 0, clock)) return k;
    }
}

std::pair<int, int> alpha_omega(const Graph& g, const OracleBudget& budget) {
    check_size(g, budget, "alpha_omega");
    if (g.n() > 64) throw BudgetExceeded("alpha_omega: more than 64 vertices");
    Clock clock(budget.time_cap);
    const int n = g.n();
    Bits all = n == 64 ? ~Bits{0} : (Bits{1} << n) - 1;
    auto adj = adjacency_bits(g);
    std::vector<Bits> co(n);
    for (int v = 0; v < n; ++v) co[v] = all & ~adj[v] & ~(Bits{1} << v);
    int omega = max_clique(adj, all, 0, 0, clock);
    int alpha = max_clique(co, all, 0, 0, clock);
    return {alpha, omega};
}

int brute_kappa(const Graph& g, const OracleBudget& budget) {
    check_size(g, budget, "brute_kappa");
    const int n = g.n();
    for (int k = 0; k < n; ++k) {
        // Any k-subset whose removal leaves a disconnected graph or one vertex.
        if (n - k <= 1) return k;
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            VertexMask blocked(n, 0);
            for (int i : idx) blocked[i] = 1;
            if (!is_connected(g, &blocked)) return k;
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return n - 1;
}

bool verify_k33_subdivision(const Graph& g, const K33Subdivision& s) {
    if (s.paths.size() != 9) return false;
    std::vector<Vertex> all;
    for (Vertex v : s.left) all.push_back(v);
    for (Vertex v : s.right) all.push_back(v);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const VertexPath& p = s.paths[3 * i + j];
            if (p.vertices.size() < 2 || !is_path_in(g, p)) return false;
            if (p.front() != s.left[i] || p.back() != s.right[j]) return false;
            all.insert(all.end(), p.vertices.begin() + 1, p.vertices.end() - 1);
        }
    for (Vertex v : all)
        if (!g.valid(v)) return false;
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

std::optional<K33Subdivision> brute_k33_subdivision(const Graph& g, const OracleBudget& budget) {
    check_size(g, budget, "brute_k33_subdivision");
    Clock clock(budget.time_cap);
    const int n = g.n();
    std::vector<Vertex> rich;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) >= 3) rich.push_back(v);
    if (rich.size() < 6) return std::nullopt;

    VertexMask used(n, 0);
    K33Subdivision cur;
    cur.paths.assign(9, {});

    auto connected_pair = [&](Vertex a, Vertex b) {
        VertexMask blocked = used;
        blocked[a] = blocked[b] = 0;
        VertexMask target(n, 0);
        target[b] = 1;
        return bfs_path(g, std::array{a}, target, &blocked).has_value();
    };

    // Route pair t = 3i + j, then the rest.
    auto route = [&](auto& self, int t) -> bool {
        if (t == 9) return true;
        for (int u = t; u < 9; ++u)
            if (!connected_pair(cur.left[u / 3], cur.right[u % 3])) return false;
        const Vertex a = cur.left[t / 3], b = cur.right[t % 3];
        std::vector<Vertex> path{a};
        auto dfs = [&](auto& go, Vertex u) -> bool {
            clock.tick("brute_k33_subdivision");
            for (Vertex w : g.adj(u)) {
                if (w == b) {
                    path.push_back(b);
                    cur.paths[t] = VertexPath{path};
                    if (self(self, t + 1)) return true;
                    path.pop_back();
                    continue;
                }
                if (used[w]) continue;
                used[w] = 1;
                path.push_back(w);
                if (go(go, w)) return true;
                path.pop_back();
                used[w] = 0;
            }
            return false;
        };
        return dfs(dfs, a);
    };

    const int r = static_cast<int>(rich.size());
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (int c = b + 1; c < r; ++c) {
                std::vector<Vertex> rest;
                for (int i = 0; i < r; ++i)
                    if (i != a && i != b && i != c && i > a) rest.push_back(rich[i]);
                const int q = static_cast<int>(rest.size());
                for (int d = 0; d < q; ++d)
                    for (int e = d + 1; e < q; ++e)
                        for (int f = e + 1; f < q; ++f) {
                            cur.left = {rich[a], rich[b], rich[c]};
                            cur.right = {rest[d], rest[e], rest[f]};
                            std::fill(used.begin(), used.end(), 0);
                            for (Vertex v : cur.left) used[v] = 1;
                            for (Vertex v : cur.right) used[v] = 1;
                            if (route(route, 0)) return cur;
                        }
            }
    return std::nullopt;
}

bool brute_contains_k33_minus_e(const Graph& g, const OracleBudget& budget) {
    check_size(g, budget, "brute_contains_k33_minus_e");
    const int n = g.n();
    // Parts {a0, a1, a2} and {b0, b1, b2}; the edge a2 b2 is missing.
    std::array<Vertex, 6> m{};
    VertexMask used(n, 0);
    auto fits = [&](int i) {
        // Vertex i of the pattern against earlier ones.
        for (int j = 0; j < i; ++j) {
            bool opposite = (i < 3) != (j < 3);
            bool missing = (i == 2 && j == 5) || (i == 5 && j == 2);
            if (opposite && !missing && !g.has_edge(m[i], m[j])) return false;
        }
        return true;
    };
    auto place = [&](auto& self, int i) -> bool {
        if (i == 6) return true;
        for (Vertex v = 0; v < n; ++v) {
            if (used[v]) continue;
            m[i] = v;
            if (!fits(i)) continue;
            used[v] = 1;
            if (self(self, i + 1)) return true;
            used[v] = 0;
        }
        return false;
    };
    return place(place, 0);
}

bool brute_isomorphic(const Graph& a, const Graph& b, const OracleBudget& budget) {
    check_size(a, budget, "brute_isomorphic");
    if (a.n() != b.n() || a.m() != b.m()) return false;
    const int n = a.n();
    std::vector<int> da, db;
    for (Vertex v = 0; v < n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<Vertex> map(n, -1);
    VertexMask used(n, 0);
    auto place = [&](auto& self, Vertex v) -> bool {
        if (v == n) return true;
        for (Vertex w = 0; w < n; ++w) {
            if (used[w] || a.degree(v) != b.degree(w)) continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u)
                if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
        }
        return false;
    };
    return place(place, 0);
}

}  // namespace wheelkit
