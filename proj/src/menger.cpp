#include "wheelkit/menger.hpp"

#include <algorithm>
#include <array>

#include "wheelkit/detail/flow.hpp"

namespace wheelkit {

void require_2_connected(const Graph& g) {
    if (is_2_connected(g)) return;
    throw NotTwoConnected(find_cut_vertex(g));
}

namespace {

void check_vertex(const Graph& g, Vertex v) {
    if (!g.valid(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

VertexMask with_blocked(const Graph& g, const VertexMask* blocked, std::initializer_list<Vertex> extra) {
    VertexMask m = blocked ? *blocked : VertexMask(g.n(), 0);
    for (Vertex v : extra) m[v] = 1;
    return m;
}

VertexPath slice(const VertexPath& p, std::size_t from, std::size_t to) {
    if (from <= to) return {{p.vertices.begin() + from, p.vertices.begin() + to + 1}};
    VertexPath r{{p.vertices.begin() + to, p.vertices.begin() + from + 1}};
    std::reverse(r.vertices.begin(), r.vertices.end());
    return r;
}

std::size_t index_of(const VertexPath& p, Vertex v) {
    return static_cast<std::size_t>(std::find(p.vertices.begin(), p.vertices.end(), v) - p.vertices.begin());
}

Cycle must_cycle(std::initializer_list<VertexPath> parts) {
    std::vector<VertexPath> v(parts);
    auto c = cycle_from_paths(v);
    if (!c) throw std::logic_error("path union is not a cycle");
    return *c;
}

// Two internally disjoint u-v paths (u != v).
std::optional<std::pair<VertexPath, VertexPath>> two_paths_between(const Graph& g, Vertex u, Vertex v,
                                                                   const VertexMask* blocked) {
    auto ans = detail::local_paths(g, u, v, 2, blocked);
    if (ans.paths.size() < 2) return std::nullopt;
    return std::pair{ans.paths[0], ans.paths[1]};
}

}  // namespace

std::variant<TwoPaths, SeparatorVertex> two_disjoint_paths(const Graph& g, std::pair<Vertex, Vertex> from,
                                                          std::pair<Vertex, Vertex> to, const VertexMask* blocked) {
    auto [a, b] = from;
    auto [c, d] = to;
    for (Vertex v : {a, b, c, d}) {
        check_vertex(g, v);
        if (blocked && (*blocked)[v]) throw PreconditionError("terminal " + std::to_string(v) + " is blocked");
    }
    if (a == b || c == d) throw PreconditionError("pairs must consist of two distinct vertices");

    auto ordered = [&](VertexPath p, VertexPath q) {
        if (p.front() != a) std::swap(p, q);
        return TwoPaths{std::move(p), std::move(q)};
    };

    if ((a == c && b == d) || (a == d && b == c)) return TwoPaths{{{a}}, {{b}}};

    // One shared vertex: it is a path of length 0 and the rest is a single path.
    for (Vertex s : {a, b}) {
        if (s != c && s != d) continue;
        Vertex s_other = s == a ? b : a;
        Vertex t_other = s == c ? d : c;
        auto mask = with_blocked(g, blocked, {s});
        VertexMask target(g.n(), 0);
        target[t_other] = 1;
        auto p = bfs_path(g, std::array{s_other}, target, &mask);
        if (!p) return SeparatorVertex{s};
        return ordered(VertexPath{{s}}, *p);
    }

    detail::FlowQuery q;
    q.sources = {a, b};
    q.targets = {c, d};
    q.limit = 2;
    q.blocked = blocked;
    auto ans = detail::disjoint_paths(g, q);
    if (ans.paths.size() == 2) return ordered(ans.paths[0], ans.paths[1]);
    if (ans.paths.empty()) return SeparatorVertex{a};

    // Every separator lies on the one path found; prefer interior vertices.
    const auto& only = ans.paths[0].vertices;
    std::vector<Vertex> candidates(only.begin() + 1, only.end() - 1);
    candidates.push_back(only.front());
    candidates.push_back(only.back());
    for (Vertex v : candidates) {
        auto mask = with_blocked(g, blocked, {v});
        std::vector<Vertex> srcs;
        for (Vertex s : {a, b})
            if (s != v) srcs.push_back(s);
        auto seen = reachable(g, srcs, &mask);
        bool separated = true;
        for (Vertex t : {c, d})
            if (t != v && seen[t]) separated = false;
        if (separated) return SeparatorVertex{v};
    }
    throw std::logic_error("two_disjoint_paths: flow value 1 without a separating vertex");
}

std::variant<Fan, SmallSeparator> k_fan(const Graph& g, Vertex x, std::span<const Vertex> targets, int k,
                                        const VertexMask* blocked) {
    check_vertex(g, x);
    VertexSet ys(targets.begin(), targets.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (Vertex y : ys) check_vertex(g, y);
    if (k < 1) throw PreconditionError("k must be at least 1");
    if (std::binary_search(ys.begin(), ys.end(), x)) throw PreconditionError("apex lies in the target set");
    if (static_cast<int>(ys.size()) < k) throw PreconditionError("target set smaller than k");

    detail::FlowQuery q;
    q.sources = {x};
    q.targets = ys;
    q.source_capacity = k;
    q.limit = k;
    q.blocked = blocked;
    auto ans = detail::disjoint_paths(g, q);
    if (static_cast<int>(ans.paths.size()) == k) {
        Fan f{x, std::move(ans.paths)};
        std::sort(f.paths.begin(), f.paths.end(),
                  [](const VertexPath& p, const VertexPath& r) { return p.back() < r.back(); });
        return f;
    }
    return SmallSeparator{std::move(ans.cut)};
}

std::optional<Cycle> cycle_through_two(const Graph& g, Vertex u, Vertex v, const VertexMask* blocked) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) {
        for (Vertex w : g.adj(u)) {
            if (blocked && (*blocked)[w]) continue;
            if (auto c = cycle_through_two(g, u, w, blocked)) return c;
        }
        return std::nullopt;
    }
    auto paths = two_paths_between(g, u, v, blocked);
    if (!paths) return std::nullopt;
    return must_cycle({paths->first, paths->second});
}

std::variant<Cycle, Theta> cycle_or_theta(const Graph& g, Vertex x, Vertex y, Vertex z) {
    for (Vertex v : {x, y, z}) check_vertex(g, v);
    require_2_connected(g);

    if (x == y || y == z || x == z) {
        Vertex u = x, v = (x == y) ? z : y;
        if (auto c = cycle_through_two(g, u, v)) return *c;
        throw std::logic_error("2-connected graph without a cycle through two vertices");
    }

    auto sides = two_paths_between(g, x, z, nullptr);
    if (!sides) throw std::logic_error("2-connected graph without two x-z paths");
    VertexPath s_a = sides->first, s_b = sides->second;  // both run x ... z
    if (s_a.contains(y) || s_b.contains(y)) return must_cycle({s_a, s_b});

    std::vector<Vertex> on_cycle = s_a.vertices;
    on_cycle.insert(on_cycle.end(), s_b.vertices.begin() + 1, s_b.vertices.end() - 1);
    auto fan = k_fan(g, y, on_cycle, 2);
    if (!std::holds_alternative<Fan>(fan)) throw std::logic_error("2-connected graph without a 2-fan");
    const auto& fp = std::get<Fan>(fan).paths;  // y ... t
    const VertexPath& f0 = fp[0];
    const VertexPath& f1 = fp[1];
    Vertex t0 = f0.back(), t1 = f1.back();

    for (const VertexPath* side : {&s_a, &s_b}) {
        const VertexPath* other = side == &s_a ? &s_b : &s_a;
        if (!side->contains(t0) || !side->contains(t1)) continue;
        std::size_t i0 = index_of(*side, t0), i1 = index_of(*side, t1);
        const VertexPath* near = &f0;
        const VertexPath* far = &f1;
        if (i1 < i0) {
            std::swap(i0, i1);
            std::swap(near, far);
        }
        return must_cycle({slice(*side, 0, i0), *near, *far, slice(*side, i1, side->length()), *other});
    }

    // One branch vertex on each side, both interior.
    const VertexPath* fa = s_a.contains(t0) ? &f0 : &f1;
    const VertexPath* fb = fa == &f0 ? &f1 : &f0;
    Theta t;
    t.t_a = fa->back();
    t.t_b = fb->back();
    std::size_t ia = index_of(s_a, t.t_a), ib = index_of(s_b, t.t_b);
    t.p_a = slice(s_a, ia, 0);
    t.r_a = slice(s_a, ia, s_a.length());
    t.p_b = slice(s_b, ib, 0);
    t.r_b = slice(s_b, ib, s_b.length());
    t.q_a = fa->reversed();
    t.q_b = fb->reversed();
    return t;
}

Cycle cycle_through_fan(const Graph& g, const Cycle& c, Vertex x, Vertex y, Vertex z) {
    for (Vertex v : {x, y, z}) check_vertex(g, v);
    if (!is_cycle_in(g, c)) throw PreconditionError("not a cycle of the graph");
    if (c.contains(x)) throw PreconditionError("x lies on the cycle");
    if (y == z || !c.contains(y) || !c.contains(z)) throw PreconditionError("y, z must be distinct cycle vertices");

    auto fan = k_fan(g, x, c.vertices, 3);
    if (auto* sep = std::get_if<SmallSeparator>(&fan)) throw SeparatorExists(sep->vertices);
    const auto& paths = std::get<Fan>(fan).paths;  // x ... c_i

    // Split the cycle edge-wise into q = y ... z and r = z ... y.
    const auto& cv = c.vertices;
    const std::size_t len = cv.size();
    std::size_t iy = static_cast<std::size_t>(std::find(cv.begin(), cv.end(), y) - cv.begin());
    VertexPath q, r;
    for (std::size_t k = iy;; k = (k + 1) % len) {
        q.vertices.push_back(cv[k]);
        if (cv[k] == z) break;
    }
    for (std::size_t k = (iy + q.vertices.size() - 1) % len;; k = (k + 1) % len) {
        r.vertices.push_back(cv[k]);
        if (cv[k] == y) break;
    }

    for (std::size_t i = 0; i < paths.size(); ++i) {
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            Vertex ci = paths[i].back(), cj = paths[j].back();
            for (const VertexPath* side : {&q, &r}) {
                const VertexPath* other = side == &q ? &r : &q;
                if (!side->contains(ci) || !side->contains(cj)) continue;
                std::size_t pi = index_of(*side, ci), pj = index_of(*side, cj);
                const VertexPath* near = &paths[i];
                const VertexPath* far = &paths[j];
                if (pj < pi) {
                    std::swap(pi, pj);
                    std::swap(near, far);
                }
                return must_cycle({slice(*side, 0, pi), *near, *far, slice(*side, pj, side->length()), *other});
            }
        }
    }
    throw std::logic_error("cycle_through_fan: pigeon-hole failed");
}

bool is_valid_theta(const Graph& g, const Theta& t, Vertex x, Vertex y, Vertex z) {
    if (!g.valid(t.t_a) || !g.valid(t.t_b) || t.t_a == t.t_b) return false;
    for (Vertex v : {x, y, z})
        if (v == t.t_a || v == t.t_b) return false;
    struct Leg {
        const VertexPath* p;
        Vertex from, to;
    };
    const std::array<Leg, 6> legs{{{&t.p_a, t.t_a, x},
                                   {&t.p_b, t.t_b, x},
                                   {&t.q_a, t.t_a, y},
                                   {&t.q_b, t.t_b, y},
                                   {&t.r_a, t.t_a, z},
                                   {&t.r_b, t.t_b, z}}};
    std::vector<Vertex> interiors;
    for (const auto& leg : legs) {
        if (!is_path_in(g, *leg.p) || leg.p->front() != leg.from || leg.p->back() != leg.to) return false;
        const auto& vs = leg.p->vertices;
        interiors.insert(interiors.end(), vs.begin() + 1, vs.end() - 1);
    }
    std::vector<Vertex> all = interiors;
    for (Vertex v : {x, y, z, t.t_a, t.t_b}) all.push_back(v);
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

}  // namespace wheelkit
