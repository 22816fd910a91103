#include "wheelkit/cycle3.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wheelkit {

namespace {

using Roles = std::array<Vertex, 3>;

VertexPath slice(const VertexPath& p, std::size_t from, std::size_t to) {
    if (from <= to) return {{p.vertices.begin() + from, p.vertices.begin() + to + 1}};
    VertexPath r{{p.vertices.begin() + to, p.vertices.begin() + from + 1}};
    std::reverse(r.vertices.begin(), r.vertices.end());
    return r;
}

std::size_t index_of(const VertexPath& p, Vertex v) {
    auto it = std::find(p.vertices.begin(), p.vertices.end(), v);
    if (it == p.vertices.end()) throw std::logic_error("vertex not on path");
    return static_cast<std::size_t>(it - p.vertices.begin());
}

Cycle assemble(std::span<const VertexPath> parts) {
    auto c = cycle_from_paths(parts);
    if (!c) throw std::logic_error("cycle_or_splitter: path union is not a cycle");
    return *c;
}

VertexSet mask_to_set(const VertexMask& m) {
    VertexSet s;
    for (Vertex v = 0; v < static_cast<Vertex>(m.size()); ++v)
        if (m[v]) s.push_back(v);
    return s;
}

Edge norm(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

std::string edge_str(Vertex u, Vertex v) { return std::to_string(u) + "-" + std::to_string(v); }

std::string set_str(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::array<int, 2> others(int r) {
    if (r == 0) return {1, 2};
    if (r == 1) return {0, 2};
    return {0, 1};
}

VertexPath lift(const Subgraph& s, const VertexPath& p) {
    VertexPath out;
    for (Vertex v : p.vertices) out.vertices.push_back(s.lift(v));
    return out;
}

// Two disjoint paths inside a subgraph, in parent ids; a separator is a bug.
TwoPaths linked(const Subgraph& s, std::pair<Vertex, Vertex> from, std::pair<Vertex, Vertex> to) {
    auto loc = [&](Vertex v) {
        Vertex l = s.from_parent[v];
        if (l < 0) throw std::logic_error("cycle_or_splitter: terminal outside side subgraph");
        return l;
    };
    auto r = two_disjoint_paths(s.graph, {loc(from.first), loc(from.second)}, {loc(to.first), loc(to.second)});
    if (!std::holds_alternative<TwoPaths>(r)) throw std::logic_error("cycle_or_splitter: unexpected separator");
    auto& tp = std::get<TwoPaths>(r);
    return {lift(s, tp.p1), lift(s, tp.p2)};
}

using SideEdges = std::array<std::set<Edge>, 2>;

struct Pocket {
    Vertex v = -1;     // parent id of the cut vertex (or the anchor when empty)
    VertexSet inside;  // parent ids of C
};

class Builder {
public:
    Builder(const Graph& g, Roles terms, const Cycle3Options& options, Cycle3Trace* trace)
        : g_(g), term_(terms), options_(options), trace_(trace) {}

    std::variant<Cycle, Splitter> run() {
        auto ct = cycle_or_theta(g_, term_[0], term_[1], term_[2]);
        if (auto* c = std::get_if<Cycle>(&ct)) return finish(*c, Cycle3Route::direct);
        const Theta& th = std::get<Theta>(ct);
        if (trace_) trace_->theta = th;
        leg_ = {{{th.p_a, th.p_b}, {th.q_a, th.q_b}, {th.r_a, th.r_b}}};

        outside_.assign(g_.n(), 0);
        for (int r = 0; r < 3; ++r) {
            auto [o1, o2] = others(r);
            std::array<VertexPath, 4> ring{leg_[o1][0], leg_[o1][1], leg_[o2][0], leg_[o2][1]};
            Cycle ring_cycle = assemble(ring);
            auto fan = k_fan(g_, term_[r], ring_cycle.vertices, 3);
            if (std::holds_alternative<Fan>(fan))
                return finish(cycle_through_fan(g_, ring_cycle, term_[r], term_[o1], term_[o2]), Cycle3Route::fan);
            choose_separator(r, ring_cycle);
        }

        std::array<std::size_t, 2> size{};
        for (int s = 0; s < 2; ++s) size[s] = VertexSet(sorted_anchors(s)).size();
        for (int s = 0; s < 2; ++s)
            if (size[s] == 2) return finish(merged_anchor_cycle(s), Cycle3Route::merged_anchor);
        if (size[0] == 1 || size[1] == 1) return splitter();

        auto crossing = find_crossing_path();
        if (!crossing && !options_.always_build_sides) return splitter();
        auto sides = build_sides();
        if (auto* c = std::get_if<Cycle>(&sides)) return finish(*c, Cycle3Route::side_repair);
        if (!crossing) return splitter();
        return finish(crossing_cycle(*crossing, std::get<SideEdges>(sides)), Cycle3Route::crossing_path);
    }

private:
    struct Crossing {
        int r, r2;
        VertexPath path;
    };

    std::variant<Cycle, Splitter> finish(Cycle c, Cycle3Route route) {
        if (trace_) trace_->route = route;
        if (!verify_cycle_through(g_, c, term_).ok())
            throw std::logic_error("cycle_or_splitter: constructed cycle failed verification");
        return c;
    }

    std::variant<Cycle, Splitter> splitter() {
        if (trace_) trace_->route = Cycle3Route::splitter;
        Splitter s;
        s.anchor_a = anchor_[0];
        s.anchor_b = anchor_[1];
        s.a = sorted_anchors(0);
        s.b = sorted_anchors(1);
        s.parts = part_;
        auto verdict = verify_splitter(g_, term_[0], term_[1], term_[2], s);
        if (!verdict.ok())
            throw std::logic_error("cycle_or_splitter: splitter failed condition (" +
                                   verdict.violations.front().condition + "): " + verdict.violations.front().detail);
        return s;
    }

    VertexSet sorted_anchors(int s) const {
        VertexSet v(anchor_[s].begin(), anchor_[s].end());
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    // Pair {u, v} with u on the A leg and v on the B leg of role r cutting the
    // terminal off the opposite cycle, maximizing the terminal's component.
    void choose_separator(int r, const Cycle& ring) {
        VertexMask on_ring(g_.n(), 0);
        for (Vertex v : ring.vertices) on_ring[v] = 1;
        const auto& la = leg_[r][0].vertices;
        const auto& lb = leg_[r][1].vertices;
        long best = -1;
        Vertex bu = -1, bv = -1;
        VertexMask best_seen;
        VertexMask blocked(g_.n(), 0);
        for (std::size_t i = 0; i + 1 < la.size(); ++i) {
            for (std::size_t j = 0; j + 1 < lb.size(); ++j) {
                Vertex u = la[i], v = lb[j];
                blocked[u] = blocked[v] = 1;
                auto seen = reachable(g_, std::array{term_[r]}, &blocked);
                blocked[u] = blocked[v] = 0;
                bool cuts = true;
                long size = 0;
                for (Vertex w = 0; w < g_.n(); ++w) {
                    if (!seen[w]) continue;
                    ++size;
                    if (on_ring[w]) cuts = false;
                }
                if (!cuts) continue;
                if (size > best || (size == best && std::pair{u, v} < std::pair{bu, bv})) {
                    best = size;
                    bu = u;
                    bv = v;
                    best_seen = std::move(seen);
                }
            }
        }
        if (best < 0) throw std::logic_error("cycle_or_splitter: no 3-fan and no 2-separator");
        anchor_[0][r] = bu;
        anchor_[1][r] = bv;
        part_[r] = mask_to_set(best_seen);
        for (Vertex w : part_[r]) outside_[w] = 1;
    }

    // anchor_A ... terminal ... anchor_B along the two legs of role r.
    VertexPath role_path(int r) const {
        const VertexPath& la = leg_[r][0];
        const VertexPath& lb = leg_[r][1];
        VertexPath p = slice(la, index_of(la, anchor_[0][r]), la.length());
        VertexPath q = slice(lb, lb.length(), index_of(lb, anchor_[1][r]));
        p.vertices.insert(p.vertices.end(), q.vertices.begin() + 1, q.vertices.end());
        return p;
    }

    Cycle merged_anchor_cycle(int s) {
        const int o = 1 - s;
        int r1 = -1, r2 = -1;
        for (int i = 0; i < 3 && r1 < 0; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (anchor_[s][i] == anchor_[s][j]) {
                    r1 = i;
                    r2 = j;
                    break;
                }
        const int r3 = 3 - r1 - r2;
        if (anchor_[o][r1] == anchor_[o][r2]) throw std::logic_error("cycle_or_splitter: doubly merged anchors");
        VertexMask blocked(g_.n(), 0);
        for (Vertex v : part_[r3]) blocked[v] = 1;
        blocked[anchor_[s][r1]] = 1;
        auto res = two_disjoint_paths(g_, {anchor_[s][r3], anchor_[o][r3]}, {anchor_[o][r1], anchor_[o][r2]}, &blocked);
        if (!std::holds_alternative<TwoPaths>(res))
            throw std::logic_error("cycle_or_splitter: separator contradicts maximality");
        const auto& tp = std::get<TwoPaths>(res);
        std::array<VertexPath, 5> parts{role_path(0), role_path(1), role_path(2), tp.p1, tp.p2};
        return assemble(parts);
    }

    std::optional<Crossing> find_crossing_path() const {
        for (int r = 0; r < 3; ++r) {
            for (int r2 = 0; r2 < 3; ++r2) {
                if (r == r2) continue;
                VertexMask blocked(g_.n(), 0);
                for (int s = 0; s < 2; ++s)
                    for (Vertex a : anchor_[s]) blocked[a] = 1;
                blocked[anchor_[0][r]] = 0;
                blocked[anchor_[1][r2]] = 0;
                VertexMask target(g_.n(), 0);
                target[anchor_[1][r2]] = 1;
                if (auto p = bfs_path(g_, std::array{anchor_[0][r]}, target, &blocked)) return Crossing{r, r2, *p};
            }
        }
        return std::nullopt;
    }

    static Subgraph side_graph(const Graph& g, const std::set<Edge>& edges) {
        std::vector<Edge> list(edges.begin(), edges.end());
        return edge_subgraph(g, list);
    }

    static void add_path(std::set<Edge>& edges, const VertexPath& p) {
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) edges.insert(norm(p.vertices[i], p.vertices[i + 1]));
    }

    // Component of `from` in h - v (local ids), as parent ids.
    static VertexSet component_without(const Subgraph& h, Vertex v, Vertex from) {
        VertexMask blocked(h.graph.n(), 0);
        blocked[h.from_parent[v]] = 1;
        auto seen = reachable(h.graph, std::array{h.from_parent[from]}, &blocked);
        VertexSet out;
        for (Vertex l = 0; l < h.graph.n(); ++l)
            if (seen[l]) out.push_back(h.lift(l));
        std::sort(out.begin(), out.end());
        return out;
    }

    // Largest pocket around the anchor of role r: a vertex v and the component
    // of G_side - v holding that anchor but neither of the other two.
    std::optional<Pocket> best_pocket(int side, const Subgraph& h, int r) const {
        std::optional<Pocket> best;
        auto [o1, o2] = others(r);
        std::vector<Vertex> order(h.to_parent);
        std::sort(order.begin(), order.end());
        for (Vertex v : order) {
            if (v == anchor_[side][r]) continue;
            VertexSet c = component_without(h, v, anchor_[side][r]);
            if (std::binary_search(c.begin(), c.end(), anchor_[side][o1]) ||
                std::binary_search(c.begin(), c.end(), anchor_[side][o2]))
                continue;
            if (!best || c.size() > best->inside.size()) best = Pocket{v, std::move(c)};
        }
        return best;
    }

    // Replace the side by G_side[C + v] when one block-side already holds all
    // three anchors.
    bool shrink(int side, const Subgraph& h, std::set<Edge>& edges) const {
        for (Vertex lc : blocks(h.graph).cut_vertices) {
            Vertex v = h.lift(lc);
            VertexMask blocked(h.graph.n(), 0);
            blocked[lc] = 1;
            std::vector<int> label;
            components(h.graph, label, &blocked);
            std::set<int> seen;
            for (Vertex a : anchor_[side])
                if (a != v) seen.insert(label[h.from_parent[a]]);
            if (seen.size() != 1) continue;
            const int common = *seen.begin();
            std::set<Edge> kept;
            for (const Edge& e : edges) {
                Vertex lu = h.from_parent[e.first], lw = h.from_parent[e.second];
                bool u_in = lu == lc || label[lu] == common;
                bool w_in = lw == lc || label[lw] == common;
                if (u_in && w_in) kept.insert(e);
            }
            edges = std::move(kept);
            return true;
        }
        return false;
    }

    // One exchange step on a side with a cut vertex. Either grows a side by an
    // ear, or finds a cycle through the terminals.
    std::optional<Cycle> repair(int p, SideEdges& edges) {
        const int o = 1 - p;
        std::array<Subgraph, 2> h{side_graph(g_, edges[0]), side_graph(g_, edges[1])};
        int role = -1;
        std::array<Pocket, 2> pocket;
        for (int r = 0; r < 3 && role < 0; ++r) {
            if (auto pk = best_pocket(p, h[p], r)) {
                role = r;
                pocket[p] = std::move(*pk);
            }
        }
        if (role < 0) throw std::logic_error("cycle_or_splitter: cut vertex without a pocket");
        if (auto pk = best_pocket(o, h[o], role)) pocket[o] = std::move(*pk);
        else pocket[o] = Pocket{anchor_[o][role], {}};

        std::vector<int> side_of(g_.n(), -1);
        for (int s = 0; s < 2; ++s)
            for (Vertex v : h[s].to_parent) side_of[v] = s;
        VertexMask in_pocket(g_.n(), 0);
        std::vector<Vertex> sources;
        for (int s = 0; s < 2; ++s)
            for (Vertex v : pocket[s].inside) {
                in_pocket[v] = 1;
                sources.push_back(v);
            }
        std::sort(sources.begin(), sources.end());
        auto is_target = [&](Vertex v) {
            return side_of[v] >= 0 && !in_pocket[v] && v != pocket[0].v && v != pocket[1].v;
        };
        auto is_free = [&](Vertex v) { return side_of[v] < 0 && !outside_[v]; };
        auto allowed = [&](Vertex u, Vertex w) {
            Edge e = norm(u, w);
            return !edges[0].count(e) && !edges[1].count(e);
        };

        std::vector<Vertex> parent(g_.n(), -1);
        VertexMask seen(g_.n(), 0);
        std::vector<Vertex> queue(sources);
        for (Vertex s : sources) seen[s] = 1;
        std::optional<VertexPath> ear;
        for (std::size_t qi = 0; qi < queue.size() && !ear; ++qi) {
            Vertex u = queue[qi];
            for (Vertex w : g_.adj(u)) {
                if (!allowed(u, w)) continue;
                if (is_target(w)) {
                    VertexPath path{{w}};
                    for (Vertex t = u; t >= 0; t = parent[t]) path.vertices.push_back(t);
                    std::reverse(path.vertices.begin(), path.vertices.end());
                    ear = std::move(path);
                    break;
                }
                if (is_free(w) && !seen[w]) {
                    seen[w] = 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if (!ear) throw std::logic_error("cycle_or_splitter: no ear leaves the pocket");

        const int a = side_of[ear->front()];
        const int b = side_of[ear->back()];
        if (a == b) {
            add_path(edges[a], *ear);
            return std::nullopt;
        }

        // The ear crosses from the pocket on side a to side b.
        auto [r1, r2] = others(role);
        const Subgraph& ha = h[a];
        VertexMask not_pocket(ha.graph.n(), 1);
        for (Vertex v : pocket[a].inside) not_pocket[ha.from_parent[v]] = 0;
        VertexMask target(ha.graph.n(), 0);
        target[ha.from_parent[anchor_[a][role]]] = 1;
        auto t_in = bfs_path(ha.graph, std::array{ha.from_parent[ear->front()]}, target, &not_pocket);
        VertexMask pocket_mask(ha.graph.n(), 0);
        for (Vertex v : pocket[a].inside) pocket_mask[ha.from_parent[v]] = 1;
        VertexMask target2(ha.graph.n(), 0);
        target2[ha.from_parent[anchor_[a][r2]]] = 1;
        auto t_out = bfs_path(ha.graph, std::array{ha.from_parent[anchor_[a][r1]]}, target2, &pocket_mask);
        if (!t_in || !t_out) throw std::logic_error("cycle_or_splitter: pocket paths missing");
        TwoPaths tb = linked(h[b], {anchor_[b][role], ear->back()}, {anchor_[b][r1], anchor_[b][r2]});
        std::array<VertexPath, 8> parts{role_path(0), role_path(1), role_path(2), *ear,
                                        lift(ha, *t_in), lift(ha, *t_out), tb.p1, tb.p2};
        return assemble(parts);
    }

    std::variant<Cycle, SideEdges> build_sides() {
        SideEdges edges;
        for (int s = 0; s < 2; ++s)
            for (int r = 0; r < 3; ++r) add_path(edges[s], slice(leg_[r][s], 0, index_of(leg_[r][s], anchor_[s][r])));

        const long cap = 64 + 8L * (g_.n() + g_.m()) * (g_.n() + 1);
        for (long iter = 0; iter < cap; ++iter) {
            bool clean = true;
            for (int p = 0; p < 2 && clean; ++p) {
                Subgraph h = side_graph(g_, edges[p]);
                if (!find_cut_vertex(h.graph)) continue;
                clean = false;
                if (shrink(p, h, edges[p])) break;
                if (auto c = repair(p, edges)) return *c;
            }
            if (clean) {
                record_sides(edges);
                return edges;
            }
        }
        throw std::logic_error("cycle_or_splitter: side repair did not terminate");
    }

    void record_sides(const SideEdges& edges) {
        if (!trace_) return;
        trace_->sides_built = true;
        std::array<Subgraph, 2> h{side_graph(g_, edges[0]), side_graph(g_, edges[1])};
        trace_->sides_2_connected = is_2_connected(h[0].graph) && is_2_connected(h[1].graph);
        bool disjoint = true;
        for (Vertex v : h[0].to_parent)
            if (h[1].from_parent[v] >= 0 || outside_[v]) disjoint = false;
        for (Vertex v : h[1].to_parent)
            if (outside_[v]) disjoint = false;
        for (int s = 0; s < 2; ++s)
            for (Vertex a : anchor_[s])
                if (h[s].from_parent[a] < 0) disjoint = false;
        trace_->sides_disjoint = disjoint;
    }

    Cycle crossing_cycle(const Crossing& cr, const SideEdges& edges) {
        std::array<Subgraph, 2> h{side_graph(g_, edges[0]), side_graph(g_, edges[1])};
        const auto& path = cr.path.vertices;
        std::size_t j = 0;
        while (j < path.size() && h[1].from_parent[path[j]] < 0) ++j;
        if (j == path.size()) throw std::logic_error("cycle_or_splitter: crossing path misses G_B");
        std::size_t i = j;
        while (i > 0 && h[0].from_parent[path[i - 1]] < 0) --i;
        if (i == 0) throw std::logic_error("cycle_or_splitter: crossing path misses G_A");
        --i;
        VertexPath sp{{path.begin() + i, path.begin() + j + 1}};
        const Vertex s_a = sp.front(), s_b = sp.back();

        const int x = cr.r, y = cr.r2, z = 3 - cr.r - cr.r2;
        const Roles& A = anchor_[0];
        const Roles& B = anchor_[1];
        std::array<VertexPath, 8> parts{sp, role_path(0), role_path(1), role_path(2)};
        auto put = [&](const TwoPaths& first, const TwoPaths& second) {
            parts[4] = first.p1;
            parts[5] = first.p2;
            parts[6] = second.p1;
            parts[7] = second.p2;
        };
        TwoPaths ta = linked(h[0], {A[x], A[y]}, {s_a, A[z]});
        if (ta.p1.back() == s_a) {
            put(ta, linked(h[1], {B[x], s_b}, {B[y], B[z]}));
        } else {
            TwoPaths tb = linked(h[1], {B[y], B[x]}, {s_b, B[z]});
            if (tb.p1.back() == s_b) put(tb, linked(h[0], {A[y], s_a}, {A[x], A[z]}));
            else put(ta, tb);
        }
        return assemble(parts);
    }

    const Graph& g_;
    Roles term_;
    const Cycle3Options& options_;
    Cycle3Trace* trace_;
    std::array<std::array<VertexPath, 2>, 3> leg_;  // leg_[role][side]: t_side ... terminal
    std::array<Roles, 2> anchor_{};                 // anchor_[side][role]
    std::array<VertexSet, 3> part_;
    VertexMask outside_;                            // X + Y + Z
};

}  // namespace

Splitter swapped(const Splitter& s) {
    Splitter t = s;
    std::swap(t.a, t.b);
    std::swap(t.anchor_a, t.anchor_b);
    return t;
}

std::string to_string(Cycle3Route route) {
    switch (route) {
        case Cycle3Route::direct: return "direct";
        case Cycle3Route::fan: return "fan";
        case Cycle3Route::merged_anchor: return "merged_anchor";
        case Cycle3Route::side_repair: return "side_repair";
        case Cycle3Route::crossing_path: return "crossing_path";
        case Cycle3Route::splitter: return "splitter";
    }
    return "unknown";
}

std::variant<Cycle, Splitter> cycle_or_splitter(const Graph& g, Vertex x, Vertex y, Vertex z,
                                                const Cycle3Options& options, Cycle3Trace* trace) {
    for (Vertex v : {x, y, z})
        if (!g.valid(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    require_2_connected(g);
    return Builder(g, {x, y, z}, options, trace).run();
}

Verdict verify_cycle_through(const Graph& g, const Cycle& c, std::span<const Vertex> required) {
    Verdict out;
    const auto& cv = c.vertices;
    if (cv.size() < 3) out.add("length", "cycle has " + std::to_string(cv.size()) + " vertices");
    bool in_range = true;
    for (Vertex v : cv)
        if (!g.valid(v)) {
            out.add("range", "vertex " + std::to_string(v) + " out of range");
            in_range = false;
        }
    VertexSet sorted(cv);
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
        out.add("repeat", "vertex " + std::to_string(*it) + " repeated");
    if (in_range && cv.size() >= 2) {
        for (std::size_t i = 0; i < cv.size(); ++i) {
            Vertex u = cv[i], w = cv[(i + 1) % cv.size()];
            if (cv.size() == 2 && i == 1) break;
            if (!g.has_edge(u, w)) out.add("edge", "missing edge " + edge_str(u, w));
        }
    }
    for (Vertex v : required)
        if (!std::binary_search(sorted.begin(), sorted.end(), v))
            out.add("required", "vertex " + std::to_string(v) + " not on the cycle");
    return out;
}

Verdict verify_splitter(const Graph& g, Vertex x, Vertex y, Vertex z, const Splitter& s) {
    Verdict out;
    const Roles term{x, y, z};
    const char* names[3] = {"x", "y", "z"};
    for (Vertex t : term)
        if (!g.valid(t)) out.add("malformed", "terminal " + std::to_string(t) + " out of range");
    if (!out.ok()) return out;
    if (x == y || y == z || x == z) {
        out.add("malformed", "terminals are not distinct");
        return out;
    }
    auto check_ids = [&](std::span<const Vertex> ids, const std::string& what) {
        for (Vertex v : ids)
            if (!g.valid(v)) out.add("malformed", what + " contains out-of-range vertex " + std::to_string(v));
    };
    check_ids(s.a, "A");
    check_ids(s.b, "B");
    check_ids(s.anchor_a, "anchors");
    check_ids(s.anchor_b, "anchors");
    for (int r = 0; r < 3; ++r) check_ids(s.parts[r], std::string(1, "XYZ"[r]));
    if (!out.ok()) return out;

    auto normalized = [](VertexSet v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    const VertexSet A = normalized(s.a), B = normalized(s.b);
    if (A.size() != s.a.size() || B.size() != s.b.size()) out.add("malformed", "A or B lists a vertex twice");
    if (A.empty() || B.empty()) out.add("malformed", "A and B must be non-empty");
    VertexSet common;
    std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(common));
    if (!common.empty()) out.add("malformed", "A and B intersect in " + set_str(common));
    if (!out.ok()) return out;

    const std::array<const VertexSet*, 2> side{&A, &B};
    const std::array<const Roles*, 2> anchors{&s.anchor_a, &s.anchor_b};
    const char* side_name[2] = {"A", "B"};

    // (i)
    VertexMask cut(g.n(), 0);
    for (Vertex v : A) cut[v] = 1;
    for (Vertex v : B) cut[v] = 1;
    std::vector<int> label;
    components(g, label, &cut);
    for (int r = 0; r < 3; ++r) {
        if (cut[term[r]]) {
            out.add("i", std::string(names[r]) + " lies in A or B");
            continue;
        }
        VertexSet actual;
        for (Vertex v = 0; v < g.n(); ++v)
            if (label[v] == label[term[r]]) actual.push_back(v);
        if (normalized(s.parts[r]) != actual)
            out.add("i", std::string(1, "XYZ"[r]) + " = " + set_str(normalized(s.parts[r])) +
                             " is not the component of " + names[r] + ", which is " + set_str(actual));
    }
    for (int r = 0; r < 3; ++r)
        for (int r2 = r + 1; r2 < 3; ++r2)
            if (!cut[term[r]] && !cut[term[r2]] && label[term[r]] == label[term[r2]])
                out.add("i", std::string(names[r]) + " and " + names[r2] + " share a component");

    // (ii), (iii)
    for (int sd = 0; sd < 2; ++sd) {
        const char* tag = sd == 0 ? "ii" : "iii";
        for (int r = 0; r < 3; ++r) {
            Vertex anchor = (*anchors[sd])[r];
            for (Vertex v : s.parts[r])
                for (Vertex w : g.adj(v))
                    if (std::binary_search(side[sd]->begin(), side[sd]->end(), w) && w != anchor)
                        out.add(tag, "edge " + edge_str(v, w) + " joins " + "XYZ"[r] + " to " + side_name[sd] +
                                         " away from its anchor " + std::to_string(anchor));
        }
    }

    // (iv)
    for (int sd = 0; sd < 2; ++sd) {
        VertexSet listed = normalized(VertexSet(anchors[sd]->begin(), anchors[sd]->end()));
        if (listed != *side[sd])
            out.add("iv", std::string(side_name[sd]) + " = " + set_str(*side[sd]) + " but its anchors are " +
                              set_str(listed));
    }

    // (v)
    for (int sd = 0; sd < 2; ++sd)
        if (side[sd]->size() != 1 && side[sd]->size() != 3)
            out.add("v", std::string("|") + side_name[sd] + "| = " + std::to_string(side[sd]->size()));

    // (vi)
    for (int r = 0; r < 3; ++r) {
        VertexMask gone(g.n(), 0);
        for (Vertex v : s.parts[r]) gone[v] = 1;
        if (is_2_connected(g, &gone)) continue;
        auto cv = find_cut_vertex(g, &gone);
        out.add("vi", std::string("G - ") + "XYZ"[r] + " is not 2-connected" +
                          (cv ? ": cut vertex " + std::to_string(*cv) : std::string()));
    }

    // (vii)
    if (A.size() == 3 && B.size() == 3) {
        for (Vertex a : A)
            for (Vertex w : g.adj(a)) {
                if (!std::binary_search(B.begin(), B.end(), w)) continue;
                bool paired = false;
                for (int r = 0; r < 3; ++r)
                    if (s.anchor_a[r] == a && s.anchor_b[r] == w) paired = true;
                if (!paired) out.add("vii", "edge " + edge_str(a, w) + " joins A and B across roles");
            }
        int count = 1 + *std::max_element(label.begin(), label.end());
        std::vector<VertexSet> nbrs(std::max(count, 0));
        for (Vertex v = 0; v < g.n(); ++v) {
            if (label[v] < 0) continue;
            for (Vertex w : g.adj(v))
                if (cut[w]) nbrs[label[v]].push_back(w);
        }
        for (int c = 0; c < count; ++c) {
            VertexSet nd = normalized(nbrs[c]);
            auto within = [&](const VertexSet& allowed) {
                return std::includes(allowed.begin(), allowed.end(), nd.begin(), nd.end());
            };
            bool fine = within(A) || within(B);
            for (int r = 0; r < 3 && !fine; ++r)
                fine = within(normalized({s.anchor_a[r], s.anchor_b[r]}));
            if (!fine) {
                Vertex rep = static_cast<Vertex>(std::find(label.begin(), label.end(), c) - label.begin());
                out.add("vii", "component of " + std::to_string(rep) + " has neighborhood " + set_str(nd));
            }
        }
    }
    return out;
}

}  // namespace wheelkit
