#include "wheelkit/connectivity.hpp"

#include <algorithm>
#include <set>

#include "wheelkit/detail/flow.hpp"

namespace wheelkit {

namespace {

VertexSet normalized_set(const Graph& g, std::span<const Vertex> f) {
    VertexSet s(f.begin(), f.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Vertex v : s)
        if (!g.valid(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    return s;
}

bool is_complete(const Graph& g) {
    long n = g.n();
    return g.m() == n * (n - 1) / 2;
}

// All size-k subsets S with G - S disconnected.
void enumerate_cutsets(const Graph& g, int k, std::set<VertexSet>& out) {
    const int n = g.n();
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    VertexMask blocked(n, 0);
    for (;;) {
        for (int i : idx) blocked[i] = 1;
        if (!is_connected(g, &blocked)) out.insert(VertexSet(idx.begin(), idx.end()));
        for (int i : idx) blocked[i] = 0;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

VertexSet neighborhood(const Graph& g, std::span<const Vertex> f) {
    VertexSet fs = normalized_set(g, f);
    VertexMask in(g.n(), 0);
    for (Vertex v : fs) in[v] = 1;
    VertexSet out;
    for (Vertex v : fs)
        for (Vertex w : g.adj(v))
            if (!in[w]) out.push_back(w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Connectivity kappa(const Graph& g, Exec exec) {
    const int n = g.n();
    Connectivity c;
    if (n == 0) return c;
    if (!is_connected(g)) return c;
    if (is_complete(g)) {
        c.k = n - 1;
        c.complete = true;
        return c;
    }
    // Start from the smallest neighborhood of a vertex that has a non-neighbor.
    c.k = n;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) < n - 1 && g.degree(v) < c.k) {
            c.k = g.degree(v);
            c.cutset.assign(g.adj(v).begin(), g.adj(v).end());
        }
    }
    for (Vertex i = 0; i < n && i <= c.k; ++i) {
        std::vector<Vertex> partners;
        for (Vertex j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j)) partners.push_back(j);
        const int limit = c.k;
        std::vector<detail::FlowAnswer> answers(partners.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
        for (std::size_t t = 0; t < partners.size(); ++t) answers[t] = detail::local_paths(g, i, partners[t], limit);
        for (auto& a : answers) {
            if (static_cast<int>(a.paths.size()) < c.k) {
                c.k = static_cast<int>(a.paths.size());
                c.cutset = std::move(a.cut);
            }
        }
    }
    return c;
}

std::vector<VertexSet> minimum_cutsets(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    if (is_complete(g)) throw PreconditionError("complete graphs have no vertex cutset");
    const int n = g.n();
    const int k = kappa(g).k;
    std::set<VertexSet> found;
    if (n <= 24) {
        enumerate_cutsets(g, k, found);
    } else {
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;
                auto a = detail::local_paths(g, u, v, k + 1);
                if (static_cast<int>(a.paths.size()) == k) found.insert(a.cut);
            }
    }
    return {found.begin(), found.end()};
}

std::vector<Fragment> fragments_and_ends(const Graph& g, std::size_t limit) {
    if (g.n() == 0 || !is_connected(g)) throw PreconditionError("fragments need a connected graph");
    if (is_complete(g)) throw PreconditionError("complete graphs have no fragments");
    const int n = g.n();
    std::vector<Fragment> out;
    std::vector<std::size_t> singles;  // fragments made of one component
    for (const VertexSet& s : minimum_cutsets(g)) {
        VertexMask blocked(n, 0);
        for (Vertex v : s) blocked[v] = 1;
        std::vector<int> label;
        int t = components(g, label, &blocked);
        if (t > 62 || out.size() + ((std::size_t{1} << t) - 2) > limit)
            throw PreconditionError("too many fragments to list");
        for (unsigned long long mask = 1; mask + 1 < (1ULL << t); ++mask) {
            Fragment fr;
            fr.neighborhood = s;
            for (Vertex v = 0; v < n; ++v) {
                if (label[v] < 0) continue;
                (((mask >> label[v]) & 1) ? fr.f : fr.complement).push_back(v);
            }
            if ((mask & (mask - 1)) == 0) singles.push_back(out.size());
            out.push_back(std::move(fr));
        }
    }
    // Every fragment contains a one-component fragment, so ends are the
    // minimal one-component fragments.
    for (std::size_t i : singles) {
        bool minimal = true;
        for (std::size_t j : singles) {
            if (i == j) continue;
            const auto& a = out[j].f;
            const auto& b = out[i].f;
            if (a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                minimal = false;
                break;
            }
        }
        out[i].is_end = minimal;
    }
    std::sort(out.begin(), out.end(), [](const Fragment& a, const Fragment& b) {
        if (a.f.size() != b.f.size()) return a.f.size() < b.f.size();
        return a.f < b.f;
    });
    return out;
}

std::vector<Edge> essential_edges(const Graph& g, Exec exec) {
    const int base = kappa(g, exec).k;
    auto edges = g.edges();
    std::vector<char> essential(edges.size(), 0);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
    for (std::size_t i = 0; i < edges.size(); ++i)
        essential[i] = kappa(remove_edge(g, edges[i].first, edges[i].second), Exec::serial).k < base;
    std::vector<Edge> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (essential[i]) out.push_back(edges[i]);
    return out;
}

bool is_minimally_3_connected(const Graph& g, Exec exec) {
    if (kappa(g, exec).k != 3) return false;
    return static_cast<int>(essential_edges(g, exec).size()) == g.m();
}

Subgraph extend_2cut_block(const Graph& g, std::span<const Vertex> f) {
    VertexSet fs = normalized_set(g, f);
    if (fs.empty()) throw PreconditionError("F must be non-empty");
    auto c = kappa(g);
    if (c.complete || c.k != 2) throw PreconditionError("extend_2cut_block needs kappa(G) = 2");
    VertexSet nf = neighborhood(g, fs);
    if (nf.size() != 2) throw PreconditionError("N(F) must have exactly two vertices");
    if (fs.size() < 2) throw PreconditionError("F must have at least two vertices");
    bool end = false, fragment = false;
    for (const auto& fr : fragments_and_ends(g))
        if (fr.f == fs) {
            fragment = true;
            end = fr.is_end;
        }
    if (!fragment) throw PreconditionError("F is not a fragment");
    if (!end) throw PreconditionError("F is not an end");

    VertexSet keep = fs;
    keep.insert(keep.end(), nf.begin(), nf.end());
    std::sort(keep.begin(), keep.end());
    Subgraph s = induced_subgraph(g, keep);
    Vertex la = s.from_parent[nf[0]], lb = s.from_parent[nf[1]];
    if (!s.graph.has_edge(la, lb)) s.graph = add_edge(s.graph, la, lb);
    return s;
}

ThreeSepExtension extend_3sep(const Graph& g, std::span<const Vertex> f) {
    VertexSet fs = normalized_set(g, f);
    if (fs.empty()) throw PreconditionError("F must be non-empty");
    VertexSet nf = neighborhood(g, fs);
    if (nf.size() != 3) throw PreconditionError("N(F) must have exactly three vertices");
    auto c = kappa(g);
    if (c.complete || c.k != 3) throw PreconditionError("extend_3sep needs kappa(G) = 3");
    if (static_cast<int>(fs.size() + nf.size()) == g.n()) throw PreconditionError("F is not a fragment");

    VertexSet keep = fs;
    keep.insert(keep.end(), nf.begin(), nf.end());
    std::sort(keep.begin(), keep.end());
    Subgraph base = induced_subgraph(g, keep);

    ThreeSepExtension ext;
    ext.to_parent = base.to_parent;
    int n = base.graph.n();
    std::vector<Edge> edges;
    for (auto [u, v] : base.graph.edges()) {
        bool both_cut = std::binary_search(nf.begin(), nf.end(), base.lift(u)) &&
                        std::binary_search(nf.begin(), nf.end(), base.lift(v));
        if (!both_cut) edges.emplace_back(u, v);
    }
    VertexMask in_f(g.n(), 0);
    for (Vertex v : fs) in_f[v] = 1;
    for (int r = 0; r < 3; ++r) {
        Vertex a = nf[r];
        ext.attach[r] = base.from_parent[a];
        int inside = 0;
        for (Vertex w : g.adj(a)) inside += in_f[w];
        ext.created[r] = inside >= 2;
        if (ext.created[r]) {
            ext.primed[r] = n++;
            ext.to_parent.push_back(-1);
            edges.emplace_back(ext.attach[r], ext.primed[r]);
        } else {
            ext.primed[r] = ext.attach[r];
        }
    }
    ext.d = n++;
    ext.d2 = n++;
    ext.to_parent.push_back(-1);
    ext.to_parent.push_back(-1);
    for (int r = 0; r < 3; ++r) {
        edges.emplace_back(ext.primed[r], ext.d);
        edges.emplace_back(ext.primed[r], ext.d2);
    }
    ext.graph = Graph(n, edges);
    return ext;
}

}  // namespace wheelkit
