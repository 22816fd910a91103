#include "wheelkit/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wheelkit {

namespace {

int smallest_free(const Graph& g, const std::vector<int>& colors, Vertex v) {
    std::vector<char> used(5, 0);
    for (Vertex w : g.adj(v))
        if (colors[w] >= 0 && colors[w] < 5) used[colors[w]] = 1;
    int c = 0;
    while (used[c]) ++c;
    return c;
}

}  // namespace

Coloring color3_peel(const Graph& g, std::vector<PeelStep>* trace) {
    const int n = g.n();
    Coloring out;
    out.max_colors = 3;
    out.colors.assign(n, -1);
    if (trace) trace->clear();
    if (n == 0) return out;

    VertexMask alive(n, 1);
    std::vector<int> deg(n);
    std::set<Vertex> low;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 2) low.insert(v);
    }
    auto remove = [&](Vertex v) {
        alive[v] = 0;
        low.erase(v);
        for (Vertex w : g.adj(v)) {
            if (!alive[w]) continue;
            if (--deg[w] <= 2) low.insert(w);
        }
    };

    std::vector<PeelStep> steps;
    for (int left = n; left > 1; --left) {
        if (!low.empty()) {
            Vertex v = *low.begin();
            steps.push_back({PeelKind::low_degree, v, -1});
            remove(v);
            continue;
        }
        // Twins among the remaining degree-3 vertices.
        std::map<std::array<Vertex, 3>, Vertex> seen;
        std::optional<std::pair<Vertex, Vertex>> twin;
        for (Vertex v = 0; v < n && !twin; ++v) {
            if (!alive[v] || deg[v] != 3) continue;
            std::array<Vertex, 3> key{};
            int i = 0;
            for (Vertex w : g.adj(v))
                if (alive[w]) key[i++] = w;
            auto [it, fresh] = seen.emplace(key, v);
            if (!fresh) twin = std::pair{it->second, v};
        }
        if (!twin) throw std::logic_error("color3: no vertex of degree <= 2 and no twins in a wheel-free graph");
        steps.push_back({PeelKind::twin, twin->second, twin->first});
        remove(twin->second);
    }
    Vertex last = static_cast<Vertex>(std::find(alive.begin(), alive.end(), 1) - alive.begin());
    steps.push_back({PeelKind::base, last, -1});

    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (it->kind == PeelKind::twin) out.colors[it->removed] = out.colors[it->partner];
        else out.colors[it->removed] = smallest_free(g, out.colors, it->removed);
    }
    if (trace) *trace = std::move(steps);
    return out;
}

Coloring color3(const Graph& g, std::vector<PeelStep>* trace, Exec exec) {
    if (auto w = find_wheel(g, exec)) throw WheelFound("not wheel-free", *w);
    return color3_peel(g, trace);
}

bool is_k4(const Graph& g) { return g.n() == 4 && g.m() == 6; }

Coloring color4_long(const Graph& g, Exec exec) {
    if (auto w = find_long_wheel(g, exec)) throw WheelFound("contains a long wheel", *w);
    const int n = g.n();
    Coloring out;
    out.max_colors = 4;
    out.colors.assign(n, -1);
    auto bd = blocks(g);
    const int nb = static_cast<int>(bd.blocks.size());

    std::vector<std::vector<int>> local(nb);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
    for (int b = 0; b < nb; ++b) {
        const Block& blk = bd.blocks[b];
        Subgraph s = induced_subgraph(g, blk.vertices);
        if (blk.kind != BlockKind::biconnected) {
            local[b].resize(blk.vertices.size());
            for (std::size_t i = 0; i < blk.vertices.size(); ++i) local[b][i] = static_cast<int>(i);
        } else if (is_k4(s.graph)) {
            local[b] = {0, 1, 2, 3};
        } else {
            local[b] = color3_peel(s.graph).colors;
        }
    }

    // Glue blocks along the block-cut tree, permuting each block's colors to
    // agree at the shared cut vertex.
    std::vector<std::vector<int>> blocks_of(n);
    for (int b = 0; b < nb; ++b)
        for (Vertex v : bd.blocks[b].vertices) blocks_of[v].push_back(b);
    std::vector<char> done(nb, 0);
    auto place = [&](int b, Vertex pivot) {
        const auto& vs = bd.blocks[b].vertices;
        std::vector<int> perm{0, 1, 2, 3};
        if (pivot >= 0) {
            std::size_t i = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), pivot) - vs.begin());
            std::swap(perm[local[b][i]], perm[out.colors[pivot]]);
        }
        for (std::size_t i = 0; i < vs.size(); ++i) out.colors[vs[i]] = perm[local[b][i]];
    };
    for (int root = 0; root < nb; ++root) {
        if (done[root]) continue;
        done[root] = 1;
        place(root, -1);
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for (Vertex v : bd.blocks[queue[qi]].vertices)
                for (int b2 : blocks_of[v]) {
                    if (done[b2]) continue;
                    done[b2] = 1;
                    place(b2, v);
                    queue.push_back(b2);
                }
        }
    }
    return out;
}

Verdict verify_coloring(const Graph& g, const Coloring& c, int max_colors) {
    Verdict out;
    if (static_cast<int>(c.colors.size()) != g.n()) {
        out.add("length", "coloring has " + std::to_string(c.colors.size()) + " entries for " +
                              std::to_string(g.n()) + " vertices");
        return out;
    }
    for (Vertex v = 0; v < g.n(); ++v) {
        if (c.colors[v] < 0) out.add("uncolored", "vertex " + std::to_string(v) + " is uncolored");
        else if (c.colors[v] >= max_colors)
            out.add("range", "vertex " + std::to_string(v) + " has color " + std::to_string(c.colors[v]) +
                                 ", allowed 0.." + std::to_string(max_colors - 1));
    }
    for (auto [u, v] : g.edges())
        if (c.colors[u] >= 0 && c.colors[u] == c.colors[v])
            out.add("edge", "edge " + std::to_string(u) + "-" + std::to_string(v) + " is monochromatic");
    return out;
}

}  // namespace wheelkit
