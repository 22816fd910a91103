#include "wheelkit/detail/flow.hpp"

#include <algorithm>
#include <deque>

namespace wheelkit::detail {

namespace {

struct Arc {
    int to;
    int cap;
    int orig;
    int rev;
};

class Network {
public:
    explicit Network(int nodes) : arcs_(nodes) {}

    void add(int from, int to, int cap) {
        arcs_[from].push_back({to, cap, cap, static_cast<int>(arcs_[to].size())});
        arcs_[to].push_back({from, 0, 0, static_cast<int>(arcs_[from].size()) - 1});
    }

    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> via(arcs_.size(), {-1, -1});
        std::deque<int> queue{s};
        via[s] = {s, -1};
        while (!queue.empty() && via[t].first < 0) {
            int u = queue.front();
            queue.pop_front();
            for (int i = 0; i < static_cast<int>(arcs_[u].size()); ++i) {
                const Arc& a = arcs_[u][i];
                if (a.cap <= 0 || via[a.to].first >= 0) continue;
                via[a.to] = {u, i};
                queue.push_back(a.to);
            }
        }
        if (via[t].first < 0) return false;
        for (int v = t; v != s;) {
            auto [u, i] = via[v];
            Arc& a = arcs_[u][i];
            a.cap -= 1;
            arcs_[v][a.rev].cap += 1;
            v = u;
        }
        return true;
    }

    std::vector<char> residual_reach(int s) const {
        std::vector<char> seen(arcs_.size(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const Arc& a : arcs_[u])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
        }
        return seen;
    }

    /// Walk one unit of flow from s to t, consuming it.
    std::vector<int> take_path(int s, int t) {
        std::vector<int> nodes{s};
        int u = s;
        while (u != t) {
            bool moved = false;
            for (Arc& a : arcs_[u]) {
                if (a.orig <= 0 || a.orig - a.cap <= 0) continue;
                a.cap += 1;  // consume
                u = a.to;
                nodes.push_back(u);
                moved = true;
                break;
            }
            if (!moved) break;
        }
        return nodes;
    }

private:
    std::vector<std::vector<Arc>> arcs_;
};

}  // namespace

FlowAnswer disjoint_paths(const Graph& g, const FlowQuery& q) {
    const int n = g.n();
    const int source = 2 * n, sink = 2 * n + 1;
    auto in = [](Vertex v) { return 2 * v; };
    auto out = [](Vertex v) { return 2 * v + 1; };
    const int big = std::max(q.limit, 1) + n + 2;

    std::vector<int> cap(n, 1);
    VertexMask is_source(n, 0), is_target(n, 0);
    for (Vertex s : q.sources) {
        is_source[s] = 1;
        cap[s] = q.source_capacity;
    }
    for (Vertex t : q.targets) {
        is_target[t] = 1;
        cap[t] = q.target_capacity;
    }
    auto alive = [&](Vertex v) { return !(q.blocked && (*q.blocked)[v]); };

    Network net(2 * n + 2);
    // Arcs are inserted in id order so augmentation is deterministic.
    for (Vertex s : q.sources)
        if (alive(s)) net.add(source, in(s), big);
    for (Vertex v = 0; v < n; ++v) {
        if (!alive(v)) continue;
        net.add(in(v), out(v), cap[v]);
        if (is_target[v]) continue;
        for (Vertex w : g.adj(v)) {
            if (!alive(w) || is_source[w]) continue;
            // Only an edge between two high-capacity endpoints may be cut;
            // elsewhere the vertex arcs carry the capacity.
            int edge_cap = (cap[v] > 1 && cap[w] > 1) ? 1 : big;
            net.add(out(v), in(w), edge_cap);
        }
    }
    for (Vertex t : q.targets)
        if (alive(t)) net.add(out(t), sink, big);

    int flow = 0;
    while (flow < q.limit && net.augment(source, sink)) ++flow;

    FlowAnswer ans;
    if (flow < q.limit) {
        auto seen = net.residual_reach(source);
        for (Vertex v = 0; v < n; ++v)
            if (alive(v) && seen[in(v)] && !seen[out(v)]) ans.cut.push_back(v);
    }
    for (int p = 0; p < flow; ++p) {
        VertexPath path;
        for (int node : net.take_path(source, sink))
            if (node < 2 * n && node % 2 == 0) path.vertices.push_back(node / 2);
        ans.paths.push_back(std::move(path));
    }
    return ans;
}

FlowAnswer local_paths(const Graph& g, Vertex u, Vertex v, int limit, const VertexMask* blocked) {
    FlowQuery q;
    q.sources = {u};
    q.targets = {v};
    q.source_capacity = limit;
    q.target_capacity = limit;
    q.limit = limit;
    q.blocked = blocked;
    return disjoint_paths(g, q);
}

}  // namespace wheelkit::detail
