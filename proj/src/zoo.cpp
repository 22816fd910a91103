#include "wheelkit/zoo.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>

#include "wheelkit/oracle.hpp"

namespace wheelkit {

Graph complete_graph(int n) {
    if (n < 0) throw PreconditionError("negative vertex count");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph path_graph(int n) {
    if (n < 1) throw PreconditionError("a path needs at least 1 vertex");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph wheel_graph(int n) {
    if (n < 3) throw PreconditionError("a wheel rim needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
        e.emplace_back(i, n);
    }
    return Graph(n + 1, e);
}

Graph k4() { return complete_graph(4); }

Graph k33() {
    std::vector<Edge> e;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) e.emplace_back(i, j);
    return Graph(6, e);
}

Graph k33_minus_e() { return remove_edge(k33(), 2, 5); }

Graph theta(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 1) throw PreconditionError("theta arms need at least one edge");
    if ((p == 1) + (q == 1) + (r == 1) > 1) throw PreconditionError("at most one theta arm may have length 1");
    std::vector<Edge> e;
    int next = 2;
    for (int len : {p, q, r}) {
        Vertex prev = 0;
        for (int i = 1; i < len; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, 1);
    }
    return Graph(next, e);
}

Graph diamond() { return remove_edge(k4(), 2, 3); }

Graph cube() {
    std::vector<Edge> e;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) e.emplace_back(v, v ^ (1 << b));
    return Graph(8, e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, e);
}

Graph ramsey_r35() {
    std::vector<Edge> e;
    for (int i = 0; i < 13; ++i)
        for (int d : {1, 5}) e.emplace_back(i, (i + d) % 13);
    Graph g(13, e);
    static const bool checked = [&] { return alpha_omega(g) == std::pair{4, 2}; }();
    if (!checked) throw std::logic_error("ramsey_r35: circulant does not have alpha = 4, omega = 2");
    return g;
}

Graph glued_k33_pair() {
    std::vector<Edge> e;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) e.emplace_back(i, j);
    const std::array<Vertex, 3> left{0, 6, 7}, right{3, 8, 9};
    for (Vertex a : left)
        for (Vertex b : right)
            if (!(a == 0 && b == 3)) e.emplace_back(a, b);
    return Graph(10, e);
}

namespace {

std::vector<int> parse_args(std::string_view s) {
    std::vector<int> out;
    while (!s.empty()) {
        auto comma = s.find(',');
        std::string_view tok = s.substr(0, comma);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw PreconditionError("bad fixture argument '" + std::string(tok) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

Graph fixture(std::string_view spec) {
    std::string_view name = spec;
    std::vector<int> args;
    if (auto open = spec.find('('); open != std::string_view::npos) {
        if (spec.back() != ')') throw PreconditionError("bad fixture '" + std::string(spec) + "'");
        name = spec.substr(0, open);
        args = parse_args(spec.substr(open + 1, spec.size() - open - 2));
    }
    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw PreconditionError("fixture '" + std::string(name) + "' takes " + std::to_string(k) + " arguments");
    };
    if (name == "k4") return want(0), k4();
    if (name == "k33") return want(0), k33();
    if (name == "k33_minus_e") return want(0), k33_minus_e();
    if (name == "diamond" || name == "kite") return want(0), diamond();
    if (name == "cube") return want(0), cube();
    if (name == "petersen") return want(0), petersen();
    if (name == "ramsey_r35") return want(0), ramsey_r35();
    if (name == "glued_k33_pair") return want(0), glued_k33_pair();
    if (name == "cycle") return want(1), cycle_graph(args[0]);
    if (name == "path") return want(1), path_graph(args[0]);
    if (name == "complete") return want(1), complete_graph(args[0]);
    if (name == "wheel") return want(1), wheel_graph(args[0]);
    if (name == "theta") return want(3), theta(args[0], args[1], args[2]);
    throw PreconditionError("unknown fixture '" + std::string(spec) + "'");
}

std::vector<std::string> fixture_names() {
    return {"k4",       "k33",        "k33_minus_e", "diamond",     "cube",      "petersen",     "ramsey_r35",
            "glued_k33_pair", "cycle(n)", "path(n)", "complete(n)", "wheel(n)", "theta(p,q,r)"};
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw PreconditionError("negative vertex count");
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) e.emplace_back(i, j);
        }
    return Graph(n, e);
}

bool sparse_branching(const Graph& g) {
    for (Vertex v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 3) continue;
        int rich = 0;
        for (Vertex w : g.adj(v)) rich += g.degree(w) >= 3;
        if (rich > 2) return false;
    }
    return true;
}

Graph make_wheel_free(const Graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int n = g.n();
    std::set<Edge> edges;
    for (const Edge& e : g.edges()) edges.insert(e);
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    auto bad = [&](Vertex v) {
        if (deg[v] < 3) return false;
        int rich = 0;
        for (Vertex w : adj[v]) rich += deg[w] >= 3;
        return rich > 2;
    };
    for (;;) {
        std::vector<Edge> candidates;
        for (auto [u, v] : edges)
            if (deg[u] >= 3 && deg[v] >= 3 && (bad(u) || bad(v))) candidates.emplace_back(u, v);
        if (candidates.empty()) break;
        auto [u, v] = candidates[rng() % candidates.size()];
        Vertex w = n++;
        edges.erase({u, v});
        edges.insert({u, w});
        edges.insert({v, w});
        std::replace(adj[u].begin(), adj[u].end(), v, w);
        std::replace(adj[v].begin(), adj[v].end(), u, w);
        adj.push_back({u, v});
        deg.push_back(2);
    }
    std::vector<Edge> out(edges.begin(), edges.end());
    return Graph(n, out);
}

}  // namespace wheelkit
