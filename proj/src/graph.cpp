#include "wheelkit/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <deque>
#include <map>
#include <unordered_map>

namespace wheelkit {

Graph::Graph(int n) : adj_(std::max(n, 0)) {
    if (n < 0) throw PreconditionError("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (!valid(u) || !valid(v))
            throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
        if (u == v) throw PreconditionError("self-loop at " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw PreconditionError("parallel edge");
    }
    m_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!valid(u) || !valid(v)) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<Vertex> Subgraph::lift(std::span<const Vertex> local) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_parent[v]);
    return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    Subgraph s;
    s.from_parent.assign(g.n(), -1);
    for (Vertex v : vertices) {
        if (!g.valid(v)) throw PreconditionError("vertex out of range");
        if (s.from_parent[v] >= 0) continue;
        s.from_parent[v] = static_cast<Vertex>(s.to_parent.size());
        s.to_parent.push_back(v);
    }
    std::vector<Edge> edges;
    for (Vertex u : s.to_parent)
        for (Vertex w : g.adj(u))
            if (u < w && s.from_parent[w] >= 0) edges.emplace_back(s.from_parent[u], s.from_parent[w]);
    s.graph = Graph(static_cast<int>(s.to_parent.size()), edges);
    return s;
}

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
    VertexMask gone(g.n(), 0);
    for (Vertex v : removed)
        if (g.valid(v)) gone[v] = 1;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.n(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

Subgraph edge_subgraph(const Graph& g, std::span<const Edge> edges) {
    Subgraph s;
    s.from_parent.assign(g.n(), -1);
    auto local = [&](Vertex v) {
        if (s.from_parent[v] < 0) {
            s.from_parent[v] = static_cast<Vertex>(s.to_parent.size());
            s.to_parent.push_back(v);
        }
        return s.from_parent[v];
    };
    std::vector<Edge> sorted(edges.begin(), edges.end());
    for (auto& [u, v] : sorted) {
        if (!g.has_edge(u, v)) throw PreconditionError("edge not in parent graph");
        if (u > v) std::swap(u, v);
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Edge> local_edges;
    for (auto [u, v] : sorted) {
        Vertex a = local(u);
        Vertex b = local(v);
        local_edges.emplace_back(a, b);
    }
    s.graph = Graph(static_cast<int>(s.to_parent.size()), local_edges);
    return s;
}

Graph remove_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) throw PreconditionError("no such edge");
    auto edges = g.edges();
    std::erase(edges, Edge{std::min(u, v), std::max(u, v)});
    return Graph(g.n(), edges);
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
    if (g.has_edge(u, v)) return g;
    auto edges = g.edges();
    edges.emplace_back(u, v);
    return Graph(g.n(), edges);
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.n(), edges);
}

bool VertexPath::contains(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

VertexPath VertexPath::reversed() const { return {{vertices.rbegin(), vertices.rend()}}; }

bool Cycle::contains(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

Cycle canonical(Cycle c) {
    auto& v = c.vertices;
    if (v.size() < 2) return c;
    std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
    if (v.back() < v[1]) std::reverse(v.begin() + 1, v.end());
    return c;
}

namespace {

bool all_distinct_in_range(const Graph& g, const std::vector<Vertex>& vs) {
    std::vector<char> seen(g.n(), 0);
    for (Vertex v : vs) {
        if (!g.valid(v) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

bool is_path_in(const Graph& g, const VertexPath& p) {
    if (p.vertices.empty() || !all_distinct_in_range(g, p.vertices)) return false;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (!g.has_edge(p.vertices[i], p.vertices[i + 1])) return false;
    return true;
}

bool is_cycle_in(const Graph& g, const Cycle& c) {
    const auto& v = c.vertices;
    if (v.size() < 3 || !all_distinct_in_range(g, v)) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!g.has_edge(v[i], v[(i + 1) % v.size()])) return false;
    return true;
}

std::optional<Cycle> cycle_from_paths(std::span<const VertexPath> paths) {
    std::map<Vertex, std::vector<Vertex>> nbrs;
    std::vector<Edge> seen;
    for (const auto& p : paths) {
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
            Vertex a = p.vertices[i], b = p.vertices[i + 1];
            if (a == b) return std::nullopt;
            Edge e{std::min(a, b), std::max(a, b)};
            if (std::find(seen.begin(), seen.end(), e) != seen.end()) return std::nullopt;
            seen.push_back(e);
            nbrs[a].push_back(b);
            nbrs[b].push_back(a);
        }
    }
    if (nbrs.size() < 3) return std::nullopt;
    for (auto& [v, ns] : nbrs)
        if (ns.size() != 2) return std::nullopt;
    Cycle c;
    Vertex start = nbrs.begin()->first;
    Vertex prev = -1, cur = start;
    do {
        c.vertices.push_back(cur);
        const auto& ns = nbrs[cur];
        Vertex next = ns[0] != prev ? ns[0] : ns[1];
        prev = cur;
        cur = next;
    } while (cur != start && c.vertices.size() <= nbrs.size());
    if (c.vertices.size() != nbrs.size()) return std::nullopt;
    return canonical(std::move(c));
}

// ---------------------------------------------------------------------------

VertexMask reachable(const Graph& g, std::span<const Vertex> sources, const VertexMask* blocked) {
    VertexMask seen(g.n(), 0);
    std::vector<Vertex> stack;
    for (Vertex s : sources) {
        if (blocked && (*blocked)[s]) continue;
        if (!seen[s]) {
            seen[s] = 1;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.adj(u)) {
            if (seen[w] || (blocked && (*blocked)[w])) continue;
            seen[w] = 1;
            stack.push_back(w);
        }
    }
    return seen;
}

std::optional<VertexPath> bfs_path(const Graph& g, std::span<const Vertex> sources, const VertexMask& targets,
                                   const VertexMask* blocked) {
    std::vector<Vertex> parent(g.n(), -2);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        if ((blocked && (*blocked)[s]) || parent[s] != -2) continue;
        parent[s] = -1;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (targets[u]) {
            VertexPath p;
            for (Vertex v = u; v != -1; v = parent[v]) p.vertices.push_back(v);
            std::reverse(p.vertices.begin(), p.vertices.end());
            return p;
        }
        for (Vertex w : g.adj(u)) {
            if (parent[w] != -2 || (blocked && (*blocked)[w])) continue;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

int components(const Graph& g, std::vector<int>& label, const VertexMask* blocked) {
    label.assign(g.n(), -1);
    int count = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (label[s] >= 0 || (blocked && (*blocked)[s])) continue;
        label[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.adj(u)) {
                if (label[w] >= 0 || (blocked && (*blocked)[w])) continue;
                label[w] = count;
                stack.push_back(w);
            }
        }
        ++count;
    }
    return count;
}

bool is_connected(const Graph& g, const VertexMask* blocked) {
    std::vector<int> label;
    return components(g, label, blocked) <= 1;
}

BlockDecomposition blocks(const Graph& g, const VertexMask* blocked) {
    const int n = g.n();
    BlockDecomposition out;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> block_count(n, 0);
    std::vector<Edge> edge_stack;
    int timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };

    auto emit = [&](Vertex u, Vertex w) {
        Block b;
        while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            b.edges.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
            b.vertices.push_back(e.first);
            b.vertices.push_back(e.second);
            if (e == Edge{u, w}) break;
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        std::sort(b.edges.begin(), b.edges.end());
        b.kind = b.edges.size() == 1 ? BlockKind::bridge : BlockKind::biconnected;
        for (Vertex v : b.vertices) ++block_count[v];
        out.blocks.push_back(std::move(b));
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0 || (blocked && (*blocked)[root])) continue;
        disc[root] = low[root] = timer++;
        if (std::none_of(g.adj(root).begin(), g.adj(root).end(),
                         [&](Vertex w) { return !(blocked && (*blocked)[w]); })) {
            out.blocks.push_back({{root}, {}, BlockKind::isolated});
            block_count[root] = 1;
            continue;
        }
        std::vector<Frame> stack{{root, -1, 0}};
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nbrs = g.adj(f.v);
            if (f.next < nbrs.size()) {
                Vertex w = nbrs[f.next++];
                if (blocked && (*blocked)[w]) continue;
                if (disc[w] < 0) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Vertex v = f.v, p = f.parent;
                stack.pop_back();
                if (p >= 0) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) emit(p, v);
                }
            }
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (block_count[v] >= 2) out.cut_vertices.push_back(v);
    return out;
}

std::optional<Vertex> find_cut_vertex(const Graph& g, const VertexMask* blocked) {
    auto d = blocks(g, blocked);
    if (d.cut_vertices.empty()) return std::nullopt;
    return d.cut_vertices.front();
}

bool is_2_connected(const Graph& g, const VertexMask* blocked) {
    int alive = 0;
    for (Vertex v = 0; v < g.n(); ++v)
        if (!(blocked && (*blocked)[v])) ++alive;
    if (alive < 3 || !is_connected(g, blocked)) return false;
    return !find_cut_vertex(g, blocked).has_value();
}

// ---------------------------------------------------------------------------
// Text formats

std::optional<Vertex> ParsedGraph::find(std::string_view label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<Vertex>(i);
    return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<long long> parse_int(std::string_view s) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

constexpr int kG6Offset = 63;
constexpr long kG6MaxVertices = 258047;

}  // namespace

ParsedGraph parse_edge_list(std::string_view text) {
    struct RawEdge {
        std::string_view u, v;
        std::size_t line;
    };
    std::optional<long long> n;
    std::vector<RawEdge> raw;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        ++line_no;
        pos = end + 1;
        if (line.empty() || line.front() == '#') continue;
        auto tokens = split_ws(line);
        if (!n) {
            if (tokens.size() != 1) throw ParseError(line_no, "expected vertex count, got '" + std::string(line) + "'");
            n = parse_int(tokens[0]);
            if (!n || *n < 0 || *n > kG6MaxVertices)
                throw ParseError(line_no, "bad vertex count '" + std::string(tokens[0]) + "'");
            continue;
        }
        if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v', got '" + std::string(line) + "'");
        raw.push_back({tokens[0], tokens[1], line_no});
    }
    if (!n) throw ParseError(line_no, "missing vertex count");

    ParsedGraph out;
    const int count = static_cast<int>(*n);
    bool numeric = std::all_of(raw.begin(), raw.end(), [](const RawEdge& e) {
        auto a = parse_int(e.u), b = parse_int(e.v);
        return a && b && *a >= 0 && *b >= 0;
    });
    std::unordered_map<std::string, Vertex> ids;
    auto resolve = [&](std::string_view token, std::size_t line) -> Vertex {
        if (numeric) {
            long long v = *parse_int(token);
            if (v >= count)
                throw ParseError(line, "vertex '" + std::string(token) + "' out of range (n = " +
                                           std::to_string(count) + ")");
            return static_cast<Vertex>(v);
        }
        auto [it, inserted] = ids.emplace(std::string(token), static_cast<Vertex>(ids.size()));
        if (inserted) {
            if (it->second >= count)
                throw ParseError(line, "more than " + std::to_string(count) + " distinct labels at '" +
                                           std::string(token) + "'");
            out.labels.emplace_back(token);
        }
        return it->second;
    };

    std::vector<Edge> edges;
    std::vector<Edge> seen;
    for (const auto& e : raw) {
        Vertex u = resolve(e.u, e.line);
        Vertex v = resolve(e.v, e.line);
        if (u == v) throw ParseError(e.line, "self-loop at '" + std::string(e.u) + "'");
        Edge key{std::min(u, v), std::max(u, v)};
        edges.push_back(key);
    }
    {
        std::vector<std::pair<Edge, std::size_t>> keyed;
        for (std::size_t i = 0; i < edges.size(); ++i) keyed.emplace_back(edges[i], raw[i].line);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < keyed.size(); ++i)
            if (keyed[i].first == keyed[i - 1].first)
                throw ParseError(std::max(keyed[i].second, keyed[i - 1].second),
                                 "duplicate edge " + std::to_string(keyed[i].first.first) + " " +
                                     std::to_string(keyed[i].first.second));
    }
    out.graph = Graph(count, edges);
    out.numeric = numeric;
    if (numeric) {
        out.labels.clear();
        for (int v = 0; v < count; ++v) out.labels.push_back(std::to_string(v));
    } else {
        for (int v = static_cast<int>(out.labels.size()); v < count; ++v) out.labels.push_back("_" + std::to_string(v));
    }
    return out;
}

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.find('\n') != std::string_view::npos) throw ParseError(1, "graph6 input holds more than one graph");
    for (std::size_t i = 0; i < text.size(); ++i) {
        int c = static_cast<unsigned char>(text[i]);
        if (c < kG6Offset || c > 126)
            throw ParseError(1, "invalid graph6 byte at offset " + std::to_string(i));
    }
    if (text.empty()) throw ParseError(1, "empty graph6 string");
    long n = 0;
    std::size_t pos = 0;
    if (text[0] != 126) {
        n = text[0] - kG6Offset;
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == 126) throw ParseError(1, "unsupported graph6 size header");
        n = ((text[1] - kG6Offset) << 12) | ((text[2] - kG6Offset) << 6) | (text[3] - kG6Offset);
        pos = 4;
    }
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(text.size() - pos) != bytes)
        throw ParseError(1, "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                                std::to_string(bytes));
    std::vector<Edge> edges;
    long long k = 0;
    for (long j = 1; j < n; ++j) {
        for (long i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - kG6Offset;
            if (byte & (1 << (5 - k % 6))) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return Graph(static_cast<int>(n), edges);
}

ParsedGraph parse_graph(std::string_view text) {
    std::string_view t = trim(text);
    if (!t.empty() && (t.front() == '>' || static_cast<unsigned char>(t.front()) >= kG6Offset)) {
        ParsedGraph out;
        out.graph = parse_graph6(t);
        for (int v = 0; v < out.graph.n(); ++v) out.labels.push_back(std::to_string(v));
        return out;
    }
    return parse_edge_list(text);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

std::string write_graph6(const Graph& g) {
    const long n = g.n();
    if (n > kG6MaxVertices) throw PreconditionError("graph too large for graph6");
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
        out.push_back(static_cast<char>((n & 63) + kG6Offset));
    }
    int acc = 0, nbits = 0;
    for (long j = 1; j < n; ++j) {
        for (long i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Offset));
                acc = nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Offset));
    out.push_back('\n');
    return out;
}

std::string write_graph(const Graph& g, TextFormat format) {
    return format == TextFormat::graph6 ? write_graph6(g) : write_edge_list(g);
}

std::string digest(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : write_edge_list(g)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace wheelkit
