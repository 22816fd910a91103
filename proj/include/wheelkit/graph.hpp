#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wheelkit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // sorted, no duplicates
using VertexMask = std::vector<char>;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Violation of an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Values are immutable once built; operations that "modify" a graph return
/// a new one.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws PreconditionError on self-loops, duplicates or out-of-range ids.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    std::span<const Vertex> adj(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;
    bool valid(Vertex v) const { return v >= 0 && v < n(); }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    int m_ = 0;
};

/// A graph derived from a parent graph together with the id correspondence.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent;    // local id -> parent id
    std::vector<Vertex> from_parent;  // parent id -> local id, or -1

    Vertex lift(Vertex local) const { return to_parent[local]; }
    std::vector<Vertex> lift(std::span<const Vertex> local) const;
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);
Subgraph edge_subgraph(const Graph& g, std::span<const Edge> edges);
Graph remove_edge(const Graph& g, Vertex u, Vertex v);
Graph add_edge(const Graph& g, Vertex u, Vertex v);
Graph complement(const Graph& g);

/// A path given by its vertex sequence. A single vertex is a path of length 0.
struct VertexPath {
    std::vector<Vertex> vertices;

    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    bool contains(Vertex v) const;
    VertexPath reversed() const;
    friend bool operator==(const VertexPath&, const VertexPath&) = default;
};

/// A cycle as a cyclic vertex sequence of length >= 3.
struct Cycle {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.size(); }
    bool contains(Vertex v) const;
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Rotate to the smallest vertex and orient toward its smaller neighbor.
Cycle canonical(Cycle c);

bool is_path_in(const Graph& g, const VertexPath& p);
bool is_cycle_in(const Graph& g, const Cycle& c);

/// Assemble a cycle from the edge union of the given paths. Returns nothing
/// unless the union is exactly one cycle.
std::optional<Cycle> cycle_from_paths(std::span<const VertexPath> paths);

// ---------------------------------------------------------------------------
// Traversal

/// Vertices reachable from `sources` avoiding vertices with blocked[v] != 0.
VertexMask reachable(const Graph& g, std::span<const Vertex> sources, const VertexMask* blocked = nullptr);

/// Shortest path from any source to any target inside the unblocked part.
std::optional<VertexPath> bfs_path(const Graph& g, std::span<const Vertex> sources,
                                   const VertexMask& targets, const VertexMask* blocked = nullptr);

/// Component label per vertex (-1 for blocked vertices); returns the count.
int components(const Graph& g, std::vector<int>& label, const VertexMask* blocked = nullptr);
bool is_connected(const Graph& g, const VertexMask* blocked = nullptr);

enum class BlockKind { isolated, bridge, biconnected };

struct Block {
    VertexSet vertices;
    std::vector<Edge> edges;
    BlockKind kind = BlockKind::isolated;
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    VertexSet cut_vertices;
};

/// Biconnected decomposition. Every edge lies in exactly one block; isolated
/// vertices form single-vertex blocks.
BlockDecomposition blocks(const Graph& g, const VertexMask* blocked = nullptr);

/// Some cut vertex, if any (ignoring blocked vertices).
std::optional<Vertex> find_cut_vertex(const Graph& g, const VertexMask* blocked = nullptr);

/// n >= 3, connected and without a cut vertex.
bool is_2_connected(const Graph& g, const VertexMask* blocked = nullptr);

// ---------------------------------------------------------------------------
// Text formats

struct ParsedGraph {
    Graph graph;
    /// Caller-facing label of each vertex.
    std::vector<std::string> labels;
    /// True when every label is the decimal id of its vertex.
    bool numeric = true;

    std::optional<Vertex> find(std::string_view label) const;
};

enum class TextFormat { edge_list, graph6 };

ParsedGraph parse_graph(std::string_view text);
ParsedGraph parse_edge_list(std::string_view text);
Graph parse_graph6(std::string_view text);

std::string write_graph(const Graph& g, TextFormat format = TextFormat::edge_list);
std::string write_edge_list(const Graph& g);
std::string write_graph6(const Graph& g);

/// 64-bit FNV-1a of the edge-list serialization, as 16 hex digits.
std::string digest(const Graph& g);

}  // namespace wheelkit
