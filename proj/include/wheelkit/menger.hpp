#pragma once

// Variations on Menger's theorem: disjoint paths between two pairs, k-fans,
// the cycle-or-theta dichotomy and cycles through a fan.

#include <optional>
#include <utility>
#include <variant>

#include "wheelkit/graph.hpp"

namespace wheelkit {

/// Raised when a routine that needs a 2-connected graph gets something else.
class NotTwoConnected : public PreconditionError {
public:
    explicit NotTwoConnected(std::optional<Vertex> cut)
        : PreconditionError(cut ? "graph is not 2-connected: cut vertex " + std::to_string(*cut)
                                : "graph is not 2-connected"),
          cut_vertex(cut) {}
    std::optional<Vertex> cut_vertex;
};

void require_2_connected(const Graph& g);

struct TwoPaths {
    VertexPath p1;  // starts at the first vertex of the source pair
    VertexPath p2;  // starts at the second vertex of the source pair
};

struct SeparatorVertex {
    Vertex v;
};

/// Two vertex-disjoint paths from {a, b} to {c, d}, or a single vertex whose
/// deletion disconnects the pairs. The pairs may intersect; shared vertices
/// become paths of length 0.
std::variant<TwoPaths, SeparatorVertex> two_disjoint_paths(const Graph& g, std::pair<Vertex, Vertex> from,
                                                          std::pair<Vertex, Vertex> to,
                                                          const VertexMask* blocked = nullptr);

struct Fan {
    Vertex apex = -1;
    std::vector<VertexPath> paths;  // apex ... target, sorted by target
};

struct SmallSeparator {
    VertexSet vertices;
};

/// k paths from x to distinct vertices of `targets` sharing only x, or a set
/// of fewer than k vertices (never x) meeting every x-targets path.
std::variant<Fan, SmallSeparator> k_fan(const Graph& g, Vertex x, std::span<const Vertex> targets, int k,
                                        const VertexMask* blocked = nullptr);

/// Two branch vertices and six internally disjoint paths, each starting at a
/// branch vertex: p_* end at x, q_* at y, r_* at z.
struct Theta {
    Vertex t_a = -1, t_b = -1;
    VertexPath p_a, p_b, q_a, q_b, r_a, r_b;
};

/// Either a cycle through x, y, z or a theta around them. Requires g to be
/// 2-connected.
std::variant<Cycle, Theta> cycle_or_theta(const Graph& g, Vertex x, Vertex y, Vertex z);

/// Raised by cycle_through_fan when x can be cut off from the cycle by at
/// most two vertices.
class SeparatorExists : public PreconditionError {
public:
    explicit SeparatorExists(VertexSet s)
        : PreconditionError("an (x, C)-separator of size <= 2 exists"), separator(std::move(s)) {}
    VertexSet separator;
};

/// A cycle through x, y, z where y, z lie on `c` and x does not, given that
/// no set of at most two vertices separates x from c.
Cycle cycle_through_fan(const Graph& g, const Cycle& c, Vertex x, Vertex y, Vertex z);

/// A cycle through u and v (u may equal v) in the unblocked part of g.
std::optional<Cycle> cycle_through_two(const Graph& g, Vertex u, Vertex v, const VertexMask* blocked = nullptr);

bool is_valid_theta(const Graph& g, const Theta& t, Vertex x, Vertex y, Vertex z);

}  // namespace wheelkit
