#pragma once

// Vertex connectivity, fragments and ends, essential edges and the two
// fragment extensions used in inductive arguments on 2- and 3-cuts.

#include <array>

#include "wheelkit/exec.hpp"
#include "wheelkit/graph.hpp"

namespace wheelkit {

struct Connectivity {
    int k = 0;
    /// K_n: k = n - 1 by convention and no cutset exists.
    bool complete = false;
    /// A minimum vertex cutset; empty when complete or disconnected.
    VertexSet cutset;
};

Connectivity kappa(const Graph& g, Exec exec = Exec::parallel);

struct Fragment {
    VertexSet f;
    VertexSet neighborhood;  // N(F)
    VertexSet complement;    // V - (F + N(F))
    bool is_end = false;
};

/// All fragments, sorted by (size, vertices). Rejects complete or
/// disconnected graphs and graphs with more than `limit` fragments.
std::vector<Fragment> fragments_and_ends(const Graph& g, std::size_t limit = std::size_t{1} << 20);

/// Every minimum vertex cutset, sorted.
std::vector<VertexSet> minimum_cutsets(const Graph& g);

/// N(F) in g.
VertexSet neighborhood(const Graph& g, std::span<const Vertex> f);

std::vector<Edge> essential_edges(const Graph& g, Exec exec = Exec::parallel);
bool is_minimally_3_connected(const Graph& g, Exec exec = Exec::parallel);

/// G[F + {a, b}] plus the edge ab, where N(F) = {a, b}. Validates that
/// kappa(g) = 2, that F is an end and that |F| >= 2. Local ids follow the
/// increasing order of parent ids.
Subgraph extend_2cut_block(const Graph& g, std::span<const Vertex> f);

struct ThreeSepExtension {
    Graph graph;
    std::vector<Vertex> to_parent;      // local -> parent id, -1 for new vertices
    std::array<Vertex, 3> attach{};     // local ids of a, b, c
    std::array<Vertex, 3> primed{};     // local ids of a', b', c' (equal to attach when not created)
    std::array<bool, 3> created{};      // whether the primed copy is a new vertex
    Vertex d = -1, d2 = -1;             // local ids of d and d'
};

/// The 3-cut extension: G[F + {a, b, c}] without the edges among a, b, c,
/// a pendant copy a' for every cut vertex with two or more neighbors in F,
/// and two new vertices d, d' joined to a', b', c'. Validates kappa(g) = 3
/// and that F is a fragment.
ThreeSepExtension extend_3sep(const Graph& g, std::span<const Vertex> f);

}  // namespace wheelkit
