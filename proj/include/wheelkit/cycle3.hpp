#pragma once

// Cycles through three prescribed vertices of a 2-connected graph, with a
// cutset certificate (a splitter) when no such cycle exists.

#include <array>
#include <span>
#include <string>
#include <variant>

#include "wheelkit/graph.hpp"
#include "wheelkit/menger.hpp"
#include "wheelkit/verdict.hpp"

namespace wheelkit {

/// Certificate that no cycle goes through x, y, z. Index 0, 1, 2 of the
/// anchor arrays refers to the role of x, y, z respectively.
struct Splitter {
    VertexSet a, b;
    std::array<Vertex, 3> anchor_a{-1, -1, -1};  // x_A, y_A, z_A
    std::array<Vertex, 3> anchor_b{-1, -1, -1};  // x_B, y_B, z_B
    std::array<VertexSet, 3> parts;              // X, Y, Z

    friend bool operator==(const Splitter&, const Splitter&) = default;
};

/// The same certificate with the roles of A and B exchanged.
Splitter swapped(const Splitter& s);

/// Which step of the construction produced the answer.
enum class Cycle3Route {
    direct,         // degenerate terminals or cycle from the theta step
    fan,            // no 2-separator cuts a terminal off the opposite cycle
    merged_anchor,  // |A| = 2 or |B| = 2 led to a cycle
    side_repair,    // the 2-connected side search met a crossing path
    crossing_path,  // an A-B path violating condition (vii)
    splitter,
};

struct Cycle3Options {
    /// Build the two 2-connected side subgraphs even when condition (vii)
    /// already holds (test hook).
    bool always_build_sides = false;
};

struct Cycle3Trace {
    Cycle3Route route = Cycle3Route::direct;
    std::optional<Theta> theta;
    bool sides_built = false;
    bool sides_2_connected = false;
    bool sides_disjoint = false;
};

/// Either a cycle through x, y, z or a verified splitter. Requires g to be
/// 2-connected; coinciding terminals are answered with a cycle through the
/// distinct ones.
std::variant<Cycle, Splitter> cycle_or_splitter(const Graph& g, Vertex x, Vertex y, Vertex z,
                                                const Cycle3Options& options = {}, Cycle3Trace* trace = nullptr);

/// Checks conditions (i)-(vii). Total: malformed input yields violations.
Verdict verify_splitter(const Graph& g, Vertex x, Vertex y, Vertex z, const Splitter& s);

/// Accepts iff c is a cycle of g through every required vertex.
Verdict verify_cycle_through(const Graph& g, const Cycle& c, std::span<const Vertex> required);

std::string to_string(Cycle3Route route);

}  // namespace wheelkit
