#pragma once

// Named graphs and seeded generators.

#include <cstdint>
#include <string>
#include <string_view>

#include "wheelkit/graph.hpp"

namespace wheelkit {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// A rim of length n and one center adjacent to every rim vertex.
Graph wheel_graph(int n);
Graph k4();
Graph k33();          // parts {0,1,2} and {3,4,5}
Graph k33_minus_e();  // k33 without the edge 2-5
/// Branch vertices 0 and 1 joined by paths with p, q, r edges; interior
/// vertices are numbered arm by arm.
Graph theta(int p, int q, int r);
Graph diamond();  // K4 without the edge 2-3
Graph cube();     // Q3, vertices are 3-bit words
Graph petersen();
/// The circulant on 13 vertices with offsets 1 and 5; its independence and
/// clique numbers are checked on first use.
Graph ramsey_r35();
/// Two copies of K_{3,3} sharing the edge 0-3.
Graph glued_k33_pair();

/// Parses "k4", "cycle(7)", "theta(2,3,4)" and so on; see fixture_names().
Graph fixture(std::string_view spec);
std::vector<std::string> fixture_names();

/// G(n, p) with one draw per vertex pair in lexicographic order.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Every vertex of degree >= 3 has at most two neighbors of degree >= 3.
bool sparse_branching(const Graph& g);

/// Subdivides randomly chosen edges joining two vertices of degree >= 3
/// until sparse_branching holds. New vertices are appended.
Graph make_wheel_free(const Graph& g, std::uint64_t seed);

}  // namespace wheelkit
