#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wheelkit/graph.hpp"

namespace corpus {

using wheelkit::Graph;

/// Every labeled graph on n vertices (n <= 6).
std::vector<Graph> labeled_graphs(int n);

/// One representative per isomorphism class on n vertices (n <= 7).
std::vector<Graph> unlabeled_graphs(int n);

/// Canonical code of a graph on at most 8 vertices.
std::uint64_t canonical_code(const Graph& g);

/// Cubic bipartite wheel-free graph on 10 vertices, found by exhaustive
/// search over bipartite graphs with parts of size 5.
Graph bipartite_ten();

/// 3-connected almost wheel-free graphs grown from K_{3,3} and
/// bipartite_ten() by edge subdivisions and vertex additions.
std::vector<Graph> grown_three_connected(std::uint64_t seed, int attempts, int max_n);

/// Blocks chosen among K4, cycles, edges and wheel-free graphs, glued at
/// cut vertices. Long-wheel-free by construction.
Graph block_tree(std::uint64_t seed, const std::vector<Graph>& pieces, int blocks);

/// Two graphs glued along an edge (optionally deleting the shared edge).
Graph two_sum(const Graph& g1, wheelkit::Edge e1, const Graph& g2, wheelkit::Edge e2, bool keep_edge);

struct Item {
    std::string name;
    Graph g;
};

/// The shared property-test corpus: small graphs up to isomorphism, zoo
/// fixtures, seeded random graphs, wheel-free subdivisions, grown
/// 3-connected graphs, 2-sums and block trees.
const std::vector<Item>& standard();

}  // namespace corpus
