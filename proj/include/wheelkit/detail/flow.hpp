#pragma once

// Unit-capacity vertex-disjoint path search by vertex splitting and
// breadth-first augmentation. Shared by the Menger routines and the
// connectivity module.

#include <vector>

#include "wheelkit/graph.hpp"

namespace wheelkit::detail {

struct FlowQuery {
    std::vector<Vertex> sources;  // paths start here; never entered from elsewhere
    std::vector<Vertex> targets;  // paths stop at the first target they reach
    int source_capacity = 1;
    int target_capacity = 1;
    int limit = 1;
    const VertexMask* blocked = nullptr;
};

struct FlowAnswer {
    std::vector<VertexPath> paths;
    /// Minimum vertex cut closest to the sources; filled when fewer than
    /// `limit` paths exist.
    VertexSet cut;
};

FlowAnswer disjoint_paths(const Graph& g, const FlowQuery& q);

/// Up to `limit` internally vertex-disjoint u-v paths.
FlowAnswer local_paths(const Graph& g, Vertex u, Vertex v, int limit, const VertexMask* blocked = nullptr);

}  // namespace wheelkit::detail
