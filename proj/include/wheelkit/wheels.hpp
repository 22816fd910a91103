#pragma once

// Wheels, long wheels and k-hubs as subgraphs.

#include <optional>
#include <string>

#include "wheelkit/exec.hpp"
#include "wheelkit/graph.hpp"
#include "wheelkit/verdict.hpp"

namespace wheelkit {

/// A rim cycle and a center with at least k neighbors (spokes) on it.
struct WheelWitness {
    Vertex center = -1;
    Cycle rim;
    VertexSet spokes;
    int k = 3;

    friend bool operator==(const WheelWitness&, const WheelWitness&) = default;
};

/// First k-hub by (center id, lexicographic neighbor subset), or nothing
/// when g is k-hub-free. Throws PreconditionError for k < 3.
std::optional<WheelWitness> find_hub(const Graph& g, int k, Exec exec = Exec::parallel);
std::optional<WheelWitness> find_wheel(const Graph& g, Exec exec = Exec::parallel);
/// Wheels whose rim has length at least 4.
std::optional<WheelWitness> find_long_wheel(const Graph& g, Exec exec = Exec::parallel);

/// A k-hub centered at v, if any. `min_rim` is 3 for hubs, 4 for long wheels.
std::optional<WheelWitness> hub_at(const Graph& g, Vertex v, int k, int min_rim = 3);

/// W(G): every vertex at which some wheel is centered.
VertexSet wheel_centers(const Graph& g, Exec exec = Exec::parallel);

enum class WheelClass { wheel_free, almost_wheel_free, neither };

struct Classification {
    WheelClass kind = WheelClass::wheel_free;
    VertexSet centers;
};

Classification classify(const Graph& g, Exec exec = Exec::parallel);
bool is_almost_wheel_free(const Graph& g, const VertexSet& centers);
std::string to_string(WheelClass c);

/// Checks the witness against g; `min_rim` = 4 additionally demands a long rim.
Verdict verify_witness(const Graph& g, const WheelWitness& w, int min_rim = 3);

}  // namespace wheelkit
