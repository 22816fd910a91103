#pragma once

// Twins and the degree/twins reduction step.

#include <optional>
#include <string>
#include <utility>

#include "wheelkit/graph.hpp"
#include "wheelkit/verdict.hpp"

namespace wheelkit {

/// Non-adjacent degree-3 vertices with equal neighborhoods; u < v.
struct TwinPair {
    Vertex u = -1, v = -1;
    friend auto operator<=>(const TwinPair&, const TwinPair&) = default;
};

bool is_twin_pair(const Graph& g, Vertex u, Vertex v);

/// All twin pairs, sorted.
std::vector<TwinPair> twin_pairs(const Graph& g);

/// The lexicographically first pair of vertex-disjoint twin pairs.
std::optional<std::pair<TwinPair, TwinPair>> disjoint_twin_pairs(const Graph& g);

enum class ReductionKind { two_twin_pairs, deg2_plus_twins, two_deg2, twins, deg2, not_found };

struct ReductionOutcome {
    ReductionKind kind = ReductionKind::not_found;
    VertexSet low;                // vertices of degree at most 2 used by the outcome
    std::vector<TwinPair> twins;  // twin pairs used by the outcome
};

/// Strongest outcome in the order two_twin_pairs, deg2_plus_twins, two_deg2,
/// then the single-witness forms twins, deg2. Requires n >= 2.
ReductionOutcome reduction_step(const Graph& g);
Verdict verify_outcome(const Graph& g, const ReductionOutcome& r);
std::string to_string(ReductionKind k);

/// v is a twin or adjacent to one.
bool close_to_twin(const Graph& g, Vertex v);

}  // namespace wheelkit
