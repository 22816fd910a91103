#pragma once

// Exhaustive reference answers for small graphs. Everything here is
// deliberately naive and refuses inputs beyond its budget.

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>

#include "wheelkit/graph.hpp"
#include "wheelkit/wheels.hpp"

namespace wheelkit {

struct OracleBudget {
    int max_vertices = 12;
    long max_cycles = 20'000'000;
    double time_cap = 120.0;  // seconds
};

OracleBudget cycle_budget();      // 12 vertices
OracleBudget chromatic_budget();  // 16 vertices
OracleBudget k33_budget();        // 13 vertices

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Calls `visit` once per simple cycle (rooted at its smallest vertex, one
/// orientation). Stops early when `visit` returns false.
void for_each_cycle(const Graph& g, const OracleBudget& budget,
                    const std::function<bool(const std::vector<Vertex>&)>& visit);

std::optional<Cycle> brute_cycle_through(const Graph& g, Vertex x, Vertex y, Vertex z,
                                         const OracleBudget& budget = cycle_budget());

/// Some cycle with a vertex having >= k neighbors on it and length >= min_rim.
std::optional<WheelWitness> brute_hub(const Graph& g, int k, const OracleBudget& budget = cycle_budget(),
                                      int min_rim = 3);
std::optional<WheelWitness> brute_wheel(const Graph& g, const OracleBudget& budget = cycle_budget());
std::optional<WheelWitness> brute_long_wheel(const Graph& g, const OracleBudget& budget = cycle_budget());
VertexSet brute_wheel_centers(const Graph& g, const OracleBudget& budget = cycle_budget());

int chromatic_number(const Graph& g, const OracleBudget& budget = chromatic_budget());
/// (independence number, clique number)
std::pair<int, int> alpha_omega(const Graph& g, const OracleBudget& budget = chromatic_budget());

/// Smallest number of vertices whose removal disconnects g or leaves a
/// single vertex.
int brute_kappa(const Graph& g, const OracleBudget& budget = chromatic_budget());

struct K33Subdivision {
    std::array<Vertex, 3> left{}, right{};
    std::vector<VertexPath> paths;  // left[i] ... right[j] at index 3 * i + j
};

std::optional<K33Subdivision> brute_k33_subdivision(const Graph& g, const OracleBudget& budget = k33_budget());
bool verify_k33_subdivision(const Graph& g, const K33Subdivision& s);

/// K_{3,3} minus an edge as a (not necessarily induced) subgraph.
bool brute_contains_k33_minus_e(const Graph& g, const OracleBudget& budget = k33_budget());

bool brute_isomorphic(const Graph& a, const Graph& b, const OracleBudget& budget = chromatic_budget());

}  // namespace wheelkit
