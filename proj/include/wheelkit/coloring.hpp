#pragma once

// 3-coloring of wheel-free graphs by peeling low-degree vertices and twins,
// and 4-coloring of long-wheel-free graphs block by block.

#include "wheelkit/exec.hpp"
#include "wheelkit/graph.hpp"
#include "wheelkit/verdict.hpp"
#include "wheelkit/wheels.hpp"

namespace wheelkit {

struct Coloring {
    std::vector<int> colors;  // per vertex; -1 means uncolored
    int max_colors = 3;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Raised when the input contains the wheel the coloring must avoid.
class WheelFound : public PreconditionError {
public:
    WheelFound(const std::string& what, WheelWitness w) : PreconditionError(what), witness(std::move(w)) {}
    WheelWitness witness;
};

enum class PeelKind { low_degree, twin, base };

/// One step of the peeling: `removed` left the graph; for a twin step it
/// later copies the color of `partner`.
struct PeelStep {
    PeelKind kind = PeelKind::base;
    Vertex removed = -1;
    Vertex partner = -1;
};

/// Proper coloring with colors {0, 1, 2}. Throws WheelFound if g has a wheel.
Coloring color3(const Graph& g, std::vector<PeelStep>* trace = nullptr, Exec exec = Exec::parallel);

/// The peeling alone, without the up-front wheel check. Throws
/// std::logic_error if no reduction applies to some remaining subgraph.
Coloring color3_peel(const Graph& g, std::vector<PeelStep>* trace = nullptr);

/// Proper coloring with colors {0, 1, 2, 3}. Throws WheelFound with a long
/// wheel if one exists.
Coloring color4_long(const Graph& g, Exec exec = Exec::parallel);

bool is_k4(const Graph& g);

Verdict verify_coloring(const Graph& g, const Coloring& c, int max_colors);

}  // namespace wheelkit
