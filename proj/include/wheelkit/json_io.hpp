#pragma once

// JSON forms of certificates. Vertices are written with the caller's labels:
// integers for numeric input, strings for named input.

#include "json.hpp"
#include "wheelkit/coloring.hpp"
#include "wheelkit/connectivity.hpp"
#include "wheelkit/cycle3.hpp"
#include "wheelkit/structure.hpp"
#include "wheelkit/wheels.hpp"

namespace wheelkit {

using Json = nlohmann::ordered_json;

class Labels {
public:
    Labels() = default;
    explicit Labels(const ParsedGraph& pg) : pg_(&pg) {}

    Json vertex(Vertex v) const;
    Json vertices(std::span<const Vertex> vs) const;
    /// Accepts an integer or a string label; throws PreconditionError if unknown.
    Vertex parse(const Json& j) const;
    std::vector<Vertex> parse_list(const Json& j) const;

private:
    const ParsedGraph* pg_ = nullptr;
};

Json to_json(const Cycle& c, const Labels& l);
Json to_json(const Splitter& s, const Labels& l);
Json to_json(const WheelWitness& w, const Labels& l);
Json to_json(const Coloring& c);
Json to_json(const Theta& t, const Labels& l);
Json to_json(const TwinPair& t, const Labels& l);
Json to_json(const ReductionOutcome& r, const Labels& l);
Json to_json(const Connectivity& c, const Labels& l);
Json to_json(const Verdict& v);

Cycle cycle_from_json(const Json& j, const Labels& l);
Splitter splitter_from_json(const Json& j, const Labels& l);
WheelWitness witness_from_json(const Json& j, const Labels& l);
Coloring coloring_from_json(const Json& j);

}  // namespace wheelkit
