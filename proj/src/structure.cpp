#include "wheelkit/structure.hpp"

#include <algorithm>
#include <map>

namespace wheelkit {

bool is_twin_pair(const Graph& g, Vertex u, Vertex v) {
    if (!g.valid(u) || !g.valid(v) || u == v) return false;
    if (g.degree(u) != 3 || g.degree(v) != 3 || g.has_edge(u, v)) return false;
    auto a = g.adj(u), b = g.adj(v);
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<TwinPair> twin_pairs(const Graph& g) {
    std::map<std::vector<Vertex>, std::vector<Vertex>> by_nbhd;
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) == 3) by_nbhd[{g.adj(v).begin(), g.adj(v).end()}].push_back(v);
    std::vector<TwinPair> out;
    for (auto& [nb, vs] : by_nbhd)
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) out.push_back({vs[i], vs[j]});
    // Equal neighborhoods exclude adjacency, so no further filtering is needed.
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::pair<TwinPair, TwinPair>> disjoint_twin_pairs(const Graph& g) {
    auto pairs = twin_pairs(g);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const auto& p = pairs[i];
            const auto& q = pairs[j];
            if (p.u != q.u && p.u != q.v && p.v != q.u && p.v != q.v) return std::pair{p, q};
        }
    return std::nullopt;
}

ReductionOutcome reduction_step(const Graph& g) {
    if (g.n() < 2) throw PreconditionError("reduction_step needs at least two vertices");
    VertexSet low;
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) <= 2) low.push_back(v);
    auto pairs = twin_pairs(g);
    ReductionOutcome r;
    if (auto two = disjoint_twin_pairs(g)) {
        r.kind = ReductionKind::two_twin_pairs;
        r.twins = {two->first, two->second};
    } else if (!low.empty() && !pairs.empty()) {
        r.kind = ReductionKind::deg2_plus_twins;
        r.low = {low[0]};
        r.twins = {pairs[0]};
    } else if (low.size() >= 2) {
        r.kind = ReductionKind::two_deg2;
        r.low = {low[0], low[1]};
    } else if (!pairs.empty()) {
        r.kind = ReductionKind::twins;
        r.twins = {pairs[0]};
    } else if (!low.empty()) {
        r.kind = ReductionKind::deg2;
        r.low = {low[0]};
    }
    return r;
}

Verdict verify_outcome(const Graph& g, const ReductionOutcome& r) {
    Verdict out;
    std::size_t want_low = 0, want_twins = 0;
    switch (r.kind) {
        case ReductionKind::two_twin_pairs: want_twins = 2; break;
        case ReductionKind::deg2_plus_twins: want_low = 1, want_twins = 1; break;
        case ReductionKind::two_deg2: want_low = 2; break;
        case ReductionKind::twins: want_twins = 1; break;
        case ReductionKind::deg2: want_low = 1; break;
        case ReductionKind::not_found: break;
    }
    if (r.low.size() != want_low || r.twins.size() != want_twins)
        out.add("shape", "outcome " + to_string(r.kind) + " lists the wrong number of witnesses");
    std::vector<Vertex> used;
    for (Vertex v : r.low) {
        if (!g.valid(v)) out.add("low", "vertex " + std::to_string(v) + " out of range");
        else if (g.degree(v) > 2) out.add("low", "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
        used.push_back(v);
    }
    for (const auto& t : r.twins) {
        if (!is_twin_pair(g, t.u, t.v))
            out.add("twins", "{" + std::to_string(t.u) + "," + std::to_string(t.v) + "} is not a pair of twins");
        used.push_back(t.u);
        used.push_back(t.v);
    }
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end())
        out.add("disjoint", "witnesses share a vertex");
    return out;
}

std::string to_string(ReductionKind k) {
    switch (k) {
        case ReductionKind::two_twin_pairs: return "TwoTwinPairs";
        case ReductionKind::deg2_plus_twins: return "Deg2PlusTwins";
        case ReductionKind::two_deg2: return "TwoDeg2";
        case ReductionKind::twins: return "Twins";
        case ReductionKind::deg2: return "Deg2";
        case ReductionKind::not_found: return "NotFound";
    }
    return "unknown";
}

bool close_to_twin(const Graph& g, Vertex v) {
    if (!g.valid(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    for (const auto& t : twin_pairs(g)) {
        if (t.u == v || t.v == v) return true;
        if (g.has_edge(v, t.u) || g.has_edge(v, t.v)) return true;
    }
    return false;
}

}  // namespace wheelkit
