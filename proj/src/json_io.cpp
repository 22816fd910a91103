#include "wheelkit/json_io.hpp"

namespace wheelkit {

Json Labels::vertex(Vertex v) const {
    if (!pg_ || pg_->numeric || v < 0 || v >= static_cast<Vertex>(pg_->labels.size())) return v;
    return pg_->labels[v];
}

Json Labels::vertices(std::span<const Vertex> vs) const {
    Json out = Json::array();
    for (Vertex v : vs) out.push_back(vertex(v));
    return out;
}

Vertex Labels::parse(const Json& j) const {
    if (j.is_number_integer()) {
        long long v = j.get<long long>();
        if (pg_ && (v < 0 || v >= pg_->graph.n())) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
        if (pg_ && !pg_->numeric) {
            if (auto f = pg_->find(std::to_string(v))) return *f;
            throw PreconditionError("unknown vertex label " + std::to_string(v));
        }
        return static_cast<Vertex>(v);
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (pg_) {
            if (auto f = pg_->find(s)) return *f;
        }
        throw PreconditionError("unknown vertex label '" + s + "'");
    }
    throw PreconditionError("vertex must be an integer or a string");
}

std::vector<Vertex> Labels::parse_list(const Json& j) const {
    if (!j.is_array()) throw PreconditionError("expected a list of vertices");
    std::vector<Vertex> out;
    for (const auto& e : j) out.push_back(parse(e));
    return out;
}

Json to_json(const Cycle& c, const Labels& l) { return l.vertices(c.vertices); }

Json to_json(const Splitter& s, const Labels& l) {
    Json j;
    j["A"] = l.vertices(s.a);
    j["B"] = l.vertices(s.b);
    j["anchors"] = {{"xA", l.vertex(s.anchor_a[0])}, {"yA", l.vertex(s.anchor_a[1])}, {"zA", l.vertex(s.anchor_a[2])},
                    {"xB", l.vertex(s.anchor_b[0])}, {"yB", l.vertex(s.anchor_b[1])}, {"zB", l.vertex(s.anchor_b[2])}};
    j["X"] = l.vertices(s.parts[0]);
    j["Y"] = l.vertices(s.parts[1]);
    j["Z"] = l.vertices(s.parts[2]);
    return j;
}

Json to_json(const WheelWitness& w, const Labels& l) {
    return {{"center", l.vertex(w.center)}, {"rim", l.vertices(w.rim.vertices)}, {"spokes", l.vertices(w.spokes)}, {"k", w.k}};
}

Json to_json(const Coloring& c) { return {{"colors", c.colors}, {"max", c.max_colors}}; }

Json to_json(const Theta& t, const Labels& l) {
    return {{"tA", l.vertex(t.t_a)},           {"tB", l.vertex(t.t_b)},
            {"PA", l.vertices(t.p_a.vertices)}, {"PB", l.vertices(t.p_b.vertices)},
            {"QA", l.vertices(t.q_a.vertices)}, {"QB", l.vertices(t.q_b.vertices)},
            {"RA", l.vertices(t.r_a.vertices)}, {"RB", l.vertices(t.r_b.vertices)}};
}

Json to_json(const TwinPair& t, const Labels& l) { return Json::array({l.vertex(t.u), l.vertex(t.v)}); }

Json to_json(const ReductionOutcome& r, const Labels& l) {
    Json twins = Json::array();
    for (const auto& t : r.twins) twins.push_back(to_json(t, l));
    return {{"kind", to_string(r.kind)}, {"low", l.vertices(r.low)}, {"twins", twins}};
}

Json to_json(const Connectivity& c, const Labels& l) {
    Json j{{"k", c.k}, {"complete", c.complete}};
    j["cutset"] = l.vertices(c.cutset);
    return j;
}

Json to_json(const Verdict& v) {
    Json list = Json::array();
    for (const auto& x : v.violations) list.push_back({{"condition", x.condition}, {"detail", x.detail}});
    return {{"valid", v.ok()}, {"violations", list}};
}

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("certificate lacks '") + key + "'");
    return j.at(key);
}

}  // namespace

Cycle cycle_from_json(const Json& j, const Labels& l) { return Cycle{l.parse_list(j)}; }

Splitter splitter_from_json(const Json& j, const Labels& l) {
    Splitter s;
    s.a = l.parse_list(field(j, "A"));
    s.b = l.parse_list(field(j, "B"));
    const Json& an = field(j, "anchors");
    const char* ka[3] = {"xA", "yA", "zA"};
    const char* kb[3] = {"xB", "yB", "zB"};
    for (int r = 0; r < 3; ++r) {
        s.anchor_a[r] = l.parse(field(an, ka[r]));
        s.anchor_b[r] = l.parse(field(an, kb[r]));
    }
    s.parts[0] = l.parse_list(field(j, "X"));
    s.parts[1] = l.parse_list(field(j, "Y"));
    s.parts[2] = l.parse_list(field(j, "Z"));
    return s;
}

WheelWitness witness_from_json(const Json& j, const Labels& l) {
    WheelWitness w;
    w.center = l.parse(field(j, "center"));
    w.rim = Cycle{l.parse_list(field(j, "rim"))};
    w.spokes = l.parse_list(field(j, "spokes"));
    const Json& k = field(j, "k");
    if (!k.is_number_integer()) throw PreconditionError("k must be an integer");
    w.k = k.get<int>();
    return w;
}

Coloring coloring_from_json(const Json& j) {
    Coloring c;
    const Json& colors = field(j, "colors");
    if (!colors.is_array()) throw PreconditionError("colors must be a list");
    for (const auto& x : colors) {
        if (x.is_null()) c.colors.push_back(-1);
        else if (x.is_number_integer()) c.colors.push_back(x.get<int>());
        else throw PreconditionError("colors must be integers");
    }
    const Json& m = field(j, "max");
    if (!m.is_number_integer()) throw PreconditionError("max must be an integer");
    c.max_colors = m.get<int>();
    return c;
}

}  // namespace wheelkit
