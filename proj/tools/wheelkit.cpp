#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "wheelkit/coloring.hpp"
#include "wheelkit/connectivity.hpp"
#include "wheelkit/cycle3.hpp"
#include "wheelkit/json_io.hpp"
#include "wheelkit/oracle.hpp"
#include "wheelkit/structure.hpp"
#include "wheelkit/wheels.hpp"
#include "wheelkit/zoo.hpp"

using namespace wheelkit;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;

struct Input {
    ParsedGraph pg;
    Labels labels;
};

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::unique_ptr<Input> load(const std::string& path) {
    auto in = std::make_unique<Input>();
    in->pg = parse_graph(read_text(path));
    in->labels = Labels(in->pg);
    return in;
}

Json header(const Input& in) {
    Json j;
    j["schema"] = "wheelkit/1";
    j["digest"] = digest(in.pg.graph);
    if (!in.pg.numeric) j["labels"] = in.pg.labels;
    return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json witness_or_null(const std::optional<WheelWitness>& w, const Labels& l) {
    return w ? to_json(*w, l) : Json(nullptr);
}

void check(const Verdict& v, const char* what) {
    if (!v.ok()) throw std::logic_error(std::string("emitted ") + what + " failed verification: " +
                                        v.violations.front().detail);
}

// ---------------------------------------------------------------------------

int cmd_find_wheel(const std::string& file, int k, bool long_rim) {
    auto in = load(file);
    const Graph& g = in->pg.graph;
    int min_rim = long_rim ? 4 : 3;
    std::optional<WheelWitness> w = long_rim ? (k == 3 ? find_long_wheel(g) : throw PreconditionError("--long needs --k 3"))
                                             : find_hub(g, k);
    if (w) check(verify_witness(g, *w, min_rim), "witness");
    Json j = header(*in);
    j[long_rim ? "long_wheel" : "wheel"] = witness_or_null(w, in->labels);
    emit(j);
    return kOk;
}

int cmd_cycle3(const std::string& file, const std::string& xs, const std::string& ys, const std::string& zs) {
    auto in = load(file);
    const Graph& g = in->pg.graph;
    std::array<Vertex, 3> t{};
    const std::string* names[3] = {&xs, &ys, &zs};
    for (int i = 0; i < 3; ++i) {
        auto v = in->pg.find(*names[i]);
        if (!v) throw PreconditionError("unknown vertex '" + *names[i] + "'");
        t[i] = *v;
    }
    std::variant<Cycle, Splitter> res;
    try {
        res = cycle_or_splitter(g, t[0], t[1], t[2]);
    } catch (const NotTwoConnected& e) {
        if (e.cut_vertex)
            throw PreconditionError("graph is not 2-connected: cut vertex " + in->labels.vertex(*e.cut_vertex).dump());
        throw;
    }
    Json j = header(*in);
    j["terminals"] = {{"x", in->labels.vertex(t[0])}, {"y", in->labels.vertex(t[1])}, {"z", in->labels.vertex(t[2])}};
    if (auto* c = std::get_if<Cycle>(&res)) {
        check(verify_cycle_through(g, *c, t), "cycle");
        j["cycle"] = to_json(*c, in->labels);
    } else {
        const auto& s = std::get<Splitter>(res);
        check(verify_splitter(g, t[0], t[1], t[2], s), "splitter");
        j["splitter"] = to_json(s, in->labels);
    }
    emit(j);
    return kOk;
}

int cmd_color(const std::string& file, int colors) {
    auto in = load(file);
    const Graph& g = in->pg.graph;
    Json j = header(*in);
    try {
        Coloring c = colors == 3 ? color3(g) : color4_long(g);
        check(verify_coloring(g, c, colors), "coloring");
        j["coloring"] = to_json(c);
    } catch (const WheelFound& e) {
        check(verify_witness(g, e.witness, colors == 3 ? 3 : 4), "witness");
        j["error"] = e.what();
        j["witness"] = to_json(e.witness, in->labels);
        emit(j);
        return kNegative;
    }
    emit(j);
    return kOk;
}

int cmd_analyze(const std::string& file) {
    auto in = load(file);
    const Graph& g = in->pg.graph;
    const Labels& l = in->labels;
    Json j = header(*in);
    j["n"] = g.n();
    j["m"] = g.m();

    auto cls = classify(g);
    j["classification"] = {{"kind", to_string(cls.kind)}, {"centers", l.vertices(cls.centers)}};

    auto con = kappa(g);
    j["kappa"] = to_json(con, l);
    j["minimally_3_connected"] = con.k == 3 && !con.complete && is_minimally_3_connected(g);

    Json twins = Json::array();
    for (const auto& t : twin_pairs(g)) twins.push_back(to_json(t, l));
    j["twin_pairs"] = twins;

    if (g.n() >= 2) {
        auto r = reduction_step(g);
        if (r.kind != ReductionKind::not_found) check(verify_outcome(g, r), "reduction");
        j["reduction"] = to_json(r, l);
    } else {
        j["reduction"] = nullptr;
    }

    auto wheel = find_wheel(g);
    auto long_wheel = find_long_wheel(g);
    if (wheel) check(verify_witness(g, *wheel), "witness");
    if (long_wheel) check(verify_witness(g, *long_wheel, 4), "witness");
    j["wheel"] = witness_or_null(wheel, l);
    j["long_wheel"] = witness_or_null(long_wheel, l);

    std::optional<Coloring> c;
    if (!wheel) c = color3(g);
    else if (!long_wheel) c = color4_long(g);
    if (c) {
        check(verify_coloring(g, *c, c->max_colors), "coloring");
        j["coloring"] = to_json(*c);
    } else {
        j["coloring"] = nullptr;
    }
    emit(j);
    return kOk;
}

// ---------------------------------------------------------------------------

Verdict verify_cutset(const Graph& g, const Json& cert, const Labels& l) {
    Verdict v;
    const int k = cert.at("k").get<int>();
    const bool complete = cert.value("complete", false);
    auto truth = kappa(g);
    if (truth.k != k || truth.complete != complete)
        v.add("kappa", "claimed " + std::to_string(k) + ", actual " + std::to_string(truth.k));
    if (complete) return v;
    auto cut = l.parse_list(cert.at("cutset"));
    VertexMask blocked(g.n(), 0);
    for (Vertex u : cut) blocked[u] = 1;
    if (static_cast<int>(cut.size()) != k) v.add("cutset", "cutset size differs from k");
    if (g.n() > 0 && is_connected(g, &blocked)) v.add("cutset", "removing the cutset leaves the graph connected");
    return v;
}

int cmd_verify(const std::string& file, const std::string& cert_path) {
    auto in = load(file);
    const Graph& g = in->pg.graph;
    const Labels& l = in->labels;
    Json cert;
    try {
        cert = Json::parse(read_text(cert_path));
    } catch (const Json::parse_error& e) {
        throw PreconditionError(std::string("certificate is not JSON: ") + e.what());
    }
    if (!cert.is_object()) throw PreconditionError("certificate must be a JSON object");

    Json checks = Json::array();
    bool all = true;
    auto record = [&](const std::string& name, const Verdict& v) {
        Json entry = to_json(v);
        entry["certificate"] = name;
        all = all && v.ok();
        checks.push_back(entry);
    };
    auto guarded = [&](const std::string& name, auto&& body) {
        try {
            record(name, body());
        } catch (const std::exception& e) {
            Verdict v;
            v.add("malformed", e.what());
            record(name, v);
        }
    };

    if (cert.contains("digest")) {
        Verdict v;
        if (cert["digest"] != digest(g)) v.add("digest", "certificate was issued for a different graph");
        record("digest", v);
    }
    for (const char* key : {"wheel", "long_wheel"}) {
        if (!cert.contains(key)) continue;
        const int min_rim = std::string(key) == "wheel" ? 3 : 4;
        guarded(key, [&] {
            if (!cert[key].is_null()) return verify_witness(g, witness_from_json(cert[key], l), min_rim);
            Verdict v;
            auto w = min_rim == 3 ? find_wheel(g) : find_long_wheel(g);
            if (w) v.add("absent", "claimed none, but one exists");
            return v;
        });
    }
    if (cert.contains("witness")) {
        const bool long_rim = cert.value("error", "") == "contains a long wheel";
        guarded("witness", [&] { return verify_witness(g, witness_from_json(cert["witness"], l), long_rim ? 4 : 3); });
    }
    if (cert.contains("cycle") || cert.contains("splitter")) {
        guarded(cert.contains("cycle") ? "cycle" : "splitter", [&] {
            const Json& t = cert.at("terminals");
            Vertex x = l.parse(t.at("x")), y = l.parse(t.at("y")), z = l.parse(t.at("z"));
            if (cert.contains("cycle")) {
                std::array<Vertex, 3> req{x, y, z};
                return verify_cycle_through(g, cycle_from_json(cert["cycle"], l), req);
            }
            return verify_splitter(g, x, y, z, splitter_from_json(cert["splitter"], l));
        });
    }
    if (cert.contains("coloring") && !cert["coloring"].is_null()) {
        guarded("coloring", [&] {
            Coloring c = coloring_from_json(cert["coloring"]);
            return verify_coloring(g, c, c.max_colors);
        });
    }
    if (cert.contains("kappa")) guarded("kappa", [&] { return verify_cutset(g, cert["kappa"], l); });
    if (cert.contains("reduction") && !cert["reduction"].is_null()) {
        guarded("reduction", [&] {
            const Json& r = cert["reduction"];
            ReductionOutcome out;
            const std::string kind = r.at("kind").get<std::string>();
            out.kind = ReductionKind::not_found;
            for (auto k : {ReductionKind::two_twin_pairs, ReductionKind::deg2_plus_twins, ReductionKind::two_deg2,
                           ReductionKind::twins, ReductionKind::deg2, ReductionKind::not_found})
                if (to_string(k) == kind) out.kind = k;
            out.low = l.parse_list(r.at("low"));
            for (const auto& p : r.at("twins")) {
                auto pair = l.parse_list(p);
                if (pair.size() != 2) throw PreconditionError("a twin pair needs two vertices");
                out.twins.push_back({pair[0], pair[1]});
            }
            if (out.kind == ReductionKind::not_found) {
                Verdict v;
                if (reduction_step(g).kind != ReductionKind::not_found) v.add("shape", "claimed NotFound");
                return v;
            }
            return verify_outcome(g, out);
        });
    }
    if (cert.contains("twin_pairs")) {
        guarded("twin_pairs", [&] {
            Verdict v;
            for (const auto& p : cert["twin_pairs"]) {
                auto pair = l.parse_list(p);
                if (pair.size() != 2 || !is_twin_pair(g, pair[0], pair[1])) v.add("twins", "listed pair is not a twin pair");
            }
            return v;
        });
    }
    if (checks.empty()) throw PreconditionError("no certificate found in " + cert_path);

    Json j = header(*in);
    j["valid"] = all;
    j["checks"] = checks;
    emit(j);
    return all ? kOk : kNegative;
}

// ---------------------------------------------------------------------------

int cmd_gen(const std::string& what, std::optional<std::uint64_t> seed, int n, double p, const std::string& format,
            bool json) {
    Graph g;
    if (what == "random" || what == "wheel-free") {
        if (!seed) throw PreconditionError(what + " needs --seed");
        if (n < 0) throw PreconditionError("--n must be non-negative");
        if (p < 0 || p > 1) throw PreconditionError("--p must lie in [0, 1]");
        g = random_graph(n, p, *seed);
        if (what == "wheel-free") g = make_wheel_free(g, *seed);
    } else {
        g = fixture(what);
    }
    std::string text = write_graph(g, format == "g6" ? TextFormat::graph6 : TextFormat::edge_list);
    if (json) {
        Json j{{"schema", "wheelkit/1"}, {"digest", digest(g)}, {"format", format}, {"graph", text}};
        emit(j);
    } else {
        std::cout << text;
    }
    return kOk;
}

int cmd_oracle(const std::string& file, const std::string& query, std::optional<int> budget_flag,
               const std::string& xs, const std::string& ys, const std::string& zs) {
    auto in = load(file);
    const Graph& g = in->pg.graph;
    const Labels& l = in->labels;
    std::optional<int> budget = budget_flag;
    if (!budget) {
        if (const char* env = std::getenv("WHEELKIT_BUDGET")) {
            try {
                budget = std::stoi(env);
            } catch (const std::exception&) {
                throw PreconditionError("WHEELKIT_BUDGET must be an integer");
            }
        }
    }
    auto with = [&](OracleBudget b) {
        if (budget) b.max_vertices = *budget;
        return b;
    };
    Json j = header(*in);
    j["query"] = query;
    if (query == "wheel") {
        j["wheel"] = witness_or_null(brute_wheel(g, with(cycle_budget())), l);
    } else if (query == "long-wheel") {
        j["long_wheel"] = witness_or_null(brute_long_wheel(g, with(cycle_budget())), l);
    } else if (query == "centers") {
        j["centers"] = l.vertices(brute_wheel_centers(g, with(cycle_budget())));
    } else if (query == "cycle3") {
        std::array<Vertex, 3> t{};
        const std::string* names[3] = {&xs, &ys, &zs};
        for (int i = 0; i < 3; ++i) {
            auto v = in->pg.find(*names[i]);
            if (!v) throw PreconditionError("unknown vertex '" + *names[i] + "'");
            t[i] = *v;
        }
        auto c = brute_cycle_through(g, t[0], t[1], t[2], with(cycle_budget()));
        j["cycle"] = c ? to_json(*c, l) : Json(nullptr);
    } else if (query == "chromatic") {
        j["chromatic"] = chromatic_number(g, with(chromatic_budget()));
    } else if (query == "alpha-omega") {
        auto [a, w] = alpha_omega(g, with(chromatic_budget()));
        j["alpha"] = a;
        j["omega"] = w;
    } else if (query == "kappa") {
        j["kappa"] = brute_kappa(g, with(chromatic_budget()));
    } else if (query == "k33") {
        auto s = brute_k33_subdivision(g, with(k33_budget()));
        if (s) {
            Json paths = Json::array();
            for (const auto& p : s->paths) paths.push_back(l.vertices(p.vertices));
            j["k33"] = {{"left", l.vertices(s->left)}, {"right", l.vertices(s->right)}, {"paths", paths}};
        } else {
            j["k33"] = nullptr;
        }
    } else {
        throw PreconditionError("unknown oracle query '" + query + "'");
    }
    emit(j);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wheel detection, three-vertex cycles and coloring for simple graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Wrap generated graphs in JSON (other commands always print JSON)");

    std::string file, cert, query, what, format = "el";
    std::string xs, ys, zs;
    int k = 3, colors = 3, n = 10;
    double p = 0.3;
    bool long_rim = false;
    std::optional<std::uint64_t> seed;
    std::optional<int> budget;

    auto* analyze = app.add_subcommand("analyze", "Classify a graph and emit every certificate");
    analyze->add_option("file", file, "Edge list or graph6 file, '-' for stdin")->required();

    auto* find = app.add_subcommand("find-wheel", "Search for a wheel (or k-hub)");
    find->add_option("file", file)->required();
    find->add_option("--k", k, "Hub order")->check(CLI::Range(3, 1 << 20));
    find->add_flag("--long", long_rim, "Require a rim of length at least 4");

    auto* cyc = app.add_subcommand("cycle3", "Cycle through x, y, z or a splitter certificate");
    cyc->add_option("file", file)->required();
    cyc->add_option("--x", xs)->required();
    cyc->add_option("--y", ys)->required();
    cyc->add_option("--z", zs)->required();

    auto* color = app.add_subcommand("color", "3-color a wheel-free graph or 4-color a long-wheel-free graph");
    color->add_option("file", file)->required();
    color->add_option("--colors", colors)->check(CLI::IsMember({3, 4}));

    auto* verify = app.add_subcommand("verify", "Check a certificate produced by another command");
    verify->add_option("file", file)->required();
    verify->add_option("--cert", cert, "JSON certificate file")->required();

    auto* gen = app.add_subcommand("gen", "Print a named fixture or a seeded random graph");
    gen->add_option("graph", what, "Fixture name, 'random' or 'wheel-free'")->required();
    gen->add_option("--seed", seed);
    gen->add_option("--n", n, "Vertex count for random graphs");
    gen->add_option("--p", p, "Edge probability for random graphs");
    gen->add_option("--format", format)->check(CLI::IsMember({"el", "g6"}));

    auto* oracle = app.add_subcommand("oracle", "Brute-force reference answers for small graphs");
    oracle->add_option("file", file)->required();
    oracle->add_option("--query", query, "wheel|long-wheel|centers|cycle3|chromatic|alpha-omega|kappa|k33")->required();
    oracle->add_option("--budget", budget, "Maximum vertex count");
    oracle->add_option("--x", xs);
    oracle->add_option("--y", ys);
    oracle->add_option("--z", zs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) return cmd_analyze(file);
        if (*find) return cmd_find_wheel(file, k, long_rim);
        if (*cyc) return cmd_cycle3(file, xs, ys, zs);
        if (*color) return cmd_color(file, colors);
        if (*verify) return cmd_verify(file, cert);
        if (*gen) return cmd_gen(what, seed, n, p, format, json);
        if (*oracle) return cmd_oracle(file, query, budget, xs, ys, zs);
    } catch (const ParseError& e) {
        std::cerr << "wheelkit: parse error: " << e.what() << '\n';
    } catch (const BudgetExceeded& e) {
        std::cerr << "wheelkit: budget exceeded: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "wheelkit: " << e.what() << '\n';
    }
    return kUsage;
}
