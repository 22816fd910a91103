// Runs the nine acceptance checks and prints one PASS/FAIL line for each.
// Usage: acceptance [criterion numbers...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "support/corpus.hpp"
#include "support/naive.hpp"
#include "wheelkit/coloring.hpp"
#include "wheelkit/connectivity.hpp"
#include "wheelkit/cycle3.hpp"
#include "wheelkit/oracle.hpp"
#include "wheelkit/structure.hpp"
#include "wheelkit/wheels.hpp"
#include "wheelkit/zoo.hpp"

using namespace wheelkit;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        pass = false;
        if (failures.size() < 10) failures.push_back(what);
    }
};

std::string edges_of(const Graph& g) {
    std::ostringstream s;
    s << "n=" << g.n() << " [";
    for (auto [u, v] : g.edges()) s << ' ' << u << '-' << v;
    s << " ]";
    return s.str();
}

std::vector<Graph> two_connected_labeled(int max_n) {
    std::vector<Graph> out;
    for (int n = 3; n <= max_n; ++n)
        for (auto& g : corpus::labeled_graphs(n))
            if (is_2_connected(g)) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> random_wheel_sample() {
    const double ps[3] = {0.2, 0.4, 0.6};
    std::vector<Graph> out;
    for (int s = 0; s < 500; ++s) out.push_back(random_graph(6 + s % 5, ps[(s / 5) % 3], 500 + s));
    return out;
}

std::vector<Graph> all_labeled_up_to_5() {
    std::vector<Graph> out;
    for (int n = 0; n <= 5; ++n)
        for (auto& g : corpus::labeled_graphs(n)) out.push_back(std::move(g));
    return out;
}

OracleBudget wide(OracleBudget b, int vertices) {
    b.max_vertices = vertices;
    return b;
}

// ---------------------------------------------------------------------------

Outcome c1_cycle_through_three() {
    Outcome o;
    auto graphs = two_connected_labeled(6);
    long triples = 0, cycles = 0, splitters = 0;
    for (const Graph& g : graphs) {
        const int n = g.n();
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = 0; y < n; ++y)
                for (Vertex z = 0; z < n; ++z) {
                    if (x == y || y == z || x == z) continue;
                    ++triples;
                    auto res = cycle_or_splitter(g, x, y, z);
                    bool exists = brute_cycle_through(g, x, y, z).has_value();
                    std::string where = edges_of(g) + " at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                        std::to_string(z) + ")";
                    if (auto* c = std::get_if<Cycle>(&res)) {
                        ++cycles;
                        std::array<Vertex, 3> req{x, y, z};
                        if (!exists) o.fail("cycle where none exists: " + where);
                        if (!verify_cycle_through(g, *c, req).ok()) o.fail("cycle rejected: " + where);
                    } else {
                        ++splitters;
                        const auto& s = std::get<Splitter>(res);
                        if (exists) o.fail("splitter although a cycle exists: " + where);
                        if (!verify_splitter(g, x, y, z, s).ok()) o.fail("splitter rejected: " + where);
                        if (!naive::splitter_ok(g, x, y, z, s)) o.fail("splitter fails the plain check: " + where);
                    }
                }
    }
    o.summary = std::to_string(graphs.size()) + " graphs, " + std::to_string(triples) + " ordered triples, " +
                std::to_string(cycles) + " cycles, " + std::to_string(splitters) + " splitters";
    return o;
}

Outcome c2_wheel_detector() {
    Outcome o;
    auto small = all_labeled_up_to_5();
    auto rnd = random_wheel_sample();
    int with = 0, checked = 0;
    auto run = [&](const Graph& g) {
        ++checked;
        auto a = find_wheel(g);
        auto b = brute_wheel(g);
        if (a.has_value() != b.has_value()) o.fail("disagreement on " + edges_of(g));
        if (a) {
            ++with;
            if (!verify_witness(g, *a).ok() || !naive::witness_ok(g, *a, 3)) o.fail("witness rejected on " + edges_of(g));
        }
    };
    for (const auto& g : small) run(g);
    for (const auto& g : rnd) run(g);
    o.summary = std::to_string(small.size()) + " labeled graphs (n <= 5) + " + std::to_string(rnd.size()) +
                " random graphs, " + std::to_string(with) + " with a wheel";
    return o;
}

Outcome c3_ramsey() {
    Outcome o;
    Graph g = ramsey_r35();
    auto [alpha, omega] = alpha_omega(g);
    int chi = chromatic_number(g);
    auto w = find_wheel(g);
    auto k = kappa(g);
    int kb = brute_kappa(g);
    if (g.n() != 13) o.fail("n = " + std::to_string(g.n()));
    if (alpha != 4) o.fail("alpha = " + std::to_string(alpha));
    if (omega != 2) o.fail("omega = " + std::to_string(omega));
    if (chi != 4) o.fail("chi = " + std::to_string(chi));
    if (!w || !verify_witness(g, *w).ok()) o.fail("no verified wheel witness");
    if (k.k != 4 || kb != 4) o.fail("kappa = " + std::to_string(k.k) + " (oracle " + std::to_string(kb) + ")");
    if (wheel_centers(g).size() != 13) o.fail("not every vertex is a wheel center");
    o.summary = "n=" + std::to_string(g.n()) + " alpha=" + std::to_string(alpha) + " omega=" + std::to_string(omega) +
                " chi=" + std::to_string(chi) + " kappa=" + std::to_string(k.k) + " wheel=" + (w ? "yes" : "no");
    return o;
}

Outcome c4_three_coloring() {
    Outcome o;
    int generated = 0, min_n = 1 << 30, max_n = 0;
    for (std::uint64_t s = 0; generated < 1000 && s < 100000; ++s) {
        int n = 4 + static_cast<int>(s % 25);
        double p = 0.1 + 0.05 * static_cast<double>(s % 5);
        Graph g = make_wheel_free(random_graph(n, p, 7000 + s), 7000 + s);
        if (g.n() > 60) continue;
        ++generated;
        min_n = std::min(min_n, g.n());
        max_n = std::max(max_n, g.n());
        try {
            Coloring c = color3(g);
            if (!verify_coloring(g, c, 3).ok() || !naive::coloring_ok(g, c, 3)) o.fail("bad coloring on " + edges_of(g));
        } catch (const std::exception& e) {
            o.fail(std::string(e.what()) + " on " + edges_of(g));
        }
    }
    if (generated < 1000) o.fail("only " + std::to_string(generated) + " wheel-free graphs with n <= 60");

    int encountered = 0;
    auto run = [&](const Graph& g) {
        if (find_wheel(g)) return;
        ++encountered;
        try {
            Coloring c = color3(g);
            if (!verify_coloring(g, c, 3).ok() || !naive::coloring_ok(g, c, 3)) o.fail("bad coloring on " + edges_of(g));
        } catch (const std::exception& e) {
            o.fail(std::string(e.what()) + " on " + edges_of(g));
        }
    };
    for (const auto& g : two_connected_labeled(6)) run(g);
    for (const auto& g : all_labeled_up_to_5()) run(g);
    for (const auto& g : random_wheel_sample()) run(g);
    o.summary = std::to_string(generated) + " generated (n " + std::to_string(min_n) + ".." + std::to_string(max_n) +
                ") + " + std::to_string(encountered) + " wheel-free graphs from criteria 1-2";
    return o;
}

struct Facts {
    const corpus::Item* item;
    Connectivity con;
    Classification cls;
    bool long_wheel;
};

const std::vector<Facts>& facts() {
    static const std::vector<Facts> all = [] {
        const auto& items = corpus::standard();
        std::vector<Facts> out(items.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t i = 0; i < items.size(); ++i) {
            const Graph& g = items[i].g;
            out[i] = Facts{&items[i], kappa(g, Exec::serial), classify(g, Exec::serial),
                           find_long_wheel(g, Exec::serial).has_value()};
        }
        return out;
    }();
    return all;
}

bool three_connected(const Facts& f) { return f.con.k >= 3 && f.item->g.n() >= 4; }
bool wheel_free(const Facts& f) { return f.cls.kind == WheelClass::wheel_free; }
bool almost(const Facts& f) { return f.cls.kind != WheelClass::neither; }

Outcome c5_reduction() {
    Outcome o;
    int count = 0;
    std::map<std::string, int> kinds;
    for (const auto& f : facts()) {
        const Graph& g = f.item->g;
        if (!wheel_free(f) || g.n() < 2) continue;
        ++count;
        auto r = reduction_step(g);
        kinds[to_string(r.kind)]++;
        if (r.kind == ReductionKind::not_found) o.fail("NotFound on " + f.item->name);
        else if (!verify_outcome(g, r).ok()) o.fail("outcome rejected on " + f.item->name);
    }
    o.summary = std::to_string(count) + " wheel-free corpus graphs;";
    for (auto& [k, v] : kinds) o.summary += " " + k + "=" + std::to_string(v);
    return o;
}

Outcome c6_structure() {
    Outcome o;
    int a = 0, c = 0, d = 0, e = 0;
    for (const auto& f : facts()) {
        const Graph& g = f.item->g;
        const std::string& name = f.item->name;
        if (three_connected(f) && almost(f)) {
            ++a;
            if (!is_minimally_3_connected(g)) o.fail("(a) not minimally 3-connected: " + name);
            int deg3 = 0;
            for (Vertex v = 0; v < g.n(); ++v) deg3 += g.degree(v) == 3;
            if (5 * deg3 < 2 * g.n() + 2) o.fail("(b) too few degree-3 vertices: " + name);
        }
        if (wheel_free(f) && g.n() >= 2) {
            ++c;
            int low = 0;
            for (Vertex v = 0; v < g.n(); ++v) low += g.degree(v) <= 3;
            if (low < 2) o.fail("(c) fewer than two vertices of degree <= 3: " + name);
        }
        if (three_connected(f)) {
            ++e;
            VertexSet w = f.cls.centers;
            auto ess = essential_edges(g);
            std::set<Edge> essential(ess.begin(), ess.end());
            for (auto edge : g.edges())
                if (!essential.count(edge) && !(std::binary_search(w.begin(), w.end(), edge.first) &&
                                               std::binary_search(w.begin(), w.end(), edge.second)))
                    o.fail("(e) non-essential edge outside W(G): " + name);
        }
    }
    // (d) 4-connected graphs up to 10 vertices.
    std::vector<Graph> four;
    for (const auto& f : facts())
        if (f.con.k >= 4 && f.item->g.n() <= 10) four.push_back(f.item->g);
    for (int s = 0; s < 200; ++s) {
        Graph g = random_graph(6 + s % 5, 0.6 + 0.1 * (s % 4), 9000 + s);
        if (kappa(g).k >= 4) four.push_back(g);
    }
    for (const auto& g : four) {
        ++d;
        auto w = wheel_centers(g);
        if (static_cast<int>(w.size()) != g.n()) o.fail("(d) W(G) != V(G) on " + edges_of(g));
        if (g.n() <= 10 && brute_wheel_centers(g).size() != w.size()) o.fail("(d) oracle disagrees on " + edges_of(g));
    }
    if (a == 0 || c == 0 || d == 0 || e == 0) o.fail("a sub-check had no instances");
    o.summary = "(a,b) " + std::to_string(a) + " graphs, (c) " + std::to_string(c) + ", (d) " + std::to_string(d) +
                ", (e) " + std::to_string(e);
    return o;
}

Outcome c7_twins() {
    Outcome o;
    int graphs = 0, k33e = 0, common3 = 0, fragments = 0, ends = 0;
    const Graph target = k33();
    for (const auto& f : facts()) {
        const Graph& g = f.item->g;
        const std::string& name = f.item->name;
        if (!three_connected(f) || !almost(f)) continue;
        ++graphs;
        for (Vertex u = 0; u < g.n(); ++u)
            for (Vertex v : g.adj(u))
                for (Vertex w : g.adj(v))
                    if (w > v && g.has_edge(u, w)) o.fail("triangle in " + name);
        if (brute_contains_k33_minus_e(g, wide(k33_budget(), 40))) {
            ++k33e;
            if (!brute_isomorphic(g, target, wide(chromatic_budget(), 40))) o.fail("K33-e but not K33: " + name);
        }
        for (Vertex u = 0; u < g.n(); ++u)
            for (Vertex v = u + 1; v < g.n(); ++v) {
                int common = 0;
                for (Vertex w : g.adj(u)) common += g.has_edge(v, w);
                if (common < 3) continue;
                ++common3;
                if (!is_twin_pair(g, u, v)) o.fail("three common neighbors without twins in " + name);
            }
        if (!disjoint_twin_pairs(g)) o.fail("no two disjoint twin pairs in " + name);
        for (const auto& fr : fragments_and_ends(g)) {
            ++fragments;
            auto ext = extend_3sep(g, fr.f);
            auto con = kappa(ext.graph);
            if (con.k < 3) o.fail("3-separation extension not 3-connected in " + name);
            if (classify(ext.graph).kind == WheelClass::neither)
                o.fail("3-separation extension not almost wheel-free in " + name);
        }
    }
    int blocks = 0;
    for (const auto& f : facts()) {
        const Graph& g = f.item->g;
        if (!wheel_free(f) || f.con.k != 2 || f.con.complete) continue;
        for (const auto& fr : fragments_and_ends(g)) {
            if (!fr.is_end || fr.f.size() < 2) continue;
            ++ends;
            auto s = extend_2cut_block(g, fr.f);
            if (kappa(s.graph).k < 3) o.fail("end block not 3-connected in " + f.item->name);
            VertexSet nf = neighborhood(g, fr.f);
            VertexSet allowed{s.from_parent[nf[0]], s.from_parent[nf[1]]};
            std::sort(allowed.begin(), allowed.end());
            for (Vertex c : wheel_centers(s.graph))
                if (!std::binary_search(allowed.begin(), allowed.end(), c))
                    o.fail("end block has a wheel center outside {a, b} in " + f.item->name);
            ++blocks;
        }
    }
    if (graphs == 0 || fragments == 0 || ends == 0 || k33e == 0) o.fail("a sub-check had no instances");
    o.summary = std::to_string(graphs) + " graphs, " + std::to_string(k33e) + " with K33-e, " +
                std::to_string(common3) + " pairs with 3 common neighbors, " + std::to_string(fragments) +
                " 3-fragments, " + std::to_string(ends) + " ends of 2-connected graphs";
    return o;
}

Outcome c8_long_wheels() {
    Outcome o;
    int graphs = 0, k4_blocks = 0, blocks_seen = 0;
    for (const auto& f : facts()) {
        const Graph& g = f.item->g;
        if (f.long_wheel) continue;
        ++graphs;
        try {
            Coloring c = color4_long(g);
            if (!verify_coloring(g, c, 4).ok() || !naive::coloring_ok(g, c, 4)) o.fail("bad coloring on " + f.item->name);
        } catch (const std::exception& e) {
            o.fail(std::string(e.what()) + " on " + f.item->name);
        }
        for (const auto& b : blocks(g).blocks) {
            if (b.kind != BlockKind::biconnected) continue;
            ++blocks_seen;
            Graph h = induced_subgraph(g, b.vertices).graph;
            if (h.n() == 4 && brute_isomorphic(h, k4())) {
                ++k4_blocks;
                continue;
            }
            if (find_wheel(h)) o.fail("block with a wheel that is not K4 in " + f.item->name);
        }
    }
    if (k4_blocks == 0) o.fail("no K4 blocks in the corpus");
    o.summary = std::to_string(graphs) + " long-wheel-free graphs, " + std::to_string(blocks_seen) + " blocks (" +
                std::to_string(k4_blocks) + " K4)";
    return o;
}

// ---------------------------------------------------------------------------

struct SplitterCase {
    Graph g;
    std::array<Vertex, 3> t;
    Splitter s;
};
struct WitnessCase {
    Graph g;
    WheelWitness w;
    int min_rim;
};
struct ColoringCase {
    Graph g;
    Coloring c;
};

Outcome c9_fuzzing() {
    Outcome o;
    std::vector<SplitterCase> sp;
    std::vector<WitnessCase> wi;
    std::vector<ColoringCase> co;
    for (int n = 4; n <= 7; ++n)
        for (const auto& g : corpus::unlabeled_graphs(n)) {
            if (!is_2_connected(g)) continue;
            for (Vertex x = 0; x < n; ++x)
                for (Vertex y = x + 1; y < n; ++y)
                    for (Vertex z = y + 1; z < n; ++z) {
                        auto res = cycle_or_splitter(g, x, y, z);
                        if (auto* s = std::get_if<Splitter>(&res)) sp.push_back({g, {x, y, z}, *s});
                    }
        }
    for (const auto& f : facts()) {
        const Graph& g = f.item->g;
        if (g.n() >= 8 && is_2_connected(g) && g.n() <= 30) {
            for (Vertex x = 0; x + 2 < g.n() && x < 6; ++x) {
                auto res = cycle_or_splitter(g, x, x + 1, g.n() - 1);
                if (auto* s = std::get_if<Splitter>(&res)) sp.push_back({g, {x, x + 1, g.n() - 1}, *s});
            }
        }
        if (auto w = find_wheel(g)) wi.push_back({g, *w, 3});
        if (auto w = find_long_wheel(g)) wi.push_back({g, *w, 4});
        if (auto w = find_hub(g, 4)) wi.push_back({g, *w, 3});
        if (g.m() == 0) continue;
        if (wheel_free(f)) co.push_back({g, color3(g)});
        if (!f.long_wheel) co.push_back({g, color4_long(g)});
    }
    if (sp.empty() || wi.empty() || co.empty()) {
        o.fail("no certificates to mutate");
        return o;
    }

    std::mt19937_64 rng(20240917);
    auto pick = [&](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };
    long invalid = 0, benign = 0, attempts = 0;
    std::array<long, 3> per_kind{};
    std::map<std::string, long> tags;
    auto judge = [&](bool really_valid, const Verdict& v, const std::string& what) {
        if (really_valid) {
            ++benign;
            if (!v.ok()) o.fail("valid mutated " + what + " rejected: " + v.violations.front().detail);
            return false;
        }
        if (v.ok()) {
            o.fail("silent accept of a mutated " + what);
            return false;
        }
        for (const auto& viol : v.violations)
            if (viol.condition.empty()) o.fail("unnamed violation for " + what);
        tags[what + ":" + v.violations.front().condition]++;
        return true;
    };

    while (invalid < 10000 && attempts < 200000) {
        ++attempts;
        const int kind = static_cast<int>(attempts % 3);
        if (kind == 0) {
            const auto& base = sp[pick(static_cast<int>(sp.size()))];
            const Graph& g = base.g;
            Splitter s = base.s;
            std::array<VertexSet*, 5> sets{&s.a, &s.b, &s.parts[0], &s.parts[1], &s.parts[2]};
            switch (pick(7)) {
                case 0: {
                    Vertex v = pick(g.n());
                    for (auto* set : sets) set->erase(std::remove(set->begin(), set->end(), v), set->end());
                    sets[pick(5)]->push_back(v);
                    break;
                }
                case 1: {
                    auto* set = sets[pick(5)];
                    if (!set->empty()) set->erase(set->begin() + pick(static_cast<int>(set->size())));
                    break;
                }
                case 2:
                    (pick(2) ? s.anchor_a : s.anchor_b)[pick(3)] = pick(g.n());
                    break;
                case 3:
                    std::swap(s.parts[pick(3)], s.parts[pick(3)]);
                    break;
                case 4: {
                    auto& an = pick(2) ? s.anchor_a : s.anchor_b;
                    std::swap(an[pick(3)], an[pick(3)]);
                    break;
                }
                case 5:
                    std::swap(s.a, s.b);
                    break;
                default:
                    sets[pick(5)]->push_back(g.n() + pick(3));
            }
            bool ok = naive::splitter_ok(g, base.t[0], base.t[1], base.t[2], s);
            if (judge(ok, verify_splitter(g, base.t[0], base.t[1], base.t[2], s), "splitter")) {
                ++invalid;
                ++per_kind[0];
            }
        } else if (kind == 1) {
            const auto& base = wi[pick(static_cast<int>(wi.size()))];
            const Graph& g = base.g;
            WheelWitness w = base.w;
            auto& rim = w.rim.vertices;
            switch (pick(7)) {
                case 0:
                    w.center = pick(g.n() + 2) - 1;
                    break;
                case 1:
                    rim.erase(rim.begin() + pick(static_cast<int>(rim.size())));
                    break;
                case 2:
                    rim[pick(static_cast<int>(rim.size()))] = pick(g.n());
                    break;
                case 3:
                    std::swap(rim[pick(static_cast<int>(rim.size()))], rim[pick(static_cast<int>(rim.size()))]);
                    break;
                case 4:
                    if (!w.spokes.empty()) w.spokes.erase(w.spokes.begin() + pick(static_cast<int>(w.spokes.size())));
                    break;
                case 5:
                    w.spokes.push_back(pick(g.n() + 1));
                    break;
                default:
                    w.k = pick(2) ? w.k + 1 + pick(3) : pick(3);
            }
            bool ok = naive::witness_ok(g, w, base.min_rim);
            if (judge(ok, verify_witness(g, w, base.min_rim), "witness")) {
                ++invalid;
                ++per_kind[1];
            }
        } else {
            const auto& base = co[pick(static_cast<int>(co.size()))];
            const Graph& g = base.g;
            Coloring c = base.c;
            const int bound = base.c.max_colors;
            switch (pick(5)) {
                case 0:
                    c.colors[pick(g.n())] = pick(bound + 2) - 1;
                    break;
                case 1: {
                    auto e = g.edges()[pick(g.m())];
                    c.colors[e.first] = c.colors[e.second];
                    break;
                }
                case 2:
                    c.colors.pop_back();
                    break;
                case 3:
                    c.colors.push_back(0);
                    break;
                default:
                    c.colors[pick(g.n())] = bound + pick(3);
            }
            bool ok = naive::coloring_ok(g, c, bound);
            if (judge(ok, verify_coloring(g, c, bound), "coloring")) {
                ++invalid;
                ++per_kind[2];
            }
        }
    }
    if (invalid < 10000) o.fail("only " + std::to_string(invalid) + " invalidating mutations");
    o.summary = std::to_string(invalid) + " invalid mutations rejected (splitter " + std::to_string(per_kind[0]) +
                ", witness " + std::to_string(per_kind[1]) + ", coloring " + std::to_string(per_kind[2]) + "), " +
                std::to_string(benign) + " still-valid mutations accepted; from " + std::to_string(sp.size()) +
                " splitters, " + std::to_string(wi.size()) + " witnesses, " + std::to_string(co.size()) + " colorings";
    return o;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "cycle through three vertices vs brute force (2-connected, n <= 6)", c1_cycle_through_three},
        {2, "wheel detector vs brute force", c2_wheel_detector},
        {3, "R(3,5) circulant: n, alpha, omega, chi, wheel, kappa", c3_ramsey},
        {4, "3-coloring of wheel-free graphs", c4_three_coloring},
        {5, "reduction step on wheel-free graphs", c5_reduction},
        {6, "minimality, degree-3 counts, 4-connected centers, essential edges", c6_structure},
        {7, "3-connected almost wheel-free structure and extensions", c7_twins},
        {8, "4-coloring and blocks of long-wheel-free graphs", c8_long_wheels},
        {9, "verifiers reject mutated certificates", c9_fuzzing},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
    int failed = 0;
    for (const auto& c : all) {
        if (!wanted.empty() && !wanted.count(c.id)) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d %s: %s; %s (%.1f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.summary.c_str(), secs);
        for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
