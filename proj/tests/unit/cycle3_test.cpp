#include <set>

#include "doctest.h"
#include "wheelkit/cycle3.hpp"
#include "wheelkit/oracle.hpp"
#include "wheelkit/zoo.hpp"

using namespace wheelkit;

namespace {

Splitter k23_splitter() {
    Splitter s;
    s.a = {0};
    s.b = {1};
    s.anchor_a = {0, 0, 0};
    s.anchor_b = {1, 1, 1};
    s.parts = {VertexSet{2}, VertexSet{3}, VertexSet{4}};
    return s;
}

}  // namespace

TEST_SUITE("cycle3") {
    TEST_CASE("K4 gives a cycle") {
        for (Vertex x = 0; x < 4; ++x)
            for (Vertex y = 0; y < 4; ++y)
                for (Vertex z = 0; z < 4; ++z) {
                    if (x == y || y == z || x == z) continue;
                    auto r = cycle_or_splitter(k4(), x, y, z);
                    REQUIRE(std::holds_alternative<Cycle>(r));
                    std::array<Vertex, 3> req{x, y, z};
                    CHECK(verify_cycle_through(k4(), std::get<Cycle>(r), req).ok());
                }
    }

    TEST_CASE("K23 gives the expected splitter") {
        Graph g = theta(2, 2, 2);
        auto r = cycle_or_splitter(g, 2, 3, 4);
        REQUIRE(std::holds_alternative<Splitter>(r));
        const auto& s = std::get<Splitter>(r);
        CHECK((s == k23_splitter() || s == swapped(k23_splitter())));
        CHECK(verify_splitter(g, 2, 3, 4, s).ok());
        CHECK_FALSE(brute_cycle_through(g, 2, 3, 4).has_value());
    }

    TEST_CASE("long theta gives single-vertex sides") {
        Graph g = theta(3, 4, 5);
        // theta(p, q, r): branch vertices 0 and 1, paths of p, q, r edges
        Vertex x = 2, y = 4, z = 7;
        auto r = cycle_or_splitter(g, x, y, z);
        REQUIRE(std::holds_alternative<Splitter>(r));
        const auto& s = std::get<Splitter>(r);
        CHECK(s.a.size() == 1);
        CHECK(s.b.size() == 1);
        CHECK(std::set<Vertex>{s.a[0], s.b[0]} == std::set<Vertex>{0, 1});
        CHECK(verify_splitter(g, x, y, z, s).ok());
    }

    TEST_CASE("verifier names the broken condition") {
        Graph g = theta(2, 2, 2);
        CHECK(verify_splitter(g, 2, 3, 4, k23_splitter()).ok());

        Splitter bad = k23_splitter();
        std::swap(bad.parts[0], bad.parts[1]);
        CHECK(verify_splitter(g, 2, 3, 4, bad).has("i"));

        Splitter extra = k23_splitter();
        extra.a.push_back(2);
        auto v = verify_splitter(g, 2, 3, 4, extra);
        CHECK_FALSE(v.ok());
        CHECK((v.has("iv") || v.has("v") || v.has("i")));

        Splitter oob = k23_splitter();
        oob.b = {99};
        CHECK(verify_splitter(g, 2, 3, 4, oob).has("malformed"));
    }

    TEST_CASE("cycle verifier") {
        Graph g = k4();
        std::array<Vertex, 2> two{0, 1};
        std::array<Vertex, 1> off{3};
        CHECK(verify_cycle_through(g, Cycle{{0, 1, 2}}, two).ok());
        CHECK(verify_cycle_through(g, Cycle{{0, 1, 2}}, off).has("required"));
        auto v = verify_cycle_through(cycle_graph(6), Cycle{{0, 1, 2, 3, 5}}, {});
        REQUIRE(v.has("edge"));
        bool named = false;
        for (const auto& x : v.violations) named |= x.detail.find("3-5") != std::string::npos;
        CHECK(named);
    }

    TEST_CASE("not 2-connected is reported with a cut vertex") {
        Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
        try {
            cycle_or_splitter(bowtie, 0, 1, 3);
            FAIL("expected an exception");
        } catch (const NotTwoConnected& e) {
            CHECK(e.cut_vertex == std::optional<Vertex>(2));
        }
    }

    TEST_CASE("agrees with brute force on random 2-connected graphs") {
        int splitters = 0;
        for (int s = 0; s < 300; ++s) {
            Graph g = make_wheel_free(random_graph(5 + s % 3, 0.6, 40 + s), 40 + s);
            if (!is_2_connected(g)) continue;
            Vertex x = 0, y = g.n() / 2, z = g.n() - 1;
            Cycle3Trace trace;
            auto r = cycle_or_splitter(g, x, y, z, {true}, &trace);
            OracleBudget wide;
            wide.max_vertices = 40;
            bool exists = brute_cycle_through(g, x, y, z, wide).has_value();
            CHECK(std::holds_alternative<Cycle>(r) == exists);
            if (auto* sp = std::get_if<Splitter>(&r)) {
                ++splitters;
                CHECK(verify_splitter(g, x, y, z, *sp).ok());
            }
            if (trace.sides_built) {
                CHECK(trace.sides_2_connected);
                CHECK(trace.sides_disjoint);
            }
        }
        CHECK(splitters > 0);
    }
}
