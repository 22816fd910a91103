#include "doctest.h"
#include "wheelkit/connectivity.hpp"
#include "wheelkit/oracle.hpp"
#include "wheelkit/zoo.hpp"

using namespace wheelkit;

namespace {

bool separates(const Graph& g, const VertexSet& s) {
    VertexMask blocked(g.n(), 0);
    for (Vertex v : s) blocked[v] = 1;
    return !is_connected(g, &blocked);
}

}  // namespace

TEST_SUITE("connectivity") {
    TEST_CASE("kappa of known graphs") {
        CHECK(kappa(k4()).k == 3);
        CHECK(kappa(k4()).complete);
        auto k = kappa(k33());
        CHECK(k.k == 3);
        CHECK(separates(k33(), k.cutset));
        CHECK(kappa(ramsey_r35()).k == 4);
        // values from an independent max-flow implementation
        CHECK(kappa(cube()).k == 3);
        CHECK(kappa(petersen()).k == 3);
        CHECK(kappa(theta(2, 3, 4)).k == 2);
        CHECK(kappa(random_graph(10, 0.3, 42)).k == 1);
        CHECK(kappa(Graph(3)).k == 0);
    }

    TEST_CASE("kappa matches the subset oracle") {
        for (int s = 0; s < 80; ++s) {
            Graph g = random_graph(5 + s % 6, 0.3 + 0.1 * (s % 5), 700 + s);
            auto k = kappa(g);
            CHECK(k.k == brute_kappa(g));
            if (!k.complete && k.k > 0) {
                CHECK(static_cast<int>(k.cutset.size()) == k.k);
                CHECK(separates(g, k.cutset));
            }
        }
    }

    TEST_CASE("fragments and ends") {
        auto k23 = fragments_and_ends(theta(2, 2, 2));
        int ends = 0;
        for (const auto& f : k23) {
            if (f.is_end) {
                ++ends;
                CHECK(f.f.size() == 1);
            }
        }
        CHECK(ends == 3);

        auto c5 = fragments_and_ends(cycle_graph(5));
        for (const auto& f : c5) CHECK(f.is_end == (f.f.size() == 1));

        Graph glued = glued_k33_pair();
        bool found = false;
        for (const auto& f : fragments_and_ends(glued))
            if (f.f.size() == 4 && f.neighborhood == VertexSet{0, 3}) found = true;
        CHECK(found);
    }

    TEST_CASE("essential edges") {
        CHECK(essential_edges(k4()).size() == 6);
        CHECK(is_minimally_3_connected(k4()));
        CHECK(essential_edges(k33()).size() == 9);
        CHECK(is_minimally_3_connected(k33()));
        CHECK(essential_edges(complete_graph(5)).size() == 10);
        CHECK_FALSE(is_minimally_3_connected(complete_graph(5)));
    }

    TEST_CASE("2-cut block extension") {
        Graph g = glued_k33_pair();
        VertexSet side;
        for (const auto& f : fragments_and_ends(g))
            if (f.is_end && f.f.size() == 4) side = f.f;
        REQUIRE(side.size() == 4);
        auto s = extend_2cut_block(g, side);
        CHECK(brute_isomorphic(s.graph, k33()));

        std::array<Vertex, 1> one{side[0]};
        CHECK_THROWS_AS(extend_2cut_block(g, one), PreconditionError);
    }

    TEST_CASE("3-separation extension") {
        std::array<Vertex, 1> f{3};
        auto ext = extend_3sep(k33(), f);
        CHECK(brute_isomorphic(ext.graph, k33()));
        for (int r = 0; r < 3; ++r) CHECK_FALSE(ext.created[r]);

        // A separator vertex with two neighbors in F gets a new neighbor
        // of degree 3 adjacent to d and d'.
        Graph g(10, {{0, 7}, {0, 8}, {0, 9}, {1, 6}, {1, 8}, {1, 9}, {2, 5}, {2, 8},
                     {2, 9}, {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7}});
        int created = 0;
        for (const auto& fr : fragments_and_ends(g)) {
            auto e = extend_3sep(g, fr.f);
            for (int r = 0; r < 3; ++r) {
                if (!e.created[r]) continue;
                ++created;
                Vertex p = e.primed[r];
                CHECK(e.graph.degree(p) == 3);
                CHECK(e.graph.has_edge(p, e.attach[r]));
                CHECK(e.graph.has_edge(p, e.d));
                CHECK(e.graph.has_edge(p, e.d2));
                CHECK(e.to_parent[p] == -1);
            }
        }
        CHECK(created > 0);
    }
}
