#include "doctest.h"
#include "wheelkit/oracle.hpp"
#include "wheelkit/zoo.hpp"

using namespace wheelkit;

TEST_SUITE("oracle") {
    TEST_CASE("cycles through three vertices") {
        CHECK_FALSE(brute_cycle_through(theta(2, 2, 2), 2, 3, 4));
        auto k = brute_cycle_through(k4(), 0, 1, 2);
        REQUIRE(k);
        CHECK(is_cycle_in(k4(), *k));
        auto c = brute_cycle_through(cycle_graph(6), 0, 2, 4);
        REQUIRE(c);
        CHECK(c->length() == 6);
    }

    TEST_CASE("cycle enumeration counts") {
        long count = 0;
        for_each_cycle(k4(), cycle_budget(), [&](const std::vector<Vertex>&) {
            ++count;
            return true;
        });
        CHECK(count == 7);  // four triangles and three 4-cycles
        count = 0;
        for_each_cycle(complete_graph(5), cycle_budget(), [&](const std::vector<Vertex>&) {
            ++count;
            return true;
        });
        CHECK(count == 37);
    }

    TEST_CASE("wheels by brute force") {
        CHECK_FALSE(brute_wheel(k33()));
        CHECK(brute_wheel(cube()));
        CHECK_FALSE(brute_wheel(cycle_graph(5)));
        CHECK(brute_wheel_centers(k4()).size() == 4);
    }

    TEST_CASE("colorings and cliques") {
        CHECK(chromatic_number(ramsey_r35()) == 4);
        CHECK(alpha_omega(ramsey_r35()) == std::pair{4, 2});
        CHECK(chromatic_number(k33()) == 2);
        CHECK(alpha_omega(k33()) == std::pair{3, 2});
        CHECK(chromatic_number(cycle_graph(5)) == 3);
        CHECK(alpha_omega(cycle_graph(5)) == std::pair{2, 2});
        CHECK(chromatic_number(petersen()) == 3);
    }

    TEST_CASE("K33 subdivisions") {
        auto s = brute_k33_subdivision(k33());
        REQUIRE(s);
        CHECK(verify_k33_subdivision(k33(), *s));
        for (const auto& p : s->paths) CHECK(p.length() == 1);
        CHECK(brute_k33_subdivision(petersen()));
        CHECK_FALSE(brute_k33_subdivision(cube()));
        CHECK_FALSE(brute_k33_subdivision(k4()));
        CHECK(brute_k33_subdivision(ramsey_r35()));
        CHECK(brute_contains_k33_minus_e(k33()));
        CHECK_FALSE(brute_contains_k33_minus_e(cube()));
    }

    TEST_CASE("budgets are enforced") {
        OracleBudget tiny;
        tiny.max_vertices = 4;
        CHECK_THROWS_AS(brute_wheel(cube(), tiny), BudgetExceeded);
        CHECK_THROWS_AS(chromatic_number(complete_graph(20)), BudgetExceeded);
    }

    TEST_CASE("isomorphism") {
        CHECK(brute_isomorphic(theta(2, 2, 2), Graph(5, {{2, 0}, {2, 1}, {3, 0}, {3, 1}, {4, 0}, {4, 1}})));
        CHECK_FALSE(brute_isomorphic(cube(), k33()));
        CHECK(brute_isomorphic(wheel_graph(3), k4()));
    }
}
