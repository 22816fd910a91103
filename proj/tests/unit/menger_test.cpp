#include <set>

#include "doctest.h"
#include "wheelkit/menger.hpp"
#include "wheelkit/oracle.hpp"
#include "wheelkit/zoo.hpp"

using namespace wheelkit;

TEST_SUITE("menger") {
    TEST_CASE("two disjoint paths") {
        // path a-m-c with a=0, m=1, c=2; b=3 and d=4 isolated
        Graph p(5, {{0, 1}, {1, 2}});
        auto r = two_disjoint_paths(p, {0, 3}, {2, 4});
        REQUIRE(std::holds_alternative<SeparatorVertex>(r));
        CHECK(std::get<SeparatorVertex>(r).v == 1);

        auto same = two_disjoint_paths(cycle_graph(4), {0, 2}, {0, 2});
        REQUIRE(std::holds_alternative<TwoPaths>(same));
        CHECK(std::get<TwoPaths>(same).p1.length() == 0);
        CHECK(std::get<TwoPaths>(same).p2.length() == 0);

        // C4 on a, c, b, d
        Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        auto tp = two_disjoint_paths(c4, {0, 2}, {1, 3});
        REQUIRE(std::holds_alternative<TwoPaths>(tp));
        const auto& t = std::get<TwoPaths>(tp);
        CHECK(is_path_in(c4, t.p1));
        CHECK(is_path_in(c4, t.p2));
        CHECK(t.p1.front() == 0);
        CHECK(t.p2.front() == 2);
    }

    TEST_CASE("fans") {
        std::array<Vertex, 3> y{1, 2, 3};
        auto f = k_fan(k4(), 0, y, 3);
        REQUIRE(std::holds_alternative<Fan>(f));
        for (const auto& p : std::get<Fan>(f).paths) CHECK(p.length() == 1);

        Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
        auto s = k_fan(star, 0, y, 2);
        REQUIRE(std::holds_alternative<Fan>(s));
        CHECK(std::get<Fan>(s).paths.size() == 2);

        Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
        std::array<Vertex, 3> other{2, 3, 4};
        auto sep = k_fan(bowtie, 0, std::span<const Vertex>(other).subspan(1), 2);
        REQUIRE(std::holds_alternative<SmallSeparator>(sep));
        CHECK(std::get<SmallSeparator>(sep).vertices == VertexSet{2});
    }

    TEST_CASE("cycle or theta") {
        auto k = cycle_or_theta(k4(), 0, 1, 2);
        REQUIRE(std::holds_alternative<Cycle>(k));

        Graph k23 = theta(2, 2, 2);
        auto t = cycle_or_theta(k23, 2, 3, 4);
        REQUIRE(std::holds_alternative<Theta>(t));
        const auto& th = std::get<Theta>(t);
        CHECK(is_valid_theta(k23, th, 2, 3, 4));
        CHECK(std::set<Vertex>{th.t_a, th.t_b} == std::set<Vertex>{0, 1});
        for (const auto* p : {&th.p_a, &th.p_b, &th.q_a, &th.q_b, &th.r_a, &th.r_b}) CHECK(p->length() == 1);

        auto c6 = cycle_or_theta(cycle_graph(6), 0, 2, 4);
        REQUIRE(std::holds_alternative<Cycle>(c6));
        CHECK(std::get<Cycle>(c6).length() == 6);

        CHECK_THROWS_AS(cycle_or_theta(path_graph(4), 0, 1, 2), NotTwoConnected);
    }

    TEST_CASE("cycle through a fan") {
        auto c = cycle_through_fan(k4(), Cycle{{0, 1, 2}}, 3, 1, 2);
        CHECK(c.length() == 4);
        CHECK(is_cycle_in(k4(), c));

        Graph k = k33();
        Cycle c4{{0, 3, 1, 4}};
        auto d = cycle_through_fan(k, c4, 5, 0, 1);
        CHECK(is_cycle_in(k, d));
        CHECK((d.contains(5) && d.contains(0) && d.contains(1)));

        Graph k5 = complete_graph(5);
        auto e = cycle_through_fan(k5, Cycle{{0, 1, 2}}, 3, 0, 1);
        CHECK(is_cycle_in(k5, e));
        CHECK(brute_cycle_through(k5, 3, 0, 1).has_value());
    }
}
