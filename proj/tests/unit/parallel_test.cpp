#include "doctest.h"
#include "wheelkit/coloring.hpp"
#include "wheelkit/connectivity.hpp"
#include "wheelkit/wheels.hpp"
#include "wheelkit/zoo.hpp"

using namespace wheelkit;

TEST_SUITE("parallel") {
    TEST_CASE("serial and parallel kernels agree") {
        for (int s = 0; s < 40; ++s) {
            Graph g = random_graph(10 + s % 12, 0.15 + 0.05 * (s % 6), 5000 + s);
            CHECK(find_wheel(g, Exec::serial) == find_wheel(g, Exec::parallel));
            CHECK(find_long_wheel(g, Exec::serial) == find_long_wheel(g, Exec::parallel));
            CHECK(wheel_centers(g, Exec::serial) == wheel_centers(g, Exec::parallel));
            auto a = kappa(g, Exec::serial), b = kappa(g, Exec::parallel);
            CHECK(a.k == b.k);
            CHECK(a.cutset == b.cutset);
            CHECK(essential_edges(g, Exec::serial) == essential_edges(g, Exec::parallel));
            Graph f = make_wheel_free(g, s);
            CHECK(color3(f, nullptr, Exec::serial).colors == color3(f, nullptr, Exec::parallel).colors);
            CHECK(color4_long(f, Exec::serial).colors == color4_long(f, Exec::parallel).colors);
        }
    }
}
