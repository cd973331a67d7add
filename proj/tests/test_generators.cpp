#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "graphstat/errors.hpp"
#include "graphstat/generators.hpp"
#include "helpers.hpp"

using namespace graphstat;
using namespace testutil;

TEST_CASE("cycle generator") {
    Graph c6 = make_cycle(6);
    CHECK(c6.n() == 6);
    CHECK(c6.m() == 6);
    for (Vertex v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);
    CHECK(is_connected(c6));
    CHECK_NOTHROW(verify_coloring(c6, cycle_coloring(c6)));
    CHECK(cycle_coloring(c6).colors_used() == 2);
    CHECK(cycle_coloring(make_cycle(7)).colors_used() == 3);
    CHECK_THROWS_AS(make_cycle(2), Error);
}

TEST_CASE("torus generator") {
    Graph t4 = make_torus2d(4);
    CHECK(t4.n() == 16);
    CHECK(t4.m() == 32);  // 2n edges in a 4-regular graph
    for (Vertex v = 0; v < t4.n(); ++v) CHECK(t4.degree(v) == 4);
    CHECK(is_connected(t4));
    CHECK_NOTHROW(verify_coloring(t4, torus2d_coloring(t4, 4)));
    CHECK(torus2d_coloring(t4, 4).colors_used() == 4);
    // odd side falls back to Misra-Gries
    Graph t5 = make_torus2d(5);
    CHECK_NOTHROW(verify_coloring(t5, torus2d_coloring(t5, 5)));
    CHECK_THROWS_AS(make_torus2d(2), Error);
}

TEST_CASE("random regular generator postconditions") {
    Graph g = make_random_regular(3, 100, 1);
    CHECK(g.n() == 100);
    CHECK(g.m() == 150);
    for (Vertex v = 0; v < g.n(); ++v) CHECK(g.degree(v) == 3);
    CHECK(is_connected(g));

    CHECK_THROWS_WITH_AS(make_random_regular(3, 99, 1), doctest::Contains("BadParams"), Error);
    CHECK_THROWS_AS(make_random_regular(4, 4, 1), Error);  // needs n > d
}

TEST_CASE("random regular generator is deterministic per seed") {
    Graph a = make_random_regular(3, 60, 42);
    Graph b = make_random_regular(3, 60, 42);
    Graph c = make_random_regular(3, 60, 43);
    CHECK(a == b);
    CHECK_FALSE(a == c);
}

TEST_CASE("binary tree generator") {
    Graph t = make_binary_tree(3);
    CHECK(t.n() == 15);
    CHECK(t.m() == 14);
    CHECK(t.degree(0) == 2);
    CHECK(t.degree(1) == 3);
    CHECK(t.degree(14) == 1);
    CHECK(is_connected(t));
    Graph single = make_binary_tree(0);
    CHECK(single.n() == 1);
}

TEST_CASE("member seeds follow the documented mix") {
    CHECK(member_seed(7, 0) == 7);
    CHECK(member_seed(7, 1) == (7ULL ^ 0x9e3779b97f4a7c15ULL));
    CHECK(member_seed(7, 2) == (7ULL ^ (2 * 0x9e3779b97f4a7c15ULL)));
}

TEST_CASE("sequence spec validation") {
    SequenceSpec spec;
    spec.family = Family::cycle;
    spec.sizes = {10, 20, 40};
    CHECK_NOTHROW(spec.validate());
    spec.sizes = {10, 10};
    CHECK_THROWS_WITH_AS(spec.validate(), doctest::Contains("strictly increasing"), Error);
    spec.sizes = {};
    CHECK_THROWS_AS(spec.validate(), Error);

    SequenceSpec files;
    files.family = Family::from_files;
    CHECK_THROWS_AS(files.validate(), Error);
}

TEST_CASE("generate produces validated colored members") {
    SequenceSpec spec;
    spec.family = Family::random_regular;
    spec.sizes = {20, 40};
    spec.d = 3;
    spec.seed = 5;
    for (std::size_t i = 0; i < spec.members(); ++i) {
        Member m = generate(spec, i);
        CHECK(m.graph.n() == spec.sizes[i]);
        CHECK(is_connected(m.graph));
        CHECK_NOTHROW(verify_coloring(m.graph, m.coloring));
    }
    CHECK_THROWS_AS(generate(spec, 2), Error);
}
