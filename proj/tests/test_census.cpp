#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "graphstat/census.hpp"
#include "graphstat/errors.hpp"
#include "helpers.hpp"

using namespace graphstat;
using namespace testutil;

namespace {

// Radius-(r-1) truncation: labels with dist <= r-1 form a prefix, and the
// prefix labeling is the canonical labeling of the smaller ball.
RootedBall truncate_ball(const RootedBall& b) {
    RootedBall t;
    t.radius = b.radius - 1;
    t.d = b.d;
    int k = 0;
    while (k < b.k && b.dist[k] <= b.radius - 1) ++k;
    t.k = k;
    t.dist.assign(b.dist.begin(), b.dist.begin() + k);
    t.adj.resize(k);
    for (int i = 0; i < k; ++i)
        for (auto [nbr, color] : b.adj[i])
            if (nbr < k) t.adj[i].push_back({nbr, color});
    return t;
}

EdgeColoring permuted_coloring(const Graph& from, const EdgeColoring& col, const Graph& to,
                               const std::vector<int>& perm) {
    EdgeColoring out;
    out.by_edge.resize(to.m());
    for (int i = 0; i < from.m(); ++i) {
        const Edge& e = from.edges()[i];
        out.by_edge[to.edge_index(perm[e.u], perm[e.v])] = col.by_edge[i];
    }
    return out;
}

}  // namespace

TEST_CASE("K2 ball code is exactly the documented string") {
    Graph k2 = Graph::build(2, {{0, 1}}, 1);
    EdgeColoring col = proper_edge_coloring(k2);
    REQUIRE(col.by_edge == std::vector<int>{1});
    RootedBall from0 = extract_rooted_ball(k2, col, 0, 1);
    RootedBall from1 = extract_rooted_ball(k2, col, 1, 1);
    CHECK(canonical_code(from0) == "2;1:(2,1);2:(1,1)");
    CHECK(canonical_code(from0) == canonical_code(from1));
}

TEST_CASE("alternating C6 has one radius-1 class with p = 1") {
    Graph c6 = make_cycle(6);
    EdgeColoring col = cycle_coloring(c6);
    BallCensus c = census(c6, col, 1);
    REQUIRE(c.counts.size() == 1);
    CHECK(c.counts.begin()->second == 6);
    CHECK(c.probability(c.counts.begin()->first) == Rational(1));
    // the single class is the 3-vertex path with one color-1 and one color-2 edge
    RootedBall b = extract_rooted_ball(c6, col, 0, 1);
    CHECK(b.k == 3);
    CHECK(b.adj[0].size() == 2);
    CHECK(b.adj[0][0].second == 1);
    CHECK(b.adj[0][1].second == 2);
}

TEST_CASE("path end ball excludes distance-2 vertices") {
    Graph p3 = make_path(3);
    EdgeColoring col = proper_edge_coloring(p3);
    RootedBall b = extract_rooted_ball(p3, col, 0, 1);
    CHECK(b.k == 2);
}

TEST_CASE("census counts always sum to n") {
    for (auto& member : mixed_family_matrix(11, 8)) {
        for (int r : {0, 1, 2}) {
            BallCensus c = census(member.graph, member.coloring, r);
            long long total = 0;
            Rational psum(0);
            for (auto& [code, count] : c.counts) {
                CHECK(count >= 1);
                total += count;
                psum += c.probability(code);
            }
            CHECK(total == member.graph.n());
            CHECK(psum == Rational(1));
        }
    }
}

TEST_CASE("radius-r census refines radius-(r-1)") {
    for (auto& member : mixed_family_matrix(23, 6)) {
        BallCensus fine = census(member.graph, member.coloring, 2);
        BallCensus coarse = census(member.graph, member.coloring, 1);
        std::map<BallCode, long long> merged;
        for (auto& [code, count] : fine.counts) {
            RootedBall b = ball_from_code(code, fine.r, fine.d);
            merged[canonical_code(truncate_ball(b))] += count;
        }
        CHECK(merged == coarse.counts);
    }
}

TEST_CASE("labels are nondecreasing with distance") {
    for (auto& member : mixed_family_matrix(31, 5)) {
        RootedBall b = extract_rooted_ball(member.graph, member.coloring, 0, 3);
        for (int i = 0; i + 1 < b.k; ++i) CHECK(b.dist[i] <= b.dist[i + 1]);
        CHECK(b.dist[0] == 0);
    }
}

TEST_CASE("parallel census equals sequential census") {
    for (auto& member : mixed_family_matrix(47, 4)) {
        BallCensus seq = census(member.graph, member.coloring, 2, 1);
        BallCensus par = census(member.graph, member.coloring, 2, 4);
        CHECK(seq.counts == par.counts);
    }
}

TEST_CASE("census is invariant under vertex relabeling") {
    Graph g = random_connected_graph(30, 4, 99);
    EdgeColoring col = proper_edge_coloring(g);
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(5);
    for (std::size_t i = perm.size() - 1; i > 0; --i)
        std::swap(perm[i], perm[rng() % (i + 1)]);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        Vertex u = perm[e.u], v = perm[e.v];
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    Graph h = Graph::build(g.n(), std::move(edges), g.degree_bound());
    EdgeColoring hcol = permuted_coloring(g, col, h, perm);
    CHECK(census(g, col, 2).counts == census(h, hcol, 2).counts);
}

TEST_CASE("tv distance examples") {
    Graph c6 = make_cycle(6);
    EdgeColoring col = cycle_coloring(c6);
    BallCensus a = census(c6, col, 1);
    CHECK(tv_distance(a, a) == Rational(0));

    // disjoint supports at matching (r, d): every C3 1-ball is a triangle,
    // every C6 1-ball a path
    Graph c3 = make_cycle(3);
    BallCensus b = census(c3, proper_edge_coloring(c3), 1);
    CHECK(tv_distance(a, b) == Rational(1));

    BallCensus one, half;
    one.r = half.r = 1;
    one.d = half.d = 2;
    one.n = 2;
    one.counts["A"] = 2;
    half.n = 2;
    half.counts["A"] = 1;
    half.counts["B"] = 1;
    CHECK(tv_distance(one, half) == Rational(1, 2));

    BallCensus other_r = a;
    other_r.r = 2;
    CHECK_THROWS_WITH_AS(tv_distance(a, other_r), doctest::Contains("RadiusMismatch"), Error);
}

TEST_CASE("odd cycle coloring splits the census") {
    Graph c5 = make_cycle(5);
    BallCensus c = census(c5, proper_edge_coloring(c5), 1);
    CHECK(c.counts.size() >= 2);
    long long total = 0;
    for (auto& [code, count] : c.counts) total += count;
    CHECK(total == 5);
}

TEST_CASE("ball codes round trip through ball_from_code") {
    for (auto& member : mixed_family_matrix(53, 6)) {
        BallCensus c = census(member.graph, member.coloring, 2);
        for (auto& [code, count] : c.counts) {
            RootedBall b = ball_from_code(code, c.r, c.d);
            CHECK(canonical_code(b) == code);
        }
    }
}

TEST_CASE("ball_from_code rejects malformed codes") {
    CHECK_THROWS_WITH_AS(ball_from_code("", 1, 2), doctest::Contains("InvariantViolation"), Error);
    CHECK_THROWS_AS(ball_from_code("2;1:(2,1)", 1, 2), Error);           // missing row
    CHECK_THROWS_AS(ball_from_code("2;1:(2,1);2:", 1, 2), Error);        // asymmetric
    CHECK_THROWS_AS(ball_from_code("2;1:(2,1);2:(1,2)", 1, 2), Error);   // color mismatch
    CHECK_THROWS_AS(ball_from_code("2;1:;2:", 1, 2), Error);             // disconnected
    CHECK_THROWS_AS(ball_from_code("2;1:(2,1);2:(1,1)", 0, 2), Error);   // eccentricity > r
    CHECK_THROWS_AS(ball_from_code("2;1:(2,9);2:(1,9)", 1, 2), Error);   // color out of palette
}

TEST_CASE("uncolored codes identify rooted isomorphic balls") {
    Graph c6 = make_cycle(6);
    BallCode first = canonical_code_uncolored(c6, 0, 1);
    for (Vertex v = 1; v < 6; ++v) CHECK(canonical_code_uncolored(c6, v, 1) == first);

    Graph p7 = make_path(7);
    CHECK(canonical_code_uncolored(p7, 3, 1) == first);  // both are 3-vertex paths

    Graph k4 = make_complete(4);
    CHECK(canonical_code_uncolored(k4, 0, 1) != first);
}

TEST_CASE("uncolored code guard") {
    Graph g = make_torus2d(8);
    CHECK_THROWS_WITH_AS(canonical_code_uncolored(g, 0, 3), doctest::Contains("BallTooLarge"),
                         Error);
}

TEST_CASE("uncolored code is a labeling invariant") {
    // stars and doubled paths have many symmetric labelings; all must agree
    Graph s5 = make_star(5);
    BallCode root_code = canonical_code_uncolored(s5, 0, 1);
    for (Vertex leaf = 1; leaf <= 5; ++leaf)
        CHECK(canonical_code_uncolored(s5, leaf, 2) != root_code);
    CHECK(canonical_code_uncolored(s5, 1, 2) == canonical_code_uncolored(s5, 4, 2));
}

TEST_CASE("census file round trip") {
    Graph g = random_connected_graph(24, 3, 3);
    EdgeColoring col = proper_edge_coloring(g);
    BallCensus c = census(g, col, 2);
    std::ostringstream out;
    write_census(out, c);
    CHECK(out.str().find("v1|") != std::string::npos);
    std::istringstream in(out.str());
    BallCensus back = read_census(in);
    CHECK(back.r == c.r);
    CHECK(back.d == c.d);
    CHECK(back.n == c.n);
    CHECK(back.counts == c.counts);
}
