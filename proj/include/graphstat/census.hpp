#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graphstat/coloring.hpp"
#include "graphstat/graph.hpp"
#include "graphstat/rational.hpp"

namespace graphstat {

/// Canonically labeled rooted colored ball of radius r.
///
/// Labels are 0-based internally; serialized codes print them 1-based with the
/// root as label 1. Labels are nondecreasing with distance from the root and
/// within a vertex the incident colors are pairwise distinct.
struct RootedBall {
    int k = 0;       // vertex count
    int radius = 0;  // declared extraction radius
    int d = 0;       // degree bound
    // adj[label] = (neighbor label, edge color), sorted by color
    std::vector<std::vector<std::pair<int, int>>> adj;
    std::vector<int> dist;  // distance from the root, per label
};

using BallCode = std::string;

/// Deterministic labeling: breadth-first from the root, FIFO layer order,
/// unvisited neighbors taken in increasing incident-edge-color order.
RootedBall extract_rooted_ball(const Graph& g, const EdgeColoring& col, Vertex v, int r);

/// "k;1:(2,1),(3,2);2:(1,1);3:(1,2)" - labels 1-based, neighbor pairs sorted
/// by color. Equal codes iff the balls are rooted-color-isomorphic.
BallCode canonical_code(const RootedBall& b);

/// Inverse of canonical_code; revalidates every ball invariant and throws
/// InvariantViolation on failure.
RootedBall ball_from_code(const BallCode& code, int r, int d);

/// Distribution of canonical ball codes over all n root choices.
struct BallCensus {
    int r = 0;
    int d = 0;
    long long n = 0;
    std::map<BallCode, long long> counts;

    Rational probability(const BallCode& code) const;
};

/// threads = 0 picks hardware concurrency; the merged result is bit-identical
/// to the sequential one for any thread count.
BallCensus census(const Graph& g, const EdgeColoring& col, int r, int threads = 0);

/// (1/2) sum |p_a - p_b| over the union of codes. Throws RadiusMismatch.
Rational tv_distance(const BallCensus& a, const BallCensus& b);

/// Coloring-free canonical code: lexicographic minimum over all
/// distance-monotone labelings, found by branch and bound. Guarded to balls
/// of at most 20 vertices (BallTooLarge).
BallCode canonical_code_uncolored(const Graph& g, Vertex v, int r);

// Census file: JSON {r, d, n, classes:[{code, count}...]} sorted by code;
// codes carry a "v1|" version tag in files only.
void write_census(std::ostream& out, const BallCensus& c);
BallCensus read_census(std::istream& in);
void save_census(const std::string& path, const BallCensus& c);
BallCensus load_census(const std::string& path);

}  // namespace graphstat
