#pragma once

// Shared test fixtures and independent oracles. Everything here recomputes
// expected values from first principles (bitmask enumeration, closed forms,
// dense matrix powers) so the library paths they check stay honest.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "graphstat/coloring.hpp"
#include "graphstat/generators.hpp"
#include "graphstat/graph.hpp"
#include "graphstat/rational.hpp"

namespace testutil {

using namespace graphstat;

inline Graph make_path(int n, int d = 2) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::build(n, std::move(edges), d);
}

inline Graph make_complete(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::build(n, std::move(edges), n - 1);
}

inline Graph make_star(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph::build(leaves + 1, std::move(edges), leaves);
}

// Random connected graph with max degree <= d: random spanning tree under
// the degree cap plus extra random edges. Deterministic per seed.
inline Graph random_connected_graph(int n, int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> degree(n, 0);
    std::vector<Edge> edges;
    auto has_edge = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return std::find(edges.begin(), edges.end(), Edge{u, v}) != edges.end();
    };
    for (int v = 1; v < n; ++v) {
        // attach to an earlier vertex with spare degree; d >= 2 guarantees
        // one exists
        int u = -1;
        for (int tries = 0; tries < 4 * n && u < 0; ++tries) {
            int c = static_cast<int>(rng() % v);
            if (degree[c] < d) u = c;
        }
        for (int c = 0; u < 0 && c < v; ++c)
            if (degree[c] < d) u = c;
        edges.push_back({std::min(u, v), std::max(u, v)});
        ++degree[u];
        ++degree[v];
    }
    int extra = n * d / 4;
    for (int t = 0; t < extra; ++t) {
        int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % n);
        if (u == v) continue;
        if (degree[u] >= d || degree[v] >= d) continue;
        if (has_edge(u, v)) continue;
        edges.push_back({std::min(u, v), std::max(u, v)});
        ++degree[u];
        ++degree[v];
    }
    return Graph::build(n, std::move(edges), d);
}

// ---- oracles ----

inline bool mask_connected(const Graph& g, unsigned mask) {
    if (mask == 0) return false;
    int start = std::countr_zero(mask);
    unsigned seen = 1u << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : g.neighbors(x)) {
            unsigned bit = 1u << y;
            if ((mask & bit) && !(seen & bit)) {
                seen |= bit;
                stack.push_back(y);
            }
        }
    }
    return seen == mask;
}

inline int mask_boundary(const Graph& g, unsigned mask) {
    int b = 0;
    for (int x = 0; x < g.n(); ++x) {
        if (!(mask & (1u << x))) continue;
        for (int y : g.neighbors(x))
            if (!(mask & (1u << y))) {
                ++b;
                break;
            }
    }
    return b;
}

inline VertexSet mask_vertices(unsigned mask, int n) {
    VertexSet out;
    for (int x = 0; x < n; ++x)
        if (mask & (1u << x)) out.push_back(x);
    return out;
}

// Exhaustive Cheeger constant over all connected subsets with |A| <= n/2.
inline std::pair<Rational, VertexSet> oracle_cheeger(const Graph& g) {
    const int n = g.n();
    Rational best;
    VertexSet witness;
    bool found = false;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > n / 2) continue;
        if (!mask_connected(g, mask)) continue;
        Rational ratio(mask_boundary(g, mask), std::popcount(mask));
        VertexSet vs = mask_vertices(mask, n);
        if (!found || ratio < best ||
            (ratio == best && (vs.size() < witness.size() ||
                               (vs.size() == witness.size() && vs < witness)))) {
            best = ratio;
            witness = vs;
            found = true;
        }
    }
    return {best, witness};
}

// Exhaustive good sets: connected, |A| <= k, ratio <= eps.
inline std::vector<VertexSet> oracle_good_sets(const Graph& g, const Rational& eps, int k) {
    std::vector<VertexSet> out;
    for (unsigned mask = 1; mask < (1u << g.n()); ++mask) {
        int size = std::popcount(mask);
        if (size > k) continue;
        if (!mask_connected(g, mask)) continue;
        if (Rational(mask_boundary(g, mask), size) <= eps) out.push_back(mask_vertices(mask, g.n()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Exhaustive maximum disjoint subfamily size over an explicit good-set list.
inline int oracle_max_packing(const std::vector<VertexSet>& sets) {
    int m = static_cast<int>(sets.size());
    int best = 0;
    for (unsigned pick = 0; pick < (1u << m); ++pick) {
        std::vector<char> used(64, 0);
        bool ok = true;
        int count = 0;
        for (int i = 0; i < m && ok; ++i) {
            if (!(pick & (1u << i))) continue;
            ++count;
            for (int v : sets[i]) {
                if (used[v]) {
                    ok = false;
                    break;
                }
                used[v] = 1;
            }
        }
        if (ok) best = std::max(best, count);
    }
    return best;
}

// Laplacian eigenvalues of the n-cycle: 2 - 2cos(2 pi k / n).
inline std::vector<double> cycle_spectrum(long long n) {
    std::vector<double> values;
    for (long long k = 0; k < n; ++k)
        values.push_back(2.0 - 2.0 * std::cos(2.0 * M_PI * static_cast<double>(k) / n));
    std::sort(values.begin(), values.end());
    return values;
}

// Dense big-integer matrix power route: Tr(Delta^p)/n with no shortcuts.
inline Rational oracle_moment(const Graph& g, int p) {
    const int n = g.n();
    std::vector<BigInt> delta(static_cast<std::size_t>(n) * n, BigInt(0));
    for (int v = 0; v < n; ++v) {
        delta[static_cast<std::size_t>(v) * n + v] = g.degree(v);
        for (int w : g.neighbors(v)) delta[static_cast<std::size_t>(v) * n + w] = -1;
    }
    std::vector<BigInt> acc(static_cast<std::size_t>(n) * n, BigInt(0));
    for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i) * n + i] = 1;
    for (int step = 0; step < p; ++step) {
        std::vector<BigInt> next(static_cast<std::size_t>(n) * n, BigInt(0));
        for (int i = 0; i < n; ++i)
            for (int kk = 0; kk < n; ++kk) {
                const BigInt& aik = acc[static_cast<std::size_t>(i) * n + kk];
                if (aik == 0) continue;
                for (int j = 0; j < n; ++j)
                    next[static_cast<std::size_t>(i) * n + j] +=
                        aik * delta[static_cast<std::size_t>(kk) * n + j];
            }
        acc = std::move(next);
    }
    BigInt trace(0);
    for (int i = 0; i < n; ++i) trace += acc[static_cast<std::size_t>(i) * n + i];
    return Rational(trace, BigInt(n));
}

// Mixed bag of small colored graphs for identity/property sweeps.
struct NamedMember {
    std::string name;
    Graph graph;
    EdgeColoring coloring;
};

inline std::vector<NamedMember> mixed_family_matrix(std::uint64_t seed, int count) {
    std::vector<NamedMember> out;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        switch (i % 5) {
            case 0: {
                long long n = 6 + static_cast<long long>(rng() % 200);
                Graph g = make_cycle(n);
                out.push_back({"cycle" + std::to_string(n), g, cycle_coloring(g)});
                break;
            }
            case 1: {
                long long s = 3 + static_cast<long long>(rng() % 8);
                Graph g = make_torus2d(s);
                out.push_back({"torus" + std::to_string(s), g, torus2d_coloring(g, s)});
                break;
            }
            case 2: {
                // d <= 4: the configuration model's simplicity rejection rate
                // at d = 5 can exhaust the 1000-retry cap on small n
                int d = 3 + static_cast<int>(rng() % 2);
                long long n = 2 * (5 + static_cast<long long>(rng() % 60));  // even, so d*n is even
                Graph g = make_random_regular(d, n, rng());
                out.push_back({"reg" + std::to_string(d) + "_" + std::to_string(n), g,
                               proper_edge_coloring(g)});
                break;
            }
            case 3: {
                long long depth = 2 + static_cast<long long>(rng() % 5);
                Graph g = make_binary_tree(depth);
                out.push_back({"tree" + std::to_string(depth), g, proper_edge_coloring(g)});
                break;
            }
            default: {
                int d = 3 + static_cast<int>(rng() % 3);
                int n = 8 + static_cast<int>(rng() % 150);
                Graph g = random_connected_graph(n, d, rng());
                out.push_back({"rand" + std::to_string(n), g, proper_edge_coloring(g)});
                break;
            }
        }
    }
    return out;
}

}  // namespace testutil
