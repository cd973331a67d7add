#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graphstat/graph.hpp"
#include "graphstat/rational.hpp"

namespace graphstat {

/// Connected induced set together with its exact boundary ratio.
struct GoodSet {
    VertexSet vertices;  // sorted
    int boundary_size = 0;
    Rational ratio;      // |boundary| / |vertices|

    int size() const { return static_cast<int>(vertices.size()); }
};

struct GoodSetStream {
    std::vector<GoodSet> sets;   // deterministic order
    long long visited = 0;       // subsets examined (emitted or not)
    bool truncated = false;      // budget ran out before completing
};

struct GoodSetFamily {
    std::vector<GoodSet> sets;
    bool disjoint = true;
    long long m_count = 0;
    Rational m_norm;  // m_count / n
    bool truncated = false;
};

struct CheegerResult {
    Rational value;
    VertexSet witness;
};

/// Exact |boundary(a)| / |a|. Throws EmptySet, NotConnected.
Rational boundary_ratio(const Graph& g, const VertexSet& a);

/// Minimum boundary ratio over connected induced sets of size <= n/2, by
/// exhaustive enumeration. Ties: smaller size, then lexicographic vertex
/// list. Guarded to n <= 18 (TooLarge).
CheegerResult cheeger_exact(const Graph& g);

/// Fiedler-vector sweep upper bound: every connected component of every
/// sweep prefix with size <= n/2 is a candidate. Guarded to n <= 4096.
CheegerResult cheeger_sweep(const Graph& g);

constexpr long long kDefaultEnumBudget = 10'000'000;

/// Every connected induced set with size <= k and ratio <= eps, each exactly
/// once (duplicate-free grow-from-minimum enumeration). The budget counts
/// visited subsets and is shared round-robin across root vertices so a
/// truncated run still covers the whole graph; truncation is reported, never
/// silent. Guard: k <= 30.
GoodSetStream enumerate_good_sets(const Graph& g, const Rational& eps, int k,
                                  long long budget = kDefaultEnumBudget);

/// Fraction of vertices covered by at least one enumerated good set.
Rational coverable_fraction(const Graph& g, const Rational& eps, int k,
                            long long budget = kDefaultEnumBudget);
Rational coverable_fraction(const GoodSetStream& stream, int n);

/// Greedy maximal disjoint family: candidates sorted by (ratio asc, size
/// desc, lexicographic vertices), accepted when disjoint from all accepted.
GoodSetFamily pack_greedy(const Graph& g, const Rational& eps, int k,
                          long long budget = kDefaultEnumBudget);
GoodSetFamily pack_greedy(const GoodSetStream& stream, int n);

/// Maximum-cardinality disjoint family by branch and bound. Guard: at most
/// 24 good sets or n <= 16 (TooLarge).
GoodSetFamily pack_exact(const Graph& g, const Rational& eps, int k,
                         long long budget = kDefaultEnumBudget);
GoodSetFamily pack_exact(const GoodSetStream& stream, const Graph& g);

/// Good-set report: JSON {eps, k, n, h_cover, m_norm, m_count, family, status}.
void write_goodset_report(std::ostream& out, const Graph& g, const Rational& eps, int k,
                          const GoodSetStream& stream, const GoodSetFamily& family);

}  // namespace graphstat
