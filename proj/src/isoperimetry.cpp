#include "graphstat/isoperimetry.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <fstream>
#include <limits>
#include <utility>

#include "json.hpp"

#include "graphstat/errors.hpp"
#include "graphstat/spectral.hpp"

namespace graphstat {

Rational boundary_ratio(const Graph& g, const VertexSet& a) {
    if (a.empty()) throw invalid_input("EmptySet", "boundary ratio of the empty set");
    if (!is_connected_induced(g, a))
        throw invalid_input("NotConnected", "boundary ratio requires an induced-connected set");
    VertexSet boundary = vertex_boundary(g, a);
    return Rational(static_cast<long long>(boundary.size()), static_cast<long long>(a.size()));
}

namespace {

// Duplicate-free enumeration of connected induced sets: grow from the
// minimum vertex, extension candidates enter once (exclusive-neighbor rule).
// Boundary size is maintained incrementally. The visitor sees every set at
// most max_size vertices exactly once; it returns false to stop everything.
//
// Extension lists live in one shared pool: a node owns pool[lo, pool.size())
// at entry, children append their exclusive neighbors past that and truncate
// on return, so no per-node copies are made.
struct ConnectedEnumerator {
    const Graph& g;
    int max_size;
    // state[v]: 0 untouched, 1 in set or already an extension candidate
    std::vector<char> state;
    std::vector<int> outside_nbrs;  // per vertex in set
    std::vector<char> in_set;
    std::vector<Vertex> set;
    std::vector<Vertex> pool;
    int boundary_size = 0;
    long long visited = 0;
    long long budget = 0;
    bool budget_hit = false;    // the node budget stopped the walk
    bool work_pending = false;  // and unexplored candidates remained

    ConnectedEnumerator(const Graph& graph, int k, long long node_budget)
        : g(graph), max_size(k), state(graph.n(), 0), outside_nbrs(graph.n(), 0),
          in_set(graph.n(), 0), budget(node_budget) {}

    template <typename Visitor>
    bool run_root(Vertex root, Visitor&& visit) {
        state[root] = 1;
        add_vertex(root);
        for (Vertex w : g.neighbors(root))
            if (w > root) {
                pool.push_back(w);
                state[w] = 1;
            }
        bool keep_going = extend(root, 0, visit);
        remove_vertex(root);
        state[root] = 0;
        for (Vertex w : pool) state[w] = 0;
        pool.clear();
        return keep_going;
    }

private:
    void add_vertex(Vertex w) {
        in_set[w] = 1;
        set.push_back(w);
        int outside = 0;
        for (Vertex y : g.neighbors(w)) {
            if (in_set[y]) {
                if (--outside_nbrs[y] == 0) --boundary_size;
            } else {
                ++outside;
            }
        }
        outside_nbrs[w] = outside;
        if (outside > 0) ++boundary_size;
    }

    void remove_vertex(Vertex w) {
        if (outside_nbrs[w] > 0) --boundary_size;
        outside_nbrs[w] = 0;
        set.pop_back();
        in_set[w] = 0;
        for (Vertex y : g.neighbors(w))
            if (in_set[y]) {
                if (outside_nbrs[y]++ == 0) ++boundary_size;
            }
    }

    template <typename Visitor>
    bool extend(Vertex root, std::size_t lo, Visitor&& visit) {
        ++visited;
        if (!visit(std::as_const(set), boundary_size)) return false;
        if (static_cast<int>(set.size()) == max_size) return true;
        const std::size_t hi = pool.size();
        if (visited >= budget) {
            budget_hit = true;
            if (lo < hi) work_pending = true;
            return true;
        }
        for (std::size_t cur = lo; cur < hi; ++cur) {
            Vertex w = pool[cur];
            // child candidates: the tail after cur plus w's exclusive neighbors
            for (Vertex y : g.neighbors(w))
                if (y > root && state[y] == 0) {
                    pool.push_back(y);
                    state[y] = 1;
                }
            add_vertex(w);
            bool keep_going = extend(root, cur + 1, visit);
            remove_vertex(w);
            while (pool.size() > hi) {
                state[pool.back()] = 0;
                pool.pop_back();
            }
            if (!keep_going) return false;
            if (budget_hit) {
                if (cur + 1 < hi) work_pending = true;
                return true;
            }
        }
        return true;
    }
};

GoodSet make_good_set(const std::vector<Vertex>& set, int boundary_size) {
    GoodSet gs;
    gs.vertices = set;
    std::sort(gs.vertices.begin(), gs.vertices.end());
    gs.boundary_size = boundary_size;
    gs.ratio = Rational(boundary_size, static_cast<long long>(set.size()));
    return gs;
}

}  // namespace

CheegerResult cheeger_exact(const Graph& g) {
    if (g.n() > 18)
        throw guard("TooLarge", "exact Cheeger constant limited to n <= 18, got " +
                                    std::to_string(g.n()));
    const int half = g.n() / 2;
    if (half < 1) throw invalid_input("BadParams", "graph too small for a Cheeger constant");
    CheegerResult best;
    bool found = false;
    ConnectedEnumerator en(g, half, std::numeric_limits<long long>::max());
    for (Vertex root = 0; root < g.n(); ++root) {
        en.run_root(root, [&](const std::vector<Vertex>& set, int boundary) {
            Rational ratio(boundary, static_cast<long long>(set.size()));
            if (!found) {
                best.value = ratio;
                best.witness = set;
                std::sort(best.witness.begin(), best.witness.end());
                found = true;
                return true;
            }
            if (ratio > best.value) return true;
            VertexSet sorted = set;
            std::sort(sorted.begin(), sorted.end());
            if (ratio < best.value || sorted.size() < best.witness.size() ||
                (sorted.size() == best.witness.size() && sorted < best.witness)) {
                best.value = ratio;
                best.witness = std::move(sorted);
            }
            return true;
        });
    }
    if (!found) throw internal("InternalError", "Cheeger enumeration found no candidate");
    return best;
}

CheegerResult cheeger_sweep(const Graph& g) {
    if (g.n() > 4096)
        throw guard("TooLarge", "Fiedler sweep limited to n <= 4096, got " + std::to_string(g.n()));
    if (g.n() < 2) throw invalid_input("BadParams", "graph too small for a Cheeger sweep");
    std::vector<double> fiedler = fiedler_vector(g);
    std::vector<Vertex> order(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (fiedler[a] != fiedler[b]) return fiedler[a] < fiedler[b];
        return a < b;
    });

    const int half = g.n() / 2;
    std::vector<char> in_prefix(g.n(), 0);
    CheegerResult best;
    bool found = false;
    std::vector<char> seen(g.n(), 0);
    for (int len = 1; len <= half; ++len) {
        in_prefix[order[len - 1]] = 1;
        // evaluate each connected component of the induced prefix; a
        // component member's neighbor outside the prefix is outside the
        // component, so the boundary falls out of the same BFS
        std::fill(seen.begin(), seen.end(), 0);
        for (int s = 0; s < len; ++s) {
            Vertex start = order[s];
            if (seen[start]) continue;
            VertexSet comp;
            int boundary = 0;
            std::deque<Vertex> q{start};
            seen[start] = 1;
            while (!q.empty()) {
                Vertex x = q.front();
                q.pop_front();
                comp.push_back(x);
                bool on_boundary = false;
                for (Vertex y : g.neighbors(x)) {
                    if (!in_prefix[y])
                        on_boundary = true;
                    else if (!seen[y]) {
                        seen[y] = 1;
                        q.push_back(y);
                    }
                }
                if (on_boundary) ++boundary;
            }
            std::sort(comp.begin(), comp.end());
            Rational ratio(boundary, static_cast<long long>(comp.size()));
            if (!found || ratio < best.value ||
                (ratio == best.value &&
                 (comp.size() < best.witness.size() ||
                  (comp.size() == best.witness.size() && comp < best.witness)))) {
                best.value = ratio;
                best.witness = std::move(comp);
                found = true;
            }
        }
    }
    if (!found) throw internal("InternalError", "sweep found no candidate");
    return best;
}

GoodSetStream enumerate_good_sets(const Graph& g, const Rational& eps, int k, long long budget) {
    if (k < 1) throw invalid_input("BadParams", "k must be >= 1");
    if (k > 30) throw guard("TooLarge", "good-set enumeration limited to k <= 30");
    if (eps < 0) throw invalid_input("BadParams", "eps must be nonnegative");
    if (budget < 1) throw invalid_input("BadParams", "budget must be >= 1");

    GoodSetStream out;
    const BigInt eps_num = numerator(eps);
    const BigInt eps_den = denominator(eps);
    // int64 fast path for the per-node ratio test; boundary and size stay
    // below 2^13 so products with parameters below 2^40 cannot overflow
    const bool small_eps = eps_num < (BigInt(1) << 40) && eps_den < (BigInt(1) << 40);
    const long long num64 = small_eps ? eps_num.convert_to<long long>() : 0;
    const long long den64 = small_eps ? eps_den.convert_to<long long>() : 0;
    auto is_good = [&](long long boundary, long long size) {
        if (small_eps) return boundary * den64 <= num64 * size;
        return BigInt(boundary) * eps_den <= eps_num * BigInt(size);
    };

    // Round-robin budget split: each root gets an equal share of what is
    // left, so a truncated enumeration still sees candidates near every
    // vertex instead of exhausting the budget in one corner.
    long long remaining = budget;
    for (Vertex root = 0; root < g.n(); ++root) {
        if (remaining <= 0) {
            out.truncated = true;  // later roots never ran
            break;
        }
        long long slice = remaining / (g.n() - root);
        if (slice < 1) slice = 1;
        ConnectedEnumerator en(g, k, slice);
        en.run_root(root, [&](const std::vector<Vertex>& set, int boundary) {
            if (is_good(boundary, static_cast<long long>(set.size())))
                out.sets.push_back(make_good_set(set, boundary));
            return true;
        });
        out.visited += en.visited;
        out.truncated = out.truncated || en.work_pending;
        remaining -= en.visited;
    }
    return out;
}

Rational coverable_fraction(const GoodSetStream& stream, int n) {
    std::vector<char> covered(n, 0);
    long long count = 0;
    for (const GoodSet& gs : stream.sets)
        for (Vertex v : gs.vertices)
            if (!covered[v]) {
                covered[v] = 1;
                ++count;
            }
    return Rational(count, static_cast<long long>(n));
}

Rational coverable_fraction(const Graph& g, const Rational& eps, int k, long long budget) {
    return coverable_fraction(enumerate_good_sets(g, eps, k, budget), g.n());
}

namespace {

// (ratio asc, size desc, lexicographic vertex list); ratios are compared by
// int64 cross-multiplication, which is exact here (boundary, size <= n)
bool candidate_before(const GoodSet& a, const GoodSet& b) {
    const long long lhs = static_cast<long long>(a.boundary_size) * b.size();
    const long long rhs = static_cast<long long>(b.boundary_size) * a.size();
    if (lhs != rhs) return lhs < rhs;
    if (a.size() != b.size()) return a.size() > b.size();
    return a.vertices < b.vertices;
}

// Index sort: candidate streams can run into the millions, so never copy or
// move the sets while ordering them.
std::vector<std::size_t> candidate_order(const std::vector<GoodSet>& sets) {
    std::vector<std::size_t> order(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return candidate_before(sets[i], sets[j]);
    });
    return order;
}

}  // namespace

GoodSetFamily pack_greedy(const GoodSetStream& stream, int n) {
    GoodSetFamily fam;
    fam.truncated = stream.truncated;
    std::vector<char> used(n, 0);
    for (std::size_t idx : candidate_order(stream.sets)) {
        const GoodSet& gs = stream.sets[idx];
        bool free_of_overlap = true;
        for (Vertex v : gs.vertices)
            if (used[v]) {
                free_of_overlap = false;
                break;
            }
        if (!free_of_overlap) continue;
        for (Vertex v : gs.vertices) used[v] = 1;
        fam.sets.push_back(gs);
    }
    fam.m_count = static_cast<long long>(fam.sets.size());
    fam.m_norm = Rational(fam.m_count, static_cast<long long>(n));
    return fam;
}

GoodSetFamily pack_greedy(const Graph& g, const Rational& eps, int k, long long budget) {
    return pack_greedy(enumerate_good_sets(g, eps, k, budget), g.n());
}

GoodSetFamily pack_exact(const GoodSetStream& stream, const Graph& g) {
    if (stream.sets.size() > 24 && g.n() > 16)
        throw guard("TooLarge", "exact packing limited to <= 24 good sets or n <= 16, got " +
                                    std::to_string(stream.sets.size()) + " sets, n=" +
                                    std::to_string(g.n()));
    std::vector<std::size_t> order = candidate_order(stream.sets);
    std::vector<GoodSet> candidates;
    candidates.reserve(order.size());
    for (std::size_t idx : order) candidates.push_back(stream.sets[idx]);
    const int m = static_cast<int>(candidates.size());
    const int words = (g.n() + 63) / 64;
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(m) * words, 0);
    for (int i = 0; i < m; ++i)
        for (Vertex v : candidates[i].vertices)
            masks[static_cast<std::size_t>(i) * words + v / 64] |= 1ULL << (v % 64);

    std::vector<int> best_pick, pick;
    std::vector<std::uint64_t> taken(words, 0);
    long long nodes = 0;
    const long long node_cap = 50'000'000;
    auto search = [&](auto&& self, int idx) -> void {
        if (++nodes > node_cap)
            throw guard("TooLarge", "exact packing search exceeded its node cap");
        if (static_cast<int>(pick.size()) + (m - idx) <= static_cast<int>(best_pick.size()))
            return;
        if (idx == m) {
            if (pick.size() > best_pick.size()) best_pick = pick;
            return;
        }
        const std::uint64_t* mask = &masks[static_cast<std::size_t>(idx) * words];
        bool fits = true;
        for (int w = 0; w < words; ++w)
            if (mask[w] & taken[w]) {
                fits = false;
                break;
            }
        if (fits) {
            for (int w = 0; w < words; ++w) taken[w] |= mask[w];
            pick.push_back(idx);
            self(self, idx + 1);
            pick.pop_back();
            for (int w = 0; w < words; ++w) taken[w] &= ~mask[w];
        }
        self(self, idx + 1);
    };
    search(search, 0);

    GoodSetFamily fam;
    fam.truncated = stream.truncated;
    for (int idx : best_pick) fam.sets.push_back(candidates[idx]);
    fam.m_count = static_cast<long long>(fam.sets.size());
    fam.m_norm = Rational(fam.m_count, static_cast<long long>(g.n()));
    return fam;
}

GoodSetFamily pack_exact(const Graph& g, const Rational& eps, int k, long long budget) {
    return pack_exact(enumerate_good_sets(g, eps, k, budget), g);
}

void write_goodset_report(std::ostream& out, const Graph& g, const Rational& eps, int k,
                          const GoodSetStream& stream, const GoodSetFamily& family) {
    nlohmann::json j;
    j["eps"] = rat_str(eps);
    j["k"] = k;
    j["n"] = g.n();
    j["h_cover"] = rat_str(coverable_fraction(stream, g.n()));
    j["m_norm"] = rat_str(family.m_norm);
    j["m_count"] = family.m_count;
    auto fam = nlohmann::json::array();
    for (const GoodSet& gs : family.sets) fam.push_back(gs.vertices);
    j["family"] = std::move(fam);
    j["status"] = stream.truncated ? "BudgetExceeded" : "OK";
    out << j.dump(2) << "\n";
}

}  // namespace graphstat
