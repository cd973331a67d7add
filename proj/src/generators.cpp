#include "graphstat/generators.hpp"

#include <algorithm>
#include <random>

#include "graphstat/errors.hpp"

namespace graphstat {

Family family_from_name(const std::string& name) {
    if (name == "cycle") return Family::cycle;
    if (name == "torus2d") return Family::torus2d;
    if (name == "random_regular") return Family::random_regular;
    if (name == "binary_tree") return Family::binary_tree;
    if (name == "from_files") return Family::from_files;
    throw invalid_input("BadParams", "unknown family '" + name + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::cycle: return "cycle";
        case Family::torus2d: return "torus2d";
        case Family::random_regular: return "random_regular";
        case Family::binary_tree: return "binary_tree";
        case Family::from_files: return "from_files";
    }
    return "?";
}

std::size_t SequenceSpec::members() const {
    return family == Family::from_files ? graph_files.size() : sizes.size();
}

void SequenceSpec::validate() const {
    if (family == Family::from_files) {
        if (graph_files.empty()) throw invalid_input("BadParams", "from_files needs graph files");
        if (!coloring_files.empty() && coloring_files.size() != graph_files.size())
            throw invalid_input("BadParams", "coloring file count must match graph file count");
        return;
    }
    if (sizes.empty()) throw invalid_input("BadParams", "sequence needs at least one size");
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1])
            throw invalid_input("BadParams", "sequence sizes must be strictly increasing");
    if (family == Family::random_regular && d < 1)
        throw invalid_input("BadParams", "random_regular needs d >= 1");
}

std::uint64_t member_seed(std::uint64_t master, std::size_t index) {
    return master ^ (static_cast<std::uint64_t>(index) * 0x9e3779b97f4a7c15ULL);
}

Graph make_cycle(long long n) {
    if (n < 3) throw invalid_input("BadParams", "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (long long i = 0; i + 1 < n; ++i)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    edges.push_back({0, static_cast<Vertex>(n - 1)});
    return Graph::build(static_cast<int>(n), std::move(edges), 2);
}

EdgeColoring cycle_coloring(const Graph& g) {
    const int n = g.n();
    EdgeColoring col;
    col.by_edge.resize(g.m());
    for (int i = 0; i < g.m(); ++i) {
        const Edge& e = g.edges()[i];
        if (e.u == 0 && e.v == n - 1)
            col.by_edge[i] = (n % 2 == 0) ? 2 : 3;  // wrap edge
        else
            col.by_edge[i] = e.u % 2 + 1;  // alternate 1,2 along the path
    }
    verify_coloring(g, col);
    return col;
}

Graph make_torus2d(long long side) {
    if (side < 3) throw invalid_input("BadParams", "torus2d needs side >= 3");
    const long long n = side * side;
    auto id = [side](long long r, long long c) {
        return static_cast<Vertex>(((r + side) % side) * side + (c + side) % side);
    };
    std::vector<Edge> edges;
    for (long long r = 0; r < side; ++r)
        for (long long c = 0; c < side; ++c) {
            edges.push_back({id(r, c), id(r, c + 1)});
            edges.push_back({id(r, c), id(r + 1, c)});
        }
    for (Edge& e : edges)
        if (e.u > e.v) std::swap(e.u, e.v);
    return Graph::build(static_cast<int>(n), std::move(edges), 4);
}

EdgeColoring torus2d_coloring(const Graph& g, long long side) {
    // even side: horizontal edges alternate 1/2 by column, vertical edges 3/4
    // by row -- translation invariant, so all vertices share one ball class
    if (side % 2 != 0) return proper_edge_coloring(g);
    EdgeColoring col;
    col.by_edge.resize(g.m());
    for (int i = 0; i < g.m(); ++i) {
        const Edge& e = g.edges()[i];
        long long r1 = e.u / side, c1 = e.u % side;
        long long r2 = e.v / side, c2 = e.v % side;
        if (r1 == r2) {
            // horizontal; the wrap pair (c=0, c=side-1) is the side-1 edge
            long long c = (std::abs(c1 - c2) == 1) ? std::min(c1, c2) : side - 1;
            col.by_edge[i] = static_cast<int>(c % 2) + 1;
        } else {
            long long r = (std::abs(r1 - r2) == 1) ? std::min(r1, r2) : side - 1;
            col.by_edge[i] = static_cast<int>(r % 2) + 3;
        }
    }
    verify_coloring(g, col);
    return col;
}

Graph make_random_regular(int d, long long n, std::uint64_t seed) {
    if (d < 1 || n <= d) throw invalid_input("BadParams", "random_regular needs 1 <= d < n");
    if ((d * n) % 2 != 0)
        throw invalid_input("BadParams", "random_regular needs d*n even");
    std::mt19937_64 rng(seed);
    const int max_retries = 1000;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        // configuration model: shuffle half-edges, pair consecutively
        std::vector<Vertex> stubs;
        stubs.reserve(d * n);
        for (long long v = 0; v < n; ++v)
            for (int j = 0; j < d; ++j) stubs.push_back(static_cast<Vertex>(v));
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
            std::swap(stubs[i], stubs[j]);
        }
        bool simple = true;
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            Vertex u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                simple = false;
                break;
            }
            if (u > v) std::swap(u, v);
            edges.push_back({u, v});
        }
        if (!simple) continue;
        std::sort(edges.begin(), edges.end());
        bool has_dup = false;
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (edges[i] == edges[i - 1]) {
                has_dup = true;
                break;
            }
        if (has_dup) continue;
        Graph g = Graph::build(static_cast<int>(n), std::move(edges), d);
        if (!is_connected(g)) continue;
        return g;
    }
    throw guard("RetriesExhausted", "no simple connected pairing after " +
                                        std::to_string(max_retries) + " attempts");
}

Graph make_binary_tree(long long depth) {
    if (depth < 0) throw invalid_input("BadParams", "binary_tree needs depth >= 0");
    if (depth > 20) throw guard("TooLarge", "binary_tree depth limited to 20");
    const long long n = (1LL << (depth + 1)) - 1;
    std::vector<Edge> edges;
    for (long long v = 0; 2 * v + 2 < n; ++v) {
        edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(2 * v + 1)});
        edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(2 * v + 2)});
    }
    return Graph::build(static_cast<int>(n), std::move(edges), 3);
}

Member generate(const SequenceSpec& spec, std::size_t index) {
    spec.validate();
    if (index >= spec.members())
        throw invalid_input("BadParams", "member index out of range");
    switch (spec.family) {
        case Family::cycle: {
            Graph g = make_cycle(spec.sizes[index]);
            EdgeColoring col = cycle_coloring(g);
            return {std::move(g), std::move(col)};
        }
        case Family::torus2d: {
            Graph g = make_torus2d(spec.sizes[index]);
            EdgeColoring col = torus2d_coloring(g, spec.sizes[index]);
            return {std::move(g), std::move(col)};
        }
        case Family::random_regular: {
            Graph g = make_random_regular(spec.d, spec.sizes[index],
                                          member_seed(spec.seed, index));
            EdgeColoring col = proper_edge_coloring(g);
            return {std::move(g), std::move(col)};
        }
        case Family::binary_tree: {
            Graph g = make_binary_tree(spec.sizes[index]);
            EdgeColoring col = proper_edge_coloring(g);
            return {std::move(g), std::move(col)};
        }
        case Family::from_files: {
            Graph g = load_graph(spec.graph_files[index], /*require_connected=*/true);
            EdgeColoring col = spec.coloring_files.empty()
                                   ? proper_edge_coloring(g)
                                   : load_coloring(spec.coloring_files[index], g);
            return {std::move(g), std::move(col)};
        }
    }
    throw internal("InternalError", "unreachable family");
}

}  // namespace graphstat
