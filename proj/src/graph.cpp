#include "graphstat/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "graphstat/errors.hpp"

namespace graphstat {

Graph Graph::build(int n, std::vector<Edge> edges, int d, bool require_connected) {
    if (n <= 0) throw invalid_input("BadParams", "vertex count must be positive");
    if (d < 0) throw invalid_input("BadParams", "degree bound must be nonnegative");

    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw invalid_input("BadVertex", "edge endpoint out of range");
        if (e.u == e.v) throw invalid_input("SelfLoop", "self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw invalid_input("DuplicateEdge", "duplicate edge {" + std::to_string(edges[i].u) +
                                                     "," + std::to_string(edges[i].v) + "}");

    Graph g;
    g.n_ = n;
    g.d_ = d;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    g.edge_ids_.assign(n, {});
    for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
        const Edge& e = g.edges_[i];
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
        g.edge_ids_[e.u].push_back(i);
        g.edge_ids_[e.v].push_back(i);
    }
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > d)
            throw invalid_input("DegreeExceeded",
                                "vertex " + std::to_string(v) + " has degree " +
                                    std::to_string(g.degree(v)) + " > d=" + std::to_string(d));
        // lex edge order already leaves adjacency sorted for the smaller
        // endpoint only; sort both together
        std::vector<int> order(g.adj_[v].size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return g.adj_[v][a] < g.adj_[v][b]; });
        std::vector<Vertex> na(order.size());
        std::vector<int> ne(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            na[i] = g.adj_[v][order[i]];
            ne[i] = g.edge_ids_[v][order[i]];
        }
        g.adj_[v] = std::move(na);
        g.edge_ids_[v] = std::move(ne);
    }
    if (require_connected && !is_connected(g))
        throw invalid_input("Disconnected", "graph is not connected");
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_index(Vertex u, Vertex v) const {
    const auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) return -1;
    return edge_ids_[u][it - a.begin()];
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return false;
    std::vector<char> seen(g.n(), 0);
    std::deque<Vertex> q{0};
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        for (Vertex y : g.neighbors(x))
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                q.push_back(y);
            }
    }
    return count == g.n();
}

BallResult bfs_ball(const Graph& g, Vertex v, int r) {
    if (v < 0 || v >= g.n()) throw invalid_input("BadVertex", "root out of range");
    if (r < 0) throw invalid_input("BadParams", "radius must be nonnegative");
    BallResult res;
    res.dist.assign(g.n(), -1);
    res.dist[v] = 0;
    res.vertices.push_back(v);
    std::deque<Vertex> q{v};
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        if (res.dist[x] == r) continue;
        for (Vertex y : g.neighbors(x))
            if (res.dist[y] < 0) {
                res.dist[y] = res.dist[x] + 1;
                res.vertices.push_back(y);
                q.push_back(y);
            }
    }
    std::sort(res.vertices.begin(), res.vertices.end());
    return res;
}

namespace {

void check_vertex_set(const Graph& g, const VertexSet& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || a[i] >= g.n()) throw invalid_input("BadVertex", "set member out of range");
        if (i > 0 && a[i] <= a[i - 1])
            throw invalid_input("BadVertexSet", "vertex set must be sorted and duplicate-free");
    }
}

}  // namespace

VertexSet vertex_boundary(const Graph& g, const VertexSet& a) {
    check_vertex_set(g, a);
    std::vector<char> in(g.n(), 0);
    for (Vertex x : a) in[x] = 1;
    VertexSet out;
    for (Vertex x : a)
        for (Vertex y : g.neighbors(x))
            if (!in[y]) {
                out.push_back(x);
                break;
            }
    return out;
}

bool is_connected_induced(const Graph& g, const VertexSet& a) {
    if (a.empty()) throw invalid_input("EmptySet", "induced connectivity of the empty set");
    check_vertex_set(g, a);
    std::vector<char> in(g.n(), 0);
    for (Vertex x : a) in[x] = 1;
    std::vector<char> seen(g.n(), 0);
    std::deque<Vertex> q{a[0]};
    seen[a[0]] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        for (Vertex y : g.neighbors(x))
            if (in[y] && !seen[y]) {
                seen[y] = 1;
                ++count;
                q.push_back(y);
            }
    }
    return count == a.size();
}

namespace {

// Strips '#' comments and blank lines, yields whitespace tokens.
std::vector<std::string> tokenize_data(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

long long parse_ll(const std::string& tok, const char* what) {
    try {
        std::size_t pos = 0;
        long long value = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw invalid_input("BadFormat", std::string("cannot parse ") + what + " '" + tok + "'");
    }
}

}  // namespace

Graph read_graph(std::istream& in, bool require_connected) {
    auto tokens = tokenize_data(in);
    if (tokens.size() < 3) throw invalid_input("BadFormat", "graph file: missing 'n m d' header");
    long long n = parse_ll(tokens[0], "n");
    long long m = parse_ll(tokens[1], "m");
    long long d = parse_ll(tokens[2], "d");
    if (n <= 0 || m < 0 || d < 0) throw invalid_input("BadFormat", "graph file: bad header values");
    if (static_cast<long long>(tokens.size()) != 3 + 2 * m)
        throw invalid_input("BadFormat", "graph file: expected " + std::to_string(2 * m) +
                                             " edge tokens, found " +
                                             std::to_string(tokens.size() - 3));
    std::vector<Edge> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        long long u = parse_ll(tokens[3 + 2 * i], "edge endpoint");
        long long v = parse_ll(tokens[4 + 2 * i], "edge endpoint");
        if (u >= v) throw invalid_input("BadFormat", "graph file: edges must satisfy u < v");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return Graph::build(static_cast<int>(n), std::move(edges), static_cast<int>(d),
                        require_connected);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << " " << g.m() << " " << g.degree_bound() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

Graph load_graph(const std::string& path, bool require_connected) {
    std::ifstream in(path);
    if (!in) throw invalid_input("FileError", "cannot open '" + path + "'");
    return read_graph(in, require_connected);
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw invalid_input("FileError", "cannot write '" + path + "'");
    write_graph(out, g);
}

}  // namespace graphstat
