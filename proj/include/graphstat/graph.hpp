#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace graphstat {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Undirected edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with a declared degree bound d.
///
/// Vertices are 0..n-1, adjacency lists are sorted, the edge list is kept in
/// lexicographic order so that two graphs built from permuted edge lists
/// compare equal. Immutable after construction.
class Graph {
public:
    /// Validates and normalizes. Throws SelfLoop, DuplicateEdge,
    /// DegreeExceeded, Disconnected (the latter only with require_connected).
    static Graph build(int n, std::vector<Edge> edges, int d, bool require_connected = false);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    int degree_bound() const { return d_; }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(Vertex u, Vertex v) const;
    /// Index of {u,v} in edges(), or -1 if absent.
    int edge_index(Vertex u, Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph() = default;
    int n_ = 0;
    int d_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    // edge_ids_[v][i] = index into edges_ of {v, adj_[v][i]}
    std::vector<std::vector<int>> edge_ids_;
};

bool is_connected(const Graph& g);

struct BallResult {
    VertexSet vertices;      // sorted
    std::vector<int> dist;   // size n, -1 outside the ball
};

/// All vertices at shortest-path distance <= r from v, with exact distances.
BallResult bfs_ball(const Graph& g, Vertex v, int r);

/// Members of `a` having at least one neighbor outside `a`. `a` must be sorted.
VertexSet vertex_boundary(const Graph& g, const VertexSet& a);

/// True iff the induced subgraph on `a` is connected. Throws EmptySet.
bool is_connected_induced(const Graph& g, const VertexSet& a);

// Text format: '#' comment lines, then "n m d", then m lines "u v" with u < v.
Graph read_graph(std::istream& in, bool require_connected = false);
void write_graph(std::ostream& out, const Graph& g);
Graph load_graph(const std::string& path, bool require_connected = false);
void save_graph(const std::string& path, const Graph& g);

}  // namespace graphstat
