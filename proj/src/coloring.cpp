#include "graphstat/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "graphstat/errors.hpp"

namespace graphstat {

int EdgeColoring::color_of(const Graph& g, Vertex u, Vertex v) const {
    int idx = g.edge_index(u, v);
    if (idx < 0) throw invalid_input("BadEdge", "no such edge");
    return by_edge[idx];
}

int EdgeColoring::colors_used() const {
    std::vector<int> sorted(by_edge);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return static_cast<int>(sorted.size());
}

namespace {

// Working state for Misra-Gries: color 0 means "uncolored".
struct MGState {
    const Graph& g;
    int palette;                          // colors 1..palette
    std::vector<int> edge_color;          // per edge index
    std::vector<std::vector<int>> at;     // at[v][c-1] = neighbor joined to v by color c, or -1

    explicit MGState(const Graph& graph)
        : g(graph),
          palette(graph.degree_bound() + 1),
          edge_color(graph.m(), 0),
          at(graph.n(), std::vector<int>(palette, -1)) {}

    bool is_free(Vertex v, int c) const { return at[v][c - 1] < 0; }

    int smallest_free(Vertex v) const {
        for (int c = 1; c <= palette; ++c)
            if (is_free(v, c)) return c;
        throw internal("InternalError", "no free color at vertex " + std::to_string(v));
    }

    void set_color(Vertex u, Vertex v, int c) {
        int idx = g.edge_index(u, v);
        int old = edge_color[idx];
        if (old != 0) {
            at[u][old - 1] = -1;
            at[v][old - 1] = -1;
        }
        edge_color[idx] = c;
        if (c != 0) {
            at[u][c - 1] = v;
            at[v][c - 1] = u;
        }
    }

    int color(Vertex u, Vertex v) const { return edge_color[g.edge_index(u, v)]; }

    // Maximal fan of u starting at v: distinct neighbors f1..fk with (u,f1)
    // uncolored and color(u, f_{i+1}) free on f_i. Extension picks the
    // smallest qualifying color, so the fan is deterministic.
    std::vector<Vertex> maximal_fan(Vertex u, Vertex v) const {
        std::vector<Vertex> fan{v};
        std::vector<char> in_fan(g.n(), 0);
        in_fan[v] = 1;
        bool extended = true;
        while (extended) {
            extended = false;
            Vertex last = fan.back();
            for (int c = 1; c <= palette; ++c) {
                if (!is_free(last, c)) continue;
                Vertex next = at[u][c - 1];
                if (next >= 0 && !in_fan[next]) {
                    fan.push_back(next);
                    in_fan[next] = 1;
                    extended = true;
                    break;
                }
            }
        }
        return fan;
    }

    // Flip colors c <-> d along the maximal alternating path starting at u.
    // Afterwards d is free on u (c was free on u before). Collect first,
    // repaint after: in-place flips would clobber the lookup table mid-walk.
    void invert_cd_path(Vertex u, int c, int d) {
        std::vector<Vertex> path{u};
        int want = d;
        Vertex cur = u;
        while (true) {
            Vertex next = at[cur][want - 1];
            if (next < 0) break;
            path.push_back(next);
            cur = next;
            want = (want == d) ? c : d;
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i) set_color(path[i], path[i + 1], 0);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            set_color(path[i], path[i + 1], (i % 2 == 0) ? c : d);
    }

    // Shift colors down the fan prefix [0..j]: (u,f_i) <- color(u,f_{i+1});
    // leaves (u,f_j) uncolored.
    void rotate_fan(Vertex u, const std::vector<Vertex>& fan, std::size_t j) {
        for (std::size_t i = 0; i + 1 <= j; ++i) {
            int c = color(u, fan[i + 1]);
            set_color(u, fan[i + 1], 0);
            set_color(u, fan[i], c);
        }
    }

    // Checks the fan property of fan[0..j] under the current coloring.
    bool is_fan_prefix(Vertex u, const std::vector<Vertex>& fan, std::size_t j) const {
        for (std::size_t i = 0; i + 1 <= j; ++i) {
            int c = color(u, fan[i + 1]);
            if (c == 0 || !is_free(fan[i], c)) return false;
        }
        return true;
    }
};

}  // namespace

EdgeColoring proper_edge_coloring(const Graph& g) {
    MGState st(g);
    for (const Edge& e : g.edges()) {
        Vertex u = e.u, v = e.v;
        std::vector<Vertex> fan = st.maximal_fan(u, v);
        int c = st.smallest_free(u);
        int d = st.smallest_free(fan.back());
        if (c != d) st.invert_cd_path(u, c, d);
        // After inversion d is free on u. Find the shortest fan prefix that is
        // still a fan and whose tip has d free; rotate it and finish with d.
        bool done = false;
        for (std::size_t j = 0; j < fan.size(); ++j) {
            if (!st.is_fan_prefix(u, fan, j)) break;
            if (st.is_free(fan[j], d)) {
                st.rotate_fan(u, fan, j);
                st.set_color(u, fan[j], d);
                done = true;
                break;
            }
        }
        if (!done) throw internal("InternalError", "Misra-Gries rotation failed");
    }
    EdgeColoring col{std::move(st.edge_color)};
    verify_coloring(g, col);
    return col;
}

void verify_coloring(const Graph& g, const EdgeColoring& col) {
    if (static_cast<int>(col.by_edge.size()) != g.m())
        throw invalid_input("InvariantViolation", "coloring size does not match edge count");
    int palette = g.degree_bound() + 1;
    for (int i = 0; i < g.m(); ++i) {
        int c = col.by_edge[i];
        if (c < 1 || c > palette)
            throw invalid_input("InvariantViolation",
                                "edge color " + std::to_string(c) + " outside 1.." +
                                    std::to_string(palette));
    }
    std::vector<char> seen(palette + 1, 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Vertex w : g.neighbors(v)) {
            int c = col.by_edge[g.edge_index(v, w)];
            if (seen[c])
                throw invalid_input("InvariantViolation",
                                    "color " + std::to_string(c) + " repeated at vertex " +
                                        std::to_string(v));
            seen[c] = 1;
        }
    }
}

EdgeColoring read_coloring(std::istream& in, const Graph& g) {
    std::vector<long long> nums;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long x;
        while (ls >> x) nums.push_back(x);
        if (ls.fail() && !ls.eof()) throw invalid_input("BadFormat", "coloring file: non-numeric token");
    }
    if (nums.size() != static_cast<std::size_t>(3 * g.m()))
        throw invalid_input("BadFormat", "coloring file: expected " + std::to_string(3 * g.m()) +
                                             " numbers, found " + std::to_string(nums.size()));
    EdgeColoring col;
    col.by_edge.resize(g.m());
    for (int i = 0; i < g.m(); ++i) {
        const Edge& e = g.edges()[i];
        if (nums[3 * i] != e.u || nums[3 * i + 1] != e.v)
            throw invalid_input("BadFormat", "coloring file: edge order does not match graph file");
        col.by_edge[i] = static_cast<int>(nums[3 * i + 2]);
    }
    verify_coloring(g, col);
    return col;
}

void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& col) {
    for (int i = 0; i < g.m(); ++i)
        out << g.edges()[i].u << " " << g.edges()[i].v << " " << col.by_edge[i] << "\n";
}

EdgeColoring load_coloring(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw invalid_input("FileError", "cannot open '" + path + "'");
    return read_coloring(in, g);
}

void save_coloring(const std::string& path, const Graph& g, const EdgeColoring& col) {
    std::ofstream out(path);
    if (!out) throw invalid_input("FileError", "cannot write '" + path + "'");
    write_coloring(out, g, col);
}

}  // namespace graphstat
