#include "graphstat/census.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "graphstat/errors.hpp"

namespace graphstat {

namespace {

// Per-vertex incident (color, neighbor) lists sorted by color; built once per
// census so ball extraction does no per-root sorting.
std::vector<std::vector<std::pair<int, int>>> color_sorted_adjacency(const Graph& g,
                                                                     const EdgeColoring& col) {
    std::vector<std::vector<std::pair<int, int>>> nbrs(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        nbrs[v].reserve(g.degree(v));
        for (Vertex w : g.neighbors(v)) nbrs[v].push_back({col.by_edge[g.edge_index(v, w)], w});
        std::sort(nbrs[v].begin(), nbrs[v].end());
    }
    return nbrs;
}

RootedBall extract_with(const Graph& g,
                        const std::vector<std::vector<std::pair<int, int>>>& by_color, Vertex v,
                        int r) {
    // BFS labeling: FIFO queue; at each vertex, unvisited neighbors are
    // labeled in increasing incident-edge-color order. Proper colors make the
    // order unambiguous, so the labeling is an isomorphism invariant.
    std::vector<int> label(g.n(), -1);
    std::vector<Vertex> by_label;
    std::vector<int> dist_by_label;
    label[v] = 0;
    by_label.push_back(v);
    dist_by_label.push_back(0);
    std::size_t head = 0;
    while (head < by_label.size()) {
        Vertex x = by_label[head];
        int dx = dist_by_label[head];
        ++head;
        if (dx == r) continue;
        for (const auto& [c, y] : by_color[x]) {
            if (label[y] < 0) {
                label[y] = static_cast<int>(by_label.size());
                by_label.push_back(y);
                dist_by_label.push_back(dx + 1);
            }
        }
    }
    RootedBall b;
    b.k = static_cast<int>(by_label.size());
    b.radius = r;
    b.d = g.degree_bound();
    b.dist = std::move(dist_by_label);
    b.adj.resize(b.k);
    for (int lx = 0; lx < b.k; ++lx) {
        Vertex x = by_label[lx];
        for (const auto& [c, y] : by_color[x])
            if (label[y] >= 0) b.adj[lx].push_back({label[y], c});
        // by_color iteration already yields color order
    }
    return b;
}

}  // namespace

RootedBall extract_rooted_ball(const Graph& g, const EdgeColoring& col, Vertex v, int r) {
    if (v < 0 || v >= g.n()) throw invalid_input("BadVertex", "root out of range");
    if (r < 0) throw invalid_input("BadParams", "radius must be nonnegative");
    return extract_with(g, color_sorted_adjacency(g, col), v, r);
}

BallCode canonical_code(const RootedBall& b) {
    std::string out = std::to_string(b.k);
    for (int i = 0; i < b.k; ++i) {
        out += ';';
        out += std::to_string(i + 1);
        out += ':';
        for (std::size_t j = 0; j < b.adj[i].size(); ++j) {
            if (j) out += ',';
            out += '(';
            out += std::to_string(b.adj[i][j].first + 1);
            out += ',';
            out += std::to_string(b.adj[i][j].second);
            out += ')';
        }
    }
    return out;
}

namespace {

int parse_int_strict(std::string_view s, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw invalid_input("InvariantViolation",
                            std::string("ball code: bad ") + what + " '" + std::string(s) + "'");
    return value;
}

}  // namespace

RootedBall ball_from_code(const BallCode& code, int r, int d) {
    std::vector<std::string_view> rows;
    std::string_view sv(code);
    while (!sv.empty()) {
        auto semi = sv.find(';');
        rows.push_back(sv.substr(0, semi));
        sv = (semi == std::string_view::npos) ? std::string_view{} : sv.substr(semi + 1);
    }
    if (rows.empty()) throw invalid_input("InvariantViolation", "ball code: empty");
    int k = parse_int_strict(rows[0], "vertex count");
    if (k <= 0 || static_cast<int>(rows.size()) != k + 1)
        throw invalid_input("InvariantViolation", "ball code: row count does not match k");

    RootedBall b;
    b.k = k;
    b.radius = r;
    b.d = d;
    b.adj.resize(k);
    for (int i = 0; i < k; ++i) {
        std::string_view row = rows[i + 1];
        auto colon = row.find(':');
        if (colon == std::string_view::npos)
            throw invalid_input("InvariantViolation", "ball code: row missing ':'");
        if (parse_int_strict(row.substr(0, colon), "row label") != i + 1)
            throw invalid_input("InvariantViolation", "ball code: labels not 1..k in order");
        std::string_view pairs = row.substr(colon + 1);
        while (!pairs.empty()) {
            if (pairs.front() != '(')
                throw invalid_input("InvariantViolation", "ball code: malformed pair");
            auto close = pairs.find(')');
            auto comma = pairs.find(',');
            if (close == std::string_view::npos || comma == std::string_view::npos || comma > close)
                throw invalid_input("InvariantViolation", "ball code: malformed pair");
            int nbr = parse_int_strict(pairs.substr(1, comma - 1), "neighbor label");
            int color = parse_int_strict(pairs.substr(comma + 1, close - comma - 1), "color");
            if (nbr < 1 || nbr > k)
                throw invalid_input("InvariantViolation", "ball code: neighbor label out of range");
            b.adj[i].push_back({nbr - 1, color});
            pairs = pairs.substr(close + 1);
            if (!pairs.empty()) {
                if (pairs.front() != ',')
                    throw invalid_input("InvariantViolation", "ball code: missing pair separator");
                pairs = pairs.substr(1);
            }
        }
    }

    // Re-derive distances and check every ball invariant.
    b.dist.assign(k, -1);
    b.dist[0] = 0;
    std::deque<int> q{0};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (const auto& [y, c] : b.adj[x])
            if (b.dist[y] < 0) {
                b.dist[y] = b.dist[x] + 1;
                q.push_back(y);
            }
    }
    for (int i = 0; i < k; ++i) {
        if (b.dist[i] < 0) throw invalid_input("InvariantViolation", "ball code: not connected");
        if (b.dist[i] > r) throw invalid_input("InvariantViolation", "ball code: eccentricity > r");
        if (i + 1 < k && b.dist[i] > b.dist[i + 1])
            throw invalid_input("InvariantViolation", "ball code: labels not distance-monotone");
        if (static_cast<int>(b.adj[i].size()) > d)
            throw invalid_input("InvariantViolation", "ball code: degree exceeds d");
        for (std::size_t j = 0; j < b.adj[i].size(); ++j) {
            auto [nbr, color] = b.adj[i][j];
            if (color < 1 || color > d + 1)
                throw invalid_input("InvariantViolation", "ball code: color outside 1..d+1");
            if (j > 0 && color <= b.adj[i][j - 1].second)
                throw invalid_input("InvariantViolation", "ball code: colors not increasing");
            if (nbr == i) throw invalid_input("InvariantViolation", "ball code: self-loop");
            bool mirrored = false;
            for (const auto& [back, bc] : b.adj[nbr])
                if (back == i && bc == color) mirrored = true;
            if (!mirrored)
                throw invalid_input("InvariantViolation", "ball code: adjacency not symmetric");
        }
    }
    return b;
}

Rational BallCensus::probability(const BallCode& code) const {
    auto it = counts.find(code);
    if (it == counts.end()) return Rational(0);
    return Rational(it->second, n);
}

BallCensus census(const Graph& g, const EdgeColoring& col, int r, int threads) {
    if (r < 0) throw invalid_input("BadParams", "radius must be nonnegative");
    verify_coloring(g, col);
    auto by_color = color_sorted_adjacency(g, col);

    BallCensus result;
    result.r = r;
    result.d = g.degree_bound();
    result.n = g.n();

    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = std::min<int>(nthreads, g.n());

    if (nthreads == 1) {
        for (Vertex v = 0; v < g.n(); ++v)
            ++result.counts[canonical_code(extract_with(g, by_color, v, r))];
        return result;
    }

    std::vector<std::map<BallCode, long long>> partial(nthreads);
    std::vector<std::thread> pool;
    const int chunk = (g.n() + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t]() {
            const Vertex lo = t * chunk;
            const Vertex hi = std::min<Vertex>(g.n(), lo + chunk);
            for (Vertex v = lo; v < hi; ++v)
                ++partial[t][canonical_code(extract_with(g, by_color, v, r))];
        });
    }
    for (auto& th : pool) th.join();
    // merging in chunk order keeps the result independent of scheduling
    for (auto& part : partial)
        for (auto& [code, count] : part) result.counts[code] += count;
    return result;
}

Rational tv_distance(const BallCensus& a, const BallCensus& b) {
    if (a.r != b.r || a.d != b.d)
        throw invalid_input("RadiusMismatch", "censuses disagree on (r, d): (" +
                                                  std::to_string(a.r) + "," + std::to_string(a.d) +
                                                  ") vs (" + std::to_string(b.r) + "," +
                                                  std::to_string(b.d) + ")");
    Rational total(0);
    auto ia = a.counts.begin();
    auto ib = b.counts.begin();
    while (ia != a.counts.end() || ib != b.counts.end()) {
        Rational pa(0), pb(0);
        if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
            pa = Rational(ia->second, a.n);
            ++ia;
        } else if (ia == a.counts.end() || ib->first < ia->first) {
            pb = Rational(ib->second, b.n);
            ++ib;
        } else {
            pa = Rational(ia->second, a.n);
            pb = Rational(ib->second, b.n);
            ++ia;
            ++ib;
        }
        Rational diff = pa - pb;
        if (diff < 0) diff = -diff;
        total += diff;
    }
    return Rational(total / 2);
}

namespace {

// Branch-and-bound search for the lexicographically smallest back-edge code
// over all distance-monotone labelings of an uncolored ball.
struct UncoloredSearch {
    int k = 0;
    std::vector<std::vector<int>> adj;   // ball-local ids, sorted
    std::vector<int> layer_of;           // distance from root
    std::vector<int> position_layer;     // which layer owns each label position
    std::vector<int> assigned_label;     // ball-local id -> label or -1
    std::vector<std::vector<int>> best;  // best[pos] = back-row (labels of earlier neighbors)
    std::vector<std::vector<int>> current;
    bool has_best = false;

    void run() {
        current.assign(k, {});
        assigned_label.assign(k, -1);
        assigned_label[0] = 0;
        descend(1, 0);
    }

    std::vector<int> back_row(int id) const {
        std::vector<int> row;
        for (int nb : adj[id])
            if (assigned_label[nb] >= 0) row.push_back(assigned_label[nb]);
        std::sort(row.begin(), row.end());
        return row;
    }

    // cmp: current prefix vs best prefix (-1 smaller, 0 equal). Stale flags
    // after best improves only cost extra work; the leaf does an
    // authoritative full comparison.
    void descend(int pos, int cmp) {
        if (pos == k) {
            if (!has_best || current < best) {
                best = current;
                has_best = true;
            }
            return;
        }
        std::vector<int> candidates;
        for (int id = 0; id < k; ++id)
            if (assigned_label[id] < 0 && layer_of[id] == position_layer[pos])
                candidates.push_back(id);

        std::vector<int> kept;
        for (int id : candidates) {
            // skip twins of an already-kept candidate: same assigned
            // neighbors and same unassigned neighborhood (ignoring each
            // other) means swapping them is an automorphism
            bool dup = false;
            for (int prev : kept) {
                if (back_row(prev) != back_row(id)) continue;
                std::vector<int> f1, f2;
                for (int nb : adj[prev])
                    if (assigned_label[nb] < 0 && nb != id) f1.push_back(nb);
                for (int nb : adj[id])
                    if (assigned_label[nb] < 0 && nb != prev) f2.push_back(nb);
                if (f1 == f2) {
                    dup = true;
                    break;
                }
            }
            if (dup) continue;
            kept.push_back(id);

            std::vector<int> row = back_row(id);
            int child_cmp = cmp;
            if (has_best && cmp == 0) {
                if (row > best[pos]) continue;
                if (row < best[pos]) child_cmp = -1;
            }
            assigned_label[id] = pos;
            current[pos] = std::move(row);
            descend(pos + 1, child_cmp);
            assigned_label[id] = -1;
        }
    }
};

}  // namespace

BallCode canonical_code_uncolored(const Graph& g, Vertex v, int r) {
    BallResult ball = bfs_ball(g, v, r);
    if (ball.vertices.size() > 20)
        throw guard("BallTooLarge", "uncolored canonical code limited to 20 vertices, got " +
                                        std::to_string(ball.vertices.size()));
    const int k = static_cast<int>(ball.vertices.size());
    // ball-local ids ordered so that the root is id 0
    std::vector<int> order(ball.vertices.begin(), ball.vertices.end());
    std::swap(order[0], order[std::find(order.begin(), order.end(), v) - order.begin()]);

    UncoloredSearch s;
    s.k = k;
    s.adj.resize(k);
    s.layer_of.resize(k);
    std::vector<int> id_of(g.n(), -1);
    for (int i = 0; i < k; ++i) id_of[order[i]] = i;
    for (int i = 0; i < k; ++i) {
        s.layer_of[i] = ball.dist[order[i]];
        for (Vertex w : g.neighbors(order[i]))
            if (id_of[w] >= 0) s.adj[i].push_back(id_of[w]);
        std::sort(s.adj[i].begin(), s.adj[i].end());
    }
    // positions grouped by layer: count layer sizes
    std::vector<int> layer_count;
    for (int i = 0; i < k; ++i) {
        if (s.layer_of[i] >= static_cast<int>(layer_count.size()))
            layer_count.resize(s.layer_of[i] + 1, 0);
        ++layer_count[s.layer_of[i]];
    }
    s.position_layer.resize(k);
    {
        int pos = 0;
        for (int layer = 0; layer < static_cast<int>(layer_count.size()); ++layer)
            for (int c = 0; c < layer_count[layer]; ++c) s.position_layer[pos++] = layer;
    }
    s.run();

    std::string code = std::to_string(k);
    for (int i = 1; i < k; ++i) {
        code += ';';
        code += std::to_string(i + 1);
        code += ':';
        for (std::size_t j = 0; j < s.best[i].size(); ++j) {
            if (j) code += ',';
            code += std::to_string(s.best[i][j] + 1);
        }
    }
    return code;
}

void write_census(std::ostream& out, const BallCensus& c) {
    nlohmann::json j;
    j["r"] = c.r;
    j["d"] = c.d;
    j["n"] = c.n;
    auto classes = nlohmann::json::array();
    for (const auto& [code, count] : c.counts)
        classes.push_back({{"code", "v1|" + code}, {"count", count}});
    j["classes"] = std::move(classes);
    out << j.dump(2) << "\n";
}

BallCensus read_census(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input("BadFormat", std::string("census file: ") + e.what());
    }
    BallCensus c;
    try {
        c.r = j.at("r").get<int>();
        c.d = j.at("d").get<int>();
        c.n = j.at("n").get<long long>();
        long long total = 0;
        for (const auto& cls : j.at("classes")) {
            std::string code = cls.at("code").get<std::string>();
            if (code.rfind("v1|", 0) != 0)
                throw invalid_input("BadFormat", "census file: unknown code version");
            long long count = cls.at("count").get<long long>();
            if (count < 1) throw invalid_input("BadFormat", "census file: count < 1");
            c.counts[code.substr(3)] += count;
            total += count;
        }
        if (total != c.n) throw invalid_input("BadFormat", "census file: counts do not sum to n");
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input("BadFormat", std::string("census file: ") + e.what());
    }
    return c;
}

void save_census(const std::string& path, const BallCensus& c) {
    std::ofstream out(path);
    if (!out) throw invalid_input("FileError", "cannot write '" + path + "'");
    write_census(out, c);
}

BallCensus load_census(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("FileError", "cannot open '" + path + "'");
    return read_census(in);
}

}  // namespace graphstat
