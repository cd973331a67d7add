#include "graphstat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "graphstat/errors.hpp"

namespace graphstat {

namespace {
constexpr int kSpectrumGuard = 4096;
constexpr double kEigTol = 1e-9;
}  // namespace

LaplacianMatrix laplacian(const Graph& g) {
    LaplacianMatrix lap;
    lap.n = g.n();
    lap.a.assign(static_cast<std::size_t>(g.n()) * g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        lap.a[static_cast<std::size_t>(v) * g.n() + v] = g.degree(v);
        for (Vertex w : g.neighbors(v)) lap.a[static_cast<std::size_t>(v) * g.n() + w] = -1;
    }
    return lap;
}

namespace {

// Householder reduction of a dense symmetric matrix to tridiagonal form
// (diagonal in d, subdiagonal in e[1..n-1]). With want_vectors the
// accumulated transform ends up in a, one basis column per matrix column.
void householder_tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                                std::vector<double>& e, bool want_vectors) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (int i = n - 1; i >= 1; --i) {
        int l = i - 1;
        double h = 0, scale = 0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(at(i, k));
            if (scale == 0.0) {
                e[i] = at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    at(i, k) /= scale;
                    h += at(i, k) * at(i, k);
                }
                double f = at(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                at(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    if (want_vectors) at(j, i) = at(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
                    for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
                    e[j] = g / h;
                    f += e[j] * at(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = at(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
                }
            }
        } else {
            e[i] = at(i, l);
        }
        d[i] = h;
    }
    if (want_vectors) d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        if (want_vectors) {
            int l = i - 1;
            if (d[i] != 0.0) {
                for (int j = 0; j <= l; ++j) {
                    double g = 0.0;
                    for (int k = 0; k <= l; ++k) g += at(i, k) * at(k, j);
                    for (int k = 0; k <= l; ++k) at(k, j) -= g * at(k, i);
                }
            }
            d[i] = at(i, i);
            at(i, i) = 1.0;
            for (int j = 0; j <= l; ++j) at(j, i) = at(i, j) = 0.0;
        } else {
            d[i] = at(i, i);
        }
    }
}

// Implicit-shift QL on the tridiagonal (d, e). If z is non-null (row-major
// n*n with basis columns) its columns become the eigenvectors.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, int n,
                    std::vector<double>* z) {
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw internal("InternalError", "QL eigensolver failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        double* zz = z->data();
                        for (int k = 0; k < n; ++k) {
                            double fk = zz[static_cast<std::size_t>(k) * n + i + 1];
                            double gk = zz[static_cast<std::size_t>(k) * n + i];
                            zz[static_cast<std::size_t>(k) * n + i + 1] = s * gk + c * fk;
                            zz[static_cast<std::size_t>(k) * n + i] = c * gk - s * fk;
                        }
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

// Full symmetric eigensolve; fills eigenvalues (unsorted) and, when vt is
// non-null, the matching eigenvectors, one per row of vt.
void sym_eigensolve(std::vector<double>& a, int n, std::vector<double>& eigenvalues,
                    std::vector<double>* vt) {
    std::vector<double> e;
    householder_tridiagonalize(a, n, eigenvalues, e, vt != nullptr);
    tridiagonal_ql(eigenvalues, e, n, vt ? &a : nullptr);
    if (vt) {
        // a holds eigenvectors in columns; hand them out as rows
        vt->assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                (*vt)[static_cast<std::size_t>(j) * n + i] = a[static_cast<std::size_t>(i) * n + j];
    }
}

std::vector<double> laplacian_dense(const Graph& g) {
    std::vector<double> a(static_cast<std::size_t>(g.n()) * g.n(), 0.0);
    for (Vertex v = 0; v < g.n(); ++v) {
        a[static_cast<std::size_t>(v) * g.n() + v] = g.degree(v);
        for (Vertex w : g.neighbors(v)) a[static_cast<std::size_t>(v) * g.n() + w] = -1.0;
    }
    return a;
}

}  // namespace

SpectralMeasure spectrum(const Graph& g) {
    if (g.n() > kSpectrumGuard)
        throw guard("TooLarge", "dense eigensolver limited to n <= " +
                                    std::to_string(kSpectrumGuard) + ", got " +
                                    std::to_string(g.n()));
    std::vector<double> a = laplacian_dense(g);
    SpectralMeasure m;
    m.d = g.degree_bound();
    sym_eigensolve(a, g.n(), m.values, nullptr);
    std::sort(m.values.begin(), m.values.end());
    const double hi = 2.0 * g.degree_bound();
    for (double& x : m.values) {
        double clamped = std::min(hi, std::max(0.0, x));
        m.max_clamp = std::max(m.max_clamp, std::abs(x - clamped));
        x = clamped;
    }
    return m;
}

std::vector<double> fiedler_vector(const Graph& g) {
    if (g.n() > kSpectrumGuard)
        throw guard("TooLarge", "dense eigensolver limited to n <= " +
                                    std::to_string(kSpectrumGuard));
    if (g.n() < 2) throw invalid_input("BadParams", "Fiedler vector needs n >= 2");
    std::vector<double> a = laplacian_dense(g);
    std::vector<double> eigenvalues;
    std::vector<double> vt;
    sym_eigensolve(a, g.n(), eigenvalues, &vt);
    std::vector<int> order(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return eigenvalues[x] < eigenvalues[y]; });
    int idx = order[1];
    std::vector<double> vec(g.n());
    for (int j = 0; j < g.n(); ++j) vec[j] = vt[static_cast<std::size_t>(idx) * g.n() + j];
    return vec;
}

Rational s_fraction(const SpectralMeasure& m, double delta) {
    if (delta < 0) throw invalid_input("BadParams", "delta must be nonnegative");
    long long count = 0;
    for (double x : m.values)
        if (x <= delta + kEigTol) ++count;
    return Rational(count, static_cast<long long>(m.values.size()));
}

namespace {

// Exact diagonal entry of Delta^p at `root`, restricted to the radius-
// floor(p/2) ball. Closed walks of length p cannot leave it, and the
// diagonal uses the supplied degree function, so the truncation is exact.
BigInt walk_moment(const std::vector<std::vector<int>>& adj, const std::vector<BigInt>& deg,
                   int root, int p) {
    const int k = static_cast<int>(adj.size());
    std::vector<BigInt> f(k, BigInt(0)), next(k, BigInt(0));
    f[root] = 1;
    for (int step = 0; step < p; ++step) {
        for (int x = 0; x < k; ++x) {
            BigInt acc = deg[x] * f[x];
            for (int y : adj[x]) acc -= f[y];
            next[x] = std::move(acc);
        }
        std::swap(f, next);
    }
    return f[root];
}

}  // namespace

Rational moment_global(const Graph& g, int p) {
    if (p < 0) throw invalid_input("BadParams", "moment power must be nonnegative");
    if (p == 0) return Rational(1);
    BigInt trace(0);
    const int radius = p / 2;
    for (Vertex v = 0; v < g.n(); ++v) {
        BallResult ball = bfs_ball(g, v, radius);
        const int k = static_cast<int>(ball.vertices.size());
        std::vector<int> local(g.n(), -1);
        for (int i = 0; i < k; ++i) local[ball.vertices[i]] = i;
        std::vector<std::vector<int>> adj(k);
        std::vector<BigInt> deg(k);
        for (int i = 0; i < k; ++i) {
            Vertex x = ball.vertices[i];
            deg[i] = g.degree(x);  // true degree, not the induced one
            for (Vertex y : g.neighbors(x))
                if (local[y] >= 0) adj[i].push_back(local[y]);
        }
        trace += walk_moment(adj, deg, local[v], p);
    }
    return Rational(trace, BigInt(g.n()));
}

BigInt root_moment(const RootedBall& b, int p) {
    if (p < 0) throw invalid_input("BadParams", "moment power must be nonnegative");
    if (b.radius < p)
        throw invalid_input("RadiusTooSmall", "root_moment needs radius >= p, got radius " +
                                                  std::to_string(b.radius) + " < p=" +
                                                  std::to_string(p));
    std::vector<std::vector<int>> adj(b.k);
    std::vector<BigInt> deg(b.k);
    for (int i = 0; i < b.k; ++i) {
        deg[i] = static_cast<int>(b.adj[i].size());
        for (const auto& [nbr, color] : b.adj[i]) adj[i].push_back(nbr);
    }
    return walk_moment(adj, deg, 0, p);
}

Rational moment_local(const Graph& g, const EdgeColoring& col, int p) {
    if (p < 0) throw invalid_input("BadParams", "moment power must be nonnegative");
    BallCensus c = census(g, col, p);
    BigInt total(0);
    for (const auto& [code, count] : c.counts) {
        RootedBall ball = ball_from_code(code, c.r, c.d);
        total += root_moment(ball, p) * count;
    }
    return Rational(total, BigInt(c.n));
}

Histogram ids_histogram(const SpectralMeasure& m, int bins) {
    if (bins < 1) throw invalid_input("BadParams", "bins must be >= 1");
    Histogram h;
    h.d = m.d;
    const double hi = 2.0 * m.d;
    h.edges.resize(bins + 1);
    for (int i = 0; i <= bins; ++i) h.edges[i] = hi * i / bins;
    h.masses.assign(bins, 0.0);
    const double w = 1.0 / static_cast<double>(m.values.size());
    for (double x : m.values) {
        // first bin closed, the rest (edge_{i}, edge_{i+1}]
        int idx = 0;
        while (idx < bins - 1 && x > h.edges[idx + 1]) ++idx;
        h.masses[idx] += w;
    }
    return h;
}

double kolmogorov_distance(const SpectralMeasure& a, const SpectralMeasure& b) {
    if (a.d != b.d) throw invalid_input("RadiusMismatch", "spectral measures disagree on d");
    const double na = static_cast<double>(a.values.size());
    const double nb = static_cast<double>(b.values.size());
    std::size_t i = 0, j = 0;
    double best = 0;
    while (i < a.values.size() || j < b.values.size()) {
        double x;
        if (j == b.values.size())
            x = a.values[i];
        else if (i == a.values.size())
            x = b.values[j];
        else
            x = std::min(a.values[i], b.values[j]);
        while (i < a.values.size() && a.values[i] <= x) ++i;
        while (j < b.values.size() && b.values[j] <= x) ++j;
        best = std::max(best, std::abs(i / na - j / nb));
    }
    return best;
}

void write_spectrum(std::ostream& out, const SpectralMeasure& m) {
    char buf[64];
    for (double x : m.values) {
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out << buf << "\n";
    }
}

SpectralMeasure read_spectrum(std::istream& in, int d) {
    SpectralMeasure m;
    m.d = d;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            std::size_t pos = 0;
            double x = std::stod(line, &pos);
            m.values.push_back(x);
        } catch (const std::exception&) {
            throw invalid_input("BadFormat", "spectrum file: bad value '" + line + "'");
        }
    }
    if (!std::is_sorted(m.values.begin(), m.values.end()))
        throw invalid_input("BadFormat", "spectrum file: values not ascending");
    return m;
}

void save_spectrum(const std::string& path, const SpectralMeasure& m) {
    std::ofstream out(path);
    if (!out) throw invalid_input("FileError", "cannot write '" + path + "'");
    write_spectrum(out, m);
}

void write_histogram(std::ostream& out, const Histogram& h) {
    nlohmann::json j;
    j["d"] = h.d;
    j["bins"] = h.masses.size();
    j["edges"] = h.edges;
    j["masses"] = h.masses;
    out << j.dump(2) << "\n";
}

}  // namespace graphstat
