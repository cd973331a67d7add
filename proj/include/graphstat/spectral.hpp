#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "graphstat/census.hpp"
#include "graphstat/coloring.hpp"
#include "graphstat/graph.hpp"
#include "graphstat/rational.hpp"

namespace graphstat {

/// Dense symmetric integer Laplacian: deg on the diagonal, -1 off-diagonal
/// for adjacent pairs. Row sums are zero.
struct LaplacianMatrix {
    int n = 0;
    std::vector<std::int64_t> a;  // row-major n*n

    std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

LaplacianMatrix laplacian(const Graph& g);

/// Eigenvalue multiset of the Laplacian, ascending, weight 1/n each.
/// Values are clamped to [0, 2d] after solving; max_clamp records how far any
/// raw value fell outside.
struct SpectralMeasure {
    int d = 0;
    std::vector<double> values;
    double max_clamp = 0.0;

    long long size() const { return static_cast<long long>(values.size()); }
};

/// Full symmetric eigensolve: Householder reduction to tridiagonal form
/// followed by implicit-shift QL. Guarded to n <= 4096 (TooLarge).
SpectralMeasure spectrum(const Graph& g);

/// Eigenvector for the second-smallest Laplacian eigenvalue. Same guard as
/// spectrum; the vector accumulation makes this markedly slower than a
/// values-only solve.
std::vector<double> fiedler_vector(const Graph& g);

/// Fraction of eigenvalues <= delta + 1e-9 as an exact rational. The
/// tolerance absorbs solver error so s(G, 0) counts the kernel.
Rational s_fraction(const SpectralMeasure& m, double delta);

/// Exact Tr(Laplacian^p)/n. Big-integer walk sums over radius-floor(p/2)
/// balls with true degrees; never touches the eigensolver.
Rational moment_global(const Graph& g, int p);

/// Diagonal entry of (ball Laplacian)^p at the root, exact. Requires
/// b.radius >= p (RadiusTooSmall) so induced degrees match the host graph's.
BigInt root_moment(const RootedBall& b, int p);

/// Census route for the same moment: builds the radius-p census and returns
/// sum over classes of p_G(A) * root_moment(A, p). Equals moment_global
/// exactly for every proper coloring.
Rational moment_local(const Graph& g, const EdgeColoring& col, int p);

/// Equal-width bins over [0, 2d], first bin closed, the rest right-closed.
struct Histogram {
    int d = 0;
    std::vector<double> edges;   // bins + 1 entries
    std::vector<double> masses;  // sums to 1
};

Histogram ids_histogram(const SpectralMeasure& m, int bins);

/// sup_x |CDF_a(x) - CDF_b(x)|, evaluated exactly at eigenvalue breakpoints.
double kolmogorov_distance(const SpectralMeasure& a, const SpectralMeasure& b);

// Spectrum file: CSV, one eigenvalue per line, ascending, 17 significant
// digits. Histogram report: JSON {d, bins, edges[], masses[]}.
void write_spectrum(std::ostream& out, const SpectralMeasure& m);
SpectralMeasure read_spectrum(std::istream& in, int d);
void save_spectrum(const std::string& path, const SpectralMeasure& m);
void write_histogram(std::ostream& out, const Histogram& h);

}  // namespace graphstat
