#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "graphstat/generators.hpp"
#include "graphstat/isoperimetry.hpp"
#include "graphstat/rational.hpp"

namespace graphstat {

inline constexpr const char* kToolVersion = "0.1.0";

/// Reports are plain JSON documents. Every number in them is re-derivable
/// from the embedded provenance (family, sizes, d, master seed, parameters);
/// nothing time- or host-dependent is recorded, so identical specs produce
/// bit-identical reports.
using RunReport = nlohmann::json;

/// Census at radius r per member, pairwise TV distance matrix, plateau flag
/// (every consecutive distance < 1e-3).
RunReport run_convergence(const SequenceSpec& spec, int r);

/// Per-member spectrum summary, IDS histogram, s(G, delta) for each
/// requested delta, exact moments p <= max_p via both the trace and the
/// census route with an equality flag, Kolmogorov distances between
/// consecutive members.
RunReport run_ids(const SequenceSpec& spec, int bins, int max_p,
                  const std::vector<double>& deltas);

/// Theorem-2 style table: n, s(G, delta), h_cover(G, eps, k), m_norm from a
/// greedy maximal packing. Reported, never asserted.
RunReport run_theorem2(const SequenceSpec& spec, double delta, const Rational& eps, int k,
                       long long budget = kDefaultEnumBudget);

/// Flat CSV rendering of a report's member table.
std::string report_csv(const RunReport& report);

}  // namespace graphstat
