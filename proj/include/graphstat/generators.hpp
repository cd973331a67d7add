#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphstat/coloring.hpp"
#include "graphstat/graph.hpp"

namespace graphstat {

enum class Family { cycle, torus2d, random_regular, binary_tree, from_files };

Family family_from_name(const std::string& name);
std::string family_name(Family f);

/// A graph sequence to feed the runners. `sizes` means: cycle -> n,
/// torus2d -> side length, random_regular -> n, binary_tree -> depth.
/// For from_files, graph_files (and optional coloring_files) are used and
/// sizes is ignored.
struct SequenceSpec {
    Family family = Family::cycle;
    std::vector<long long> sizes;  // strictly increasing
    int d = 0;                     // shared degree bound (random_regular only input)
    std::uint64_t seed = 0;
    std::vector<std::string> graph_files;
    std::vector<std::string> coloring_files;

    std::size_t members() const;
    void validate() const;
};

/// Member i draws its seed as seed XOR (i * 0x9e3779b97f4a7c15). Documented
/// so every run is reproducible from the master seed alone.
std::uint64_t member_seed(std::uint64_t master, std::size_t index);

struct Member {
    Graph graph;
    EdgeColoring coloring;
};

/// Builds member `index` of the sequence, colored. Vertex-transitive
/// families use fixed translation-invariant patterns where one exists
/// (even cycles, even-sided tori); everything else is Misra-Gries colored.
Member generate(const SequenceSpec& spec, std::size_t index);

// Direct constructors used by generate and handy in tests.
Graph make_cycle(long long n);
Graph make_torus2d(long long side);
Graph make_random_regular(int d, long long n, std::uint64_t seed);
Graph make_binary_tree(long long depth);
EdgeColoring cycle_coloring(const Graph& g);
EdgeColoring torus2d_coloring(const Graph& g, long long side);

}  // namespace graphstat
