#pragma once

// final assembly: the twenty-two connected non-bipartite integral graphs
// with spectral radius three, merged from the weighted-root search on the
// line-graph side and the star-complement extension search on the
// exceptional side, compared row for row against the expected multiplicity
// table; plus a direct brute-force enumeration as an independent check

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "specgraph/exact.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

// adjacency multiplicities in descending eigenvalue order: 3, 2, 1, 0, -1, -2
using MultiplicityRow = std::array<long long, 6>;

MultiplicityRow multiplicity_row(const Spectrum& spec);

struct ExpectedRow {
    const char* name;  // class prefix plus vertex count, a letter breaks ties
    int n;
    MultiplicityRow mults;
    bool exceptional;
};

// nine line-graph-side rows and thirteen exceptional ones; the two
// cospectral eleven-vertex exceptional graphs share a row body
const std::array<ExpectedRow, 22>& expected_classification();

struct ClassifiedGraph {
    Graph g;
    Spectrum spectrum;
    bool exceptional = false;
    // witness: the weighted root on the line-graph side, the star
    // complement base plus clique size on the exceptional side
    std::optional<VertexWeightedGraph> root;
    std::optional<Graph> base;
    int clique_size = 0;
    std::string row_name;
};

struct ClassificationReport {
    std::vector<ClassifiedGraph> entries;  // sorted by (order, canonical key)
    int glg_count = 0;
    int exceptional_count = 0;
    bool matches_expected = false;
    std::vector<std::string> diffs;  // row-level mismatches, empty on success
};

struct ClassifyOptions {
    int root_cap = 32;  // vertex cap handed to the root search
    int jobs = 1;
};

ClassificationReport classify_all(const ClassifyOptions& opts = {});

// every connected graph with adjacency spectrum inside [-2, 3] (both
// bounds hereditary, so they prune), filtered to the integral non-bipartite
// ones with largest eigenvalue exactly 3; sorted by (order, canonical key)
std::vector<Graph> brute_force_crosscheck(int max_n, int jobs = 1);

}  // namespace specgraph
