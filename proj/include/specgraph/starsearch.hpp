#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "specgraph/exact.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

// ==== star complement extension for eigenvalue -2 ====
//
// a star set X for an eigenvalue mu is a vertex set whose size equals the
// multiplicity of mu and whose removal leaves a graph without mu in the
// spectrum; the leftover graph is the star complement.  extensions of a
// fixed complement are governed by the exact bilinear form
// b^T (mu I - A)^{-1} b over candidate attachment vectors b.

struct StarInstance {
    Graph base;
    long long mu = -2;
    RatMatrix resolvent;  // (mu I - A)^{-1}, symmetric
};

// errors when mu is an eigenvalue of the base
StarInstance make_star_instance(const Graph& base, long long mu = -2);

// b^T (mu I - A)^{-1} b with the 0/1 vectors given as vertex bitmasks
Rat star_bilinear(const StarInstance& inst, uint64_t b1, uint64_t b2);

// vertices: every 0/1 vector b with <b,b> = mu, from the full 2^n scan.
// two vectors are compatible when <b1,b2> is -1 or 0; the -1 pairs become
// adjacent extension vertices.
struct CompatGraph {
    std::vector<uint64_t> vectors;
    std::vector<std::vector<signed char>> value;  // -1 or 0 if compatible, 2 otherwise
    bool compatible(int i, int j) const { return value[i][j] != 2; }
};

CompatGraph compat_graph(const Graph& base, long long mu = -2);

// the base plus one vertex per clique member b, attached along the bits of
// b; two new vertices are adjacent exactly when their form value is -1.
// errors when the vectors are not pairwise compatible; the multiplicity of
// mu in the result is verified to equal the clique size.
Graph extend(const Graph& base, const std::vector<uint64_t>& clique, long long mu = -2);

// connected graphs on 6..8 vertices whose adjacency matrix shifted by 2 is
// positive definite and which admit no d-representation; 20/110/443 by order
std::vector<Graph> enumerate_foundation();

struct StarSearchLimits {
    int max_clique = 4;
    int jobs = 1;
};

struct ExceptionalCandidate {
    Graph g;
    Spectrum spectrum;     // adjacency spectrum, integral, max exactly 3
    Graph base;            // the star complement it was first grown from
    int clique_size = 0;
};

// extend every foundation base by every compatibility clique up to the size
// cap, keep the connected non-bipartite non-line-graph extensions with
// integral adjacency spectrum inside [-2,3] and top eigenvalue 3, deduped
// and sorted by canonical key
std::vector<ExceptionalCandidate> exceptional_candidates(const StarSearchLimits& limits = {});

// first star set for mu in size-lexicographic order, with its complement;
// errors when mu is not an eigenvalue
std::pair<std::vector<int>, Graph> find_star_set(const Graph& g, long long mu);

std::vector<ExceptionalCandidate> triangle_free_filter(const std::vector<ExceptionalCandidate>& cands);

}  // namespace specgraph
