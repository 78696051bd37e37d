#pragma once

// exhaustive search for the connected vertex-weighted graphs (H, f) whose
// generalized signless Laplace matrix has largest eigenvalue exactly 5 and
// every eigenvalue in {0,...,5}; their generalized line graphs are the
// integral graphs with spectral radius 3 on the line-graph side

#include <functional>
#include <vector>

#include "specgraph/exact.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

// ==== typed vertex profile ====

// vertex type = (degree, weight); with q_max <= 5 only the six listed pairs
// can occur, except a lone vertex, which may carry weight up to 2
struct TypedVertexProfile {
    int a10 = 0, a11 = 0;
    int a20 = 0, a21 = 0;
    int a30 = 0, a40 = 0;
    int isolated = 0;  // degree 0, weight <= 2
    int off_list = 0;  // every other (degree, weight) pair
    int total() const { return a10 + a11 + a20 + a21 + a30 + a40 + isolated + off_list; }
};

TypedVertexProfile vertex_profile(const VertexWeightedGraph& hw);

// true iff every vertex type is admissible and a (4,0) vertex occurs only
// in the plain 4-star; a diagonal deg + 2f >= 5 with company always pushes
// q_max above 5, which is why pairs like (1,2) are off the list
bool admissible_profile(const VertexWeightedGraph& hw);

// ==== survivor checks ====

// conditions a connected hw with 5 in Ev(Q) inside {0..5} and maximum
// degree 3 must satisfy; a graph with a higher-degree vertex passes all of
// them vacuously.  "singular" means 0 is a Q eigenvalue, a "plain" vertex
// has weight 0.  has_open_plain_degree_two_pair records an antecedent, not
// a failure.
struct StructuralChecks {
    bool plain_leaf_forces_singular = true;        // plain leaf present -> Q singular
    bool plain_leaves_within_distance_two = true;  // plain leaves pairwise at distance <= 2
    bool at_most_two_plain_leaves = true;
    bool has_open_plain_degree_two_pair = false;   // adjacent (2,0) pair, no common neighbour
    bool open_pair_forces_singular = true;         // such a pair present -> Q singular
    bool no_disjoint_cycle_pair = true;            // no induced two-component cycle pair
    bool nonsingular_forbids_plain_leaves = true;  // Q nonsingular -> no plain leaf
    bool weighted_degree_two_independent = true;   // (2,1) vertices pairwise nonadjacent
    bool no_mixed_triangle = true;                 // no triangle typed (2,0),(2,1),(3,0)
    bool nonsingular_diameter_bound = true;        // Q nonsingular, a11=0, a30>=1 -> diam <= 3
    bool all_passed() const;
};

StructuralChecks structural_checks(const VertexWeightedGraph& hw);

// leaf-pruned core bound: with a2 degree-2 vertices, a3 degree-3 vertices
// and m edges joining the two classes, q_max <= 5 forces 1 + m/a2 <= m/a3,
// and equality pins q_max of the core at exactly 5
struct QuotientCheck {
    bool applicable = false;  // needs both degree classes nonempty
    bool holds = true;
    bool equality = false;
};

// pre: h connected with every degree 2 or 3 (prune leaves first)
QuotientCheck quotient_inequality_check(const Graph& h);

// iteratively delete degree-1 vertices; a tree collapses to a single vertex
Graph prune_degree_one(const Graph& h);

// ==== the search ====

struct SearchCaps {
    int max_vertices = 32;
    int jobs = 1;
};

// isomorph-free stream of every connected hw whose Q spectrum fits in
// [0, 5] with at most one eigenvalue above 4 (true of every target: the top
// eigenvalue is simple, so the rest sit in the integer range {0..4}).
// emit's bool marks terminal graphs, q_max = 5 exactly; they are streamed
// but not extended, since all their proper supergraphs overshoot.
void enumerate_candidates(const SearchCaps& caps,
                          const std::function<void(const VertexWeightedGraph&, bool)>& emit);

// the nine vertex-weighted graphs with 5 in Ev(Q) inside {0,...,5}
std::vector<VertexWeightedGraph> glg_roots(const SearchCaps& caps = {});

// audit record for one survivor: exact spectrum plus every survivor check
struct SearchCertificate {
    VertexWeightedGraph root;
    Spectrum q_spectrum;
    StructuralChecks checks;
    QuotientCheck quotient;           // on the leaf-pruned core of H
    bool tree_count_ok = true;        // bipartite plain branch only
    bool multiplicity_row_ok = true;  // trace system solves to the root's row
    bool all_passed() const;
};

std::vector<SearchCertificate> glg_root_certificates(const SearchCaps& caps = {});

// delete triangle edge x1x2 whose ends both have degree 2 and weight 0,
// then raise both end weights to 1; Ev(Q) stays integral iff it was
VertexWeightedGraph triangle_transform(const VertexWeightedGraph& hw, int x1, int x2);

}  // namespace specgraph
