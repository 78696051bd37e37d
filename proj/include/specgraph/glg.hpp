#pragma once

#include <optional>

#include "specgraph/exact.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

// vertex order of the generalized line graph: the edges of h in sorted
// order, then per vertex x (ascending) and petal p = 0..f(x)-1 the pair
// (x, p, 0), (x, p, 1); the pair (x, p, *) stays non-adjacent
Graph generalized_line_graph(const VertexWeightedGraph& hw);
Graph line_graph(const Graph& h);

// A(H) + degree diagonal + twice the weight diagonal
IntMatrix q_matrix(const VertexWeightedGraph& hw);

// rows: V(H) then one slot row per petal (x, p); columns: edges of H then
// petal column pairs; petal pair carries (+1, +1) at row x and (+1, -1)
// at its slot row
IntMatrix incidence_matrix(const VertexWeightedGraph& hw);

// N^T N = A + 2I on the line graph side and N N^T = diag(Q, 2I) exactly
bool verify_incidence_identities(const VertexWeightedGraph& hw);

// nonzero spectrum of A + 2I matches the nonzero spectrum of diag(Q, 2I)
bool spectra_shift_check(const VertexWeightedGraph& hw);

// representation by vectors with two nonzero entries +-1 whose Gram
// matrix is A + 2I; existence is equivalent to being a generalized line
// graph, so absence certifies exceptionality
bool has_d_representation(const Graph& g);

// full recognition: the canonically least root over (|V(H)|, canonical
// key), or absent when g is not a generalized line graph
std::optional<VertexWeightedGraph> is_generalized_line_graph(const Graph& g);

}  // namespace specgraph
