#pragma once

#include <string>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

// Isomorphism certificate: equal keys iff isomorphic (as colored graphs when
// a color vector is given).  Weighted graphs use their weights as colors.
using CanonicalKey = std::string;

CanonicalKey canonical_key(const Graph& g);
CanonicalKey canonical_key(const Graph& g, const std::vector<int>& colors);
CanonicalKey canonical_key(const VertexWeightedGraph& hw);

// perm[i] = original vertex placed at canonical position i.
std::vector<int> canonical_labeling(const Graph& g, const std::vector<int>& colors);

Graph apply_labeling(const Graph& g, const std::vector<int>& perm);

bool isomorphic(const Graph& a, const Graph& b);
bool isomorphic(const VertexWeightedGraph& a, const VertexWeightedGraph& b);

}  // namespace specgraph
