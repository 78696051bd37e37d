#pragma once

#include <functional>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

// cut: prune, never visited.  keep: visited and expanded further.
// terminal: visited but not expanded (its proper supergraphs are all cuts).
enum class ChildVerdict { cut, keep, terminal };

struct WeightOption {
    int weight = 0;
    int max_new_degree = Graph::max_order;  // cap on the new vertex degree
};

// Level-synchronous isomorph-free enumeration of connected vertex-weighted
// graphs.  A child is accepted only when deleting its highest-canonical
// non-cut vertex recovers the parent, so each isomorphism class arrives
// exactly once; visit order inside a level is canonical-key order, which
// keeps runs byte-identical for any job count.
struct AugmentPlan {
    int max_vertices = 8;
    std::vector<WeightOption> weights{{0, Graph::max_order}};
    int jobs = 1;
    // exact verdict for a connected candidate; called on every raw child
    std::function<ChildVerdict(const VertexWeightedGraph&)> classify;
    std::function<void(const VertexWeightedGraph&, ChildVerdict)> visit;
    // optional fast path: prepare runs once per expanded parent (per worker),
    // prefilter may reject an attachment subset before the child is built.
    // a prefilter reject must be as sound as a classify cut.
    std::function<void(const VertexWeightedGraph&)> prepare;
    std::function<bool(const VertexWeightedGraph&, const std::vector<int>&, int)> prefilter;
};

void augment_search(const AugmentPlan& plan);

}  // namespace specgraph
