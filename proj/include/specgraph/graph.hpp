#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace specgraph {

// Simple undirected graph on at most 64 vertices.
// Adjacency is kept as one 64-bit row per vertex; bit v of row(u) is the
// edge uv.  Rows stay symmetric and the diagonal stays zero.
class Graph {
public:
    static constexpr int max_order = 64;

    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int size() const;

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    uint64_t row(int v) const { return adj_[v]; }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<uint64_t> adj_;

    void check_vertex(int v) const;
};

Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// All distances, plus the global facts derived from them.  Disconnected
// graphs have no diameter; unreachable pairs hold -1.
struct StructureReport {
    std::vector<int> degrees;
    bool connected = false;
    bool bipartite = false;
    std::optional<int> diameter;
    long long triangle_count = 0;
    std::vector<std::vector<int>> dist;
};

StructureReport structure_report(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);

// K_{k x 2}: every vertex adjacent to all others except its partner.
// cocktail_party(0) is the empty graph.
Graph cocktail_party(int k);

std::string to_dot(const Graph& g, const std::vector<std::string>* labels = nullptr);

// A graph together with a nonnegative integer weight per vertex.
struct VertexWeightedGraph {
    Graph h;
    std::vector<int> f;

    VertexWeightedGraph() = default;
    VertexWeightedGraph(Graph g, std::vector<int> w);

    int total_weight() const;  // |f|
};

bool operator==(const VertexWeightedGraph& a, const VertexWeightedGraph& b);

}  // namespace specgraph
