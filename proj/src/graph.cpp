#include "specgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace specgraph {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > max_order) throw std::runtime_error("graph order out of range");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::runtime_error("vertex out of range");
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::runtime_error("self-loop rejected");
    adj_[u] |= uint64_t(1) << v;
    adj_[v] |= uint64_t(1) << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(uint64_t(1) << v);
    adj_[v] &= ~(uint64_t(1) << u);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    uint64_t r = adj_[v];
    while (r) {
        int u = std::countr_zero(r);
        out.push_back(u);
        r &= r - 1;
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

// ==== graph6 ====
//
// N(n) is one byte n+63 for n <= 62, else '~' plus three bytes carrying n in
// 18 bits.  The body packs the upper triangle column by column, most
// significant bit first, six bits per byte, each byte offset by 63.

Graph parse_graph6(const std::string& text) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (text.size() < pos + k) throw std::runtime_error("graph6: truncated header");
    };
    need(1);
    long n;
    unsigned char c0 = text[pos];
    if (c0 == '~') {
        ++pos;
        need(3);
        n = 0;
        for (int i = 0; i < 3; ++i) {
            unsigned char c = text[pos + i];
            if (c == '~' && i == 0) throw std::runtime_error("graph6: bad header");
            if (c < 63 || c > 126) throw std::runtime_error("graph6: bad header");
            n = (n << 6) | (c - 63);
        }
        pos += 3;
    } else {
        if (c0 < 63 || c0 > 126) throw std::runtime_error("graph6: bad header");
        n = c0 - 63;
        ++pos;
    }
    if (n > Graph::max_order) throw std::runtime_error("graph6: order above 64 unsupported");

    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size()) - static_cast<long>(pos) < nbytes)
        throw std::runtime_error("graph6: truncated body");
    if (static_cast<long>(text.size()) - static_cast<long>(pos) > nbytes)
        throw std::runtime_error("graph6: trailing garbage");

    long bit = 0;
    for (long b = 0; b < nbytes; ++b) {
        unsigned char c = text[pos + b];
        if (c < 63 || c > 126) throw std::runtime_error("graph6: bad byte");
        int val = c - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            int on = (val >> k) & 1;
            if (bit >= nbits) {
                if (on) throw std::runtime_error("graph6: nonzero padding");
                continue;
            }
            if (on) {
                // bit index -> (row i, column j), j = 1.., i < j
                long t = bit;
                int j = 1;
                while (t >= j) t -= j, ++j;
                g.add_edge(static_cast<int>(t), j);
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int val = 0, k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            val = (val << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++k == 6) {
                out.push_back(static_cast<char>(val + 63));
                val = 0;
                k = 0;
            }
        }
    }
    if (k > 0) out.push_back(static_cast<char>((val << (6 - k)) + 63));
    return out;
}

// ==== structure ====

StructureReport structure_report(const Graph& g) {
    int n = g.order();
    StructureReport rep;
    rep.degrees.resize(n);
    for (int v = 0; v < n; ++v) rep.degrees[v] = g.degree(v);

    rep.dist.assign(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        auto& d = rep.dist[s];
        d[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            uint64_t r = g.row(u);
            while (r) {
                int v = std::countr_zero(r);
                r &= r - 1;
                if (d[v] < 0) {
                    d[v] = d[u] + 1;
                    q.push(v);
                }
            }
        }
    }

    rep.connected = n > 0;
    int diam = 0;
    for (int u = 0; u < n && rep.connected; ++u)
        for (int v = 0; v < n; ++v) {
            if (rep.dist[u][v] < 0) {
                rep.connected = false;
                break;
            }
            diam = std::max(diam, rep.dist[u][v]);
        }
    if (rep.connected && n > 0) rep.diameter = diam;

    // 2-coloring per component
    rep.bipartite = true;
    std::vector<int> color(n, -1);
    for (int s = 0; s < n && rep.bipartite; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && rep.bipartite) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    rep.bipartite = false;
                    break;
                }
            }
        }
    }

    long long tri = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) tri += std::popcount(g.row(u) & g.row(v));
    rep.triangle_count = tri / 3;
    return rep;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    if (vs.empty()) throw std::runtime_error("induced_subgraph: empty vertex set");
    Graph out(static_cast<int>(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph cocktail_party(int k) {
    if (k < 0) throw std::runtime_error("cocktail_party: negative size");
    Graph g(2 * k);
    for (int u = 0; u < 2 * k; ++u)
        for (int v = u + 1; v < 2 * k; ++v)
            if (!(u / 2 == v / 2)) g.add_edge(u, v);
    return g;
}

std::string to_dot(const Graph& g, const std::vector<std::string>* labels) {
    std::ostringstream os;
    os << "graph {\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  " << v;
        if (labels && v < static_cast<int>(labels->size()))
            os << " [label=\"" << (*labels)[v] << "\"]";
        os << ";\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

VertexWeightedGraph::VertexWeightedGraph(Graph g, std::vector<int> w)
    : h(std::move(g)), f(std::move(w)) {
    if (static_cast<int>(f.size()) != h.order())
        throw std::runtime_error("weight vector length mismatch");
    for (int w_ : f)
        if (w_ < 0) throw std::runtime_error("negative vertex weight");
}

int VertexWeightedGraph::total_weight() const {
    int s = 0;
    for (int w : f) s += w;
    return s;
}

bool operator==(const VertexWeightedGraph& a, const VertexWeightedGraph& b) {
    return a.h == b.h && a.f == b.f;
}

}  // namespace specgraph
