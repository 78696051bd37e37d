#include "specgraph/glg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "specgraph/canonical.hpp"

namespace specgraph {

namespace {

// ==== construction layout ====

// petal vertex ids follow the edge block: pair p at vertex x occupies two
// consecutive slots, partner flag last
struct GlgLayout {
    std::vector<std::pair<int, int>> edges;  // edge block
    std::vector<std::array<int, 2>> petals;  // (vertex, petal index)
};

GlgLayout layout_of(const VertexWeightedGraph& hw) {
    GlgLayout lay;
    lay.edges = hw.h.edges();
    for (int x = 0; x < hw.h.order(); ++x)
        for (int p = 0; p < hw.f[x]; ++p) lay.petals.push_back({x, p});
    return lay;
}

}  // namespace

Graph generalized_line_graph(const VertexWeightedGraph& hw) {
    GlgLayout lay = layout_of(hw);
    int ne = (int)lay.edges.size();
    int np = (int)lay.petals.size();
    Graph g(ne + 2 * np);
    for (int i = 0; i < ne; ++i)
        for (int j = i + 1; j < ne; ++j) {
            auto [a, b] = lay.edges[i];
            auto [c, d] = lay.edges[j];
            if (a == c || a == d || b == c || b == d) g.add_edge(i, j);
        }
    for (int p = 0; p < np; ++p) {
        int x = lay.petals[p][0];
        for (int s = 0; s < 2; ++s) {
            int v = ne + 2 * p + s;
            for (int i = 0; i < ne; ++i)
                if (lay.edges[i].first == x || lay.edges[i].second == x) g.add_edge(i, v);
            for (int q = 0; q < p; ++q)
                if (lay.petals[q][0] == x)
                    for (int t = 0; t < 2; ++t) g.add_edge(ne + 2 * q + t, v);
        }
        // the pair itself stays non-adjacent
    }
    return g;
}

Graph line_graph(const Graph& h) {
    return generalized_line_graph({h, std::vector<int>(h.order(), 0)});
}

IntMatrix q_matrix(const VertexWeightedGraph& hw) {
    int n = hw.h.order();
    IntMatrix q(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) {
        q[i][i] = hw.h.degree(i) + 2 * hw.f[i];
        for (int j = 0; j < n; ++j)
            if (i != j && hw.h.adjacent(i, j)) q[i][j] = 1;
    }
    return q;
}

IntMatrix incidence_matrix(const VertexWeightedGraph& hw) {
    GlgLayout lay = layout_of(hw);
    int nv = hw.h.order();
    int ne = (int)lay.edges.size();
    int np = (int)lay.petals.size();
    IntMatrix n(nv + np, std::vector<Int>(ne + 2 * np, 0));
    for (int i = 0; i < ne; ++i) {
        n[lay.edges[i].first][i] = 1;
        n[lay.edges[i].second][i] = 1;
    }
    for (int p = 0; p < np; ++p) {
        int x = lay.petals[p][0];
        n[x][ne + 2 * p] = 1;
        n[x][ne + 2 * p + 1] = 1;
        n[nv + p][ne + 2 * p] = 1;
        n[nv + p][ne + 2 * p + 1] = -1;
    }
    return n;
}

bool verify_incidence_identities(const VertexWeightedGraph& hw) {
    IntMatrix n = incidence_matrix(hw);
    int nv = hw.h.order();
    int np = hw.total_weight();
    int rows = nv + np;
    int cols = hw.h.size() + 2 * np;  // explicit, so empty blocks keep their shape

    IntMatrix gram(cols, std::vector<Int>(cols, 0));
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < cols; ++j)
            for (int r = 0; r < rows; ++r) gram[i][j] += n[r][i] * n[r][j];
    if (gram != shifted(adjacency_matrix(generalized_line_graph(hw)), 2)) return false;

    IntMatrix outer(rows, std::vector<Int>(rows, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j)
            for (int c = 0; c < cols; ++c) outer[i][j] += n[i][c] * n[j][c];
    IntMatrix q = q_matrix(hw);
    IntMatrix block(rows, std::vector<Int>(rows, 0));
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) block[i][j] = q[i][j];
    for (int p = 0; p < np; ++p) block[nv + p][nv + p] = 2;
    return outer == block;
}

bool spectra_shift_check(const VertexWeightedGraph& hw) {
    IntPoly lhs = char_poly(shifted(adjacency_matrix(generalized_line_graph(hw)), 2));
    IntPoly rhs = char_poly(q_matrix(hw));
    for (int p = 0; p < hw.total_weight(); ++p) rhs = poly_mul(rhs, {-2, 1});
    return poly_strip_x(lhs) == poly_strip_x(rhs);
}

// ==== recognition ====

namespace {

// vectors with two nonzero entries +-1; Gram target is A + 2I.  The gauge:
// vertices are processed in BFS order, fresh coordinates take the next
// index with sign +1, so every root shows up in the search tree.
struct DVec {
    int c[2];
    int s[2];
};

int dvec_dot(const DVec& a, const DVec& b) {
    int d = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (a.c[i] == b.c[j]) d += a.s[i] * b.s[j];
    return d;
}

std::vector<int> bfs_order(const Graph& g) {
    int n = g.order();
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> queue{s};
        seen[s] = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            order.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
        }
    }
    return order;
}

// read (H, f) back off a completed representation: a support carrying two
// vertices is a petal pair, a lone support is an edge.  The petal slot is
// the coordinate no other support touches; fails when no slot exists.
std::optional<VertexWeightedGraph> reconstruct_root(const std::vector<DVec>& vecs) {
    std::map<std::pair<int, int>, int> support_count;
    for (const DVec& v : vecs) {
        std::pair<int, int> sup{std::min(v.c[0], v.c[1]), std::max(v.c[0], v.c[1])};
        ++support_count[sup];
    }
    std::map<int, int> usage;  // coordinate -> number of distinct supports
    for (const auto& [sup, cnt] : support_count) {
        (void)cnt;
        ++usage[sup.first];
        ++usage[sup.second];
    }

    std::vector<std::pair<int, int>> h_edges;
    std::map<int, int> petal_at;
    for (const auto& [sup, cnt] : support_count) {
        if (cnt == 1) {
            h_edges.push_back(sup);
        } else if (cnt == 2) {
            bool a_shared = usage[sup.first] > 1, b_shared = usage[sup.second] > 1;
            if (a_shared && b_shared) return std::nullopt;
            int anchor = a_shared ? sup.first : (b_shared ? sup.second : sup.first);
            ++petal_at[anchor];
        } else {
            return std::nullopt;
        }
    }

    std::set<int> h_coords;
    for (auto [a, b] : h_edges) {
        h_coords.insert(a);
        h_coords.insert(b);
    }
    for (const auto& [x, k] : petal_at) {
        (void)k;
        h_coords.insert(x);
    }

    std::map<int, int> index_of;
    for (int c : h_coords) index_of.emplace(c, (int)index_of.size());
    Graph h((int)h_coords.size());
    for (auto [a, b] : h_edges) h.add_edge(index_of[a], index_of[b]);
    std::vector<int> f(h.order(), 0);
    for (const auto& [x, k] : petal_at) f[index_of[x]] = k;
    return VertexWeightedGraph{h, f};
}

struct DSearch {
    const Graph& g;
    std::vector<int> order;
    std::vector<DVec> vecs;
    bool decide_only = false;
    bool found = false;
    CanonicalKey target;
    std::optional<VertexWeightedGraph> best;
    CanonicalKey best_key;

    explicit DSearch(const Graph& graph) : g(graph), order(bfs_order(graph)) {
        target = canonical_key(graph);
    }

    void complete() {
        auto root = reconstruct_root(vecs);
        if (!root) return;
        if (canonical_key(generalized_line_graph(*root)) != target) return;
        found = true;
        if (decide_only) return;
        CanonicalKey key = canonical_key(*root);
        if (!best || root->h.order() < best->h.order() ||
            (root->h.order() == best->h.order() && key < best_key)) {
            best = std::move(root);
            best_key = std::move(key);
        }
    }

    void extend(size_t i, int next_coord) {
        if (found && decide_only) return;
        if (i == order.size()) {
            complete();
            return;
        }
        int v = order[i];

        auto try_vec = [&](const DVec& cand, int fresh_used) {
            for (size_t k = 0; k < i; ++k) {
                int want = g.adjacent(order[k], v) ? 1 : 0;
                if (dvec_dot(cand, vecs[k]) != want) return;
            }
            vecs.push_back(cand);
            extend(i + 1, next_coord + fresh_used);
            vecs.pop_back();
        };

        for (int a = 0; a < next_coord; ++a)
            for (int sa : {1, -1}) {
                try_vec({{a, next_coord}, {sa, 1}}, 1);
                for (int b = a + 1; b < next_coord; ++b)
                    for (int sb : {1, -1}) try_vec({{a, b}, {sa, sb}}, 0);
            }
        try_vec({{next_coord, next_coord + 1}, {1, 1}}, 2);
    }
};

}  // namespace

bool has_d_representation(const Graph& g) {
    if (g.order() == 0) return true;
    if (!is_positive_semidefinite(shifted(adjacency_matrix(g), 2))) return false;
    DSearch search(g);
    search.decide_only = true;
    search.extend(0, 0);
    return search.found;
}

std::optional<VertexWeightedGraph> is_generalized_line_graph(const Graph& g) {
    if (g.order() > 0 && !is_positive_semidefinite(shifted(adjacency_matrix(g), 2)))
        return std::nullopt;
    DSearch search(g);
    search.extend(0, 0);
    return search.best;
}

}  // namespace specgraph
