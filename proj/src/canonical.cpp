#include "specgraph/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace specgraph {

namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

// Equitable refinement: split every cell by neighbor counts into every other
// cell until stable.  Fragment order inside a split is by count ascending,
// so the procedure commutes with isomorphism.
void refine(const Graph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t d = 0; d < p.size(); ++d) {
            uint64_t dmask = 0;
            for (int v : p[d]) dmask |= uint64_t(1) << v;
            for (size_t c = 0; c < p.size(); ++c) {
                if (p[c].size() <= 1) continue;
                std::map<int, Cell> groups;
                for (int v : p[c]) groups[std::popcount(g.row(v) & dmask)].push_back(v);
                if (groups.size() <= 1) continue;
                Partition next;
                next.reserve(p.size() + groups.size() - 1);
                for (size_t i = 0; i < p.size(); ++i) {
                    if (i == c)
                        for (auto& [cnt, cell] : groups) next.push_back(std::move(cell));
                    else
                        next.push_back(std::move(p[i]));
                }
                p = std::move(next);
                changed = true;
                d = p.size();  // restart splitter scan on the new partition
                break;
            }
        }
    }
}

std::string leaf_certificate(const Graph& g, const std::vector<int>& colors,
                             const std::vector<int>& perm) {
    int n = g.order();
    std::string cert;
    cert.reserve(2 + 4 * n + (n * n + 7) / 8);
    cert.push_back(static_cast<char>(n));
    for (int i = 0; i < n; ++i) {
        uint32_t c = static_cast<uint32_t>(colors[perm[i]]);
        for (int b = 24; b >= 0; b -= 8) cert.push_back(static_cast<char>((c >> b) & 0xff));
    }
    unsigned char acc = 0;
    int nb = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            acc = static_cast<unsigned char>((acc << 1) | (g.adjacent(perm[i], perm[j]) ? 1 : 0));
            if (++nb == 8) {
                cert.push_back(static_cast<char>(acc));
                acc = 0;
                nb = 0;
            }
        }
    if (nb) cert.push_back(static_cast<char>(acc << (8 - nb)));
    return cert;
}

struct Searcher {
    const Graph& g;
    const std::vector<int>& colors;
    std::string best;
    std::vector<int> best_perm;
    bool have_best = false;
    std::vector<std::vector<int>> automorphisms;

    Searcher(const Graph& g_, const std::vector<int>& c_) : g(g_), colors(c_) {}

    void run(Partition p, std::vector<int>& prefix) {
        refine(g, p);
        size_t branch = p.size();
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i].size() > 1) {
                branch = i;
                break;
            }
        if (branch == p.size()) {
            std::vector<int> perm;
            perm.reserve(p.size());
            for (auto& cell : p) perm.push_back(cell[0]);
            std::string cert = leaf_certificate(g, colors, perm);
            if (!have_best || cert < best) {
                best = std::move(cert);
                best_perm = perm;
                have_best = true;
            } else if (cert == best) {
                // best_perm and perm induce the same labeled graph; their
                // composition is an automorphism.
                int n = g.order();
                std::vector<int> inv(n), aut(n);
                for (int k = 0; k < n; ++k) inv[best_perm[k]] = k;
                for (int v = 0; v < n; ++v) aut[v] = perm[inv[v]];
                bool identity = true;
                for (int v = 0; v < n; ++v)
                    if (aut[v] != v) identity = false;
                if (!identity) automorphisms.push_back(std::move(aut));
            }
            return;
        }

        // Orbit pruning: skip a candidate equivalent to an earlier one under
        // an automorphism fixing every previously individualized vertex.
        std::vector<int> tried;
        for (int v : p[branch]) {
            bool skip = false;
            for (const auto& aut : automorphisms) {
                bool fixes = true;
                for (int x : prefix)
                    if (aut[x] != x) {
                        fixes = false;
                        break;
                    }
                if (!fixes) continue;
                for (int u : tried)
                    if (aut[u] == v || aut[v] == u) {
                        skip = true;
                        break;
                    }
                if (skip) break;
            }
            tried.push_back(v);
            if (skip) continue;

            Partition q;
            q.reserve(p.size() + 1);
            for (size_t i = 0; i < p.size(); ++i) {
                if (i == branch) {
                    q.push_back({v});
                    Cell rest;
                    for (int u : p[i])
                        if (u != v) rest.push_back(u);
                    q.push_back(std::move(rest));
                } else {
                    q.push_back(p[i]);
                }
            }
            prefix.push_back(v);
            run(std::move(q), prefix);
            prefix.pop_back();
        }
    }
};

std::vector<int> search(const Graph& g, const std::vector<int>& colors) {
    int n = g.order();
    if (n == 0) return {};
    // initial partition: cells grouped by color, ascending
    std::map<int, Cell> by_color;
    for (int v = 0; v < n; ++v) by_color[colors[v]].push_back(v);
    Partition p;
    for (auto& [c, cell] : by_color) p.push_back(std::move(cell));
    Searcher s(g, colors);
    std::vector<int> prefix;
    s.run(std::move(p), prefix);
    return s.best_perm;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.order())
        throw std::runtime_error("color vector length mismatch");
    return search(g, colors);
}

Graph apply_labeling(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(perm[i], perm[j])) out.add_edge(i, j);
    return out;
}

CanonicalKey canonical_key(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.order())
        throw std::runtime_error("color vector length mismatch");
    if (g.order() == 0) return std::string(1, '\0');
    auto perm = search(g, colors);
    return leaf_certificate(g, colors, perm);
}

CanonicalKey canonical_key(const Graph& g) {
    return canonical_key(g, std::vector<int>(g.order(), 0));
}

CanonicalKey canonical_key(const VertexWeightedGraph& hw) {
    return canonical_key(hw.h, hw.f);
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_key(a) == canonical_key(b);
}

bool isomorphic(const VertexWeightedGraph& a, const VertexWeightedGraph& b) {
    if (a.h.order() != b.h.order() || a.h.size() != b.h.size()) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace specgraph
