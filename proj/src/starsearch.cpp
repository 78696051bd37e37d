#include "specgraph/starsearch.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "specgraph/augment.hpp"
#include "specgraph/canonical.hpp"
#include "specgraph/glg.hpp"

namespace specgraph {

// ==== the exact bilinear form ====

namespace {

bool rat_inverse(RatMatrix m, RatMatrix& out) {
    int n = (int)m.size();
    RatMatrix inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n && piv < 0; ++r)
            if (m[r][col] != 0) piv = r;
        if (piv < 0) return false;
        std::swap(m[col], m[piv]);
        std::swap(inv[col], inv[piv]);
        Rat d = m[col][col];
        for (int j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    out = std::move(inv);
    return true;
}

}  // namespace

StarInstance make_star_instance(const Graph& base, long long mu) {
    int n = base.order();
    RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = mu;
    for (auto [u, v] : base.edges()) {
        m[u][v] = -1;
        m[v][u] = -1;
    }
    StarInstance inst{base, mu, {}};
    if (!rat_inverse(std::move(m), inst.resolvent))
        throw std::runtime_error("star instance: mu is an eigenvalue of the base");
    return inst;
}

Rat star_bilinear(const StarInstance& inst, uint64_t b1, uint64_t b2) {
    int n = inst.base.order();
    uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    Rat total(0);
    for (uint64_t mi = b1 & full; mi; mi &= mi - 1) {
        int i = __builtin_ctzll(mi);
        for (uint64_t mj = b2 & full; mj; mj &= mj - 1) total += inst.resolvent[i][__builtin_ctzll(mj)];
    }
    return total;
}

// ==== compatibility graph ====

namespace {

CompatGraph compat_graph_of(const StarInstance& inst) {
    int n = inst.base.order();
    CompatGraph cg;
    // resolvent rows summed over each candidate's bits, so pair values cost
    // O(n) instead of O(n^2)
    std::vector<std::vector<Rat>> rows;
    Rat target(inst.mu);
    for (uint64_t b = 1; b < (1ull << n); ++b) {
        std::vector<Rat> row(n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (uint64_t m = b; m; m &= m - 1) row[i] += inst.resolvent[i][__builtin_ctzll(m)];
        Rat self(0);
        for (uint64_t m = b; m; m &= m - 1) self += row[__builtin_ctzll(m)];
        if (self == target) {
            cg.vectors.push_back(b);
            rows.push_back(std::move(row));
        }
    }
    int nv = (int)cg.vectors.size();
    cg.value.assign(nv, std::vector<signed char>(nv, 2));
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) {
            Rat v(0);
            for (uint64_t m = cg.vectors[i]; m; m &= m - 1) v += rows[j][__builtin_ctzll(m)];
            signed char label = 2;
            if (v == -1)
                label = -1;
            else if (v == 0)
                label = 0;
            cg.value[i][j] = cg.value[j][i] = label;
        }
    return cg;
}

// base plus the clique vertices; adj(i, j) tells whether extension vertices
// i and j are joined
Graph build_extension(const Graph& base, const std::vector<uint64_t>& clique,
                      const std::function<bool(int, int)>& adj) {
    int n = base.order();
    int k = (int)clique.size();
    Graph g(n + k);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    for (int i = 0; i < k; ++i)
        for (uint64_t m = clique[i]; m; m &= m - 1) g.add_edge(__builtin_ctzll(m), n + i);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (adj(i, j)) g.add_edge(n + i, n + j);
    return g;
}

Graph assemble(const Graph& base, long long mu, const std::vector<uint64_t>& clique,
               const std::function<bool(int, int)>& adj) {
    Graph g = build_extension(base, clique, adj);
    long long mult = multiplicity(adjacency_matrix(g), mu);
    if (mult != (long long)clique.size()) throw std::runtime_error("extend: multiplicity mismatch");
    return g;
}

}  // namespace

CompatGraph compat_graph(const Graph& base, long long mu) {
    return compat_graph_of(make_star_instance(base, mu));
}

Graph extend(const Graph& base, const std::vector<uint64_t>& clique, long long mu) {
    StarInstance inst = make_star_instance(base, mu);
    Rat target(mu);
    int k = (int)clique.size();
    std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) {
        if (star_bilinear(inst, clique[i], clique[i]) != target)
            throw std::runtime_error("extend: vector is not admissible");
        for (int j = i + 1; j < k; ++j) {
            Rat v = star_bilinear(inst, clique[i], clique[j]);
            if (v == -1)
                adj[i][j] = true;
            else if (v != 0)
                throw std::runtime_error("extend: vectors are not pairwise compatible");
        }
    }
    return assemble(base, mu, clique, [&](int i, int j) { return adj[i][j]; });
}

// ==== foundation enumeration ====

std::vector<Graph> enumerate_foundation() {
    std::vector<Graph> out;
    AugmentPlan plan;
    plan.max_vertices = 8;
    plan.weights = {{0, 8}};
    // smallest adjacency eigenvalue above -2 survives vertex deletion, so
    // the positive definite shift prunes hereditarily
    plan.classify = [](const VertexWeightedGraph& hw) {
        return is_positive_definite(shifted(adjacency_matrix(hw.h), 2)) ? ChildVerdict::keep
                                                                        : ChildVerdict::cut;
    };
    plan.visit = [&](const VertexWeightedGraph& hw, ChildVerdict) {
        if (hw.h.order() >= 6 && !is_generalized_line_graph(hw.h)) out.push_back(hw.h);
    };
    augment_search(plan);
    return out;
}

// ==== the extension pipeline ====

namespace {

// float adjacency extremes; exact decisions never rely on these
std::pair<double, double> adjacency_extremes(const Graph& g) {
    int n = g.order();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) {
        m(u, v) = 1.0;
        m(v, u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return {es.eigenvalues()(n - 1), es.eigenvalues()(0)};
}

// generous float screen: every adjacency eigenvalue close to an integer in
// [-2,3] and the top one close to 3.  the exact integral test follows for
// everything kept, so the screen only saves work
bool near_integral_radius_three(const Graph& g) {
    int n = g.order();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) {
        m(u, v) = 1.0;
        m(v, u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    for (int i = 0; i < n; ++i) {
        double ev = es.eigenvalues()(i);
        long long r = llround(ev);
        if (std::abs(ev - (double)r) > 1e-3 || r < -2 || r > 3) return false;
    }
    return llround(es.eigenvalues()(n - 1)) == 3;
}

void candidates_of_base(const Graph& base, int max_clique, std::vector<ExceptionalCandidate>& out) {
    // a candidate keeps every eigenvalue in [-2, 3], and both extremes are
    // monotone under induced-subgraph growth, so any sub-extension breaking
    // a bound kills its whole branch.  bases above radius 3 have none.
    if (adjacency_extremes(base).first > 3 + 1e-6) return;
    StarInstance inst = make_star_instance(base, -2);
    CompatGraph cg = compat_graph_of(inst);
    int nv = (int)cg.vectors.size();

    std::vector<int> clique;
    std::vector<uint64_t> masks;
    auto current = [&]() {
        masks.clear();
        for (int i : clique) masks.push_back(cg.vectors[i]);
        return build_extension(base, masks,
                               [&](int i, int j) { return cg.value[clique[i]][clique[j]] == -1; });
    };
    auto emit = [&](const Graph& g) {
        StructureReport rep = structure_report(g);
        if (!rep.connected || rep.bipartite) return;
        if (!near_integral_radius_three(g)) return;
        std::optional<Spectrum> spec = integral_spectrum(adjacency_matrix(g));
        if (!spec) return;
        if (spec->rbegin()->first != 3 || spec->begin()->first < -2) return;
        if (multiplicity(adjacency_matrix(g), -2) != (long long)clique.size())
            throw std::runtime_error("extend: multiplicity mismatch");
        if (is_generalized_line_graph(g)) return;
        out.push_back({g, *spec, base, (int)clique.size()});
    };
    std::function<void(int)> grow = [&](int start) {
        for (int i = start; i < nv; ++i) {
            bool ok = true;
            for (int j : clique) ok = ok && cg.compatible(j, i);
            if (!ok) continue;
            clique.push_back(i);
            Graph g = current();
            auto [top, bottom] = adjacency_extremes(g);
            if (top <= 3 + 1e-6 && bottom >= -2 - 1e-6) {
                emit(g);
                if ((int)clique.size() < max_clique) grow(i + 1);
            }
            clique.pop_back();
        }
    };
    grow(0);
}

}  // namespace

std::vector<ExceptionalCandidate> exceptional_candidates(const StarSearchLimits& limits) {
    std::vector<Graph> bases = enumerate_foundation();
    std::vector<std::vector<ExceptionalCandidate>> per_base(bases.size());

    int jobs = std::max(1, limits.jobs);
    auto work = [&](int t) {
        for (size_t i = t; i < bases.size(); i += jobs)
            candidates_of_base(bases[i], limits.max_clique, per_base[i]);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    // first occurrence in base order wins, so the result is independent of
    // the thread count
    std::map<CanonicalKey, ExceptionalCandidate> dedup;
    for (auto& bucket : per_base)
        for (auto& cand : bucket) dedup.try_emplace(canonical_key(cand.g), std::move(cand));

    std::vector<ExceptionalCandidate> out;
    for (auto& [key, cand] : dedup) out.push_back(std::move(cand));
    std::sort(out.begin(), out.end(), [](const ExceptionalCandidate& a, const ExceptionalCandidate& b) {
        if (a.g.order() != b.g.order()) return a.g.order() < b.g.order();
        return canonical_key(a.g) < canonical_key(b.g);
    });
    return out;
}

// ==== star sets ====

std::pair<std::vector<int>, Graph> find_star_set(const Graph& g, long long mu) {
    int n = g.order();
    long long k = multiplicity(adjacency_matrix(g), mu);
    if (k == 0) throw std::runtime_error("star set: mu is not an eigenvalue");

    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        std::vector<int> rest;
        uint64_t in = 0;
        for (int v : comb) in |= 1ull << v;
        for (int v = 0; v < n; ++v)
            if (!((in >> v) & 1)) rest.push_back(v);
        Graph comp = induced_subgraph(g, rest);
        if (multiplicity(adjacency_matrix(comp), mu) == 0) return {comb, comp};

        int i = (int)k - 1;
        while (i >= 0 && comb[i] == n - (int)k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < (int)k; ++j) comb[j] = comb[j - 1] + 1;
    }
    throw std::runtime_error("star set: none found");
}

std::vector<ExceptionalCandidate> triangle_free_filter(const std::vector<ExceptionalCandidate>& cands) {
    std::vector<ExceptionalCandidate> out;
    for (const ExceptionalCandidate& c : cands)
        if (structure_report(c.g).triangle_count == 0) out.push_back(c);
    return out;
}

}  // namespace specgraph
