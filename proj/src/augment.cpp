#include "specgraph/augment.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "specgraph/canonical.hpp"

namespace specgraph {

namespace {

bool connected_without(const Graph& g, int skip) {
    int n = g.order();
    if (n <= 2) return true;
    int start = (skip == 0) ? 1 : 0;
    uint64_t live = ((n == 64) ? ~0ull : ((1ull << n) - 1)) & ~(1ull << skip);
    uint64_t seen = 1ull << start;
    uint64_t frontier = seen;
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            int v = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            next |= g.row(v) & live & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == live;
}

VertexWeightedGraph delete_vertex(const VertexWeightedGraph& g, int v) {
    std::vector<int> keep;
    std::vector<int> f;
    for (int u = 0; u < g.h.order(); ++u)
        if (u != v) {
            keep.push_back(u);
            f.push_back(g.f[u]);
        }
    return {induced_subgraph(g.h, keep), f};
}

// deleting the non-cut vertex with the largest canonical position must
// recover the parent; the rule is isomorphism-invariant, so each class
// is accepted from exactly one parent class
bool accepts_parent(const VertexWeightedGraph& child, const CanonicalKey& parent_key) {
    int n = child.h.order();
    std::vector<int> perm = canonical_labeling(child.h, child.f);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    int best = -1;
    for (int v = 0; v < n; ++v)
        if (connected_without(child.h, v) && (best < 0 || pos[v] > pos[best])) best = v;
    if (best < 0) throw std::runtime_error("augment: no removable vertex");
    return canonical_key(delete_vertex(child, best)) == parent_key;
}

struct Accepted {
    VertexWeightedGraph g;
    ChildVerdict verdict;
    CanonicalKey key;
};

void expand_parent(const VertexWeightedGraph& parent, const AugmentPlan& plan,
                   std::vector<Accepted>& out) {
    int n = parent.h.order();
    CanonicalKey parent_key = canonical_key(parent);
    std::set<CanonicalKey> siblings;

    Graph base(n + 1);
    for (auto [u, v] : parent.h.edges()) base.add_edge(u, v);
    if (plan.prepare) plan.prepare(parent);

    for (const WeightOption& wo : plan.weights) {
        int maxdeg = std::min(wo.max_new_degree, n);
        for (int k = 1; k <= maxdeg; ++k) {
            std::vector<int> comb(k);
            std::iota(comb.begin(), comb.end(), 0);
            while (true) {
                if (!plan.prefilter || plan.prefilter(parent, comb, wo.weight)) {
                    Graph h = base;
                    for (int u : comb) h.add_edge(u, n);
                    std::vector<int> f = parent.f;
                    f.push_back(wo.weight);
                    VertexWeightedGraph child{std::move(h), std::move(f)};

                    ChildVerdict verdict = plan.classify(child);
                    if (verdict != ChildVerdict::cut) {
                        CanonicalKey key = canonical_key(child);
                        if (siblings.find(key) == siblings.end() && accepts_parent(child, parent_key)) {
                            siblings.insert(key);
                            out.push_back({std::move(child), verdict, std::move(key)});
                        }
                    }
                }

                int i = k - 1;
                while (i >= 0 && comb[i] == n - k + i) --i;
                if (i < 0) break;
                ++comb[i];
                for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
    }
}

}  // namespace

void augment_search(const AugmentPlan& plan) {
    if (!plan.classify || !plan.visit) throw std::runtime_error("augment: missing callbacks");
    if (plan.max_vertices < 1) return;

    std::vector<Accepted> level;
    std::set<int> seed_weights;
    for (const WeightOption& wo : plan.weights)
        if (seed_weights.insert(wo.weight).second) {
            VertexWeightedGraph seed{Graph(1), {wo.weight}};
            ChildVerdict verdict = plan.classify(seed);
            if (verdict != ChildVerdict::cut)
                level.push_back({seed, verdict, canonical_key(seed)});
        }

    int jobs = std::max(1, plan.jobs);
    for (int n = 1;; ++n) {
        std::sort(level.begin(), level.end(),
                  [](const Accepted& a, const Accepted& b) { return a.key < b.key; });
        std::vector<VertexWeightedGraph> frontier;
        for (const Accepted& a : level) {
            plan.visit(a.g, a.verdict);
            if (a.verdict == ChildVerdict::keep) frontier.push_back(a.g);
        }
        if (n >= plan.max_vertices || frontier.empty()) break;

        std::vector<std::vector<Accepted>> buckets(jobs);
        auto work = [&](int t) {
            for (size_t i = t; i < frontier.size(); i += jobs)
                expand_parent(frontier[i], plan, buckets[t]);
        };
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t);
            for (auto& th : pool) th.join();
        }
        level.clear();
        for (auto& b : buckets)
            for (auto& a : b) level.push_back(std::move(a));
    }
}

}  // namespace specgraph
