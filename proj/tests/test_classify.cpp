#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "specgraph/canonical.hpp"
#include "specgraph/classify.hpp"
#include "specgraph/exact.hpp"
#include "specgraph/glg.hpp"
#include "specgraph/graph.hpp"

using namespace specgraph;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    return g;
}

std::vector<std::string> fingerprint(const ClassificationReport& rep) {
    std::vector<std::string> out;
    for (const auto& e : rep.entries) out.push_back(write_graph6(e.g) + " " + e.row_name);
    return out;
}

}  // namespace

// ==== expected table ====

TEST_CASE("multiplicity rows read off a spectrum") {
    REQUIRE(multiplicity_row({{3, 1}, {-1, 3}}) == MultiplicityRow{1, 0, 0, 0, 3, 0});
    REQUIRE(multiplicity_row({{3, 1}, {1, 5}, {-2, 4}}) == MultiplicityRow{1, 0, 5, 0, 0, 4});
    REQUIRE(multiplicity_row({}) == MultiplicityRow{0, 0, 0, 0, 0, 0});
    REQUIRE_THROWS(multiplicity_row({{4, 1}}));
    REQUIRE_THROWS(multiplicity_row({{-3, 2}}));
}

TEST_CASE("the expected table is internally consistent") {
    const auto& rows = expected_classification();
    REQUIRE(rows.size() == 22);

    int glg = 0, eg = 0;
    std::set<std::string> names;
    for (const auto& r : rows) {
        names.insert(r.name);
        (r.exceptional ? eg : glg)++;

        long long total = 0, trace = 0, energy = 0;
        const long long eig[6] = {3, 2, 1, 0, -1, -2};
        for (int i = 0; i < 6; ++i) {
            total += r.mults[i];
            trace += eig[i] * r.mults[i];
            energy += eig[i] * eig[i] * r.mults[i];
        }
        CAPTURE(r.name);
        REQUIRE(total == r.n);
        REQUIRE(r.mults[0] == 1);  // simple radius
        REQUIRE(trace == 0);       // adjacency has a zero diagonal
        REQUIRE(energy % 2 == 0);  // sum of squares counts edge ends
        REQUIRE(energy > 0);
    }
    REQUIRE(glg == 9);
    REQUIRE(eg == 13);
    REQUIRE(names.size() == 22);

    // orders never decrease down the table
    for (size_t i = 0; i + 1 < rows.size(); ++i) REQUIRE(rows[i].n <= rows[i + 1].n);

    // exactly one cospectral pair shares a row body
    std::map<std::pair<int, MultiplicityRow>, int> bodies;
    for (const auto& r : rows) bodies[{r.n, r.mults}]++;
    int repeated = 0;
    for (const auto& [body, count] : bodies) {
        REQUIRE(count <= 2);
        if (count == 2) ++repeated;
    }
    REQUIRE(repeated == 1);
    REQUIRE(bodies.at({11, MultiplicityRow{1, 1, 3, 1, 2, 3}}) == 2);
}

// ==== full classification ====

TEST_CASE("classification report assembles the full table") {
    ClassifyOptions opts;
    opts.root_cap = 12;
    ClassificationReport rep = classify_all(opts);

    REQUIRE(rep.entries.size() == 22);
    REQUIRE(rep.glg_count == 9);
    REQUIRE(rep.exceptional_count == 13);
    REQUIRE(rep.diffs.empty());
    REQUIRE(rep.matches_expected);

    // sorted by order then canonical key, all keys distinct
    std::set<CanonicalKey> keys;
    for (size_t i = 0; i + 1 < rep.entries.size(); ++i) {
        auto a = std::make_pair(rep.entries[i].g.order(), canonical_key(rep.entries[i].g));
        auto b = std::make_pair(rep.entries[i + 1].g.order(), canonical_key(rep.entries[i + 1].g));
        REQUIRE(a < b);
    }
    for (const auto& e : rep.entries) keys.insert(canonical_key(e.g));
    REQUIRE(keys.size() == 22);

    // every entry re-verifies from scratch and matches its named row
    std::map<std::string, const ExpectedRow*> by_name;
    for (const auto& r : expected_classification()) by_name[r.name] = &r;
    std::set<std::string> used;
    for (const auto& e : rep.entries) {
        CAPTURE(e.row_name);
        StructureReport sr = structure_report(e.g);
        REQUIRE(sr.connected);
        REQUIRE_FALSE(sr.bipartite);
        auto spec = integral_spectrum(adjacency_matrix(e.g));
        REQUIRE(spec.has_value());
        REQUIRE(*spec == e.spectrum);
        REQUIRE(spec->rbegin()->first == 3);
        REQUIRE(spec->begin()->first >= -2);

        REQUIRE(by_name.count(e.row_name) == 1);
        const ExpectedRow& row = *by_name[e.row_name];
        REQUIRE(row.n == e.g.order());
        REQUIRE(row.exceptional == e.exceptional);
        REQUIRE(multiplicity_row(*spec) == row.mults);
        REQUIRE(used.insert(e.row_name).second);  // each row claimed once
    }
    REQUIRE(used.size() == 22);
}

TEST_CASE("entries carry verifiable witnesses") {
    ClassifyOptions opts;
    opts.root_cap = 12;
    ClassificationReport rep = classify_all(opts);

    for (const auto& e : rep.entries) {
        CAPTURE(e.row_name);
        if (e.exceptional) {
            REQUIRE(e.base.has_value());
            REQUIRE(e.clique_size >= 1);
            REQUIRE(e.base->order() + e.clique_size == e.g.order());
            // the base sits as the leading vertices of the candidate
            std::vector<int> lead(e.base->order());
            for (int i = 0; i < e.base->order(); ++i) lead[i] = i;
            REQUIRE(canonical_key(induced_subgraph(e.g, lead)) == canonical_key(*e.base));
            REQUIRE_FALSE(is_generalized_line_graph(e.g).has_value());
            REQUIRE_FALSE(e.root.has_value());
        } else {
            REQUIRE(e.root.has_value());
            REQUIRE(canonical_key(generalized_line_graph(*e.root)) == canonical_key(e.g));
            REQUIRE_FALSE(e.base.has_value());
        }
    }

    // the smallest entry is the complete graph on four vertices, and the
    // triangle-free exceptional one is the Petersen graph
    REQUIRE(canonical_key(rep.entries.front().g) == canonical_key(complete(4)));
    auto pet = std::find_if(rep.entries.begin(), rep.entries.end(), [](const ClassifiedGraph& e) {
        return canonical_key(e.g) == canonical_key(petersen());
    });
    REQUIRE(pet != rep.entries.end());
    REQUIRE(pet->exceptional);
    REQUIRE(pet->spectrum == Spectrum{{3, 1}, {1, 5}, {-2, 4}});
}

TEST_CASE("the report is deterministic across runs and job counts") {
    ClassifyOptions opts;
    opts.root_cap = 10;  // all nine roots fit under ten vertices
    ClassificationReport first = classify_all(opts);
    ClassificationReport second = classify_all(opts);
    opts.jobs = 3;
    ClassificationReport parallel = classify_all(opts);

    REQUIRE(first.entries.size() == 22);
    REQUIRE(first.matches_expected);
    REQUIRE(fingerprint(first) == fingerprint(second));
    REQUIRE(fingerprint(first) == fingerprint(parallel));
}

// ==== brute force ====

TEST_CASE("the brute force sweep finds the lone four-vertex survivor") {
    std::vector<Graph> hits = brute_force_crosscheck(4);
    REQUIRE(hits.size() == 1);
    REQUIRE(canonical_key(hits[0]) == canonical_key(complete(4)));
}

TEST_CASE("brute force counts by order match the table up to eight vertices") {
    std::vector<Graph> hits = brute_force_crosscheck(8);
    std::map<int, int> by_order;
    for (const auto& g : hits) by_order[g.order()]++;
    REQUIRE(by_order == std::map<int, int>{{4, 1}, {5, 1}, {6, 1}, {7, 3}, {8, 4}});

    ClassifyOptions opts;
    opts.root_cap = 12;
    ClassificationReport rep = classify_all(opts);
    std::set<CanonicalKey> expected;
    for (const auto& e : rep.entries)
        if (e.g.order() <= 8) expected.insert(canonical_key(e.g));
    std::set<CanonicalKey> found;
    for (const auto& g : hits) found.insert(canonical_key(g));
    REQUIRE(found == expected);
}

TEST_CASE("the brute force cap is enforced") {
    REQUIRE_THROWS(brute_force_crosscheck(14));
}
