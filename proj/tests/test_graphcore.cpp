#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "specgraph/canonical.hpp"
#include "specgraph/graph.hpp"

using namespace specgraph;

namespace {

Graph petersen() {
    Graph g(10);
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph relabel(const Graph& g, std::mt19937& rng) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(perm[u], perm[v])) out.add_edge(u, v);
    return out;
}

// reference isomorphism test by trying all vertex permutations
bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.order() && ok; ++u)
            for (int v = u + 1; v < a.order() && ok; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("graph6 format oracle values") {
    CHECK(write_graph6(complete(4)) == "C~");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(parse_graph6("C~") == complete(4));
    CHECK(parse_graph6("@") == Graph(1));
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(20240817);
    for (int iter = 0; iter < 10000; ++iter) {
        int n = 1 + static_cast<int>(rng() % 64);
        Graph g = random_graph(rng, n, 0.3);
        Graph back = parse_graph6(write_graph6(g));
        REQUIRE(back == g);
    }
}

TEST_CASE("graph6 distinct error kinds") {
    CHECK_THROWS_WITH(parse_graph6(""), "graph6: truncated header");
    CHECK_THROWS_WITH(parse_graph6("C"), "graph6: truncated body");
    CHECK_THROWS_WITH(parse_graph6("C~~"), "graph6: trailing garbage");
    CHECK_THROWS_WITH(parse_graph6("C\x01"), "graph6: bad byte");
    CHECK_THROWS_WITH(parse_graph6(std::string(1, '\x20')), "graph6: bad header");
    // n = 63 and 64 take the long header
    Graph big(63);
    big.add_edge(0, 62);
    CHECK(parse_graph6(write_graph6(big)) == big);
    Graph big64(64);
    big64.add_edge(0, 63);
    big64.add_edge(5, 40);
    CHECK(parse_graph6(write_graph6(big64)) == big64);
}

TEST_CASE("graph6 write is injective on labeled graphs") {
    std::mt19937 rng(7);
    std::set<std::string> seen;
    int count = 0;
    for (int iter = 0; iter < 500; ++iter) {
        Graph g = random_graph(rng, 9, 0.5);
        if (seen.insert(write_graph6(g)).second) ++count;
    }
    // collisions could only come from equal labeled graphs
    std::set<std::string> again;
    for (const auto& s : seen) again.insert(write_graph6(parse_graph6(s)));
    CHECK(again.size() == seen.size());
}

TEST_CASE("structure report") {
    SECTION("Petersen") {
        auto rep = structure_report(petersen());
        CHECK(rep.connected);
        CHECK_FALSE(rep.bipartite);
        REQUIRE(rep.diameter.has_value());
        CHECK(*rep.diameter == 2);
        CHECK(rep.triangle_count == 0);
        for (int d : rep.degrees) CHECK(d == 3);
    }
    SECTION("K4") {
        auto rep = structure_report(complete(4));
        CHECK(rep.triangle_count == 4);
        CHECK(rep.diameter == 1);
    }
    SECTION("C6") {
        auto rep = structure_report(cycle(6));
        CHECK(rep.bipartite);
        CHECK(rep.diameter == 3);
    }
    SECTION("disconnected graph has no diameter") {
        Graph g(3);
        g.add_edge(0, 1);
        auto rep = structure_report(g);
        CHECK_FALSE(rep.connected);
        CHECK_FALSE(rep.diameter.has_value());
        CHECK(rep.dist[0][2] == -1);
    }
    SECTION("triangle count matches triple loop") {
        std::mt19937 rng(99);
        for (int iter = 0; iter < 50; ++iter) {
            Graph g = random_graph(rng, 12, 0.4);
            long long tri = 0;
            for (int a = 0; a < 12; ++a)
                for (int b = a + 1; b < 12; ++b)
                    for (int c = b + 1; c < 12; ++c)
                        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) ++tri;
            CHECK(structure_report(g).triangle_count == tri);
        }
    }
}

TEST_CASE("induced subgraph") {
    CHECK(induced_subgraph(complete(4), {0, 2, 3}) == complete(3));
    {
        auto outer = induced_subgraph(petersen(), {0, 1, 2, 3, 4});
        CHECK(isomorphic(outer, cycle(5)));
    }
    {
        Graph g = petersen();
        std::vector<int> all(10);
        std::iota(all.begin(), all.end(), 0);
        CHECK(induced_subgraph(g, all) == g);
    }
    SECTION("restricting twice equals restricting once") {
        std::mt19937 rng(5);
        Graph g = random_graph(rng, 10, 0.5);
        std::vector<int> first = {1, 3, 4, 6, 7, 9};
        std::vector<int> second = {0, 2, 4, 5};  // positions into first
        std::vector<int> composed;
        for (int i : second) composed.push_back(first[i]);
        CHECK(induced_subgraph(induced_subgraph(g, first), second) ==
              induced_subgraph(g, composed));
    }
    CHECK_THROWS(induced_subgraph(complete(3), {}));
}

TEST_CASE("cocktail party graphs") {
    CHECK(cocktail_party(0).order() == 0);
    {
        Graph cp1 = cocktail_party(1);
        CHECK(cp1.order() == 2);
        CHECK(cp1.size() == 0);
    }
    CHECK(isomorphic(cocktail_party(2), cycle(4)));
    {
        Graph cp3 = cocktail_party(3);
        CHECK(cp3.order() == 6);
        CHECK(cp3.size() == 12);
        for (int v = 0; v < 6; ++v) CHECK(cp3.degree(v) == 4);
    }
}

TEST_CASE("canonical key invariance") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_graph(rng, n, 0.4);
        CHECK(canonical_key(g) == canonical_key(relabel(g, rng)));
    }
    CHECK(canonical_key(complete(4)) != canonical_key(cycle(4)));
}

TEST_CASE("canonical key on weighted graphs") {
    Graph p3 = path(3);
    VertexWeightedGraph a(p3, {1, 0, 0});
    VertexWeightedGraph b(p3, {0, 0, 1});  // mirror image
    VertexWeightedGraph c(p3, {0, 1, 0});  // weight on the center
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK(canonical_key(a) != canonical_key(c));
    CHECK(canonical_key(a) != canonical_key(VertexWeightedGraph(p3, {0, 0, 0})));
    // color values matter exactly, not only the partition they induce
    CHECK(canonical_key(VertexWeightedGraph(p3, {2, 0, 0})) != canonical_key(a));
}

TEST_CASE("canonical key matches brute-force isomorphism for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        // bucket every labeled graph by key
        std::map<std::string, std::vector<uint32_t>> buckets;
        for (uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            Graph g(n);
            int k = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++k)
                    if ((mask >> k) & 1u) g.add_edge(u, v);
            buckets[canonical_key(g)].push_back(mask);
        }
        auto from_mask = [&](uint32_t mask) {
            Graph g(n);
            int k = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++k)
                    if ((mask >> k) & 1u) g.add_edge(u, v);
            return g;
        };
        // same key -> isomorphic (check every member against its bucket head)
        for (auto& [key, members] : buckets) {
            Graph rep = from_mask(members[0]);
            for (size_t i = 1; i < members.size(); ++i)
                REQUIRE(brute_isomorphic(rep, from_mask(members[i])));
        }
        // different key -> not isomorphic (bucket heads pairwise)
        std::vector<Graph> reps;
        for (auto& [key, members] : buckets) reps.push_back(from_mask(members[0]));
        for (size_t i = 0; i < reps.size(); ++i)
            for (size_t j = i + 1; j < reps.size(); ++j)
                REQUIRE_FALSE(brute_isomorphic(reps[i], reps[j]));
    }
}

TEST_CASE("dot output") {
    Graph k1(1);
    CHECK(to_dot(k1) == "graph {\n  0;\n}\n");
    Graph k2(2);
    k2.add_edge(0, 1);
    std::string dot = to_dot(k2);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    std::vector<std::string> labels = {"a", "b"};
    CHECK(to_dot(k2, &labels).find("label=\"a\"") != std::string::npos);
}

TEST_CASE("weighted graph invariants") {
    CHECK_THROWS(VertexWeightedGraph(path(3), {0, 1}));
    CHECK_THROWS(VertexWeightedGraph(path(2), {0, -1}));
    VertexWeightedGraph hw(path(3), {1, 2, 0});
    CHECK(hw.total_weight() == 3);
}
