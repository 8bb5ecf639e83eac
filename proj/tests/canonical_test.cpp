#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "pathkit/canonical.hpp"
#include "pathkit/graph.hpp"
#include "pathkit/graph6.hpp"

using namespace pathkit;

// ---------------------------------------------------------------------------
// Brute-force oracles. brute_canon (the minimum serialization over all n!
// relabelings) is a complete isomorphism invariant, so the library's canonical
// tokens must induce exactly the same partition into classes: same brute key
// <=> same canonical token. The tokens themselves are the library's own
// representatives and need not equal the brute minimum. Orbits come from an
// exhaustive scan of the permutations that fix the graph.
// ---------------------------------------------------------------------------

namespace {

std::string brute_canon(const Graph& g) {
    const int n = g.num_vertices();
    REQUIRE(n <= 7);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best = write_graph6(g.permuted(perm));
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, write_graph6(g.permuted(perm)));
    return best;
}

std::vector<int> brute_orbits(const Graph& g) {
    const int n = g.num_vertices();
    REQUIRE(n <= 7);
    std::vector<int> orbit(n);
    std::iota(orbit.begin(), orbit.end(), 0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (g.permuted(perm) != g) continue;
        for (int v = 0; v < n; ++v) {
            int a = std::min(v, perm[v]);
            int b = std::max(v, perm[v]);
            int lo = std::min(orbit[a], orbit[b]);
            // crude union: relabel every occurrence
            int hi = std::max(orbit[a], orbit[b]);
            if (lo != hi)
                for (int& o : orbit)
                    if (o == hi) o = lo;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return orbit;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

std::vector<int> random_perm(std::mt19937& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

}  // namespace

namespace {

void require_same_partition(const std::vector<Graph>& graphs) {
    std::map<std::string, std::string> brute_to_canon;
    std::map<std::string, std::string> canon_to_brute;
    for (const Graph& g : graphs) {
        std::string brute = brute_canon(g);
        std::string lib = canonical_form(g).canon_g6;
        auto [bit, bnew] = brute_to_canon.emplace(brute, lib);
        REQUIRE(bit->second == lib);  // isomorphic graphs share one token
        auto [cit, cnew] = canon_to_brute.emplace(lib, brute);
        REQUIRE(cit->second == brute);  // nonisomorphic graphs never collide
    }
}

}  // namespace

TEST_CASE("canonical tokens induce the isomorphism partition on all graphs up to 5 vertices") {
    std::vector<Graph> graphs;
    for (int n = 0; n <= 5; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (uint32_t mask = 0; mask < (uint32_t(1) << pairs.size()); ++mask) {
            Graph g(n);
            for (size_t e = 0; e < pairs.size(); ++e)
                if ((mask >> e) & 1) g.add_edge(pairs[e].first, pairs[e].second);
            graphs.push_back(std::move(g));
        }
    }
    require_same_partition(graphs);
}

TEST_CASE("canonical tokens induce the isomorphism partition on random 6- and 7-vertex graphs") {
    std::mt19937 rng(4242);
    std::vector<Graph> graphs;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 6 + int(rng() % 2);
        Graph g = random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
        for (int rep = 0; rep < 2; ++rep) graphs.push_back(g.permuted(random_perm(rng, n)));
        graphs.push_back(std::move(g));
    }
    require_same_partition(graphs);
}

TEST_CASE("the relabeling reproduces the canonical graph") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + int(rng() % 12);
        Graph g = random_graph(rng, n, 0.4);
        CanonicalForm cf = canonical_form(g);
        REQUIRE(cf.relabeling.size() == size_t(n));
        CHECK(write_graph6(g.permuted(cf.relabeling)) == cf.canon_g6);
        CHECK(parse_graph6(cf.canon_g6) == g.permuted(cf.relabeling));
    }
}

TEST_CASE("canonical tokens are invariant under relabeling") {
    std::mt19937 rng(1313);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + int(rng() % 19);
        Graph g = random_graph(rng, n, 0.35);
        const std::string base = canonical_form(g).canon_g6;
        for (int rep = 0; rep < 4; ++rep)
            REQUIRE(canonical_form(g.permuted(random_perm(rng, n))).canon_g6 == base);
    }

    Graph petersen = parse_graph6("IheA@GUAo");
    const std::string base = canonical_form(petersen).canon_g6;
    for (int rep = 0; rep < 10; ++rep)
        REQUIRE(canonical_form(petersen.permuted(random_perm(rng, 10))).canon_g6 == base);
}

TEST_CASE("canonical tokens separate nonisomorphic graphs") {
    CHECK(canonical_form(parse_graph6("C~")).canon_g6 == "C~");

    Graph two_triangles = graph_from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(canonical_form(cycle(6)).canon_g6 != canonical_form(two_triangles).canon_g6);

    Graph sw = graph_from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
    Graph star7 = graph_from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}});
    CHECK(canonical_form(sw).canon_g6 != canonical_form(star7).canon_g6);
}

TEST_CASE("orbits and generators are exact") {
    auto star = canonical_form_ex(graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(star.orbits == std::vector<int>{0, 1, 1, 1});

    auto c6 = canonical_form_ex(cycle(6));
    CHECK(c6.orbits == std::vector<int>{0, 0, 0, 0, 0, 0});

    auto p4 = canonical_form_ex(graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(p4.orbits == std::vector<int>{0, 1, 1, 0});

    std::mt19937 rng(77);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + int(rng() % 7);
        Graph g = random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
        auto res = canonical_form_ex(g);
        REQUIRE(res.orbits == brute_orbits(g));
        for (const auto& gen : res.generators) {
            REQUIRE(gen.size() == size_t(n));
            REQUIRE(g.permuted(gen) == g);
        }
    }
}

TEST_CASE("node budget is enforced and reported") {
    Graph k6(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) k6.add_edge(u, v);
    try {
        canonical_form_ex(k6, 1);
        FAIL("expected NodeBudgetExceeded");
    } catch (const NodeBudgetExceeded& e) {
        CHECK(e.budget == 1);
        CHECK(std::string(e.what()).find("node budget") != std::string::npos);
    }

    // The same graph finishes under the default budget.
    CHECK(canonical_form_ex(k6).nodes <= kDefaultNodeBudget);
}
