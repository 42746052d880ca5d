// Tests for the brute-force validation oracles: exhaustive host enumeration
// with an optional clique bound, and the complete multipartite host scan.
#include <catch2/catch_amalgamated.hpp>

#include <inducibility/inducibility.hpp>

#include <optional>
#include <vector>

using namespace ind;

namespace {

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("edge density among triangle-free hosts", "[oracle]") {
    Graph k2 = complete_graph(2);
    OracleResult res = max_over_all_graphs(k2, 4, 3);
    CHECK(res.density == BigRational(2, 3));
    CHECK(!has_clique(res.witness, 3));
    CHECK(res.graphs_examined == 41);  // labeled triangle-free graphs on 4 vertices
    CHECK(induced_density(k2, res.witness) == res.density);
    // The balanced complete bipartite host realizes the optimum.
    CHECK(isomorphic(res.witness, complete_multipartite(PartiteProfile({2, 2}))));
}

TEST_CASE("triangle density among clique-4-free hosts", "[oracle]") {
    Graph k3 = complete_graph(3);
    OracleResult res = max_over_all_graphs(k3, 5, 4);
    CHECK(res.density == BigRational(2, 5));
    CHECK(!has_clique(res.witness, 4));
    CHECK(induced_density(k3, res.witness) == res.density);
}

TEST_CASE("unconstrained path density", "[oracle]") {
    Graph p3 = complete_multipartite(PartiteProfile({2, 1}));
    OracleResult res = max_over_all_graphs(p3, 5);
    CHECK(res.density == BigRational(9, 10));
    CHECK(induced_density(p3, res.witness) == res.density);
}

TEST_CASE("exhaustive oracle guards its domain", "[oracle]") {
    Graph k3 = complete_graph(3);
    CHECK_THROWS_AS(max_over_all_graphs(k3, 2), domain_error);
    CHECK_THROWS_AS(max_over_all_graphs(k3, 8), capacity_error);
    CHECK_NOTHROW(max_over_all_graphs(k3, 3));
}

TEST_CASE("exhaustive oracle is deterministic across thread counts",
          "[oracle][determinism]") {
    Graph p3 = complete_multipartite(PartiteProfile({2, 1}));
    OracleResult one = max_over_all_graphs(p3, 5, std::nullopt, 1);
    OracleResult four = max_over_all_graphs(p3, 5, std::nullopt, 4);
    CHECK(one.density == four.density);
    CHECK(one.witness == four.witness);  // smallest-encoding tie break
    CHECK(one.graphs_examined == four.graphs_examined);
}

TEST_CASE("a forbidden clique strictly below the pattern forces zero", "[oracle]") {
    OracleResult res = max_over_all_graphs(complete_graph(3), 5, 3);
    CHECK(res.density == BigRational(0));
}

TEST_CASE("multipartite host scan on known optima", "[oracle]") {
    // Triangles need three classes; with only two the density is zero.
    OracleResult zero = max_over_multipartite(PartiteProfile({1, 1, 1}), 6, 2);
    CHECK(zero.density == BigRational(0));

    // Edges across at most three classes on six vertices: balanced is best.
    OracleResult edges = max_over_multipartite(PartiteProfile({1, 1}), 6, 3);
    CHECK(edges.density == BigRational(4, 5));  // 12 of 15 pairs
    CHECK(isomorphic(edges.witness, complete_multipartite(PartiteProfile({2, 2, 2}))));

    // Four-vertex balanced target on eight vertices, at most three classes.
    OracleResult t43 = max_over_multipartite(PartiteProfile({2, 1, 1}), 8, 3);
    CHECK(t43.density == BigRational(9, 14));  // 45 of 70, parts (3,3,2)
    CHECK(count_induced(complete_multipartite(PartiteProfile({2, 1, 1})), t43.witness) == 45);
}

TEST_CASE("multipartite scan witness attains its reported density", "[oracle]") {
    PartiteProfile prof({2, 2});
    OracleResult res = max_over_multipartite(prof, 7, 4);
    Graph f = complete_multipartite(prof);
    CHECK(induced_density(f, res.witness) == res.density);
    CHECK(res.graphs_examined > 0);
}

TEST_CASE("multipartite scan guards its domain", "[oracle]") {
    PartiteProfile prof({2, 1});
    CHECK_THROWS_AS(max_over_multipartite(prof, 2, 3), domain_error);
    CHECK_THROWS_AS(max_over_multipartite(prof, 41, 3), capacity_error);
    CHECK_THROWS_AS(max_over_multipartite(prof, 6, 0), domain_error);
}

TEST_CASE("free and structured oracles agree on clique-bounded hosts",
          "[oracle][equivalence]") {
    // Spot instances of the general equivalence: among K_k-free hosts the
    // maximum induced density of a complete multipartite pattern is attained
    // by a complete multipartite host with fewer than k classes.
    struct Case {
        PartiteProfile profile;
        int n;
        int k;
    };
    const std::vector<Case> cases = {
        {PartiteProfile({1, 1}), 5, 3},
        {PartiteProfile({2, 1}), 5, 3},
        {PartiteProfile({2, 1}), 6, 4},
        {PartiteProfile({1, 1, 1}), 5, 4},
        {PartiteProfile({2, 1, 1}), 6, 4},
    };
    for (const Case& c : cases) {
        Graph f = complete_multipartite(c.profile);
        OracleResult free_max = max_over_all_graphs(f, c.n, c.k, 4);
        OracleResult partite_max = max_over_multipartite(c.profile, c.n, c.k - 1);
        INFO("profile " << c.profile.to_string() << " n=" << c.n << " k=" << c.k);
        CHECK(free_max.density == partite_max.density);
    }
}
