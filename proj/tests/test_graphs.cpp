// Tests for the bitset graph type: construction, counting, isomorphism,
// blowups, coloring statistics, and the text file format.
#include <catch2/catch_amalgamated.hpp>

#include <inducibility/inducibility.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ind;

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph permuted(const Graph& g, std::mt19937& rng) {
    std::vector<int> perm(static_cast<size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i) perm[static_cast<size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v))
                h.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return h;
}

}  // namespace

TEST_CASE("basic adjacency bookkeeping", "[graphs]") {
    Graph g(4);
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    CHECK(g.has_edge(2, 0));
    CHECK(!g.has_edge(0, 1));
    CHECK(g.degree(2) == 2);
    CHECK(g.edge_count() == 2);
    g.remove_edge(0, 2);
    CHECK(!g.has_edge(0, 2));
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(0, 4), domain_error);
    CHECK_THROWS_AS(g.add_edge(0, 0), domain_error);
    CHECK_THROWS_AS(Graph(65), capacity_error);
}

TEST_CASE("encoding round-trips the edge set", "[graphs]") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, rng);
        Graph back = Graph::from_encoding(n, g.encoding());
        CHECK(back == g);
    }
    CHECK(Graph::from_encoding(3, 0).edge_count() == 0);
    CHECK(Graph::from_encoding(3, 7) == complete_graph(3));
}

TEST_CASE("complete multipartite construction", "[graphs]") {
    Graph p3 = complete_multipartite(PartiteProfile({2, 1}));
    CHECK(p3.n() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(isomorphic(p3, path_graph(3)));

    Graph k22 = complete_multipartite(PartiteProfile({2, 2}));
    CHECK(k22.edge_count() == 4);
    CHECK(isomorphic(k22, cycle_graph(4)));

    Graph k5 = complete_multipartite(PartiteProfile({1, 1, 1, 1, 1}));
    CHECK(k5 == complete_graph(5));

    Graph e3 = complete_multipartite(PartiteProfile({3}));
    CHECK(e3.edge_count() == 0);
}

TEST_CASE("balanced part-size profiles", "[graphs]") {
    CHECK(turan_profile(7, 3) == PartiteProfile({3, 2, 2}));
    CHECK(turan_profile(4, 3) == PartiteProfile({2, 1, 1}));
    CHECK(turan_profile(6, 3) == PartiteProfile({2, 2, 2}));
    CHECK(turan_profile(5, 5) == PartiteProfile({1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(turan_profile(3, 4), domain_error);
    CHECK_THROWS_AS(turan_profile(3, 0), domain_error);
}

TEST_CASE("complement flips every non-loop pair", "[graphs]") {
    CHECK(complement(complete_graph(5)).edge_count() == 0);
    CHECK(complement(Graph(4)).edge_count() == 6);
    Graph c5 = cycle_graph(5);
    CHECK(isomorphic(complement(c5), c5));  // self-complementary
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(6, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("induced subgraph counting on known cases", "[graphs]") {
    CHECK(count_induced(complete_graph(2), complete_graph(3)) == 3);
    CHECK(count_induced(path_graph(3), path_graph(4)) == 2);
    CHECK(count_induced(complete_graph(3), complete_multipartite(PartiteProfile({2, 2, 1}))) == 4);
    CHECK(count_induced(cycle_graph(4), complete_multipartite(PartiteProfile({2, 2}))) == 1);
    CHECK(count_induced(complete_graph(3), cycle_graph(5)) == 0);
    CHECK(count_induced(path_graph(1), complete_graph(6)) == 6);
    CHECK(induced_density(complete_graph(2), complete_graph(4)) == BigRational(1));
    CHECK(induced_density(path_graph(3), cycle_graph(5)) == BigRational(1, 2));
    CHECK(count_induced(complete_graph(5), complete_graph(4)) == 0);
}

TEST_CASE("counting respects complement duality", "[graphs][property]") {
    std::mt19937 rng(23);
    Graph f = path_graph(4);
    Graph fc = complement(f);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(7, rng);
        CHECK(count_induced(f, g) == count_induced(fc, complement(g)));
    }
}

TEST_CASE("isomorphism testing", "[graphs]") {
    CHECK(isomorphic(cycle_graph(4), complete_multipartite(PartiteProfile({2, 2}))));
    CHECK(!isomorphic(path_graph(4), complete_multipartite(PartiteProfile({3, 1}))));
    CHECK(!isomorphic(path_graph(4), path_graph(5)));
    CHECK(!isomorphic(cycle_graph(6), complete_multipartite(PartiteProfile({3, 3}))));
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = random_graph(n, rng);
        CHECK(isomorphic(g, permuted(g, rng)));
    }
}

TEST_CASE("uniform blowup replaces vertices by stable sets", "[graphs]") {
    Graph k2(2);
    k2.add_edge(0, 1);
    Graph b = blowup(k2, {2, 3});
    CHECK(b.n() == 5);
    CHECK(isomorphic(b, complete_multipartite(PartiteProfile({3, 2}))));

    Graph same = blowup(path_graph(3), {1, 1, 1});
    CHECK(same == path_graph(3));

    CHECK_THROWS_AS(blowup(k2, {2}), domain_error);
    CHECK_THROWS_AS(blowup(k2, {0, 3}), domain_error);
    CHECK_THROWS_AS(blowup(k2, {40, 40}), capacity_error);
}

TEST_CASE("iterated self blowup sizes and frozen counts", "[graphs]") {
    Graph k12 = complete_multipartite(PartiteProfile({2, 1}));
    CHECK(nested_blowup(k12, 1) == k12);
    Graph b2 = nested_blowup(k12, 2);
    CHECK(b2.n() == 9);
    CHECK(count_induced(k12, b2) == 42);
    Graph b3 = nested_blowup(k12, 3);
    CHECK(b3.n() == 27);
    CHECK(count_induced(k12, b3) == 1287);

    Graph p4 = path_graph(4);
    Graph p4b2 = nested_blowup(p4, 2);
    CHECK(p4b2.n() == 16);
    CHECK(count_induced(p4, p4b2) == 260);
    CHECK(count_induced(p4, nested_blowup(p4, 3)) == 66576);

    CHECK_THROWS_AS(nested_blowup(p4, 4), capacity_error);
    CHECK_THROWS_AS(nested_blowup(p4, 0), domain_error);
}

TEST_CASE("clique number and chromatic number", "[graphs]") {
    ColoringStats c5 = coloring_stats(cycle_graph(5));
    CHECK(c5.omega == 2);
    CHECK(c5.chi == 3);
    ColoringStats c7 = coloring_stats(cycle_graph(7));
    CHECK(c7.omega == 2);
    CHECK(c7.chi == 3);
    ColoringStats k4 = coloring_stats(complete_graph(4));
    CHECK(k4.omega == 4);
    CHECK(k4.chi == 4);
    ColoringStats empty = coloring_stats(Graph(5));
    CHECK(empty.omega == 1);
    CHECK(empty.chi == 1);
    ColoringStats k33 = coloring_stats(complete_multipartite(PartiteProfile({3, 3})));
    CHECK(k33.omega == 2);
    CHECK(k33.chi == 2);
    CHECK_THROWS_AS(coloring_stats(Graph(17)), capacity_error);
}

TEST_CASE("clique detection", "[graphs]") {
    CHECK(has_clique(complete_graph(5), 5));
    CHECK(!has_clique(complete_graph(5), 6));
    CHECK(has_clique(cycle_graph(5), 2));
    CHECK(!has_clique(cycle_graph(5), 3));
    CHECK(has_clique(Graph(3), 1));
    CHECK(!has_clique(Graph(3), 2));
    Graph t73 = complete_multipartite(turan_profile(7, 3));
    CHECK(has_clique(t73, 3));
    CHECK(!has_clique(t73, 4));
}

TEST_CASE("recognizing complete multipartite graphs", "[graphs]") {
    auto p = is_complete_multipartite(cycle_graph(4));
    REQUIRE(p.has_value());
    CHECK(*p == PartiteProfile({2, 2}));

    CHECK(!is_complete_multipartite(path_graph(4)).has_value());
    CHECK(!is_complete_multipartite(cycle_graph(5)).has_value());

    auto k5 = is_complete_multipartite(complete_graph(5));
    REQUIRE(k5.has_value());
    CHECK(*k5 == PartiteProfile({1, 1, 1, 1, 1}));

    auto e3 = is_complete_multipartite(Graph(3));
    REQUIRE(e3.has_value());
    CHECK(*e3 == PartiteProfile({3}));

    auto t52 = is_complete_multipartite(complete_multipartite(PartiteProfile({3, 2})));
    REQUIRE(t52.has_value());
    CHECK(*t52 == PartiteProfile({3, 2}));
}

namespace {
Graph parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}
}  // namespace

TEST_CASE("graph text format round-trips", "[graphs][io]") {
    Graph g = cycle_graph(5);
    std::string text = graph_to_string(g);
    CHECK(parse_text(text) == g);

    Graph parsed = parse_text("4\n0 1\n1 2\n2 3\n");
    CHECK(parsed == path_graph(4));
    CHECK(parse_text("4\n0 1\n1 0\n0 1\n").edge_count() == 1);  // duplicates tolerated

    CHECK_THROWS_AS(parse_text("3\n0 0\n"), domain_error);
    CHECK_THROWS_AS(parse_text("3\n0 7\n"), domain_error);
    CHECK_THROWS_AS(parse_text(""), domain_error);
    CHECK_THROWS_AS(parse_text("banana\n"), domain_error);

    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "ind_graph_roundtrip.edges";
    {
        std::ofstream out(tmp);
        write_graph(out, g);
    }
    Graph from_file = read_graph_file(tmp.string());
    CHECK(from_file == g);
    fs::remove(tmp);
    CHECK_THROWS_AS(read_graph_file("/nonexistent/path/to/graph.edges"), domain_error);
}
