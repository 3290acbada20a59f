#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "fiedler/edge_list.hpp"
#include "fiedler/families.hpp"
#include "fiedler/graph.hpp"
#include "fiedler/spectra.hpp"
#include "support/test_util.hpp"

using namespace fiedler;

TEST_CASE("from_edge_list basics") {
    const Graph k2 = Graph::from_edge_list(2, {{0, 1}});
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    const Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 2}}), std::invalid_argument);

    // Duplicates merge instead of erroring.
    const Graph dup = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("adjacency is symmetric and degree sum is 2m") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> nv(2, 12);
        const int n = nv(rng);
        std::vector<std::pair<int, int>> edges;
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int i = 0; i < 2 * n; ++i) {
            int u = pick(rng), v = pick(rng);
            if (u != v) edges.emplace_back(u, v);
        }
        const Graph g = Graph::from_edge_list(n, edges);
        int degree_sum = 0;
        for (int v = 0; v < n; ++v) {
            degree_sum += g.degree(v);
            for (int u : g.neighbors(v)) CHECK(g.has_edge(u, v));
        }
        CHECK(degree_sum == 2 * g.edge_count());
    }
}

TEST_CASE("laplacian entries") {
    const SymMatrix lk2 = laplacian(Graph::from_edge_list(2, {{0, 1}}));
    CHECK(lk2(0, 0) == 1.0);
    CHECK(lk2(0, 1) == -1.0);
    CHECK(lk2(1, 0) == -1.0);
    CHECK(lk2(1, 1) == 1.0);

    const SymMatrix l1 = laplacian(Graph::from_edge_list(1, {}));
    CHECK(l1(0, 0) == 0.0);

    const SymMatrix lc3 = laplacian(cycle(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(lc3(i, j) == (i == j ? 2.0 : -1.0));
}

TEST_CASE("laplacian row sums vanish and the matrix is PSD") {
    for (const Graph& g : {cycle(7), star(6), quadrangulation(8), grid(3, 4), cube()}) {
        const SymMatrix l = laplacian(g);
        CHECK(l.max_asymmetry() == 0.0);
        for (int i = 0; i < l.size(); ++i) {
            double row = 0.0;
            for (int j = 0; j < l.size(); ++j) row += l(i, j);
            CHECK(row == 0.0);
        }
        const Spectrum s = eigenvalues_sym(l);
        CHECK(s.eigenvalues.front() >= -1e-9);
    }
}

TEST_CASE("join counts and identities") {
    const Graph octa = join(cycle(4), empty_graph(2));
    CHECK(octa.vertex_count() == 6);
    CHECK(octa.edge_count() == 12);

    CHECK(join(empty_graph(1), empty_graph(1)).edge_count() == 1);
    const Graph k3 = join(path(2), empty_graph(1));
    CHECK(k3.is_complete());
    CHECK(k3.vertex_count() == 3);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> nv(1, 8);
        const Graph g1 = testutil::random_tree(nv(rng), rng);
        const Graph g2 = testutil::random_tree(nv(rng), rng);
        const Graph j = join(g1, g2);
        CHECK(j.edge_count() == g1.edge_count() + g2.edge_count() +
                                    g1.vertex_count() * g2.vertex_count());
    }
}

TEST_CASE("components_after_removal") {
    const Graph p5 = path(5);
    const ComponentPartition after = components_after_removal(p5, {2});
    REQUIRE(after.size() == 2);
    CHECK(after[0] == VertexSet{0, 1});
    CHECK(after[1] == VertexSet{3, 4});

    const ComponentPartition k4 = components_after_removal(complete(4), {0, 1});
    REQUIRE(k4.size() == 1);
    CHECK(k4[0] == VertexSet{2, 3});

    const ComponentPartition leaves = components_after_removal(star(8), {0});
    CHECK(leaves.size() == 7);
    for (const auto& comp : leaves) CHECK(comp.size() == 1);

    CHECK_THROWS_AS(components_after_removal(p5, {5}), std::invalid_argument);
    CHECK_THROWS_AS(components_after_removal(p5, {2, 2}), std::invalid_argument);

    // Partition sizes always sum to n - |X|.
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = testutil::random_tree(9, rng);
        VertexSet x;
        for (int v = 0; v < 9; ++v)
            if (rng() % 3 == 0) x.push_back(v);
        std::size_t total = 0;
        for (const auto& comp : components_after_removal(g, x)) total += comp.size();
        CHECK(total == 9 - x.size());
    }
}

TEST_CASE("cross_edge_count") {
    CHECK(cross_edge_count(star(7), {0}) == 6);
    CHECK(cross_edge_count(path(5), {2}) == 2);
    CHECK(cross_edge_count(complete(4), {0, 1}) == 4);
    CHECK(cross_edge_count(path(5), {}) == 0);
}

TEST_CASE("vertex_connectivity by exhaustive search") {
    CHECK(vertex_connectivity(cycle(5)) == 2);
    CHECK(vertex_connectivity(complete_bipartite(2, 4)) == 2);
    std::mt19937 rng(19);
    for (int n : {3, 5, 8}) {
        const Graph t = testutil::random_tree(n, rng);
        CHECK(vertex_connectivity(t) == 1);
    }
    CHECK(!vertex_connectivity(complete(5)).has_value());
    CHECK_THROWS_AS(vertex_connectivity(Graph::from_edge_list(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(vertex_connectivity(cycle(17)), std::invalid_argument);
}

TEST_CASE("high_degree_set") {
    CHECK(high_degree_set(star(10), 5) == VertexSet{0});
    CHECK(high_degree_set(cycle(6), 3).empty());
    CHECK(high_degree_set(quadrangulation(8), 4) == VertexSet{8, 9});
}

TEST_CASE("induced_subgraph keeps internal edges") {
    const Graph g = cycle(6);
    const Graph sub = induced_subgraph(g, {0, 1, 2, 4});
    CHECK(sub.vertex_count() == 4);
    CHECK(sub.edge_count() == 2);  // 0-1 and 1-2 survive
    CHECK(sub.has_edge(0, 1));
    CHECK(sub.has_edge(1, 2));
}

TEST_CASE("edge list io round trip") {
    const Graph g = quadrangulation(8);
    std::ostringstream out;
    write_edge_list(g, out);
    std::istringstream in(out.str());
    const Graph back = read_edge_list(in);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
}

TEST_CASE("edge list parse errors carry line numbers") {
    {
        std::istringstream in("2\n0 1\n");
        CHECK_THROWS_WITH_AS(read_edge_list(in), doctest::Contains("line 1"), ParseError);
    }
    {
        std::istringstream in("3 2\n0 1\n0 zzz\n");
        try {
            read_edge_list(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }
    {
        std::istringstream in("3 1\n1 1\n");
        CHECK_THROWS_AS(read_edge_list(in), ParseError);
    }
    {
        std::istringstream in("3 2\n0 1\n");
        CHECK_THROWS_AS(read_edge_list(in), ParseError);  // truncated
    }
}
