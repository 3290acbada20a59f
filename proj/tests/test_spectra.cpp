#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "fiedler/families.hpp"
#include "fiedler/graph.hpp"
#include "fiedler/spectra.hpp"
#include "support/test_util.hpp"

using namespace fiedler;
using testutil::multiset_close;
using testutil::oracle_eigenvalues;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("jacobi agrees with the slicing oracle") {
    for (const Graph& g :
         {complete(4), cycle(5), star(6), path(6), cube(), quadrangulation(4), wheel(5)}) {
        const SymMatrix l = laplacian(g);
        const Spectrum s = eigenvalues_sym(l);
        CHECK(multiset_close(s.eigenvalues, oracle_eigenvalues(l), 1e-8));
    }
}

TEST_CASE("small exact spectra") {
    CHECK(multiset_close(eigenvalues_sym(laplacian(path(2))).eigenvalues, {0, 2}, 1e-10));
    CHECK(multiset_close(eigenvalues_sym(laplacian(cycle(4))).eigenvalues, {0, 2, 2, 4}, 1e-10));
    // The octahedron, as the join of C_4 with two isolated vertices.
    const Graph octa = join(cycle(4), empty_graph(2));
    CHECK(multiset_close(eigenvalues_sym(laplacian(octa)).eigenvalues, {0, 4, 4, 4, 6, 6}, 1e-9));
    CHECK(multiset_close(oracle_eigenvalues(laplacian(octa)), {0, 4, 4, 4, 6, 6}, 1e-8));
}

TEST_CASE("eigenvalues_sym input validation") {
    SymMatrix bad(2);
    bad(0, 1) = 1.0;
    bad(1, 0) = 0.5;
    CHECK_THROWS_AS(eigenvalues_sym(bad), std::invalid_argument);
    CHECK_THROWS_AS(eigenvalues_sym(SymMatrix{}), std::invalid_argument);
    CHECK_THROWS_AS(eigenvalues_sym(laplacian(path(2)), false, 0.0), std::invalid_argument);
}

TEST_CASE("zero matrix converges trivially") {
    const Spectrum s = eigenvalues_sym(laplacian(empty_graph(3)), true);
    CHECK(multiset_close(s.eigenvalues, {0, 0, 0}, 0.0));
}

TEST_CASE("spectrum contracts: residuals, orthogonality, trace, kernel") {
    for (const Graph& g : {cycle(9), star(8), quadrangulation(10), grid(3, 5), fan(7)}) {
        const SymMatrix l = laplacian(g);
        const Spectrum s = eigenvalues_sym(l, true);
        const int n = s.size();

        double trace = 0.0;
        for (double v : s.eigenvalues) trace += v;
        CHECK(std::fabs(trace - l.trace()) <= n * std::max(s.residual_bound, 1e-12));

        CHECK(std::fabs(s.eigenvalues[0]) <= s.residual_bound);

        for (int i = 0; i < n; ++i) {
            const auto xi = s.eigenvector(i);
            CHECK(embedding_residual(l, xi, s.eigenvalues[i]) <=
                  s.residual_bound * (1.0 + std::fabs(s.eigenvalues[i])));
            for (int j = i + 1; j < n; ++j) {
                const auto xj = s.eigenvector(j);
                double dot = 0.0;
                for (int r = 0; r < n; ++r) dot += xi[r] * xj[r];
                CHECK(std::fabs(dot) <= 1e-8);
            }
        }
    }
}

TEST_CASE("fiedler_value on reference graphs") {
    CHECK(fiedler_value(complete(4)) == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(fiedler_value(star(6)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(fiedler_value(complete_bipartite(2, 7)) == doctest::Approx(2.0).epsilon(1e-10));
    const Graph two_edges = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK(std::fabs(fiedler_value(two_edges)) <= 1e-9);
    CHECK_THROWS_AS(fiedler_value(Graph::from_edge_list(1, {})), std::invalid_argument);
}

TEST_CASE("fiedler_vector contracts") {
    const double tol = kDefaultTol;

    const auto p2 = fiedler_vector(path(2));
    CHECK(std::fabs(std::fabs(p2[0]) - 1.0 / std::sqrt(2.0)) <= 1e-10);
    CHECK(std::fabs(p2[0] + p2[1]) <= 1e-10);

    for (const Graph& g : {cycle(4), star(4), fan(6), quadrangulation(8)}) {
        const auto x = fiedler_vector(g);
        const double l2 = fiedler_value(g);
        CHECK(embedding_residual(laplacian(g), x, l2) <= 10 * tol);
        double sum = 0.0, norm = 0.0;
        for (double xi : x) {
            sum += xi;
            norm += xi * xi;
        }
        CHECK(std::fabs(sum) <= 10 * tol);
        CHECK(std::fabs(norm - 1.0) <= 1e-12);
    }

    // K_{1,3}: any Fiedler vector has a zero center entry and leaves summing to zero.
    const auto x = fiedler_vector(star(4));
    CHECK(std::fabs(x[0]) <= 1e-7);
    CHECK(std::fabs(x[1] + x[2] + x[3]) <= 1e-7);

    CHECK_THROWS_AS(fiedler_vector(Graph::from_edge_list(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
}

TEST_CASE("rayleigh_quotient") {
    CHECK(rayleigh_quotient(laplacian(path(2)), {1, -1}) == doctest::Approx(2.0));
    CHECK(rayleigh_quotient(laplacian(path(3)), {1, 0, -1}) == doctest::Approx(1.0));
    CHECK(rayleigh_quotient(laplacian(cycle(5)), {1, 1, 1, 1, 1}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(rayleigh_quotient(laplacian(path(2)), {0, 0}), std::invalid_argument);

    // Matches the sum of squared edge differences over the squared norm.
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    const Graph g = quadrangulation(8);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> x(g.vertex_count());
        for (double& xi : x) xi = coord(rng);
        double num = 0.0, den = 0.0;
        for (const auto& [u, v] : g.edges()) num += (x[u] - x[v]) * (x[u] - x[v]);
        for (double xi : x) den += xi * xi;
        CHECK(rayleigh_quotient(laplacian(g), x) == doctest::Approx(num / den).epsilon(1e-12));
    }
}

TEST_CASE("rayleigh quotient of zero-sum vectors bounds the fiedler value below") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (const Graph& g : {cycle(8), fan(6), doublewheel(6), grid(4, 4)}) {
        const double l2 = fiedler_value(g);
        const SymMatrix l = laplacian(g);
        const int n = g.vertex_count();
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<double> x(n);
            for (double& xi : x) xi = coord(rng);
            const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
            for (double& xi : x) xi -= mean;
            CHECK(rayleigh_quotient(l, x) >= l2 - 1e-10);
        }
    }
}

TEST_CASE("join_spectrum closed form") {
    const Spectrum c4 = eigenvalues_sym(laplacian(cycle(4)));
    const Spectrum iso2 = eigenvalues_sym(laplacian(empty_graph(2)));
    CHECK(multiset_close(join_spectrum(c4, 4, iso2, 2).eigenvalues, {0, 4, 4, 4, 6, 6}, 1e-9));

    const Spectrum k1 = eigenvalues_sym(laplacian(empty_graph(1)));
    CHECK(multiset_close(join_spectrum(k1, 1, k1, 1).eigenvalues, {0, 2}, 1e-12));

    const Spectrum p3 = eigenvalues_sym(laplacian(path(3)));
    CHECK(multiset_close(join_spectrum(p3, 3, k1, 1).eigenvalues, {0, 2, 4, 4}, 1e-9));

    Spectrum shifted = c4;
    for (double& v : shifted.eigenvalues) v += 1.0;
    CHECK_THROWS_AS(join_spectrum(shifted, 4, iso2, 2), std::invalid_argument);
    CHECK_THROWS_AS(join_spectrum(c4, 5, iso2, 2), std::invalid_argument);
}

TEST_CASE("join_spectrum matches the eigensolver across the pair corpus") {
    std::vector<Graph> parts;
    for (int n = 3; n <= 8; ++n) parts.push_back(cycle(n));
    for (int n = 2; n <= 8; ++n) parts.push_back(path(n));
    for (int n = 1; n <= 3; ++n) parts.push_back(empty_graph(n));
    parts.push_back(star(4));

    for (const Graph& g1 : parts)
        for (const Graph& g2 : parts) {
            const Spectrum s1 = eigenvalues_sym(laplacian(g1));
            const Spectrum s2 = eigenvalues_sym(laplacian(g2));
            const Spectrum predicted =
                join_spectrum(s1, g1.vertex_count(), s2, g2.vertex_count());
            const Spectrum numeric = eigenvalues_sym(laplacian(join(g1, g2)));
            CHECK(multiset_close(predicted.eigenvalues, numeric.eigenvalues, 1e-8));
        }
}

TEST_CASE("embedding_residual") {
    const SymMatrix l = laplacian(path(2));
    CHECK(embedding_residual(l, {1, -1}, 2.0) <= 1e-12);
    CHECK(embedding_residual(l, {1, -1}, 1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(embedding_residual(l, {0, 0}, 1.0), std::invalid_argument);
}

TEST_CASE("cycle and path spectra match their closed forms") {
    for (int n = 3; n <= 40; ++n) {
        const Spectrum s = eigenvalues_sym(laplacian(cycle(n)));
        std::vector<double> expected;
        for (int k = 0; k < n; ++k) expected.push_back(2.0 - 2.0 * std::cos(2.0 * kPi * k / n));
        CHECK(multiset_close(s.eigenvalues, expected, 1e-9));
    }
    for (int n = 2; n <= 40; ++n) {
        const Spectrum s = eigenvalues_sym(laplacian(path(n)));
        std::vector<double> expected;
        for (int k = 0; k < n; ++k) expected.push_back(2.0 - 2.0 * std::cos(kPi * k / n));
        CHECK(multiset_close(s.eigenvalues, expected, 1e-9));
    }
}
