#pragma once

// Shared test machinery: an eigenvalue oracle independent of the Jacobi
// solver (spectrum slicing by LDL^T inertia plus bisection), Pruefer-based
// tree generation, and a seeded ear-cutting triangulation generator.

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/separators.hpp"

namespace testutil {

/// Number of eigenvalues of m strictly below x, from the inertia of
/// (m - xI) under symmetric elimination. Near-zero pivots are nudged to
/// -eps*scale, the usual slicing convention.
inline int eigenvalues_below(const fiedler::SymMatrix& m, double x) {
    const int n = m.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    double scale = 1.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j) - (i == j ? x : 0.0);
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::fabs(a[i][j]));
    }
    const double tiny = 1e-300 + 1e-20 * scale;
    int negatives = 0;
    for (int k = 0; k < n; ++k) {
        double pivot = a[k][k];
        if (std::fabs(pivot) < tiny) pivot = -tiny;
        if (pivot < 0.0) ++negatives;
        for (int i = k + 1; i < n; ++i) {
            const double f = a[i][k] / pivot;
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return negatives;
}

/// All eigenvalues by bisection on the inertia count; independent of the
/// library's eigensolver.
inline std::vector<double> oracle_eigenvalues(const fiedler::SymMatrix& m) {
    const int n = m.size();
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) radius += std::fabs(m(i, j));
        lo = std::min(lo, m(i, i) - radius);
        hi = std::max(hi, m(i, i) + radius);
    }
    lo -= 1.0;
    hi += 1.0;

    std::vector<double> eig(n);
    for (int k = 0; k < n; ++k) {
        double a = lo, b = hi;
        while (b - a > 1e-11 * std::max(1.0, std::fabs(a) + std::fabs(b))) {
            const double mid = 0.5 * (a + b);
            if (eigenvalues_below(m, mid) >= k + 1)
                b = mid;
            else
                a = mid;
        }
        eig[k] = 0.5 * (a + b);
    }
    return eig;
}

inline bool multiset_close(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::fabs(a[i] - b[i]) > tol) return false;
    return true;
}

/// Decodes a Pruefer sequence over vertices 0..n-1 (n = seq length + 2).
inline fiedler::Graph tree_from_pruefer(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int s : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1) {
                edges.emplace_back(leaf, s);
                degree[leaf] = 0;
                --degree[s];
                break;
            }
        }
    }
    int first = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[v] != 1) continue;
        if (first < 0)
            first = v;
        else
            edges.emplace_back(first, v);
    }
    return fiedler::Graph::from_edge_list(n, edges);
}

/// Calls fn on every labeled tree with n vertices (n^(n-2) of them).
template <typename Fn>
void for_each_labeled_tree(int n, Fn&& fn) {
    if (n == 1) {
        fn(fiedler::Graph::from_edge_list(1, {}));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        fn(tree_from_pruefer(seq));
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
}

inline fiedler::Graph random_tree(int n, std::mt19937& rng) {
    if (n <= 2) return tree_from_pruefer(std::vector<int>{});
    std::vector<int> seq(n - 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int& s : seq) s = pick(rng);
    return tree_from_pruefer(seq);
}

/// Random triangulation of a convex n-gon by seeded ear cutting.
inline fiedler::MaximalOuterplanarGraph random_triangulation(int n, std::mt19937& rng) {
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;
    std::vector<std::pair<int, int>> diagonals;
    while (active.size() > 3) {
        std::uniform_int_distribution<std::size_t> pick(0, active.size() - 1);
        const std::size_t i = pick(rng);
        const int prev = active[(i + active.size() - 1) % active.size()];
        const int next = active[(i + 1) % active.size()];
        diagonals.emplace_back(prev, next);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return fiedler::MaximalOuterplanarGraph(n, std::move(diagonals));
}

}  // namespace testutil
