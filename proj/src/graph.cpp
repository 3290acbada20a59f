#include "fiedler/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fiedler {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") rejected");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    int degree_sum = 0;
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        degree_sum += static_cast<int>(nbrs.size());
    }
    g.m_ = degree_sum / 2;
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_complete() const {
    const long long n = vertex_count();
    return 2LL * m_ == n * (n - 1);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

double SymMatrix::max_asymmetry() const {
    double worst = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            worst = std::max(worst, std::fabs((*this)(i, j) - (*this)(j, i)));
    return worst;
}

SymMatrix laplacian(const Graph& g) {
    const int n = g.vertex_count();
    SymMatrix l(n);
    for (int v = 0; v < n; ++v) {
        l(v, v) = static_cast<double>(g.degree(v));
        for (int u : g.neighbors(v)) l(v, u) = -1.0;
    }
    return l;
}

Graph join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    std::vector<std::pair<int, int>> edges = g1.edges();
    edges.reserve(static_cast<std::size_t>(g1.edge_count()) + g2.edge_count() +
                  static_cast<std::size_t>(n1) * n2);
    for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) edges.emplace_back(u, v + n1);
    return Graph::from_edge_list(n1 + n2, edges);
}

void validate_vertex_set(const Graph& g, const VertexSet& x) {
    int prev = -1;
    for (int v : x) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
        if (v <= prev)
            throw std::invalid_argument("vertex set must be strictly increasing");
        prev = v;
    }
}

ComponentPartition components_after_removal(const Graph& g, const VertexSet& x) {
    validate_vertex_set(g, x);
    const int n = g.vertex_count();
    std::vector<char> removed(n, 0);
    for (int v : x) removed[v] = 1;

    ComponentPartition parts;
    std::vector<char> seen(n, 0);
    std::vector<int> queue;
    for (int start = 0; start < n; ++start) {
        if (removed[start] || seen[start]) continue;
        queue.clear();
        queue.push_back(start);
        seen[start] = 1;
        VertexSet comp;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v)) {
                if (!removed[u] && !seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        parts.push_back(std::move(comp));
    }
    return parts;
}

int cross_edge_count(const Graph& g, const VertexSet& x) {
    validate_vertex_set(g, x);
    std::vector<char> in_x(g.vertex_count(), 0);
    for (int v : x) in_x[v] = 1;
    int count = 0;
    for (int v : x)
        for (int u : g.neighbors(v))
            if (!in_x[u]) ++count;
    return count;
}

namespace {

bool connected_after_removal(const Graph& g, unsigned removed_mask) {
    const int n = g.vertex_count();
    int start = -1, remaining = 0;
    for (int v = 0; v < n; ++v) {
        if (!(removed_mask >> v & 1u)) {
            ++remaining;
            if (start < 0) start = v;
        }
    }
    if (remaining <= 1) return true;
    unsigned seen = 1u << start;
    std::vector<int> stack{start};
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            unsigned bit = 1u << u;
            if ((removed_mask & bit) || (seen & bit)) continue;
            seen |= bit;
            ++visited;
            stack.push_back(u);
        }
    }
    return visited == remaining;
}

}  // namespace

std::optional<int> vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 16)
        throw std::invalid_argument("vertex_connectivity: exhaustive search limited to n <= 16");
    if (!is_connected(g)) throw std::invalid_argument("vertex_connectivity: graph is disconnected");
    if (g.is_complete()) return std::nullopt;

    for (int k = 1; k <= n - 2; ++k) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != k) continue;
            if (!connected_after_removal(g, mask)) return k;
        }
    }
    // Unreachable: a non-complete graph is disconnected by removing all
    // vertices other than some non-adjacent pair.
    return std::nullopt;
}

VertexSet high_degree_set(const Graph& g, int threshold) {
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= threshold) out.push_back(v);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& verts) {
    validate_vertex_set(g, verts);
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (int v : verts)
        for (int u : g.neighbors(v))
            if (v < u && local[u] >= 0) edges.emplace_back(local[v], local[u]);
    return Graph::from_edge_list(static_cast<int>(verts.size()), edges);
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return components_after_removal(g, {}).size() == 1;
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

}  // namespace fiedler
