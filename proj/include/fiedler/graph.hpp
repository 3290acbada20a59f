#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace fiedler {

/// Sorted list of distinct vertex ids.
using VertexSet = std::vector<int>;

/// Connected components of an induced subgraph, each sorted ascending,
/// listed in order of smallest member id.
using ComponentPartition = std::vector<VertexSet>;

/// Undirected simple graph on vertices 0..n-1, adjacency-list model.
/// Immutable after construction; safe for concurrent reads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges are merged.
    /// Throws std::invalid_argument on a self-loop or an out-of-range
    /// endpoint, naming the offending edge.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    bool is_complete() const;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

/// Dense symmetric real matrix, full row-major storage.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<double>& data() const { return a_; }

    double trace() const;
    double frobenius_norm() const;
    /// Largest |a_ij - a_ji| over all entries.
    double max_asymmetry() const;

private:
    int n_ = 0;
    std::vector<double> a_;
};

/// Laplacian of g: degree on the diagonal, -1 for edges, 0 elsewhere.
/// Rows sum to zero exactly and the matrix is symmetric bit-for-bit.
SymMatrix laplacian(const Graph& g);

/// Disjoint union of g1 and g2 plus all edges between the two vertex
/// sets. Vertices of g1 keep their ids; g2's are shifted by g1's count.
Graph join(const Graph& g1, const Graph& g2);

/// Connected components of the subgraph induced on V minus x.
ComponentPartition components_after_removal(const Graph& g, const VertexSet& x);

/// Number of edges with exactly one endpoint in x.
int cross_edge_count(const Graph& g, const VertexSet& x);

/// Minimum number of vertices whose removal disconnects g, by exhaustive
/// subset search (n <= 16 only). Returns nullopt for a complete graph,
/// which has no disconnecting vertex cut. Throws on disconnected input
/// or when the size limit is exceeded.
std::optional<int> vertex_connectivity(const Graph& g);

/// All vertices with degree >= threshold.
VertexSet high_degree_set(const Graph& g, int threshold);

/// Subgraph induced on verts, relabeled 0..|verts|-1 in sorted order.
Graph induced_subgraph(const Graph& g, const VertexSet& verts);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Throws std::invalid_argument unless x is strictly increasing and
/// within 0..n-1.
void validate_vertex_set(const Graph& g, const VertexSet& x);

}  // namespace fiedler
