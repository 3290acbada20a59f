#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "fiedler/graph.hpp"

namespace fiedler {

/// Triangulated convex polygon: vertices 0..n-1 in cyclic hull order plus
/// n-3 pairwise non-crossing diagonals. The induced graph has 2n-3 edges.
class MaximalOuterplanarGraph {
public:
    MaximalOuterplanarGraph(int n, std::vector<std::pair<int, int>> diagonals);

    int polygon_size() const { return n_; }
    const std::vector<std::pair<int, int>>& diagonals() const { return diags_; }
    Graph to_graph() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> diags_;  // normalized u < v, sorted
};

/// Dual of the interior faces: one node per triangle, adjacent when two
/// triangles share a diagonal. A tree with n-2 nodes and max degree 3.
struct DualTree {
    Graph tree;
    std::vector<std::array<int, 3>> faces;  // ascending triples, lexicographic order
    struct SharedDiagonal {
        int face_a = 0;
        int face_b = 0;
        std::pair<int, int> diagonal;
    };
    std::vector<SharedDiagonal> shared;  // one entry per diagonal
};

/// Vertex whose removal leaves components of at most n/2 vertices; ties
/// broken by lowest id. Throws if t is not a tree.
int tree_centroid(const Graph& t);

DualTree build_dual_tree(const MaximalOuterplanarGraph& p);

struct OuterplanarSeparator {
    VertexSet separator;
    /// 1: a dual component holds exactly (n-2)/2 faces and the separator
    /// is the crossed diagonal's two endpoints; 2: the centroid face's
    /// three vertices.
    int case_id = 0;
    int centroid_face = -1;
    /// Case 1 only: lowest face index of the chosen dual component.
    int chosen_component_face = -1;
};

/// Balanced separator of size 2 or 3 from the centroid of the dual tree.
/// Every component of g - X has at most (n - |X|)/2 vertices and at most
/// n edges cross the separator.
OuterplanarSeparator outerplanar_separator(const MaximalOuterplanarGraph& p);

/// Returns, for a connected input graph, a separator leaving no component
/// with more than 2/3 of the graph's vertices (in the subgraph's own ids).
using SeparatorFinder = std::function<VertexSet(const Graph&)>;

/// Grows x0 by splitting the oversized component with `finder` until every
/// component of g - X has at most (n - |X|)/2 vertices. Throws if the
/// finder violates its 2/3 contract.
VertexSet refine_balanced(const Graph& g, const VertexSet& x0, const SeparatorFinder& finder);

/// Balanced separator of a tree: refine_balanced from the centroid finder.
VertexSet tree_separator(const Graph& g);

/// The fan on n path vertices realized as its polygon triangulation
/// (apex last, same labeling as families::fan).
MaximalOuterplanarGraph fan_triangulation(int n);

/// Triangulation text format: line 1 "n", then n-3 lines "i j".
MaximalOuterplanarGraph read_triangulation(std::istream& in);
void write_triangulation(const MaximalOuterplanarGraph& p, std::ostream& out);

}  // namespace fiedler
