#include "fiedler/separators.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "fiedler/edge_list.hpp"

namespace fiedler {

MaximalOuterplanarGraph::MaximalOuterplanarGraph(int n, std::vector<std::pair<int, int>> diagonals)
    : n_(n), diags_(std::move(diagonals)) {
    if (n_ < 3) throw std::invalid_argument("triangulation: polygon needs n >= 3");
    for (auto& [u, v] : diags_) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_ || u == v)
            throw std::invalid_argument("triangulation: diagonal (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") out of range");
        if (v - u == 1 || (u == 0 && v == n_ - 1))
            throw std::invalid_argument("triangulation: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is a hull edge, not a diagonal");
    }
    std::sort(diags_.begin(), diags_.end());
    if (std::adjacent_find(diags_.begin(), diags_.end()) != diags_.end())
        throw std::invalid_argument("triangulation: duplicate diagonal");
    if (static_cast<int>(diags_.size()) != n_ - 3)
        throw std::invalid_argument("triangulation: expected " + std::to_string(n_ - 3) +
                                    " diagonals, got " + std::to_string(diags_.size()));
    for (std::size_t i = 0; i < diags_.size(); ++i)
        for (std::size_t j = i + 1; j < diags_.size(); ++j) {
            const auto [a, b] = diags_[i];
            const auto [c, d] = diags_[j];
            const bool cross = (a < c && c < b && b < d) || (c < a && a < d && d < b);
            if (cross)
                throw std::invalid_argument("triangulation: diagonals (" + std::to_string(a) +
                                            "," + std::to_string(b) + ") and (" +
                                            std::to_string(c) + "," + std::to_string(d) +
                                            ") cross");
        }
}

Graph MaximalOuterplanarGraph::to_graph() const {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n_; ++i) edges.emplace_back(i, (i + 1) % n_);
    edges.insert(edges.end(), diags_.begin(), diags_.end());
    return Graph::from_edge_list(n_, edges);
}

int tree_centroid(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("tree_centroid: input is not a tree");
    const int n = t.vertex_count();
    if (n == 1) return 0;

    // Subtree sizes from one rooted DFS; the largest component of t - v is
    // either a child subtree or everything above v.
    std::vector<int> parent(n, -1), order, size(n, 1), max_comp(n, 0);
    order.reserve(n);
    std::vector<int> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u : t.neighbors(v))
            if (parent[u] < 0) {
                parent[u] = v;
                stack.push_back(u);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        max_comp[v] = std::max(max_comp[v], n - size[v]);
        if (v != 0) {
            size[parent[v]] += size[v];
            max_comp[parent[v]] = std::max(max_comp[parent[v]], size[v]);
        }
    }
    max_comp[0] = 0;
    for (int u : t.neighbors(0)) max_comp[0] = std::max(max_comp[0], size[u]);

    for (int v = 0; v < n; ++v)
        if (2 * max_comp[v] <= n) return v;
    throw std::logic_error("tree_centroid: no centroid found");
}

namespace {

// Recursively peels the triangle resting on chord (lo, hi); every vertex
// strictly between lo and hi lies on this side of the chord.
void collect_faces(const std::vector<std::vector<char>>& adj, int lo, int hi,
                   std::vector<std::array<int, 3>>& faces) {
    if (hi - lo < 2) return;
    for (int c = lo + 1; c < hi; ++c) {
        if (adj[lo][c] && adj[c][hi]) {
            faces.push_back({lo, c, hi});
            collect_faces(adj, lo, c, faces);
            collect_faces(adj, c, hi, faces);
            return;
        }
    }
    throw std::logic_error("build_dual_tree: no triangle on chord (" + std::to_string(lo) + "," +
                           std::to_string(hi) + ")");
}

}  // namespace

DualTree build_dual_tree(const MaximalOuterplanarGraph& p) {
    const int n = p.polygon_size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    auto mark = [&](int u, int v) { adj[u][v] = adj[v][u] = 1; };
    for (int i = 0; i < n; ++i) mark(i, (i + 1) % n);
    for (const auto& [u, v] : p.diagonals()) mark(u, v);

    DualTree dual;
    collect_faces(adj, 0, n - 1, dual.faces);
    std::sort(dual.faces.begin(), dual.faces.end());

    std::map<std::pair<int, int>, std::vector<int>> by_edge;
    for (int f = 0; f < static_cast<int>(dual.faces.size()); ++f) {
        const auto& [a, b, c] = dual.faces[f];
        by_edge[{a, b}].push_back(f);
        by_edge[{b, c}].push_back(f);
        by_edge[{a, c}].push_back(f);
    }
    std::vector<std::pair<int, int>> tree_edges;
    for (const auto& diag : p.diagonals()) {
        const auto& facelist = by_edge.at(diag);
        if (facelist.size() != 2)
            throw std::logic_error("build_dual_tree: diagonal not shared by two faces");
        tree_edges.emplace_back(facelist[0], facelist[1]);
        dual.shared.push_back({facelist[0], facelist[1], diag});
    }
    dual.tree = Graph::from_edge_list(n - 2, tree_edges);
    return dual;
}

OuterplanarSeparator outerplanar_separator(const MaximalOuterplanarGraph& p) {
    const int n = p.polygon_size();
    if (n < 4) throw std::invalid_argument("outerplanar_separator: n >= 4 required");

    const DualTree dual = build_dual_tree(p);
    const int faces = n - 2;
    const int v = tree_centroid(dual.tree);
    const ComponentPartition comps = components_after_removal(dual.tree, {v});

    OuterplanarSeparator out;
    out.centroid_face = v;

    if (faces % 2 == 0) {
        for (const auto& comp : comps) {
            if (2 * static_cast<int>(comp.size()) != faces) continue;
            // Components are listed by smallest face index, so a tie between
            // two half-size components resolves to the first one here.
            int neighbor = -1;
            for (int u : dual.tree.neighbors(v))
                if (std::binary_search(comp.begin(), comp.end(), u)) {
                    neighbor = u;
                    break;
                }
            for (const auto& se : dual.shared) {
                if ((se.face_a == v && se.face_b == neighbor) ||
                    (se.face_b == v && se.face_a == neighbor)) {
                    out.case_id = 1;
                    out.chosen_component_face = comp.front();
                    out.separator = {se.diagonal.first, se.diagonal.second};
                    return out;
                }
            }
            throw std::logic_error("outerplanar_separator: missing dual edge");
        }
    }

    out.case_id = 2;
    const auto& [a, b, c] = dual.faces[v];
    out.separator = {a, b, c};
    return out;
}

VertexSet refine_balanced(const Graph& g, const VertexSet& x0, const SeparatorFinder& finder) {
    validate_vertex_set(g, x0);
    const int n = g.vertex_count();
    VertexSet x = x0;

    while (true) {
        const ComponentPartition comps = components_after_removal(g, x);
        const int s = n - static_cast<int>(x.size());

        // At most one component can hold more than half the remaining
        // vertices; that is the one to split.
        const VertexSet* oversized = nullptr;
        for (const auto& comp : comps)
            if (2 * static_cast<int>(comp.size()) > s) oversized = &comp;
        if (!oversized) return x;

        const Graph sub = induced_subgraph(g, *oversized);
        const VertexSet local = finder(sub);
        validate_vertex_set(sub, local);

        const int csize = static_cast<int>(oversized->size());
        for (const auto& piece : components_after_removal(sub, local))
            if (3 * static_cast<int>(piece.size()) > 2 * csize)
                throw std::invalid_argument(
                    "refine_balanced: finder left a component with " +
                    std::to_string(piece.size()) + " of " + std::to_string(csize) +
                    " vertices, violating the 2/3 contract");
        if (local.empty())
            throw std::invalid_argument("refine_balanced: finder returned an empty separator");

        for (int idx : local) x.push_back((*oversized)[idx]);
        std::sort(x.begin(), x.end());
    }
}

VertexSet tree_separator(const Graph& g) {
    return refine_balanced(g, {}, [](const Graph& sub) { return VertexSet{tree_centroid(sub)}; });
}

MaximalOuterplanarGraph fan_triangulation(int n) {
    if (n < 3) throw std::invalid_argument("fan_triangulation: n >= 3 required");
    std::vector<std::pair<int, int>> diags;
    for (int j = 1; j <= n - 2; ++j) diags.emplace_back(j, n);
    return MaximalOuterplanarGraph(n + 1, std::move(diags));
}

MaximalOuterplanarGraph read_triangulation(std::istream& in) {
    int line_no = 0;
    std::string line;
    auto next = [&]() -> std::string {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return line;
        }
        throw ParseError(line_no + 1, "unexpected end of triangulation input");
    };
    auto two_ints = [&](const std::string& text) {
        std::size_t used = 0;
        long long u = std::stoll(text, &used);
        std::size_t pos = used;
        long long v = std::stoll(text.substr(pos), &used);
        if (pos + used != text.size()) throw std::invalid_argument("");
        return std::pair<long long, long long>{u, v};
    };

    std::string header = next();
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(header, &used);
        if (used != header.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected polygon size, got \"" + header + "\"");
    }
    if (n < 3) throw ParseError(line_no, "polygon size must be >= 3");

    std::vector<std::pair<int, int>> diags;
    for (int i = 0; i < n - 3; ++i) {
        std::string text = next();
        try {
            auto [u, v] = two_ints(text);
            diags.emplace_back(static_cast<int>(u), static_cast<int>(v));
        } catch (const std::exception&) {
            throw ParseError(line_no, "expected diagonal \"i j\", got \"" + text + "\"");
        }
    }
    return MaximalOuterplanarGraph(n, std::move(diags));
}

void write_triangulation(const MaximalOuterplanarGraph& p, std::ostream& out) {
    out << p.polygon_size() << '\n';
    for (const auto& [u, v] : p.diagonals()) out << u << ' ' << v << '\n';
}

}  // namespace fiedler
