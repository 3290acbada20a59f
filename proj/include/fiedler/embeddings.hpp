#pragma once

#include <array>
#include <string>
#include <vector>

#include "fiedler/graph.hpp"

namespace fiedler {

struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Per-vertex points whose vector sum is zero within `tolerance`. The
/// certificates built here use only two radii: the origin and the unit
/// circle.
struct Embedding {
    std::vector<PlanarPoint> points;
    double tolerance = 1e-9;
};

/// Three unit-circle points w1, w2, w3 with a*w1 + b*w2 + c*w3 = 0,
/// for side lengths satisfying the strict triangle inequalities.
/// w1 = (1,0); w2 and w3 sit at angles pi+gamma and pi-beta, the
/// triangle angles opposite c and b.
std::array<PlanarPoint, 3> three_point_placement(double a, double b, double c);

/// Unit-circle points v_1..v_r with sum(k_i * v_i) = 0, for positive
/// weights with every k_i <= s/2 (s = sum). Sorts ascending, finds the
/// smallest prefix >= suffix, and reduces to an antipodal pair or to
/// three_point_placement; output order matches the input order.
std::vector<PlanarPoint> balanced_circle_placement(const std::vector<double>& weights);

/// Separator at the origin, each component of g - x at one unit-circle
/// point from balanced_circle_placement of the component sizes.
/// Requires at least two components, each of size <= (n - |x|) / 2.
Embedding separator_embedding(const Graph& g, const VertexSet& x);

/// sum over edges of ||p_u - p_v||^2, divided by sum of ||p_v||^2.
/// An upper bound on the Fiedler value for any zero-sum embedding.
double embedding_quotient(const Graph& g, const Embedding& emb);

/// Verifiable upper-bound certificate: lambda2(g) <= cross_edges / s
/// where s = n - |separator|, witnessed by an explicit embedding whose
/// Rayleigh quotient equals the bound.
struct SeparatorCertificate {
    VertexSet separator;
    ComponentPartition partition;
    int cross_edges = 0;
    int denominator = 0;  // n - |separator|
    double bound = 0.0;   // cross_edges / denominator
    Embedding embedding;
    double quotient = 0.0;
    std::string note;  // extra context, e.g. which separator case applied

    std::string bound_fraction() const;
};

SeparatorCertificate certify(const Graph& g, const VertexSet& x);

/// Text block listing the separator, component sizes, cross-edge count,
/// exact bound fraction, quotient, and per-vertex coordinates with 15
/// significant digits.
std::string certificate_text(const SeparatorCertificate& cert);

}  // namespace fiedler
