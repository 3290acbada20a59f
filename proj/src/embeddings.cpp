#include "fiedler/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fiedler {

namespace {

double clamp_cos(double v) { return std::clamp(v, -1.0, 1.0); }

std::string format_g15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

}  // namespace

std::array<PlanarPoint, 3> three_point_placement(double a, double b, double c) {
    if (!(a > 0.0 && b > 0.0 && c > 0.0))
        throw std::invalid_argument("three_point_placement: side lengths must be positive");
    if (!(a < b + c && b < c + a && c < a + b))
        throw std::invalid_argument("three_point_placement: degenerate triangle "
                                    "(strict triangle inequalities required)");

    // Law of cosines; clamped against rounding near-degenerate inputs.
    const double cos_beta = clamp_cos((a * a + c * c - b * b) / (2.0 * a * c));
    const double cos_gamma = clamp_cos((a * a + b * b - c * c) / (2.0 * a * b));
    const double beta = std::acos(cos_beta);
    const double gamma = std::acos(cos_gamma);

    return {PlanarPoint{1.0, 0.0},
            PlanarPoint{-std::cos(gamma), -std::sin(gamma)},
            PlanarPoint{-std::cos(beta), std::sin(beta)}};
}

std::vector<PlanarPoint> balanced_circle_placement(const std::vector<double>& weights) {
    const int r = static_cast<int>(weights.size());
    if (r < 2) throw std::invalid_argument("balanced_circle_placement: need at least 2 weights");
    double s = 0.0;
    for (double k : weights) {
        if (!(k > 0.0))
            throw std::invalid_argument("balanced_circle_placement: weights must be positive");
        s += k;
    }
    for (int i = 0; i < r; ++i)
        if (weights[i] > s / 2.0)
            throw std::invalid_argument("balanced_circle_placement: weight " + std::to_string(i) +
                                        " exceeds half the total");

    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return weights[i] < weights[j]; });

    // Smallest ell (1-based in sorted order) with prefix >= suffix.
    int ell = 0;
    double prefix = 0.0;
    for (int i = 0; i < r; ++i) {
        prefix += weights[order[i]];
        if (prefix >= s - prefix) {
            ell = i + 1;
            break;
        }
    }

    const double suffix = s - prefix;
    std::vector<PlanarPoint> sorted_points(r);
    if (std::fabs(prefix - suffix) <= 1e-12 * s) {
        // Balanced split: antipodal pair. Exact for integer weights.
        for (int i = 0; i < r; ++i)
            sorted_points[i] = (i < ell) ? PlanarPoint{1.0, 0.0} : PlanarPoint{-1.0, 0.0};
    } else {
        const double b = weights[order[ell - 1]];
        const double a = prefix - b;
        const double c = suffix;
        const auto [w1, w2, w3] = three_point_placement(a, b, c);
        for (int i = 0; i < r; ++i)
            sorted_points[i] = (i < ell - 1) ? w1 : (i == ell - 1) ? w2 : w3;
    }

    std::vector<PlanarPoint> out(r);
    for (int i = 0; i < r; ++i) out[order[i]] = sorted_points[i];
    return out;
}

Embedding separator_embedding(const Graph& g, const VertexSet& x) {
    validate_vertex_set(g, x);
    const ComponentPartition parts = components_after_removal(g, x);
    const int r = static_cast<int>(parts.size());
    if (r < 2)
        throw std::invalid_argument("separator_embedding: removal leaves " + std::to_string(r) +
                                    " component(s), need at least 2");
    const int s = g.vertex_count() - static_cast<int>(x.size());
    std::vector<double> sizes(r);
    for (int i = 0; i < r; ++i) {
        sizes[i] = static_cast<double>(parts[i].size());
        if (2 * static_cast<int>(parts[i].size()) > s)
            throw std::invalid_argument(
                "separator_embedding: component containing vertex " + std::to_string(parts[i][0]) +
                " has " + std::to_string(parts[i].size()) + " vertices, more than (n-|X|)/2 = " +
                std::to_string(s / 2.0));
    }

    const std::vector<PlanarPoint> spots = balanced_circle_placement(sizes);
    Embedding emb;
    emb.points.assign(g.vertex_count(), PlanarPoint{0.0, 0.0});
    emb.tolerance = 1e-9;
    for (int i = 0; i < r; ++i)
        for (int v : parts[i]) emb.points[v] = spots[i];
    return emb;
}

double embedding_quotient(const Graph& g, const Embedding& emb) {
    if (static_cast<int>(emb.points.size()) != g.vertex_count())
        throw std::invalid_argument("embedding_quotient: point count mismatch");
    double sx = 0.0, sy = 0.0, denom = 0.0;
    for (const auto& p : emb.points) {
        sx += p.x;
        sy += p.y;
        denom += p.x * p.x + p.y * p.y;
    }
    if (std::hypot(sx, sy) > emb.tolerance)
        throw std::invalid_argument("embedding_quotient: zero-sum contract violated");
    if (denom == 0.0)
        throw std::invalid_argument("embedding_quotient: all points at the origin");

    double num = 0.0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            const double dx = emb.points[u].x - emb.points[v].x;
            const double dy = emb.points[u].y - emb.points[v].y;
            num += dx * dx + dy * dy;
        }
    return num / denom;
}

SeparatorCertificate certify(const Graph& g, const VertexSet& x) {
    SeparatorCertificate cert;
    cert.embedding = separator_embedding(g, x);
    cert.separator = x;
    cert.partition = components_after_removal(g, x);
    cert.cross_edges = cross_edge_count(g, x);
    cert.denominator = g.vertex_count() - static_cast<int>(x.size());
    cert.bound = static_cast<double>(cert.cross_edges) / cert.denominator;
    cert.quotient = embedding_quotient(g, cert.embedding);
    return cert;
}

std::string SeparatorCertificate::bound_fraction() const {
    return std::to_string(cross_edges) + "/" + std::to_string(denominator);
}

std::string certificate_text(const SeparatorCertificate& cert) {
    std::string s;
    s += "separator-certificate\n";
    s += "vertices " + std::to_string(cert.embedding.points.size()) + "\n";
    s += "separator";
    for (int v : cert.separator) s += " " + std::to_string(v);
    s += "\n";
    s += "component_sizes";
    for (const auto& comp : cert.partition) s += " " + std::to_string(comp.size());
    s += "\n";
    s += "cross_edges " + std::to_string(cert.cross_edges) + "\n";
    s += "bound " + bound_fraction() + "\n";
    s += "quotient " + format_g15(cert.quotient) + "\n";
    if (!cert.note.empty()) s += "note " + cert.note + "\n";
    for (std::size_t v = 0; v < cert.embedding.points.size(); ++v)
        s += "point " + std::to_string(v) + " " + format_g15(cert.embedding.points[v].x) + " " +
             format_g15(cert.embedding.points[v].y) + "\n";
    return s;
}

}  // namespace fiedler
