#include "fiedler/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fiedler {

std::vector<double> Spectrum::eigenvector(int i) const {
    const int n = size();
    std::vector<double> v(n);
    for (int r = 0; r < n; ++r) v[r] = eigenvectors[static_cast<std::size_t>(i) * n + r];
    return v;
}

namespace {

double offdiag_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            double v = a[static_cast<std::size_t>(p) * n + q];
            s += 2.0 * v * v;
        }
    return std::sqrt(s);
}

// One Jacobi rotation zeroing a_pq, applied symmetrically; v accumulates
// the eigenvector columns when non-null.
void rotate(std::vector<double>& a, std::vector<double>* v, int n, int p, int q) {
    const std::size_t np = static_cast<std::size_t>(n) * p;
    const std::size_t nq = static_cast<std::size_t>(n) * q;
    const double apq = a[np + q];
    if (apq == 0.0) return;

    const double theta = 0.5 * (a[nq + q] - a[np + p]) / apq;
    double t;
    if (std::fabs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    for (int r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        const std::size_t nr = static_cast<std::size_t>(n) * r;
        const double arp = a[nr + p];
        const double arq = a[nr + q];
        a[nr + p] = c * arp - s * arq;
        a[nr + q] = s * arp + c * arq;
        a[np + r] = a[nr + p];
        a[nq + r] = a[nr + q];
    }
    a[np + p] -= t * apq;
    a[nq + q] += t * apq;
    a[np + q] = 0.0;
    a[nq + p] = 0.0;

    if (v) {
        auto& vv = *v;
        for (int r = 0; r < n; ++r) {
            const std::size_t nr = static_cast<std::size_t>(n) * r;
            const double vrp = vv[nr + p];
            const double vrq = vv[nr + q];
            vv[nr + p] = c * vrp - s * vrq;
            vv[nr + q] = s * vrp + c * vrq;
        }
    }
}

}  // namespace

Spectrum eigenvalues_sym(const SymMatrix& m, bool want_vectors, double tol) {
    const int n = m.size();
    if (n < 1) throw std::invalid_argument("eigenvalues_sym: empty matrix");
    if (tol <= 0.0) throw std::invalid_argument("eigenvalues_sym: tol must be positive");
    if (m.max_asymmetry() > 1e-12)
        throw std::invalid_argument("eigenvalues_sym: matrix is not symmetric");

    const double norm = m.frobenius_norm();
    std::vector<double> a = m.data();
    std::vector<double> v;
    if (want_vectors) {
        v.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
    }

    double off = offdiag_norm(a, n);
    int sweep = 0;
    while (off > tol * norm) {
        if (sweep++ >= kMaxSweeps)
            throw std::runtime_error("eigenvalues_sym: no convergence after " +
                                     std::to_string(kMaxSweeps) + " sweeps, residual " +
                                     std::to_string(off / (norm > 0 ? norm : 1.0)));
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                rotate(a, want_vectors ? &v : nullptr, n, p, q);
        off = offdiag_norm(a, n);
    }

    // V^T M V = diag(a); pair each diagonal entry with its column of V
    // and sort ascending.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const double di = a[static_cast<std::size_t>(i) * n + i];
        const double dj = a[static_cast<std::size_t>(j) * n + j];
        return di < dj;
    });

    Spectrum out;
    out.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i)
        out.eigenvalues[i] = a[static_cast<std::size_t>(order[i]) * n + order[i]];
    if (want_vectors) {
        out.eigenvectors.resize(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < n; ++r)
                out.eigenvectors[static_cast<std::size_t>(i) * n + r] =
                    v[static_cast<std::size_t>(r) * n + order[i]];
    }
    const double eps = std::numeric_limits<double>::epsilon();
    out.residual_bound = off + 16.0 * n * eps * (1.0 + norm);
    return out;
}

double fiedler_value(const Graph& g, double tol) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("fiedler_value: need at least 2 vertices");
    return eigenvalues_sym(laplacian(g), false, tol).eigenvalues[1];
}

std::vector<double> fiedler_vector(const Graph& g, double tol) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("fiedler_vector: need at least 2 vertices");
    if (!is_connected(g)) throw std::invalid_argument("fiedler_vector: graph is disconnected");

    const Spectrum s = eigenvalues_sym(laplacian(g), true, tol);
    std::vector<double> x = s.eigenvector(1);
    const int n = static_cast<int>(x.size());

    // L annihilates the all-ones direction, so projecting it out keeps the
    // residual while zeroing the coordinate sum.
    double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double norm = 0.0;
    for (double& xi : x) {
        xi -= mean;
        norm += xi * xi;
    }
    norm = std::sqrt(norm);
    for (double& xi : x) xi /= norm;
    return x;
}

double rayleigh_quotient(const SymMatrix& l, const std::vector<double>& x) {
    const int n = l.size();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("rayleigh_quotient: dimension mismatch");
    double xx = 0.0;
    for (double xi : x) xx += xi * xi;
    if (xx == 0.0) throw std::invalid_argument("rayleigh_quotient: zero vector");
    double xlx = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += l(i, j) * x[j];
        xlx += x[i] * row;
    }
    return xlx / xx;
}

Spectrum join_spectrum(const Spectrum& s1, int n1, const Spectrum& s2, int n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("join_spectrum: parts must be non-empty");
    if (s1.size() != n1 || s2.size() != n2)
        throw std::invalid_argument("join_spectrum: spectrum length does not match vertex count");
    if (std::fabs(s1.eigenvalues[0]) > 1e-8 || std::fabs(s2.eigenvalues[0]) > 1e-8)
        throw std::invalid_argument("join_spectrum: smallest eigenvalue nonzero, "
                                    "not a Laplacian spectrum");

    Spectrum out;
    out.eigenvalues.reserve(static_cast<std::size_t>(n1) + n2);
    out.eigenvalues.push_back(0.0);
    for (int i = 1; i < n1; ++i) out.eigenvalues.push_back(s1.eigenvalues[i] + n2);
    for (int j = 1; j < n2; ++j) out.eigenvalues.push_back(s2.eigenvalues[j] + n1);
    out.eigenvalues.push_back(static_cast<double>(n1 + n2));
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    out.residual_bound = std::max(s1.residual_bound, s2.residual_bound);
    return out;
}

double embedding_residual(const SymMatrix& l, const std::vector<double>& x, double lambda) {
    const int n = l.size();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("embedding_residual: dimension mismatch");
    double xx = 0.0;
    for (double xi : x) xx += xi * xi;
    if (xx == 0.0) throw std::invalid_argument("embedding_residual: zero vector");
    double rr = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += l(i, j) * x[j];
        row -= lambda * x[i];
        rr += row * row;
    }
    return std::sqrt(rr / xx);
}

}  // namespace fiedler
