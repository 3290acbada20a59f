#pragma once

#include <vector>

#include "fiedler/graph.hpp"

namespace fiedler {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr int kMaxSweeps = 100;

/// Full eigensystem of a symmetric matrix: eigenvalues ascending, with
/// optional orthonormal eigenvectors and an a-posteriori residual bound
/// valid for every returned pair.
struct Spectrum {
    std::vector<double> eigenvalues;
    /// Column-major n*n when requested, empty otherwise; column i pairs
    /// with eigenvalues[i].
    std::vector<double> eigenvectors;
    double residual_bound = 0.0;

    int size() const { return static_cast<int>(eigenvalues.size()); }
    bool has_eigenvectors() const { return !eigenvectors.empty(); }
    std::vector<double> eigenvector(int i) const;
};

/// Cyclic Jacobi diagonalization. Terminates once the off-diagonal
/// Frobenius mass drops to tol * ||M||_F (at most kMaxSweeps sweeps;
/// non-convergence throws with the achieved residual). Input must be
/// symmetric within 1e-12 per entry.
Spectrum eigenvalues_sym(const SymMatrix& m, bool want_vectors = false, double tol = kDefaultTol);

/// Second-smallest Laplacian eigenvalue. Near zero iff g is disconnected.
double fiedler_value(const Graph& g, double tol = kDefaultTol);

/// Unit eigenvector for the Fiedler value of a connected graph, with the
/// all-ones component projected out.
std::vector<double> fiedler_vector(const Graph& g, double tol = kDefaultTol);

/// (x^T L x) / (x^T x). For a Laplacian this equals the sum of squared
/// edge differences over the squared norm.
double rayleigh_quotient(const SymMatrix& l, const std::vector<double>& x);

/// Laplacian spectrum of the join of two graphs from the parts' spectra:
/// {0} + {lambda_i(G1)+n2 : i>=2} + {lambda_j(G2)+n1 : j>=2} + {n1+n2}.
Spectrum join_spectrum(const Spectrum& s1, int n1, const Spectrum& s2, int n2);

/// ||L x - lambda x||_2 / ||x||_2.
double embedding_residual(const SymMatrix& l, const std::vector<double>& x, double lambda);

}  // namespace fiedler
