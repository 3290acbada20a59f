#pragma once

#include <string>
#include <vector>

#include "fiedler/graph.hpp"

namespace fiedler {

Graph cycle(int n);
Graph path(int n);
/// Star K_{1,n-1} on n vertices; the center is vertex 0.
Graph star(int n);
Graph empty_graph(int n);
Graph complete(int n);
/// Sides are 0..a-1 and a..a+b-1.
Graph complete_bipartite(int a, int b);
/// The 3-cube Q_3: 8 vertices, ids adjacent iff they differ in one bit.
Graph cube();
/// rows x cols lattice with 4-neighbor edges, row-major ids.
Graph grid(int rows, int cols);

/// Cycle joined to one hub (vertex n); n+1 vertices.
Graph wheel(int n);
/// Cycle joined to two non-adjacent apexes (vertices n, n+1); n even.
Graph doublewheel(int n);
/// Cycle 0..n-1 plus apex n wired to the even-index vertices and apex
/// n+1 wired to the odd-index ones; every face a quadrilateral. n even.
Graph quadrangulation(int n);
/// Path joined to one apex (vertex n); maximal outerplanar.
Graph fan(int n);
/// K_{h-2, n-h+2}; requires h >= 4 and n >= 2h-4.
Graph kh_extremal(int h, int n);

enum class Family {
    cycle,
    path,
    star,
    empty,
    complete,
    complete_bipartite,
    cube,
    grid,
    wheel,
    doublewheel,
    quadrangulation,
    fan,
    kh_extremal,
};

/// A family instance, expressible as "name:param[:param]" on the CLI
/// (e.g. "doublewheel:10", "grid:3:4", "kh:5:20").
struct FamilySpec {
    Family kind = Family::cycle;
    int a = 0;  // n for single-parameter families; h for kh; rows / first side otherwise
    int b = 0;  // n for kh; cols / second side otherwise
};

FamilySpec parse_family_spec(const std::string& text);
std::string to_string(const FamilySpec& spec);
Graph build(const FamilySpec& spec);

/// Closed-form prediction for the second Laplacian eigenvalue of one of
/// the four extremal families (doublewheel, quadrangulation, fan, kh).
struct ClosedForm {
    FamilySpec family;
    double lambda2 = 0.0;
    /// False outside the formula's n-range (quadrangulation at n = 4,
    /// where the numeric value drops below the formula).
    bool in_validity_range = false;
    /// Limit of lambda2 as n grows (2, 1, 1, or h-2).
    double scaling_limit = 0.0;
};

ClosedForm predicted_lambda2(const FamilySpec& spec);

/// Full predicted Laplacian spectrum (ascending) for doublewheel, fan,
/// cycle and path instances.
std::vector<double> predicted_full_spectrum(const FamilySpec& spec);

struct Eigenpair {
    std::vector<double> vector;
    double eigenvalue = 0.0;
};

/// The sine/cosine eigenvectors of the quadrangulation, supported on the
/// cycle with zero apex entries: eigenvalue 3 - 2cos(2 pi k / n) for
/// k = 1..n/2-1, two independent vectors each.
std::vector<Eigenpair> quadrangulation_trig_eigenpairs(int n);

/// The two eigenpairs that alternate +-1 on the cycle with opposite apex
/// entries +-t; t solves t^2 + (n/2 - 5) t - n/2 = 0 and the eigenvalue
/// is 5 - t. Roots are computed numerically.
std::vector<Eigenpair> quadrangulation_apex_eigenpairs(int n);

}  // namespace fiedler
