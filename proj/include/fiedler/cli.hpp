#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fiedler/graph.hpp"

namespace fiedler::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitCheckFailed = 4;

/// One row of the predicate battery: pass iff lhs <= rhs + 1e-8.
struct CheckReport {
    std::string check;
    std::string graph;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
    double slack = 0.0;  // rhs - lhs
};

/// One row of a closed-form sweep. closed_form/abs_gap are absent for
/// parameters outside the formula's validity range.
struct SweepRow {
    std::string family;
    int n = 0;
    double lambda2 = 0.0;
    std::optional<double> closed_form;
    std::optional<double> abs_gap;
    double scaled_gap = 0.0;  // (lambda2 - limit) * n^2
};

/// Loads a graph from a family string ("doublewheel:10", "kh:5:20", ...)
/// or an edge-list file path.
Graph load_graph(const std::string& input);

/// Runs one predicate group ("fiedler", "max4", "degree", "connectivity",
/// "quadcut", "bipartite") over the standard corpus.
std::vector<CheckReport> run_checks(const std::string& group, double tol);

/// Sweeps a family ("doublewheel", "fan", "quadrangulation", "kh:<h>")
/// over n in [from, to], stepping by the family's parity.
std::vector<SweepRow> compute_sweep(const std::string& family, int from, int to, double tol);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);
std::vector<SweepRow> parse_sweep_csv(std::istream& in);

/// Entry point used by main(): args exclude the program name.
/// Exit codes: 0 ok, 2 parse failure, 3 precondition violation,
/// 4 check/soundness failure, 1 anything else.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fiedler::cli
