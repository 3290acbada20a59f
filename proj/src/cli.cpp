#include "fiedler/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fiedler/edge_list.hpp"
#include "fiedler/embeddings.hpp"
#include "fiedler/families.hpp"
#include "fiedler/separators.hpp"
#include "fiedler/spectra.hpp"

namespace fiedler::cli {

namespace {

constexpr double kCheckSlack = 1e-8;

std::string format12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

// Shortest representation that round-trips exactly.
std::string format_exact(double v) {
    char buf[48];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

bool looks_like_family(const std::string& input) {
    if (input == "cube") return true;
    const auto colon = input.find(':');
    if (colon == std::string::npos) return false;
    try {
        parse_family_spec(input);
        return true;
    } catch (const ParseError&) {
        // A path may contain ':'; only a parseable spec counts.
        return input.find('/') == std::string::npos && input.find('.') == std::string::npos;
    }
}

int int_ceil_sqrt(int n) {
    int k = 0;
    while (k * k < n) ++k;
    return k;
}

int int_ceil_pow_two_thirds(int n) {
    long long k = 0;
    const long long n2 = static_cast<long long>(n) * n;
    while (k * k * k < n2) ++k;
    return static_cast<int>(k);
}

// ---------------------------------------------------------------------
// corpus

struct CorpusEntry {
    std::string name;
    Graph g;
    bool bounded_degree = false;  // grids, cycles, cube
};

std::vector<CorpusEntry> standard_corpus() {
    std::vector<CorpusEntry> corpus;
    auto add = [&](const std::string& name, Graph g, bool bd = false) {
        corpus.push_back({name, std::move(g), bd});
    };
    add("complete:4", complete(4));
    add("doublewheel:4", doublewheel(4));  // the octahedron
    for (int n : {3, 4, 5, 6, 8, 10, 12, 16, 20, 32, 50}) add("cycle:" + std::to_string(n), cycle(n), true);
    for (int n : {2, 3, 4, 5, 8, 12, 20, 50}) add("path:" + std::to_string(n), path(n));
    for (int n : {4, 6, 9, 12, 20, 40}) add("star:" + std::to_string(n), star(n));
    for (int n : {4, 5, 6, 8, 12, 20}) add("wheel:" + std::to_string(n), wheel(n));
    for (int n : {6, 8, 10, 14, 20, 40}) add("doublewheel:" + std::to_string(n), doublewheel(n));
    for (int n : {6, 8, 10, 14, 20, 40, 60})
        add("quadrangulation:" + std::to_string(n), quadrangulation(n));
    for (int n : {2, 3, 4, 5, 6, 8, 12, 20, 40}) add("fan:" + std::to_string(n), fan(n));
    for (int b : {2, 4, 7, 12, 30}) add("kbip:2:" + std::to_string(b), complete_bipartite(2, b));
    add("cube", cube(), true);
    for (auto [r, c] : {std::pair{2, 3}, {3, 3}, {3, 4}, {4, 4}, {5, 5}, {4, 10}, {8, 8}})
        add("grid:" + std::to_string(r) + ":" + std::to_string(c), grid(r, c), true);
    return corpus;
}

// ---------------------------------------------------------------------
// check battery

void add_row(std::vector<CheckReport>& rows, const std::string& check, const std::string& graph,
             double lhs, double rhs) {
    rows.push_back({check, graph, lhs, rhs, lhs <= rhs + kCheckSlack, rhs - lhs});
}

std::vector<CheckReport> check_fiedler_edge_bound(double tol) {
    std::vector<CheckReport> rows;
    for (const auto& e : standard_corpus()) {
        const double l2 = fiedler_value(e.g, tol);
        const double rhs = 2.0 * e.g.edge_count() / (e.g.vertex_count() - 1);
        add_row(rows, "fiedler_edge_bound", e.name, l2, rhs);
    }
    return rows;
}

std::vector<CheckReport> check_planar_limit_four(double tol) {
    std::vector<CheckReport> rows;
    std::vector<std::string> at_four;
    for (const auto& e : standard_corpus()) {
        const double l2 = fiedler_value(e.g, tol);
        add_row(rows, "planar_limit_four", e.name, l2, 4.0);
        if (std::fabs(l2 - 4.0) <= kCheckSlack) at_four.push_back(e.name);
    }
    // Equality is attained exactly by K_4 and the octahedron.
    std::vector<std::string> expected = {"complete:4", "doublewheel:4"};
    std::sort(at_four.begin(), at_four.end());
    std::sort(expected.begin(), expected.end());
    add_row(rows, "planar_limit_four_equality", "corpus",
            at_four == expected ? 0.0 : 1.0, 0.0);
    return rows;
}

std::vector<CheckReport> check_degree_over_n(double tol) {
    std::vector<CheckReport> rows;
    for (const auto& e : standard_corpus()) {
        if (!e.bounded_degree) continue;
        const double l2 = fiedler_value(e.g, tol);
        const double rhs = 8.0 * e.g.max_degree() / e.g.vertex_count();
        add_row(rows, "degree_over_n", e.name, l2, rhs);
    }
    return rows;
}

std::vector<CheckReport> check_connectivity(double tol) {
    std::vector<CheckReport> rows;
    for (const auto& e : standard_corpus()) {
        if (e.g.vertex_count() > 12 || e.g.is_complete()) continue;
        const auto kappa = vertex_connectivity(e.g);
        const double l2 = fiedler_value(e.g, tol);
        add_row(rows, "connectivity_bound", e.name, l2, static_cast<double>(*kappa));
    }
    return rows;
}

std::vector<CheckReport> check_quadrangulation_cut(double /*tol*/) {
    std::vector<CheckReport> rows;
    for (int n = 6; n <= 60; n += 2) {
        const Graph g = quadrangulation(n);
        const int order = g.vertex_count();
        for (int k : {int_ceil_sqrt(order), int_ceil_pow_two_thirds(order)}) {
            const VertexSet a = high_degree_set(g, k);
            const double lhs = static_cast<double>(cross_edge_count(g, a));
            const double frac = (4.0 * order - 8.0) / k;
            const double rhs = order + frac * frac + (8.0 * order - 16.0) / k - 8.0;
            add_row(rows, "quadrangulation_cut",
                    "quadrangulation:" + std::to_string(n) + " k=" + std::to_string(k), lhs, rhs);
        }
    }
    return rows;
}

std::vector<CheckReport> check_bipartite(double tol) {
    std::vector<CheckReport> rows;
    for (int n = 6; n <= 60; n += 2) {
        const double l2 = fiedler_value(quadrangulation(n), tol);
        add_row(rows, "bipartite_limit_two", "quadrangulation:" + std::to_string(n), l2, 2.0);
    }
    for (int b : {2, 4, 7, 12, 30}) {
        const double l2 = fiedler_value(complete_bipartite(2, b), tol);
        add_row(rows, "bipartite_two_exact", "kbip:2:" + std::to_string(b),
                std::fabs(l2 - 2.0), 0.0);
    }
    return rows;
}

const std::vector<std::string> kCheckGroups = {"fiedler", "max4",    "degree",
                                               "connectivity", "quadcut", "bipartite"};

// ---------------------------------------------------------------------
// sweeps

struct SweepFamily {
    std::string label;
    Family kind = Family::doublewheel;
    int h = 0;  // kh only
    int default_from = 0;
    int step = 1;
};

SweepFamily parse_sweep_family(const std::string& text) {
    SweepFamily f;
    f.label = text;
    if (text == "doublewheel") {
        f.kind = Family::doublewheel;
        f.default_from = 4;
        f.step = 2;
    } else if (text == "quadrangulation") {
        f.kind = Family::quadrangulation;
        f.default_from = 6;
        f.step = 2;
    } else if (text == "fan") {
        f.kind = Family::fan;
        f.default_from = 2;
        f.step = 1;
    } else if (text.rfind("kh:", 0) == 0) {
        f.kind = Family::kh_extremal;
        try {
            std::size_t used = 0;
            f.h = std::stoi(text.substr(3), &used);
            if (used != text.size() - 3) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(0, "bad sweep family \"" + text + "\"");
        }
        if (f.h < 4) throw std::invalid_argument("sweep: kh needs h >= 4");
        f.default_from = 2 * f.h - 4;
        f.step = 1;
    } else {
        throw ParseError(0, "no closed-form sweep for family \"" + text + "\"");
    }
    return f;
}

}  // namespace

Graph load_graph(const std::string& input) {
    if (looks_like_family(input)) return build(parse_family_spec(input));
    std::ifstream file(input);
    if (!file) throw ParseError(0, "cannot open \"" + input + "\"");
    return read_edge_list(file);
}

std::vector<CheckReport> run_checks(const std::string& group, double tol) {
    if (group == "fiedler") return check_fiedler_edge_bound(tol);
    if (group == "max4") return check_planar_limit_four(tol);
    if (group == "degree") return check_degree_over_n(tol);
    if (group == "connectivity") return check_connectivity(tol);
    if (group == "quadcut") return check_quadrangulation_cut(tol);
    if (group == "bipartite") return check_bipartite(tol);
    throw ParseError(0, "unknown check group \"" + group + "\"");
}

std::vector<SweepRow> compute_sweep(const std::string& family, int from, int to, double tol) {
    const SweepFamily f = parse_sweep_family(family);
    if (from <= 0) from = f.default_from;
    if (f.step == 2 && from % 2 != 0)
        throw std::invalid_argument("sweep: " + f.label + " requires even n");
    std::vector<SweepRow> rows;
    for (int n = from; n <= to; n += f.step) {
        FamilySpec spec;
        spec.kind = f.kind;
        if (f.kind == Family::kh_extremal) {
            spec.a = f.h;
            spec.b = n;
        } else {
            spec.a = n;
        }
        SweepRow row;
        row.family = family;
        row.n = n;
        row.lambda2 = fiedler_value(build(spec), tol);
        const ClosedForm cf = predicted_lambda2(spec);
        if (cf.in_validity_range) {
            row.closed_form = cf.lambda2;
            row.abs_gap = std::fabs(row.lambda2 - cf.lambda2);
        }
        row.scaled_gap = (row.lambda2 - cf.scaling_limit) * static_cast<double>(n) * n;
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "family,n,lambda2,closed_form,abs_gap,scaled_gap\n";
    for (const auto& r : rows) {
        out << r.family << ',' << r.n << ',' << format_exact(r.lambda2) << ','
            << (r.closed_form ? format_exact(*r.closed_form) : "") << ','
            << (r.abs_gap ? format_exact(*r.abs_gap) : "") << ',' << format_exact(r.scaled_gap)
            << '\n';
    }
}

std::vector<SweepRow> parse_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "family,n,lambda2,closed_form,abs_gap,scaled_gap")
        throw ParseError(1, "bad sweep CSV header");
    std::vector<SweepRow> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = line.find(',', pos);
            cells.push_back(line.substr(pos, comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (cells.size() != 6) throw ParseError(line_no, "expected 6 CSV cells");
        auto cell_double = [&](const std::string& s) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || ptr != s.data() + s.size())
                throw ParseError(line_no, "bad number \"" + s + "\"");
            return v;
        };
        SweepRow row;
        row.family = cells[0];
        row.n = static_cast<int>(cell_double(cells[1]));
        row.lambda2 = cell_double(cells[2]);
        if (!cells[3].empty()) row.closed_form = cell_double(cells[3]);
        if (!cells[4].empty()) row.abs_gap = cell_double(cells[4]);
        row.scaled_gap = cell_double(cells[5]);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

// ---------------------------------------------------------------------
// subcommand bodies

int cmd_fiedler(const std::string& input, double tol, std::ostream& out) {
    const Graph g = load_graph(input);
    out << format12(fiedler_value(g, tol)) << '\n';
    return kExitOk;
}

int cmd_spectrum(const std::string& input, double tol, std::ostream& out) {
    const Graph g = load_graph(input);
    const Spectrum s = eigenvalues_sym(laplacian(g), false, tol);
    for (double v : s.eigenvalues) out << format12(v) << '\n';
    return kExitOk;
}

VertexSet parse_vertex_list(const std::string& text) {
    VertexSet x;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            x.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(0, "bad vertex id \"" + tok + "\" in separator list");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    return x;
}

int cmd_certify(const std::string& input, const std::string& xlist, bool auto_tree,
                bool auto_outerplanar, double tol, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
    Graph g;
    SeparatorCertificate cert;

    if (auto_outerplanar) {
        std::optional<MaximalOuterplanarGraph> p;
        if (looks_like_family(input)) {
            const FamilySpec spec = parse_family_spec(input);
            if (spec.kind != Family::fan)
                throw std::invalid_argument("auto-outerplanar accepts a triangulation file "
                                            "or a fan:n family");
            p.emplace(fan_triangulation(spec.a));
        } else {
            std::ifstream file(input);
            if (!file) throw ParseError(0, "cannot open \"" + input + "\"");
            p.emplace(read_triangulation(file));
        }
        g = p->to_graph();
        const OuterplanarSeparator sep = outerplanar_separator(*p);
        cert = certify(g, sep.separator);
        cert.note = "outerplanar case " + std::to_string(sep.case_id) + "; centroid face " +
                    std::to_string(sep.centroid_face);
        if (sep.case_id == 1)
            cert.note += "; split component face " + std::to_string(sep.chosen_component_face);
    } else if (auto_tree) {
        g = load_graph(input);
        if (!is_tree(g)) throw std::invalid_argument("auto-tree requires a tree input");
        cert = certify(g, tree_separator(g));
        cert.note = "auto tree separator";
    } else {
        g = load_graph(input);
        cert = certify(g, parse_vertex_list(xlist));
    }

    // In-process soundness verification before anything is emitted.
    const double l2 = fiedler_value(g, tol);
    bool sound = std::fabs(cert.quotient - cert.bound) <= 1e-9 && cert.quotient >= l2 - 1e-8;
    double sum_x = 0.0, sum_y = 0.0;
    for (const auto& pt : cert.embedding.points) {
        sum_x += pt.x;
        sum_y += pt.y;
        const double r2 = pt.x * pt.x + pt.y * pt.y;
        if (r2 != 0.0 && std::fabs(r2 - 1.0) > 1e-12) sound = false;
    }
    if (std::hypot(sum_x, sum_y) > cert.embedding.tolerance) sound = false;
    if (!sound) {
        err << "certificate failed verification: bound " << cert.bound_fraction() << ", quotient "
            << cert.quotient << ", lambda2 " << l2 << '\n';
        return kExitCheckFailed;
    }

    const std::string text = certificate_text(cert);
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw ParseError(0, "cannot write \"" + out_path + "\"");
        file << text;
    } else {
        out << text;
    }
    return kExitOk;
}

int cmd_check(const std::vector<std::string>& selectors, double tol, std::ostream& out) {
    std::vector<std::string> groups = selectors;
    if (groups.empty() || (groups.size() == 1 && groups[0] == "all")) groups = kCheckGroups;

    std::vector<CheckReport> rows;
    for (const auto& g : groups) {
        auto part = run_checks(g, tol);
        rows.insert(rows.end(), part.begin(), part.end());
    }

    out << std::left << std::setw(28) << "check" << std::setw(24) << "graph" << std::right
        << std::setw(16) << "lhs" << std::setw(16) << "rhs" << std::setw(6) << "pass"
        << std::setw(14) << "slack" << '\n';
    int failures = 0;
    for (const auto& r : rows) {
        char lhs[32], rhs[32], slack[32];
        std::snprintf(lhs, sizeof lhs, "%.10g", r.lhs);
        std::snprintf(rhs, sizeof rhs, "%.10g", r.rhs);
        std::snprintf(slack, sizeof slack, "%.4g", r.slack);
        out << std::left << std::setw(28) << r.check << std::setw(24) << r.graph << std::right
            << std::setw(16) << lhs << std::setw(16) << rhs << std::setw(6)
            << (r.pass ? "yes" : "NO") << std::setw(14) << slack << '\n';
        if (!r.pass) ++failures;
    }
    out << rows.size() - failures << "/" << rows.size() << " checks passed\n";
    if (failures > 0) {
        out << "failing rows:\n";
        for (const auto& r : rows)
            if (!r.pass) out << "  " << r.check << " " << r.graph << '\n';
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_sweep(const std::string& family, int from, int to, double tol,
              const std::string& out_path, std::ostream& out) {
    const std::vector<SweepRow> rows = compute_sweep(family, from, to, tol);
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw ParseError(0, "cannot write \"" + out_path + "\"");
        write_sweep_csv(rows, file);
    } else {
        write_sweep_csv(rows, out);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    double tol = kDefaultTol;
    if (const char* env = std::getenv("FF_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0)) {
            err << "error: bad FF_TOL value \"" << env << "\"\n";
            return kExitParse;
        }
        tol = v;
    }

    CLI::App app{"Fiedler-value toolkit: spectra, closed forms and separator certificates "
                 "for planar graph families"};
    app.require_subcommand(1);

    std::string input, xlist, out_path, sweep_family;
    std::vector<std::string> selectors;
    bool auto_tree = false, auto_outerplanar = false;
    int from = 0, to = 200;

    auto* fied = app.add_subcommand("fiedler", "print the Fiedler value (12 digits)");
    fied->add_option("input", input, "edge-list file or family string")->required();
    fied->add_option("--tol", tol, "eigensolver tolerance");

    auto* spec = app.add_subcommand("spectrum", "print all Laplacian eigenvalues, ascending");
    spec->add_option("input", input, "edge-list file or family string")->required();
    spec->add_option("--tol", tol, "eigensolver tolerance");

    auto* cert = app.add_subcommand("certify", "emit a separator upper-bound certificate");
    cert->add_option("input", input, "edge-list file, family string, or triangulation file")
        ->required();
    auto* xopt = cert->add_option("-x,--x", xlist, "comma-separated separator vertices");
    auto* topt = cert->add_flag("--auto-tree", auto_tree, "balanced separator from tree centroids");
    auto* oopt = cert->add_flag("--auto-outerplanar", auto_outerplanar,
                                "separator from the triangulation's dual tree");
    cert->add_option("-o,--out", out_path, "write the certificate to a file");
    cert->add_option("--tol", tol, "eigensolver tolerance");
    xopt->excludes(topt)->excludes(oopt);
    topt->excludes(oopt);

    auto* check = app.add_subcommand("check", "run the inequality predicate battery");
    check->add_option("groups", selectors,
                      "subset of: fiedler max4 degree connectivity quadcut bipartite (default all)");
    check->add_option("--tol", tol, "eigensolver tolerance");

    auto* sweep = app.add_subcommand("sweep", "CSV sweep of a closed-form family");
    sweep->add_option("family", sweep_family, "doublewheel | fan | quadrangulation | kh:<h>")
        ->required();
    sweep->add_option("--from", from, "first n (family default if omitted)");
    sweep->add_option("--to", to, "last n (default 200)");
    sweep->add_option("-o,--out", out_path, "write CSV to a file");
    sweep->add_option("--tol", tol, "eigensolver tolerance");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);

        if (fied->parsed()) return cmd_fiedler(input, tol, out);
        if (spec->parsed()) return cmd_spectrum(input, tol, out);
        if (cert->parsed()) {
            if (!auto_tree && !auto_outerplanar && xlist.empty())
                throw ParseError(0, "certify needs --x, --auto-tree or --auto-outerplanar");
            return cmd_certify(input, xlist, auto_tree, auto_outerplanar, tol, out_path, out, err);
        }
        if (check->parsed()) return cmd_check(selectors, tol, out);
        if (sweep->parsed()) return cmd_sweep(sweep_family, from, to, tol, out_path, out);
        return kExitError;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace fiedler::cli
