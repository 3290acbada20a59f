#include "fiedler/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fiedler/edge_list.hpp"

namespace fiedler {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Graph cycle(int n) {
    require(n >= 3, "cycle: n >= 3 required");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph path(int n) {
    require(n >= 1, "path: n >= 1 required");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph star(int n) {
    require(n >= 1, "star: n >= 1 required");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edge_list(n, edges);
}

Graph empty_graph(int n) {
    require(n >= 1, "empty: n >= 1 required");
    return Graph::from_edge_list(n, {});
}

Graph complete(int n) {
    require(n >= 1, "complete: n >= 1 required");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "complete_bipartite: both sides must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edge_list(a + b, edges);
}

Graph cube() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 8; ++v)
        for (int bit = 0; bit < 3; ++bit) {
            int u = v ^ (1 << bit);
            if (v < u) edges.emplace_back(v, u);
        }
    return Graph::from_edge_list(8, edges);
}

Graph grid(int rows, int cols) {
    require(rows >= 1 && cols >= 1, "grid: dimensions must be >= 1");
    std::vector<std::pair<int, int>> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edge_list(rows * cols, edges);
}

Graph wheel(int n) {
    require(n >= 3, "wheel: n >= 3 required");
    return join(cycle(n), empty_graph(1));
}

Graph doublewheel(int n) {
    require(n >= 4, "doublewheel: n >= 4 required");
    require(n % 2 == 0, "doublewheel: n must be even");
    return join(cycle(n), empty_graph(2));
}

Graph quadrangulation(int n) {
    require(n >= 4, "quadrangulation: n >= 4 required");
    require(n % 2 == 0, "quadrangulation: n must be even");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, i % 2 == 0 ? n : n + 1);
    return Graph::from_edge_list(n + 2, edges);
}

Graph fan(int n) {
    require(n >= 2, "fan: n >= 2 required");
    return join(path(n), empty_graph(1));
}

Graph kh_extremal(int h, int n) {
    require(h >= 4, "kh: h >= 4 required");
    require(n >= 2 * h - 4, "kh: n >= 2h-4 required");
    return complete_bipartite(h - 2, n - h + 2);
}

namespace {

struct FamilyName {
    const char* name;
    Family kind;
    int arity;
};

constexpr FamilyName kFamilies[] = {
    {"cycle", Family::cycle, 1},
    {"path", Family::path, 1},
    {"star", Family::star, 1},
    {"empty", Family::empty, 1},
    {"complete", Family::complete, 1},
    {"complete_bipartite", Family::complete_bipartite, 2},
    {"kbip", Family::complete_bipartite, 2},
    {"cube", Family::cube, 0},
    {"grid", Family::grid, 2},
    {"wheel", Family::wheel, 1},
    {"doublewheel", Family::doublewheel, 1},
    {"quadrangulation", Family::quadrangulation, 1},
    {"fan", Family::fan, 1},
    {"kh", Family::kh_extremal, 2},
};

const FamilyName* lookup(const std::string& name) {
    for (const auto& f : kFamilies)
        if (name == f.name) return &f;
    return nullptr;
}

const char* canonical_name(Family kind) {
    for (const auto& f : kFamilies)
        if (f.kind == kind) return f.name;
    return "?";
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t colon = text.find(':', pos);
        parts.push_back(text.substr(pos, colon - pos));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    const FamilyName* fam = lookup(parts[0]);
    if (!fam) throw ParseError(0, "unknown family \"" + parts[0] + "\"");
    if (static_cast<int>(parts.size()) - 1 != fam->arity)
        throw ParseError(0, "family \"" + parts[0] + "\" takes " + std::to_string(fam->arity) +
                                " parameter(s)");
    FamilySpec spec;
    spec.kind = fam->kind;
    auto to_int = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw ParseError(0, "bad integer parameter \"" + s + "\" in family string");
        }
    };
    if (fam->arity >= 1) spec.a = to_int(parts[1]);
    if (fam->arity >= 2) spec.b = to_int(parts[2]);
    return spec;
}

std::string to_string(const FamilySpec& spec) {
    std::string s = canonical_name(spec.kind);
    const FamilyName* fam = lookup(s);
    if (fam->arity >= 1) s += ":" + std::to_string(spec.a);
    if (fam->arity >= 2) s += ":" + std::to_string(spec.b);
    return s;
}

Graph build(const FamilySpec& spec) {
    switch (spec.kind) {
        case Family::cycle: return cycle(spec.a);
        case Family::path: return path(spec.a);
        case Family::star: return star(spec.a);
        case Family::empty: return empty_graph(spec.a);
        case Family::complete: return complete(spec.a);
        case Family::complete_bipartite: return complete_bipartite(spec.a, spec.b);
        case Family::cube: return cube();
        case Family::grid: return grid(spec.a, spec.b);
        case Family::wheel: return wheel(spec.a);
        case Family::doublewheel: return doublewheel(spec.a);
        case Family::quadrangulation: return quadrangulation(spec.a);
        case Family::fan: return fan(spec.a);
        case Family::kh_extremal: return kh_extremal(spec.a, spec.b);
    }
    throw std::invalid_argument("build: unknown family kind");
}

ClosedForm predicted_lambda2(const FamilySpec& spec) {
    ClosedForm cf;
    cf.family = spec;
    switch (spec.kind) {
        case Family::doublewheel: {
            const int n = spec.a;
            require(n >= 4 && n % 2 == 0, "predicted_lambda2: doublewheel needs even n >= 4");
            cf.lambda2 = 4.0 - 2.0 * std::cos(2.0 * kPi / n);
            cf.in_validity_range = true;
            cf.scaling_limit = 2.0;
            return cf;
        }
        case Family::quadrangulation: {
            const int n = spec.a;
            require(n >= 4 && n % 2 == 0, "predicted_lambda2: quadrangulation needs even n >= 4");
            cf.lambda2 = 3.0 - 2.0 * std::cos(2.0 * kPi / n);
            // At n = 4 the apex branch dips below the formula; the formula
            // holds from n = 6 on.
            cf.in_validity_range = n >= 6;
            cf.scaling_limit = 1.0;
            return cf;
        }
        case Family::fan: {
            const int n = spec.a;
            require(n >= 2, "predicted_lambda2: fan needs n >= 2");
            cf.lambda2 = 3.0 - 2.0 * std::cos(kPi / n);
            cf.in_validity_range = true;
            cf.scaling_limit = 1.0;
            return cf;
        }
        case Family::kh_extremal: {
            const int h = spec.a, n = spec.b;
            require(h >= 4 && n >= 2 * h - 4, "predicted_lambda2: kh needs h >= 4, n >= 2h-4");
            cf.lambda2 = static_cast<double>(h - 2);
            cf.in_validity_range = true;
            cf.scaling_limit = static_cast<double>(h - 2);
            return cf;
        }
        default:
            throw std::invalid_argument("predicted_lambda2: no closed form for family " +
                                        std::string(canonical_name(spec.kind)));
    }
}

std::vector<double> predicted_full_spectrum(const FamilySpec& spec) {
    std::vector<double> eig;
    switch (spec.kind) {
        case Family::cycle: {
            const int n = spec.a;
            require(n >= 3, "predicted_full_spectrum: cycle needs n >= 3");
            for (int k = 0; k < n; ++k) eig.push_back(2.0 - 2.0 * std::cos(2.0 * kPi * k / n));
            break;
        }
        case Family::path: {
            const int n = spec.a;
            require(n >= 1, "predicted_full_spectrum: path needs n >= 1");
            for (int k = 0; k < n; ++k) eig.push_back(2.0 - 2.0 * std::cos(kPi * k / n));
            break;
        }
        case Family::doublewheel: {
            const int n = spec.a;
            require(n >= 4 && n % 2 == 0, "predicted_full_spectrum: doublewheel needs even n >= 4");
            eig = {0.0, 6.0, static_cast<double>(n), static_cast<double>(n + 2)};
            for (int k = 1; k <= n / 2 - 1; ++k) {
                const double v = 4.0 - 2.0 * std::cos(2.0 * kPi * k / n);
                eig.push_back(v);
                eig.push_back(v);
            }
            break;
        }
        case Family::fan: {
            const int n = spec.a;
            require(n >= 2, "predicted_full_spectrum: fan needs n >= 2");
            eig = {0.0, static_cast<double>(n + 1)};
            for (int k = 1; k <= n - 1; ++k) eig.push_back(3.0 - 2.0 * std::cos(kPi * k / n));
            break;
        }
        default:
            throw std::invalid_argument("predicted_full_spectrum: unsupported family " +
                                        std::string(canonical_name(spec.kind)));
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<Eigenpair> quadrangulation_trig_eigenpairs(int n) {
    require(n >= 4, "quadrangulation_trig_eigenpairs: n >= 4 required");
    require(n % 2 == 0, "quadrangulation_trig_eigenpairs: n must be even");
    std::vector<Eigenpair> pairs;
    for (int k = 1; k <= n / 2 - 1; ++k) {
        const double lambda = 3.0 - 2.0 * std::cos(2.0 * kPi * k / n);
        Eigenpair sine{std::vector<double>(n + 2, 0.0), lambda};
        Eigenpair cosine{std::vector<double>(n + 2, 0.0), lambda};
        for (int i = 0; i < n; ++i) {
            sine.vector[i] = std::sin(2.0 * kPi * i * k / n);
            cosine.vector[i] = std::cos(2.0 * kPi * i * k / n);
        }
        pairs.push_back(std::move(sine));
        pairs.push_back(std::move(cosine));
    }
    return pairs;
}

std::vector<Eigenpair> quadrangulation_apex_eigenpairs(int n) {
    require(n >= 4, "quadrangulation_apex_eigenpairs: n >= 4 required");
    require(n % 2 == 0, "quadrangulation_apex_eigenpairs: n must be even");
    // t^2 + (n/2 - 5) t - n/2 = 0, solved in the numerically stable form.
    const double b = 0.5 * n - 5.0;
    const double c = -0.5 * n;
    const double disc = std::sqrt(b * b - 4.0 * c);
    const double q = -0.5 * (b + (b >= 0 ? disc : -disc));
    const double t1 = q;
    const double t2 = c / q;
    std::vector<Eigenpair> pairs;
    for (double t : {std::min(t1, t2), std::max(t1, t2)}) {
        Eigenpair p{std::vector<double>(n + 2, 0.0), 5.0 - t};
        for (int i = 0; i < n; ++i) p.vector[i] = (i % 2 == 0) ? 1.0 : -1.0;
        p.vector[n] = t;
        p.vector[n + 1] = -t;
        pairs.push_back(std::move(p));
    }
    return pairs;
}

}  // namespace fiedler
