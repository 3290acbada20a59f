#include "fiedler/edge_list.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace fiedler {

namespace {

// Reads exactly the expected integers from a line; rejects trailing junk.
std::vector<long long> parse_ints(const std::string& line, int line_no, int expected) {
    std::istringstream ss(line);
    std::vector<long long> vals;
    long long v;
    while (ss >> v) vals.push_back(v);
    std::string rest;
    if (!ss.eof() || static_cast<int>(vals.size()) != expected) {
        ss.clear();
        throw ParseError(line_no, "expected " + std::to_string(expected) +
                                      " integers, got \"" + line + "\"");
    }
    return vals;
}

std::string next_line(std::istream& in, int& line_no, const char* what) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return line;
    }
    throw ParseError(line_no + 1, std::string("unexpected end of input, wanted ") + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    int line_no = 0;
    auto header = parse_ints(next_line(in, line_no, "header \"n m\""), line_no, 2);
    const long long n = header[0], m = header[1];
    if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
    if (n > 1'000'000 || m > 10'000'000) throw ParseError(line_no, "header counts implausibly large");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        auto uv = parse_ints(next_line(in, line_no, "edge \"u v\""), line_no, 2);
        const long long u = uv[0], v = uv[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "edge endpoint out of range");
        if (u == v) throw ParseError(line_no, "self-loop rejected");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace fiedler
