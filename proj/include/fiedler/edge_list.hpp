#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fiedler/graph.hpp"

namespace fiedler {

/// Malformed text input; carries the 1-based line number (0 when the
/// error is not tied to a line, e.g. a bad family string).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Edge-list text format: line 1 is "n m", then m lines "u v".
Graph read_edge_list(std::istream& in);

/// Writes the same format; edges sorted with u < v, lexicographic.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace fiedler
