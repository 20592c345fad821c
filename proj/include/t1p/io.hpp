#pragma once

#include <iosfwd>
#include <string>

#include "t1p/graph.hpp"

namespace t1p {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// "u v" per line, '#' starts a comment, blank lines ignored. Duplicate edges collapse.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Standard graph6 (n < 258048); an optional ">>graph6<<" prefix is accepted.
Graph read_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// Picks graph6 when the first non-comment line looks like it, edge list otherwise.
Graph read_graph_file(const std::string& path);
Graph read_graph_text(const std::string& text);

}  // namespace t1p
