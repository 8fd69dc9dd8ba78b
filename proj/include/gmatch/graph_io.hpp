#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gmatch/graph.hpp"

namespace gmatch {

/// Malformed text or a header whose edge count disagrees with the body.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Text format:
//
//   n m
//   u v w      (m lines, 0-based ids, w an integer or p/q)
//
// Tokens are whitespace separated and '#' starts a comment running to the end
// of the line. Blank lines are skipped. Structural problems (self-loops,
// duplicates, non-positive weights) surface as GraphError from the graph
// constructor.
WeightedGraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedGraph& g);

WeightedGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const WeightedGraph& g);

} // namespace gmatch
