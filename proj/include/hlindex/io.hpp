#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hlindex/graph.hpp"

namespace hlindex {

/// Malformed graph6 or edge-list input. `position()` is the byte offset
/// (graph6) or 1-based line number (edge list) of the offending token.
class FormatError : public std::invalid_argument {
 public:
  FormatError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

// Plain edge list: "n m" on the first line, then m lines "u v".
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);

/// Reads every graph in a text blob: either a single edge list or one
/// graph6 string per non-empty line (an optional ">>graph6<<" header is
/// skipped).
std::vector<Graph> read_graphs(std::string_view text);

}  // namespace hlindex
