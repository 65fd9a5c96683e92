#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "homext/graph.hpp"

namespace homext {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format: "n m", then m lines "u v" (u < v, lexicographic), then a blank line.
void write_text(std::ostream& os, const Graph& g);
std::string to_text(const Graph& g);
Graph from_text(std::string_view text);

std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header.
Graph from_graph6(std::string_view s);

/// Reads every graph in the stream, detecting text or graph6 per record.
std::vector<Graph> read_graphs(std::istream& is);

}  // namespace homext
