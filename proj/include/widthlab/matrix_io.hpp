#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "widthlab/matrix.hpp"

namespace widthlab {

// Parse failure with a 1-based line number, formatted as "line N: message".
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// Matrix text format:
//   field <p> <e>
//   matrix <m> <n>
//   <m lines of n integer-encoded entries>
// '#' starts a comment; blank lines are ignored.
FFMatrix read_matrix(std::istream& in);
FFMatrix read_matrix_file(const std::string& path);
std::string write_matrix(const FFMatrix& m);

// Directed graph text format:
//   digraph <n>
//   arc <u> <v>     (0-based, u != v)
struct DirectedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;
};

DirectedGraph read_digraph(std::istream& in);
DirectedGraph read_digraph_file(const std::string& path);
std::string write_digraph(const DirectedGraph& g);

}  // namespace widthlab
