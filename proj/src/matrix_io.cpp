#include "widthlab/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace widthlab {

namespace {

// Reads logical lines, skipping blanks and '#' comments, tracking numbers.
class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& out) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      out = line.substr(first, last - first + 1);
      return true;
    }
    return false;
  }

  int line_no() const { return line_no_; }

private:
  std::istream& in_;
  int line_no_ = 0;
};

[[noreturn]] void fail(const LineReader& r, const std::string& msg) { throw ParseError(r.line_no(), msg); }

}  // namespace

FFMatrix read_matrix(std::istream& in) {
  LineReader r(in);
  std::string line;

  if (!r.next(line)) throw ParseError(r.line_no(), "expected 'field p e' header");
  std::istringstream hs(line);
  std::string kw;
  int p = 0, e = 0;
  if (!(hs >> kw >> p >> e) || kw != "field") fail(r, "expected 'field p e', got '" + line + "'");
  Field f = [&] {
    try {
      return Field::make(p, e);
    } catch (const std::exception& ex) {
      fail(r, ex.what());
    }
  }();

  if (!r.next(line)) throw ParseError(r.line_no(), "expected 'matrix m n' header");
  std::istringstream ms(line);
  int m = 0, n = 0;
  if (!(ms >> kw >> m >> n) || kw != "matrix") fail(r, "expected 'matrix m n', got '" + line + "'");
  if (m < 0 || n < 0) fail(r, "matrix dimensions must be non-negative");

  FFMatrix out(f, m, n);
  for (int i = 0; i < m; ++i) {
    if (!r.next(line)) throw ParseError(r.line_no(), "expected matrix row " + std::to_string(i + 1));
    std::istringstream rs(line);
    for (int j = 0; j < n; ++j) {
      int v = 0;
      if (!(rs >> v)) fail(r, "row " + std::to_string(i + 1) + ": expected " + std::to_string(n) + " entries");
      if (v < 0 || v >= f.order())
        fail(r, "entry " + std::to_string(v) + " is outside " + f.name());
      out.set(i, j, static_cast<Elem>(v));
    }
    int extra;
    if (rs >> extra) fail(r, "row " + std::to_string(i + 1) + ": too many entries");
  }
  return out;
}

FFMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return read_matrix(in);
  } catch (const ParseError& ex) {
    throw std::runtime_error(path + ": " + ex.what());
  }
}

std::string write_matrix(const FFMatrix& m) {
  std::ostringstream out;
  out << "field " << m.field().characteristic() << ' ' << m.field().degree() << '\n';
  out << "matrix " << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << static_cast<int>(m.at(i, j));
    }
    out << '\n';
  }
  return out.str();
}

DirectedGraph read_digraph(std::istream& in) {
  LineReader r(in);
  std::string line;
  if (!r.next(line)) throw ParseError(r.line_no(), "expected 'digraph n' header");
  std::istringstream hs(line);
  std::string kw;
  int n = 0;
  if (!(hs >> kw >> n) || kw != "digraph") fail(r, "expected 'digraph n', got '" + line + "'");
  if (n < 0) fail(r, "vertex count must be non-negative");
  DirectedGraph g;
  g.n = n;
  while (r.next(line)) {
    std::istringstream as(line);
    int u = 0, v = 0;
    if (!(as >> kw >> u >> v) || kw != "arc") fail(r, "expected 'arc u v', got '" + line + "'");
    if (u < 0 || u >= n || v < 0 || v >= n) fail(r, "arc endpoint out of range");
    if (u == v) fail(r, "self-loops are not allowed");
    g.arcs.emplace_back(u, v);
  }
  return g;
}

DirectedGraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return read_digraph(in);
  } catch (const ParseError& ex) {
    throw std::runtime_error(path + ": " + ex.what());
  }
}

std::string write_digraph(const DirectedGraph& g) {
  std::ostringstream out;
  out << "digraph " << g.n << '\n';
  for (const auto& [u, v] : g.arcs) out << "arc " << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace widthlab
