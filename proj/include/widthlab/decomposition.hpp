#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "widthlab/connectivity.hpp"

namespace widthlab {

// A tree in which every node has degree 1 or 3; a designated root node may
// have degree 2 instead.  Node ids are 0..node_count-1, edge ids are
// positions in the edge list.
struct CubicTree {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::optional<int> root;

  std::vector<int> degrees() const;
  std::vector<int> leaves() const;  // ascending node ids
};

void validate(const CubicTree& t);

// A subcubic tree together with a bijection from ground elements (by
// position) onto its leaves.
struct BranchDecomposition {
  CubicTree tree;
  std::vector<int> leaf_of;  // element position -> leaf node id
};

void validate(const BranchDecomposition& d);

struct LinearLayout {
  std::vector<int> order;  // permutation of element positions
};

// For every tree edge e, the leaves split into two sides; the width of the
// decomposition is the maximum of f over one side of each edge.
int decomposition_width(const BranchDecomposition& d, const ConnectivityOracle& f);

// The element partition induced by removing edge e: elements whose leaves
// lie on the side of edges[e].first.
Mask edge_cut(const BranchDecomposition& d, int edge_id);

// max over proper prefixes of f(prefix); 0 when the layout has one element.
int layout_width(const LinearLayout& l, const ConnectivityOracle& f);

// The caterpillar realization of a layout: leaves v1..vn in layout order on
// an internal path, so every prefix of the layout appears as an edge cut.
// For any f with f({e}) <= 1 everywhere, its width never exceeds the layout
// width.
BranchDecomposition layout_to_decomposition(const LinearLayout& l);

// An edge whose removal leaves at least k leaves on both sides; requires
// at least 3k-2 leaves (k >= 2), which guarantees existence.  Lowest edge id
// wins ties.
int balanced_edge(const CubicTree& t, int k);

// Splices out all degree-2 nodes (except a designated root) and compacts
// node ids.  node_map[old] is the new id, or -1 for removed nodes.
struct SuppressResult {
  CubicTree tree;
  std::vector<int> node_map;
};

SuppressResult suppress_degree_two(const CubicTree& t);

// Prunes the tree to the minimal subtree containing the given leaves, then
// suppresses degree-2 nodes.  Requires >= 2 kept leaves.
SuppressResult restrict_to_leaves(const CubicTree& t, const std::vector<int>& kept_leaves);

// Line-oriented text form:
//   tree <nodecount>
//   edge <u> <v>          (sorted)
//   leaf <nodeid> <label> (sorted by node id)
//   root <nodeid>         (optional)
std::string serialize(const BranchDecomposition& d, const std::vector<std::string>& labels);

struct ParsedDecomposition {
  BranchDecomposition decomposition;
  std::vector<std::string> labels;  // element position -> label
};

ParsedDecomposition deserialize_decomposition(std::istream& in);
ParsedDecomposition deserialize_decomposition(const std::string& text);

std::string to_dot(const BranchDecomposition& d, const std::vector<std::string>& labels);

// Layout text form: "layout <n>" then "order <label...>".
std::string serialize(const LinearLayout& l, const std::vector<std::string>& labels);

struct ParsedLayout {
  LinearLayout layout;
  std::vector<std::string> labels;  // in layout order
};

ParsedLayout deserialize_layout(std::istream& in);

}  // namespace widthlab
