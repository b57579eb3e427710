#pragma once

// Independent reference implementations used to freeze expected values.
// These deliberately avoid the library's elimination and DP code paths.

#include <algorithm>
#include <climits>
#include <vector>

#include "widthlab/connectivity.hpp"
#include "widthlab/decomposition.hpp"
#include "widthlab/matrix.hpp"

namespace widthlab::oracles {

// Textbook two-phase elimination: forward sweep to echelon form, then
// backward substitution, then drop zero rows.  Written against the public
// Field API only.
inline FFMatrix naive_rref(const FFMatrix& input) {
  const Field& f = input.field();
  std::vector<std::vector<Elem>> rows(input.rows(), std::vector<Elem>(input.cols()));
  for (int i = 0; i < input.rows(); ++i)
    for (int j = 0; j < input.cols(); ++j) rows[i][j] = input.at(i, j);

  std::vector<int> pivot_col;
  int top = 0;
  for (int c = 0; c < input.cols() && top < input.rows(); ++c) {
    int found = -1;
    for (int i = top; i < input.rows(); ++i)
      if (rows[i][c] != 0) {
        found = i;
        break;
      }
    if (found < 0) continue;
    std::swap(rows[top], rows[found]);
    const Elem inv = f.inv(rows[top][c]);
    for (int j = 0; j < input.cols(); ++j) rows[top][j] = f.mul(rows[top][j], inv);
    for (int i = top + 1; i < input.rows(); ++i) {
      const Elem factor = rows[i][c];
      if (factor == 0) continue;
      for (int j = 0; j < input.cols(); ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[top][j]));
    }
    pivot_col.push_back(c);
    ++top;
  }
  for (int i = top - 1; i >= 0; --i) {
    const int c = pivot_col[i];
    for (int k = 0; k < i; ++k) {
      const Elem factor = rows[k][c];
      if (factor == 0) continue;
      for (int j = 0; j < input.cols(); ++j) rows[k][j] = f.sub(rows[k][j], f.mul(factor, rows[i][j]));
    }
  }
  FFMatrix out(f, top, input.cols());
  for (int i = 0; i < top; ++i)
    for (int j = 0; j < input.cols(); ++j) out.set(i, j, rows[i][j]);
  return out;
}

inline int naive_rank(const FFMatrix& m) { return naive_rref(m).rows(); }

// All independent column subsets, for comparing two representations of what
// should be the same matroid.
inline std::vector<Mask> independent_sets(const FFMatrix& m) {
  std::vector<Mask> out;
  for (Mask x = 0; x < (Mask{1} << m.cols()); ++x) {
    std::vector<int> cols;
    for (int j = 0; j < m.cols(); ++j)
      if (x & (Mask{1} << j)) cols.push_back(j);
    if (naive_rank(m.select_columns(cols)) == static_cast<int>(cols.size())) out.push_back(x);
  }
  return out;
}

// Enumerates every leaf-labeled subcubic tree on n leaves (grow by
// subdividing each edge in turn) and reports the minimum width.  Usable for
// n <= 6 or so; this is the definition, not a DP.
inline int enumerate_branchwidth(const ConnectivityOracle& f) {
  const int n = f.ground_size();
  if (n <= 1) return 0;

  struct Tree {
    int nodes;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> leaf_of;  // element -> node
  };

  Tree base{2, {{0, 1}}, {0, 1}};
  std::vector<Tree> trees{base};
  for (int e = 2; e < n; ++e) {
    std::vector<Tree> next;
    for (const Tree& t : trees)
      for (size_t k = 0; k < t.edges.size(); ++k) {
        Tree u = t;
        const auto [a, b] = u.edges[k];
        const int mid = u.nodes++;
        const int leaf = u.nodes++;
        u.edges[k] = {a, mid};
        u.edges.emplace_back(mid, b);
        u.edges.emplace_back(mid, leaf);
        u.leaf_of.push_back(leaf);
        next.push_back(std::move(u));
      }
    trees = std::move(next);
  }

  int best = INT_MAX;
  for (const Tree& t : trees) {
    // Width by brute force: for every edge, flood one side.
    int width = 0;
    for (size_t k = 0; k < t.edges.size(); ++k) {
      std::vector<std::vector<int>> adj(t.nodes);
      for (size_t e2 = 0; e2 < t.edges.size(); ++e2) {
        if (e2 == k) continue;
        adj[t.edges[e2].first].push_back(t.edges[e2].second);
        adj[t.edges[e2].second].push_back(t.edges[e2].first);
      }
      std::vector<bool> side(t.nodes, false);
      std::vector<int> stack{t.edges[k].first};
      side[t.edges[k].first] = true;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
          if (!side[w]) {
            side[w] = true;
            stack.push_back(w);
          }
      }
      Mask x = 0;
      for (int el = 0; el < n; ++el)
        if (side[t.leaf_of[el]]) x |= Mask{1} << el;
      width = std::max(width, f.eval(x));
    }
    best = std::min(best, width);
  }
  return best;
}

// Minimum layout width over all n! orderings; n <= 8.
inline int enumerate_pathwidth(const ConnectivityOracle& f) {
  const int n = f.ground_size();
  if (n <= 1) return 0;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  int best = INT_MAX;
  do {
    int width = 0;
    Mask prefix = 0;
    for (int i = 0; i + 1 < n; ++i) {
      prefix |= Mask{1} << perm[i];
      width = std::max(width, f.eval(prefix));
    }
    best = std::min(best, width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace widthlab::oracles
