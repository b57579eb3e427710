#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "widthlab/field.hpp"

namespace widthlab {

// Subsets of positions 0..n-1 as bitmasks, n <= 32.
using Mask = std::uint32_t;

Mask full_mask(int n);

// Dense matrix over a small finite field, row-major.  Matrices are value
// types; operations never mutate their inputs.  Column labels are optional
// and propagate through the gadget constructors; an empty label vector means
// the default labels "1".."n".
class FFMatrix {
public:
  FFMatrix(Field f, int rows, int cols);  // zero matrix
  static FFMatrix identity(const Field& f, int n);
  static FFMatrix from_rows(const Field& f, const std::vector<std::vector<int>>& rows);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, Elem v);

  FFMatrix transpose() const;
  FFMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;
  FFMatrix select_columns(const std::vector<int>& cols) const;
  // Horizontal concatenation (same field, same row count).
  FFMatrix hconcat(const FFMatrix& right) const;

  bool is_zero() const;
  bool column_is_zero(int j) const;
  bool operator==(const FFMatrix& o) const;
  bool operator!=(const FFMatrix& o) const { return !(*this == o); }

  const std::vector<std::string>& column_labels() const { return col_labels_; }
  void set_column_labels(std::vector<std::string> labels);
  // Labels, materializing the default "1".."n" when none were set.
  std::vector<std::string> effective_column_labels() const;

private:
  Field field_;
  int rows_;
  int cols_;
  std::vector<Elem> a_;
  std::vector<std::string> col_labels_;
};

int rank(const FFMatrix& a);
// Rank of the column submatrix selected by a bitmask (cols <= 32).
int rank_of_columns(const FFMatrix& a, Mask cols);

// Reduced row echelon form with zero rows removed.
FFMatrix rref(const FFMatrix& a);

Elem det(const FFMatrix& a);  // square input

// A standard representation extracted from an arbitrary representation:
// matrix is r x n with matrix[.,basis] = I_r, representing the same matroid
// as the source.  scalar is the inverse determinant of the pivot block; when
// every nonzero subdeterminant of the source lies in a set K with -K = K,
// every nonzero entry of matrix lies in scalar*K.
struct StandardForm {
  FFMatrix matrix;
  std::vector<int> basis;  // ordered column indices carrying the identity
  Elem scalar = 1;
};

// Greedy (lowest-index) row and column basis selection, so the output is
// deterministic.  Rank 0 yields an empty 0 x n matrix with scalar 1.
StandardForm standard_form(const FFMatrix& a);

// Kronecker product: entry ((i,k),(j,l)) = a(i,j) * b(k,l); the product
// column (j,l) maps to column j of a and column l of b.
FFMatrix tensor_product(const FFMatrix& a, const FFMatrix& b);

int distinct_nonzero_rows(const FFMatrix& a);

// A disjoint product cover of the 1-entries of a binary matrix: the (i,j)
// entry is 1 iff (i,j) lies in rows_k x cols_k for exactly one k.  The number
// of pairs is at most 2^rank - 1.
struct RankOneCover {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
};

RankOneCover rank_one_cover(const FFMatrix& a);  // GF(2) only

// All nonzero determinants of square submatrices, every order up to
// min(rows, cols).  Guarded: min(rows, cols) <= 5.
std::set<Elem> subdeterminants(const FFMatrix& a);

}  // namespace widthlab
