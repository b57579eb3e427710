#include "widthlab/matrix.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

namespace widthlab {

Mask full_mask(int n) {
  if (n < 0 || n > 32) throw std::out_of_range("mask: ground size must be in 0..32");
  return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

FFMatrix::FFMatrix(Field f, int rows, int cols) : field_(std::move(f)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
  a_.assign(static_cast<size_t>(rows) * cols, 0);
}

FFMatrix FFMatrix::identity(const Field& f, int n) {
  FFMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FFMatrix FFMatrix::from_rows(const Field& f, const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  FFMatrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("matrix: ragged row list");
    for (int j = 0; j < c; ++j) {
      const int v = rows[i][j];
      if (v < 0 || v >= f.order()) throw std::out_of_range("matrix: entry out of field range");
      m.set(i, j, static_cast<Elem>(v));
    }
  }
  return m;
}

void FFMatrix::set(int i, int j, Elem v) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix: index out of range");
  if (v >= field_.order()) throw std::out_of_range("matrix: entry out of field range");
  a_[static_cast<size_t>(i) * cols_ + j] = v;
}

FFMatrix FFMatrix::transpose() const {
  FFMatrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

FFMatrix FFMatrix::select(const std::vector<int>& rows, const std::vector<int>& cols) const {
  FFMatrix s(field_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0 || rows[i] >= rows_) throw std::out_of_range("matrix: row selection out of range");
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] < 0 || cols[j] >= cols_) throw std::out_of_range("matrix: column selection out of range");
      s.set(static_cast<int>(i), static_cast<int>(j), at(rows[i], cols[j]));
    }
  }
  return s;
}

FFMatrix FFMatrix::select_columns(const std::vector<int>& cols) const {
  std::vector<int> all(rows_);
  for (int i = 0; i < rows_; ++i) all[i] = i;
  FFMatrix s = select(all, cols);
  if (!col_labels_.empty()) {
    std::vector<std::string> labels;
    labels.reserve(cols.size());
    for (int j : cols) labels.push_back(col_labels_[j]);
    s.set_column_labels(std::move(labels));
  }
  return s;
}

FFMatrix FFMatrix::hconcat(const FFMatrix& right) const {
  if (field_ != right.field_) throw std::invalid_argument("matrix: field mismatch in concatenation");
  if (rows_ != right.rows_) throw std::invalid_argument("matrix: row count mismatch in concatenation");
  FFMatrix m(field_, rows_, cols_ + right.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    for (int j = 0; j < right.cols_; ++j) m.set(i, cols_ + j, right.at(i, j));
  }
  return m;
}

bool FFMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Elem v) { return v == 0; });
}

bool FFMatrix::column_is_zero(int j) const {
  for (int i = 0; i < rows_; ++i)
    if (at(i, j) != 0) return false;
  return true;
}

bool FFMatrix::operator==(const FFMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

void FFMatrix::set_column_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != cols_)
    throw std::invalid_argument("matrix: label count must match column count");
  col_labels_ = std::move(labels);
}

std::vector<std::string> FFMatrix::effective_column_labels() const {
  if (!col_labels_.empty()) return col_labels_;
  std::vector<std::string> labels(cols_);
  for (int j = 0; j < cols_; ++j) labels[j] = std::to_string(j + 1);
  return labels;
}

namespace {

// In-place Gaussian elimination on a scratch copy; returns the rank.
// Rows are swapped to bring pivots to the top; this also serves rref and det.
int eliminate(const Field& f, std::vector<Elem>& a, int rows, int cols, Elem* det_out = nullptr) {
  int r = 0;
  Elem d = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (a[static_cast<size_t>(i) * cols + c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < cols; ++j)
        std::swap(a[static_cast<size_t>(piv) * cols + j], a[static_cast<size_t>(r) * cols + j]);
      d = f.neg(d);
    }
    const Elem pv = a[static_cast<size_t>(r) * cols + c];
    d = f.mul(d, pv);
    const Elem pinv = f.inv(pv);
    for (int j = c; j < cols; ++j) {
      Elem& t = a[static_cast<size_t>(r) * cols + j];
      t = f.mul(t, pinv);
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elem factor = a[static_cast<size_t>(i) * cols + c];
      if (factor == 0) continue;
      for (int j = c; j < cols; ++j) {
        Elem& t = a[static_cast<size_t>(i) * cols + j];
        t = f.sub(t, f.mul(factor, a[static_cast<size_t>(r) * cols + j]));
      }
    }
    ++r;
  }
  if (det_out) *det_out = (r == rows && rows == cols) ? d : 0;
  return r;
}

std::vector<Elem> flatten(const FFMatrix& m) {
  std::vector<Elem> a(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[static_cast<size_t>(i) * m.cols() + j] = m.at(i, j);
  return a;
}

int rank_gf2_words(std::vector<std::uint64_t>& rows) {
  int r = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    std::uint64_t w = rows[i];
    for (int j = 0; j < r; ++j) {
      // rows[0..r) hold pivot rows sorted by pivot bit
      std::uint64_t p = rows[j];
      if (w & (p & (~p + 1))) w ^= p;
    }
    if (w) {
      rows[r++] = w;
      // keep pivot rows ordered by lowest set bit for the reduction above
      for (int j = r - 1; j > 0; --j) {
        std::uint64_t lo = rows[j] & (~rows[j] + 1);
        std::uint64_t lo2 = rows[j - 1] & (~rows[j - 1] + 1);
        if (lo < lo2)
          std::swap(rows[j], rows[j - 1]);
        else
          break;
      }
    }
  }
  return r;
}

}  // namespace

int rank(const FFMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().order() == 2 && m.cols() <= 64) {
    std::vector<std::uint64_t> rows(m.rows(), 0);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (m.at(i, j)) rows[i] |= std::uint64_t{1} << j;
    return rank_gf2_words(rows);
  }
  std::vector<Elem> a = flatten(m);
  return eliminate(m.field(), a, m.rows(), m.cols());
}

int rank_of_columns(const FFMatrix& m, Mask cols) {
  if (m.cols() > 32) throw std::out_of_range("matrix: column mask requires at most 32 columns");
  std::vector<int> sel;
  for (int j = 0; j < m.cols(); ++j)
    if (cols & (Mask{1} << j)) sel.push_back(j);
  if (sel.empty() || m.rows() == 0) return 0;
  if (m.field().order() == 2) {
    // Transposed packing: one word per selected column, bits indexed by row.
    std::vector<std::uint64_t> words(sel.size(), 0);
    for (size_t k = 0; k < sel.size(); ++k)
      for (int i = 0; i < m.rows() && i < 64; ++i)
        if (m.at(i, sel[k])) words[k] |= std::uint64_t{1} << i;
    if (m.rows() <= 64) return rank_gf2_words(words);
  }
  return rank(m.select_columns(sel));
}

FFMatrix rref(const FFMatrix& m) {
  std::vector<Elem> a = flatten(m);
  const int r = eliminate(m.field(), a, m.rows(), m.cols());
  FFMatrix out(m.field(), r, m.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(i, j, a[static_cast<size_t>(i) * m.cols() + j]);
  return out;
}

Elem det(const FFMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix: determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  std::vector<Elem> a = flatten(m);
  Elem d = 0;
  eliminate(m.field(), a, m.rows(), m.cols(), &d);
  return d;
}

StandardForm standard_form(const FFMatrix& m) {
  const Field& f = m.field();

  // Greedy lowest-index row basis.
  std::vector<int> row_basis;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<int> cand = row_basis;
    cand.push_back(i);
    std::vector<int> allc(m.cols());
    for (int j = 0; j < m.cols(); ++j) allc[j] = j;
    if (rank(m.select(cand, allc)) == static_cast<int>(cand.size())) row_basis = cand;
  }
  const int r = static_cast<int>(row_basis.size());
  std::vector<int> allc(m.cols());
  for (int j = 0; j < m.cols(); ++j) allc[j] = j;
  FFMatrix ap = m.select(row_basis, allc);  // r x n, same matroid

  if (r == 0) {
    StandardForm sf{FFMatrix(f, 0, m.cols()), {}, 1};
    sf.matrix.set_column_labels(m.column_labels());
    return sf;
  }

  // Greedy lowest-index column basis of the row-reduced matrix.
  std::vector<int> basis;
  for (int j = 0; j < m.cols() && static_cast<int>(basis.size()) < r; ++j) {
    std::vector<int> cand = basis;
    cand.push_back(j);
    if (rank(ap.select_columns(cand)) == static_cast<int>(cand.size())) basis = cand;
  }

  // Invert the pivot block P and form P^{-1} * ap via Gauss-Jordan on (P | ap).
  FFMatrix p = ap.select_columns(basis);
  const Elem alpha = f.inv(det(p));
  FFMatrix aug = p.hconcat(ap);
  std::vector<Elem> a = flatten(aug);
  eliminate(f, a, r, aug.cols());
  FFMatrix out(f, r, m.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(i, j, a[static_cast<size_t>(i) * aug.cols() + r + j]);
  out.set_column_labels(m.column_labels());
  return StandardForm{std::move(out), std::move(basis), alpha};
}

FFMatrix tensor_product(const FFMatrix& a, const FFMatrix& b) {
  if (a.field() != b.field()) throw std::invalid_argument("tensor: field mismatch");
  const Field& f = a.field();
  FFMatrix t(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Elem s = a.at(i, j);
      if (s == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          const Elem v = f.mul(s, b.at(k, l));
          if (v != 0) t.set(i * b.rows() + k, j * b.cols() + l, v);
        }
    }
  const auto la = a.effective_column_labels();
  const auto lb = b.effective_column_labels();
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(a.cols()) * b.cols());
  for (int j = 0; j < a.cols(); ++j)
    for (int l = 0; l < b.cols(); ++l) labels.push_back(la[j] + "." + lb[l]);
  t.set_column_labels(std::move(labels));
  return t;
}

int distinct_nonzero_rows(const FFMatrix& m) {
  std::set<std::vector<Elem>> seen;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<Elem> row(m.cols());
    bool nonzero = false;
    for (int j = 0; j < m.cols(); ++j) {
      row[j] = m.at(i, j);
      nonzero |= row[j] != 0;
    }
    if (nonzero) seen.insert(std::move(row));
  }
  return static_cast<int>(seen.size());
}

RankOneCover rank_one_cover(const FFMatrix& m) {
  if (m.field().order() != 2) throw std::invalid_argument("rank_one_cover: matrix must be over GF(2)");
  // Group equal nonzero rows; each group with its common support is one pair.
  std::map<std::vector<Elem>, std::vector<int>> groups;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<Elem> row(m.cols());
    bool nonzero = false;
    for (int j = 0; j < m.cols(); ++j) {
      row[j] = m.at(i, j);
      nonzero |= row[j] != 0;
    }
    if (nonzero) groups[std::move(row)].push_back(i);
  }
  RankOneCover cover;
  for (const auto& [row, rows] : groups) {
    std::vector<int> cols;
    for (int j = 0; j < m.cols(); ++j)
      if (row[j]) cols.push_back(j);
    cover.pairs.emplace_back(rows, cols);
  }
  return cover;
}

namespace {

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::set<Elem> subdeterminants(const FFMatrix& m) {
  const int d = std::min(m.rows(), m.cols());
  if (d > 5) throw std::out_of_range("subdeterminants: min dimension exceeds the enumeration guard (5)");
  std::set<Elem> out;
  for (int k = 1; k <= d; ++k) {
    combinations(m.rows(), k, [&](const std::vector<int>& ri) {
      combinations(m.cols(), k, [&](const std::vector<int>& ci) {
        const Elem v = det(m.select(ri, ci));
        if (v != 0) out.insert(v);
      });
    });
  }
  return out;
}

}  // namespace widthlab
