#include "widthlab/reductions.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "widthlab/matroid.hpp"

namespace widthlab {

FFMatrix gadget_matrix(const Field& f) {
  return FFMatrix::from_rows(f, {{1, 0, 1}, {0, 1, 1}});
}

FFMatrix gadget_tensor(const FFMatrix& a) {
  if (a.cols() == 0 || a.is_zero()) throw std::invalid_argument("gadget_tensor: input must be nonzero");
  if (!is_simple(a)) throw std::invalid_argument("gadget_tensor: input matroid must be simple");
  return tensor_product(gadget_matrix(a.field()), a);
}

FFMatrix vandermonde(const Field& f, int k, std::vector<Elem> alphas) {
  if (k < 1) throw std::invalid_argument("vandermonde: k must be at least 1");
  const int cols = 3 * k - 2;
  if (f.order() < cols)
    throw std::invalid_argument("vandermonde: field needs at least " + std::to_string(cols) + " elements");
  if (alphas.empty()) {
    alphas.resize(cols);
    for (int j = 0; j < cols; ++j) alphas[j] = static_cast<Elem>(j);
  }
  if (static_cast<int>(alphas.size()) != cols) throw std::invalid_argument("vandermonde: need 3k-2 evaluation points");
  if (std::set<Elem>(alphas.begin(), alphas.end()).size() != alphas.size())
    throw std::invalid_argument("vandermonde: evaluation points must be distinct");
  FFMatrix m(f, k, cols);
  for (int j = 0; j < cols; ++j) {
    Elem v = 1;
    for (int i = 0; i < k; ++i) {
      m.set(i, j, v);
      v = f.mul(v, alphas[j]);
    }
  }
  return m;
}

FFMatrix vandermonde_tensor(const FFMatrix& a, int k) {
  if (!is_simple(a)) throw std::invalid_argument("vandermonde_tensor: input matroid must be simple");
  return tensor_product(vandermonde(a.field(), k), a);
}

FFMatrix d_plus(const FFMatrix& a, std::optional<std::array<Elem, 4>> params) {
  const Field& f = a.field();
  if (f.order() < 4) throw std::invalid_argument("d_plus: field needs at least 4 elements");
  if (a.cols() < 1) throw std::invalid_argument("d_plus: input needs at least one column");
  std::array<Elem, 4> ps = params.value_or(std::array<Elem, 4>{0, 1, 2, 3});
  if (std::set<Elem>(ps.begin(), ps.end()).size() != 4)
    throw std::invalid_argument("d_plus: the four constants must be distinct");
  const int m = a.rows(), n = a.cols();
  FFMatrix out(f, m + 1, 4 * n);
  for (int copy = 0; copy < 4; ++copy)
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < m; ++i) out.set(i, copy * n + j, a.at(i, j));
      out.set(m, copy * n + j, ps[copy]);
    }
  const auto la = a.effective_column_labels();
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(4) * n);
  for (int copy = 0; copy < 4; ++copy)
    for (int j = 0; j < n; ++j) labels.push_back(std::to_string(copy + 1) + "." + la[j]);
  out.set_column_labels(std::move(labels));
  return out;
}

PreprocessResult simplicity_preprocess(const FFMatrix& a) {
  const Field& f = a.field();
  FFMatrix out = a;
  for (int j = 0; j < a.cols(); ++j) {
    int lead = -1;
    for (int i = 0; i < a.rows(); ++i)
      if (a.at(i, j) != 0) {
        lead = i;
        break;
      }
    if (lead < 0) return {SimplicityVerdict::singular, std::move(out)};
    const Elem scale = f.inv(a.at(lead, j));
    for (int i = 0; i < a.rows(); ++i) out.set(i, j, f.mul(a.at(i, j), scale));
  }
  // Parallel columns are literally equal after normalization.
  std::set<std::vector<Elem>> seen;
  for (int j = 0; j < out.cols(); ++j) {
    std::vector<Elem> col(out.rows());
    for (int i = 0; i < out.rows(); ++i) col[i] = out.at(i, j);
    if (!seen.insert(std::move(col)).second) return {SimplicityVerdict::singular, std::move(out)};
  }
  return {SimplicityVerdict::simple, std::move(out)};
}

namespace {

std::vector<std::pair<int, int>> prime_factorization(int k) {
  std::vector<std::pair<int, int>> factors;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    int e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (k > 1) factors.emplace_back(k, 1);
  return factors;
}

}  // namespace

ReductionResult reduce_2approx(const FFMatrix& a, int k) {
  if (k < 1) throw std::invalid_argument("reduce_2approx: k must be at least 1");
  const Field& f = a.field();
  const auto factors = prime_factorization(k);
  for (const auto& [p, e] : factors)
    if (f.order() < 3 * p - 2)
      throw std::invalid_argument("reduce_2approx: field needs at least " + std::to_string(3 * p - 2) +
                                  " elements for the prime factor " + std::to_string(p));
  PreprocessResult pre = simplicity_preprocess(a);
  if (pre.verdict == SimplicityVerdict::singular) return {true, pre.matrix};
  FFMatrix b = gadget_tensor(pre.matrix);
  // Tensoring right-to-left keeps the index nesting of the factor order.
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    for (int i = 0; i < it->second; ++i) b = vandermonde_tensor(b, it->first);
  return {false, std::move(b)};
}

ReductionResult reduce_15approx(const FFMatrix& a, int k) {
  if (k < 1) throw std::invalid_argument("reduce_15approx: k must be at least 1 (k = 0 is plain singularity)");
  const Field& f = a.field();
  if (f.order() < 4) throw std::invalid_argument("reduce_15approx: field needs at least 4 elements");
  PreprocessResult pre = simplicity_preprocess(a);
  if (pre.verdict == SimplicityVerdict::singular) return {true, pre.matrix};

  int s = 0;
  while ((2 << s) <= k) ++s;  // s = floor(log2 k)
  FFMatrix b = gadget_tensor(pre.matrix);
  for (int i = 1; i <= s; ++i) {
    b = vandermonde_tensor(b, 2);
    if ((k >> (s - i)) & 1) b = d_plus(b);
  }
  return {false, std::move(b)};
}

std::pair<long long, long long> reduce_2approx_shape(int k, int n) {
  long long cols = 3LL * n;
  for (const auto& [p, e] : prime_factorization(k))
    for (int i = 0; i < e; ++i) cols *= 3 * p - 2;
  return {2LL * k * n, cols};
}

std::pair<long long, long long> reduce_15approx_shape(int k, int n) {
  int s = 0, ones = 0;
  while ((2 << s) <= k) ++s;
  for (int i = 1; i <= s; ++i) ones += (k >> (s - i)) & 1;
  long long cols = 3LL * n;
  for (int i = 0; i < s + ones; ++i) cols *= 4;
  return {(2LL << s) * n + k - (1LL << s), cols};
}

Singularity singularity_via_branchwidth(const FFMatrix& a, const SolverOptions& opt) {
  for (int j = 0; j < a.cols(); ++j)
    if (a.column_is_zero(j))
      throw std::invalid_argument("singularity_via_branchwidth: zero column " + std::to_string(j));
  const SolveResult r = branchwidth_exact(MatroidConnectivity(LinearMatroid(a)), opt);
  return r.width == 0 ? Singularity::nonsingular : Singularity::singular;
}

}  // namespace widthlab
