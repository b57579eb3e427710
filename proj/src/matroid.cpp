#include "widthlab/matroid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace widthlab {

LinearMatroid::LinearMatroid(FFMatrix rep) : LinearMatroid(std::move(rep), {}) {}

LinearMatroid::LinearMatroid(FFMatrix rep, std::vector<std::string> ground)
    : rep_(std::move(rep)), ground_(std::move(ground)) {
  if (ground_.empty()) ground_ = rep_.effective_column_labels();
  if (static_cast<int>(ground_.size()) != rep_.cols())
    throw std::invalid_argument("matroid: one ground label per column required");
  full_rank_ = rank(rep_);
}

int LinearMatroid::position_of(const std::string& label) const {
  for (size_t i = 0; i < ground_.size(); ++i)
    if (ground_[i] == label) return static_cast<int>(i);
  return -1;
}

int LinearMatroid::rank_of(Mask elements) const {
  if (elements & ~full_mask(size())) throw std::out_of_range("matroid: unknown element in subset");
  return rank_of_columns(rep_, elements);
}

int LinearMatroid::full_rank() const { return full_rank_; }

int matroid_rank(const LinearMatroid& m, Mask x) { return m.rank_of(x); }

MatroidConnectivity::MatroidConnectivity(LinearMatroid m) : m_(std::move(m)) {
  if (m_.size() > kMaxGround)
    throw std::out_of_range("matroid connectivity: ground size exceeds the oracle cap (20)");
  rank_cache_.assign(size_t{1} << m_.size(), -1);
  spot_check();
}

int MatroidConnectivity::rank_mask(Mask x) const {
  std::int8_t& c = rank_cache_[x];
  if (c < 0) c = static_cast<std::int8_t>(m_.rank_of(x));
  return c;
}

int MatroidConnectivity::eval(Mask x) const {
  const Mask full = ground_mask();
  if (x & ~full) throw std::out_of_range("matroid connectivity: unknown element in subset");
  return rank_mask(x) + rank_mask(full & ~x) - m_.full_rank();
}

int connectivity(const LinearMatroid& m, Mask x) {
  const Mask full = full_mask(m.size());
  if (x & ~full) throw std::out_of_range("matroid: unknown element in subset");
  return m.rank_of(x) + m.rank_of(full & ~x) - m.full_rank();
}

bool is_simple(const FFMatrix& rep) {
  const Field& f = rep.field();
  // Two nonzero columns are parallel iff they agree after scaling the
  // uppermost nonzero entry to 1, so duplicates among normalized columns
  // decide the question.
  std::set<std::vector<Elem>> seen;
  for (int j = 0; j < rep.cols(); ++j) {
    std::vector<Elem> col(rep.rows());
    int lead = -1;
    for (int i = 0; i < rep.rows(); ++i) {
      col[i] = rep.at(i, j);
      if (lead < 0 && col[i] != 0) lead = i;
    }
    if (lead < 0) return false;  // zero column
    const Elem scale = f.inv(col[lead]);
    for (auto& v : col) v = f.mul(v, scale);
    if (!seen.insert(std::move(col)).second) return false;  // parallel pair
  }
  return true;
}

LinearMatroid delete_elements(const LinearMatroid& m, Mask removed) {
  if (removed & ~full_mask(m.size())) throw std::out_of_range("matroid: unknown element in deletion");
  std::vector<int> keep;
  std::vector<std::string> labels;
  for (int j = 0; j < m.size(); ++j) {
    if (removed & (Mask{1} << j)) continue;
    keep.push_back(j);
    labels.push_back(m.ground()[j]);
  }
  return LinearMatroid(m.representation().select_columns(keep), std::move(labels));
}

int uniform_branchwidth(int r, int n) {
  if (r < 0 || r > n) throw std::invalid_argument("uniform_branchwidth: rank must be in 0..n");
  return std::min({r, n - r, (n + 2) / 3});
}

int partitioned_connectivity(const LinearMatroid& m, const std::vector<Mask>& parts, Mask part_set) {
  validate_partition(parts, full_mask(m.size()));
  if (part_set & ~full_mask(static_cast<int>(parts.size())))
    throw std::out_of_range("partitioned connectivity: unknown part");
  Mask u = 0;
  for (size_t i = 0; i < parts.size(); ++i)
    if (part_set & (Mask{1} << i)) u |= parts[i];
  return connectivity(m, u);
}

bool is_titanic(const ConnectivityOracle& f, Mask x) {
  if (x == 0) throw std::invalid_argument("is_titanic: X must be nonempty");
  std::vector<int> elems;
  for (int i = 0; i < f.ground_size(); ++i)
    if (x & (Mask{1} << i)) elems.push_back(i);
  const int k = static_cast<int>(elems.size());
  if (k > 12) throw std::out_of_range("is_titanic: |X| exceeds the enumeration guard (12)");
  const int fx = f.eval(x);

  // Every assignment of the elements of X to three (possibly empty) pieces.
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    Mask part[3] = {0, 0, 0};
    long long c = code;
    for (int i = 0; i < k; ++i) {
      part[c % 3] |= Mask{1} << elems[i];
      c /= 3;
    }
    bool witnessed = false;
    for (int i = 0; i < 3 && !witnessed; ++i) witnessed = f.eval(part[i]) >= fx;
    if (!witnessed) return false;
  }
  return true;
}

bool is_robust(const ConnectivityOracle& f, Mask x) {
  if (x == 0) throw std::invalid_argument("is_robust: X must be nonempty");
  std::vector<int> elems;
  for (int i = 0; i < f.ground_size(); ++i)
    if (x & (Mask{1} << i)) elems.push_back(i);
  const int k = static_cast<int>(elems.size());
  if (k > 20) throw std::out_of_range("is_robust: |X| exceeds the enumeration guard (20)");
  const int fx = f.eval(x);
  for (Mask code = 0; code < (Mask{1} << k); ++code) {
    Mask x1 = 0;
    for (int i = 0; i < k; ++i)
      if (code & (Mask{1} << i)) x1 |= Mask{1} << elems[i];
    const Mask x2 = x & ~x1;
    if (f.eval(x1) < fx && f.eval(x2) < fx) return false;
  }
  return true;
}

void validate(const SubspaceArrangement& s) {
  std::vector<bool> seen(s.ambient.cols(), false);
  for (const auto& g : s.groups) {
    if (g.empty()) throw std::invalid_argument("subspace arrangement: empty group");
    for (int j : g) {
      if (j < 0 || j >= s.ambient.cols()) throw std::invalid_argument("subspace arrangement: column out of range");
      if (seen[j]) throw std::invalid_argument("subspace arrangement: groups overlap");
      seen[j] = true;
    }
  }
  for (bool b : seen)
    if (!b) throw std::invalid_argument("subspace arrangement: groups do not cover all columns");
}

namespace {

int dim_of_groups(const SubspaceArrangement& s, Mask group_set) {
  std::vector<int> cols;
  for (size_t i = 0; i < s.groups.size(); ++i)
    if (group_set & (Mask{1} << i)) cols.insert(cols.end(), s.groups[i].begin(), s.groups[i].end());
  if (cols.empty()) return 0;
  return rank(s.ambient.select_columns(cols));
}

}  // namespace

int subspace_connectivity(const SubspaceArrangement& s, Mask group_set) {
  validate(s);
  const Mask full = full_mask(static_cast<int>(s.groups.size()));
  if (group_set & ~full) throw std::out_of_range("subspace arrangement: group index out of range");
  return dim_of_groups(s, group_set) + dim_of_groups(s, full & ~group_set) - dim_of_groups(s, full);
}

SubspaceConnectivity::SubspaceConnectivity(SubspaceArrangement s) : s_(std::move(s)) {
  validate(s_);
  if (static_cast<int>(s_.groups.size()) > kMaxGround)
    throw std::out_of_range("subspace connectivity: group count exceeds the oracle cap (20)");
  dim_cache_.assign(size_t{1} << s_.groups.size(), -1);
  total_dim_ = dim_of(full_mask(ground_size()));
  spot_check();
}

int SubspaceConnectivity::dim_of(Mask group_set) const {
  std::int8_t& c = dim_cache_[group_set];
  if (c < 0) c = static_cast<std::int8_t>(dim_of_groups(s_, group_set));
  return c;
}

int SubspaceConnectivity::eval(Mask x) const {
  const Mask full = ground_mask();
  if (x & ~full) throw std::out_of_range("subspace connectivity: group index out of range");
  return dim_of(x) + dim_of(full & ~x) - total_dim_;
}

}  // namespace widthlab
