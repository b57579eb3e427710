#pragma once

#include <string>
#include <vector>

#include "widthlab/connectivity.hpp"
#include "widthlab/matrix.hpp"

namespace widthlab {

// A matroid given by a matrix representation: elements are columns, a set is
// independent iff its columns are linearly independent.  Ground elements are
// addressed by position (bitmask); labels are carried for I/O only.
class LinearMatroid {
public:
  explicit LinearMatroid(FFMatrix rep);
  LinearMatroid(FFMatrix rep, std::vector<std::string> ground);

  int size() const { return rep_.cols(); }
  const FFMatrix& representation() const { return rep_; }
  const std::vector<std::string>& ground() const { return ground_; }
  int position_of(const std::string& label) const;  // -1 if unknown

  int rank_of(Mask elements) const;  // uncached
  int full_rank() const;

private:
  FFMatrix rep_;
  std::vector<std::string> ground_;
  int full_rank_;
};

int matroid_rank(const LinearMatroid& m, Mask x);

// lambda(X) = r(X) + r(E minus X) - r(E), memoized per bitmask.
class MatroidConnectivity final : public ConnectivityOracle {
public:
  explicit MatroidConnectivity(LinearMatroid m);
  int ground_size() const override { return m_.size(); }
  int eval(Mask x) const override;
  int rank_mask(Mask x) const;  // memoized matroid rank
  const LinearMatroid& matroid() const { return m_; }

private:
  LinearMatroid m_;
  mutable std::vector<std::int8_t> rank_cache_;
};

int connectivity(const LinearMatroid& m, Mask x);

// True iff the representation has no zero column and no two linearly
// dependent columns.
bool is_simple(const FFMatrix& rep);
inline bool is_simple(const LinearMatroid& m) { return is_simple(m.representation()); }

LinearMatroid delete_elements(const LinearMatroid& m, Mask removed);

// Branch-width of the uniform matroid with rank r on n elements:
// min(r, n - r, ceil(n / 3)).
int uniform_branchwidth(int r, int n);

int partitioned_connectivity(const LinearMatroid& m, const std::vector<Mask>& parts, Mask part_set);

// X is titanic when every split of X into at most three disjoint pieces has
// a piece Y with f(Y) >= f(X).  Enumerates 3^|X| assignments; |X| <= 12.
bool is_titanic(const ConnectivityOracle& f, Mask x);

// X is robust when every bipartition (X1, X2) of X has a side with
// f(Xi) >= f(X).  Enumerates 2^|X| bipartitions; |X| <= 20.
bool is_robust(const ConnectivityOracle& f, Mask x);

// A multiset of subspaces of F^r, each spanned by a group of columns of the
// ambient matrix; groups partition the column index set.
struct SubspaceArrangement {
  FFMatrix ambient;
  std::vector<std::vector<int>> groups;
};

void validate(const SubspaceArrangement& s);

// f(X) = dim(span X) + dim(span complement) - dim(span all), which equals the
// dimension of the intersection of the two side spans.
int subspace_connectivity(const SubspaceArrangement& s, Mask group_set);

class SubspaceConnectivity final : public ConnectivityOracle {
public:
  explicit SubspaceConnectivity(SubspaceArrangement s);
  int ground_size() const override { return static_cast<int>(s_.groups.size()); }
  int eval(Mask x) const override;

private:
  int dim_of(Mask group_set) const;
  SubspaceArrangement s_;
  int total_dim_;
  mutable std::vector<std::int8_t> dim_cache_;
};

}  // namespace widthlab
