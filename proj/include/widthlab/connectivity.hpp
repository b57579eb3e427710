#pragma once

#include <bit>
#include <functional>

#include "widthlab/matrix.hpp"

namespace widthlab {

// A symmetric submodular set function with f(empty) = 0, evaluated on
// bitmask subsets of a ground set of size <= 20.  Implementations memoize
// internally; eval is logically const.
class ConnectivityOracle {
public:
  static constexpr int kMaxGround = 20;

  virtual ~ConnectivityOracle() = default;
  virtual int ground_size() const = 0;
  virtual int eval(Mask x) const = 0;

  Mask ground_mask() const { return full_mask(ground_size()); }

protected:
  // Cheap sanity check run by concrete constructors: f(empty) = 0 and
  // f(X) = f(complement) on a handful of fixed masks.
  void spot_check() const;
};

// Wraps an arbitrary function as an oracle; mainly for tests and constant
// functions.  No caching.
class FunctionOracle final : public ConnectivityOracle {
public:
  FunctionOracle(int n, std::function<int(Mask)> f);
  int ground_size() const override { return n_; }
  int eval(Mask x) const override { return f_(x); }

private:
  int n_;
  std::function<int(Mask)> f_;
};

// The connectivity function of another oracle after merging elements into
// the given parts: eval(S) = inner(union of parts selected by S).
class PartitionedConnectivity final : public ConnectivityOracle {
public:
  PartitionedConnectivity(const ConnectivityOracle& inner, std::vector<Mask> parts);
  int ground_size() const override { return static_cast<int>(parts_.size()); }
  int eval(Mask s) const override;
  const std::vector<Mask>& parts() const { return parts_; }

private:
  const ConnectivityOracle& inner_;
  std::vector<Mask> parts_;
};

// Validates that parts are nonempty, pairwise disjoint and cover exactly the
// ground mask; throws std::invalid_argument otherwise.
void validate_partition(const std::vector<Mask>& parts, Mask ground);

inline int popcount(Mask x) { return std::popcount(x); }

}  // namespace widthlab
