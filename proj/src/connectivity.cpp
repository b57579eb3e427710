#include "widthlab/connectivity.hpp"

#include <stdexcept>

namespace widthlab {

void ConnectivityOracle::spot_check() const {
  const Mask full = ground_mask();
  if (eval(0) != 0) throw std::logic_error("connectivity: f(empty) must be 0");
  // A few fixed masks; full symmetry is covered by tests.
  const Mask probes[] = {Mask{1}, full >> 1, Mask{0x55555555} & full};
  for (Mask x : probes) {
    x &= full;
    if (eval(x) != eval(full & ~x)) throw std::logic_error("connectivity: f is not symmetric");
  }
}

FunctionOracle::FunctionOracle(int n, std::function<int(Mask)> f) : n_(n), f_(std::move(f)) {
  if (n < 0 || n > kMaxGround) throw std::out_of_range("connectivity: ground size exceeds the oracle cap (20)");
}

PartitionedConnectivity::PartitionedConnectivity(const ConnectivityOracle& inner, std::vector<Mask> parts)
    : inner_(inner), parts_(std::move(parts)) {
  validate_partition(parts_, inner.ground_mask());
  spot_check();
}

int PartitionedConnectivity::eval(Mask s) const {
  if (s & ~full_mask(ground_size())) throw std::out_of_range("partitioned connectivity: unknown part");
  Mask u = 0;
  for (int i = 0; i < ground_size(); ++i)
    if (s & (Mask{1} << i)) u |= parts_[i];
  return inner_.eval(u);
}

void validate_partition(const std::vector<Mask>& parts, Mask ground) {
  Mask seen = 0;
  for (Mask p : parts) {
    if (p == 0) throw std::invalid_argument("partition: empty part");
    if (p & seen) throw std::invalid_argument("partition: parts overlap");
    if (p & ~ground) throw std::invalid_argument("partition: part leaves the ground set");
    seen |= p;
  }
  if (seen != ground) throw std::invalid_argument("partition: parts do not cover the ground set");
}

}  // namespace widthlab
