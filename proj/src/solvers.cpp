#include "widthlab/solvers.hpp"

#include <chrono>
#include <stdexcept>

namespace widthlab {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::int8_t> eval_all(const ConnectivityOracle& f, SolveStats& stats) {
  const int n = f.ground_size();
  std::vector<std::int8_t> lam(size_t{1} << n);
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    lam[x] = static_cast<std::int8_t>(f.eval(x));
    ++stats.oracle_evals;
  }
  return lam;
}

// The bipartition {x1, m^x1} of m minimizing the DP value, with x1 required
// to contain the lowest element of m.  Iteration runs over submasks in
// decreasing numeric order and keeps ties, so the numerically least
// minimizer wins.  Reconstruction re-runs this with identical results.
Mask best_split(Mask m, const std::vector<std::int8_t>& lam, const std::vector<std::int8_t>& w, int* value) {
  const Mask low = m & (~m + 1);
  const Mask rest = m ^ low;
  int best = INT8_MAX + 1;
  Mask best_x1 = 0;
  Mask s = rest;
  while (true) {
    const Mask x1 = low | s;
    const Mask x2 = m ^ x1;
    if (x2 != 0) {
      int v = lam[x1];
      if (lam[x2] > v) v = lam[x2];
      if (w[x1] > v) v = w[x1];
      if (w[x2] > v) v = w[x2];
      if (v <= best) {
        best = v;
        best_x1 = x1;
      }
    }
    if (s == 0) break;
    s = (s - 1) & rest;
  }
  if (value) *value = best;
  return best_x1;
}

struct TreeBuilder {
  const std::vector<std::int8_t>& lam;
  const std::vector<std::int8_t>& w;
  BranchDecomposition d;

  int new_node() { return d.tree.node_count++; }

  int build(Mask x) {
    if ((x & (x - 1)) == 0) {
      const int node = new_node();
      int e = 0;
      while (!(x & (Mask{1} << e))) ++e;
      d.leaf_of[e] = node;
      return node;
    }
    const Mask x1 = best_split(x, lam, w, nullptr);
    const int a = build(x1);
    const int b = build(x ^ x1);
    const int v = new_node();
    d.tree.edges.emplace_back(v, a);
    d.tree.edges.emplace_back(v, b);
    return v;
  }
};

}  // namespace

SolveResult branchwidth_exact(const ConnectivityOracle& f, const SolverOptions& opt) {
  const int n = f.ground_size();
  if (n > opt.max_ground)
    throw std::out_of_range("branchwidth_exact: ground size " + std::to_string(n) +
                            " exceeds max_ground " + std::to_string(opt.max_ground));
  SolveResult res;
  if (n <= 1) return res;

  const auto start = Clock::now();
  const auto lam = eval_all(f, res.stats);
  const Mask full = full_mask(n);
  std::vector<std::int8_t> w(size_t{1} << n, 0);
  for (Mask m = 1; m <= full; ++m) {
    if ((m & (m - 1)) == 0) continue;  // singleton
    int value = 0;
    best_split(m, lam, w, &value);
    w[m] = static_cast<std::int8_t>(value);
    if (m == full) break;
  }
  res.width = w[full];

  TreeBuilder builder{lam, w, {}};
  builder.d.leaf_of.assign(n, -1);
  const Mask x1 = best_split(full, lam, w, nullptr);
  const int a = builder.build(x1);
  const int b = builder.build(full ^ x1);
  builder.d.tree.edges.emplace_back(a, b);
  res.decomposition = std::move(builder.d);

  if (decomposition_width(*res.decomposition, f) != res.width)
    throw std::logic_error("branchwidth_exact: certificate does not reproduce the computed width");
  res.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

SolveResult pathwidth_exact(const ConnectivityOracle& f, const SolverOptions& opt) {
  const int n = f.ground_size();
  if (n > opt.max_ground_linear)
    throw std::out_of_range("pathwidth_exact: ground size " + std::to_string(n) +
                            " exceeds max_ground_linear " + std::to_string(opt.max_ground_linear));
  SolveResult res;
  if (n == 0) return res;

  const auto start = Clock::now();
  const auto lam = eval_all(f, res.stats);
  const Mask full = full_mask(n);
  std::vector<std::int8_t> p(size_t{1} << n, 0);
  for (Mask m = 1; m <= full; ++m) {
    int best = INT8_MAX + 1;
    for (int e = 0; e < n; ++e) {
      if (!(m & (Mask{1} << e))) continue;
      const int v = p[m ^ (Mask{1} << e)];
      if (v < best) best = v;
    }
    p[m] = static_cast<std::int8_t>(best > lam[m] ? best : lam[m]);
    if (m == full) break;
  }
  // f(E) = 0, so p[full] is already the max over proper prefixes only.
  res.width = p[full];

  // Rebuild the layout back to front, choosing the least element that
  // attains the minimum at every step.
  LinearLayout layout;
  layout.order.assign(n, -1);
  Mask m = full;
  for (int i = n - 1; i >= 0; --i) {
    int best = INT8_MAX + 1;
    int pick = -1;
    for (int e = 0; e < n; ++e) {
      if (!(m & (Mask{1} << e))) continue;
      const int v = p[m ^ (Mask{1} << e)];
      if (v < best) {
        best = v;
        pick = e;
      }
    }
    layout.order[i] = pick;
    m ^= Mask{1} << pick;
  }
  res.layout = std::move(layout);
  if (n >= 2 && layout_width(*res.layout, f) != res.width)
    throw std::logic_error("pathwidth_exact: certificate does not reproduce the computed width");
  res.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

}  // namespace widthlab
