#pragma once

#include <cstdint>
#include <optional>

#include "widthlab/connectivity.hpp"
#include "widthlab/decomposition.hpp"

namespace widthlab {

// Size guards are configuration so callers (and tests) can pin them.  The
// branch-style solvers enumerate all bipartitions of all subsets (3^n work);
// the linear solvers sweep subsets (2^n * n work).
struct SolverOptions {
  int max_ground = 14;
  int max_ground_linear = 20;
};

struct SolveStats {
  std::uint64_t oracle_evals = 0;
  double seconds = 0.0;
};

// width is exact; exactly one certificate is present for ground sets of size
// >= 2 (a decomposition for branch-style solves, a layout for linear ones),
// and re-evaluating it against the oracle reproduces width.
struct SolveResult {
  int width = 0;
  std::optional<BranchDecomposition> decomposition;
  std::optional<LinearLayout> layout;
  SolveStats stats;
};

// Exact minimum over all branch-decompositions of f, by dynamic programming
// over subsets: W(X) = 0 for singletons, otherwise the minimum over proper
// bipartitions {X1, X2} of max(f(X1), f(X2), W(X1), W(X2)); the answer is
// W(E) and 0 when |E| <= 1.  Ties prefer the numerically least submask, so
// certificates are bit-deterministic.
SolveResult branchwidth_exact(const ConnectivityOracle& f, const SolverOptions& opt = {});

// Exact minimum over all linear layouts: P(empty) = 0 and
// P(X) = min over e in X of max(P(X minus e), f(X)); the answer is P(E)
// (f(E) = 0 contributes nothing).  Ties prefer the least element.
SolveResult pathwidth_exact(const ConnectivityOracle& f, const SolverOptions& opt = {});

}  // namespace widthlab
