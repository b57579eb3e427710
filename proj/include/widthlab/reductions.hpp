#pragma once

#include <array>
#include <optional>
#include <vector>

#include "widthlab/matrix.hpp"
#include "widthlab/solvers.hpp"

namespace widthlab {

// The 2x3 seed matrix (1 0 1 / 0 1 1) whose matroid is the 3-element circuit.
FFMatrix gadget_matrix(const Field& f);

// gadget x A for a nonzero matrix with a simple matroid.  The result has
// branch-width 1 when the columns of A are independent and more than 1
// otherwise; column (f, v) carries the label "<f>.<label of v>".
FFMatrix gadget_tensor(const FFMatrix& a);

// The k x (3k-2) matrix of powers alpha_j^i for distinct alphas; any k
// columns are independent, so its matroid is uniform of rank k and its
// branch-width is min(k, 2k-2, k) = k for k >= 2.  Defaults to the first
// 3k-2 field elements in encoding order.
FFMatrix vandermonde(const Field& f, int k, std::vector<Elem> alphas = {});

// vandermonde(k) x A for a simple matroid; multiplies branch-width by k
// (against a floor of 1) when k >= 2, and is A itself when k = 1.
FFMatrix vandermonde_tensor(const FFMatrix& a, int k);

// Four side-by-side copies of A with one extra row holding a distinct
// constant per copy.  Adds exactly 1 to both the rank and (for simple
// matroids of branch-width >= 1) the branch-width.  Defaults to the first
// four field elements.
FFMatrix d_plus(const FFMatrix& a, std::optional<std::array<Elem, 4>> params = std::nullopt);

enum class SimplicityVerdict { simple, singular };

struct PreprocessResult {
  SimplicityVerdict verdict = SimplicityVerdict::simple;
  FFMatrix matrix;  // column-normalized; meaningful only for the simple verdict
};

// Scales every column so its uppermost nonzero entry is 1.  A zero column or
// a duplicate normalized column proves linear dependence, short-circuiting
// with the singular verdict; otherwise the result represents a simple
// matroid.
PreprocessResult simplicity_preprocess(const FFMatrix& a);

struct ReductionResult {
  bool singular_short_circuit = false;
  FFMatrix matrix;  // meaningful only when !singular_short_circuit
};

// V_{p1}^{e1} x ... x V_{pl}^{el} x gadget x A for k = prod pi^ei >= 2, or
// gadget x A for k = 1.  The output matroid has branch-width exactly k when
// the columns of A are independent and at least 2k otherwise.  Requires
// 3p-2 <= |F| for every prime divisor p of k.
ReductionResult reduce_2approx(const FFMatrix& a, int k);

// The binary-expansion composition of gadget, V_2 and d_plus steps; needs
// only four field elements.  The output matroid has branch-width exactly k
// when the columns of A are independent and at least k + 2^floor(log2 k)
// (so more than 1.5k) otherwise.  Requires k >= 1.
ReductionResult reduce_15approx(const FFMatrix& a, int k);

// Expected output dimensions of the two reductions, for shape checks.
std::pair<long long, long long> reduce_2approx_shape(int k, int n);
std::pair<long long, long long> reduce_15approx_shape(int k, int n);

enum class Singularity { nonsingular, singular };

// Decides column independence by checking whether the matroid branch-width
// is zero; the input must have no zero column.
Singularity singularity_via_branchwidth(const FFMatrix& a, const SolverOptions& opt = {});

}  // namespace widthlab
