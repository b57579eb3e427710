#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "widthlab/connectivity.hpp"
#include "widthlab/matrix.hpp"
#include "widthlab/matrix_io.hpp"
#include "widthlab/matroid.hpp"
#include "widthlab/solvers.hpp"

namespace widthlab {

// An involution sigma on a field such that x -> sigma(1)^-1 sigma(x) is a
// field automorphism.  Covers the identity (symmetric matrices), negation
// (skew-symmetric) and the conjugation x -> x^p on quadratic extensions.
class SesquiMorphism {
public:
  static SesquiMorphism identity(const Field& f);
  static SesquiMorphism negation(const Field& f);
  // x -> x^p; requires degree 1 or 2 so that it is an involution.
  static SesquiMorphism frobenius(const Field& f);
  // Arbitrary image table, validated exhaustively.
  static SesquiMorphism from_table(const Field& f, std::vector<Elem> image);
  static SesquiMorphism by_name(const Field& f, const std::string& name);

  Elem operator()(Elem a) const { return image_[a]; }
  const Field& field() const { return field_; }
  bool is_identity() const;

private:
  SesquiMorphism(Field f, std::vector<Elem> image);
  Field field_;
  std::vector<Elem> image_;
};

// A square matrix with a(i,j) = sigma(a(j,i)) for all i, j; checked at
// construction.
class SigmaSymmetricMatrix {
public:
  SigmaSymmetricMatrix(FFMatrix a, SesquiMorphism sigma);
  const FFMatrix& matrix() const { return a_; }
  const SesquiMorphism& sigma() const { return sigma_; }
  int size() const { return a_.rows(); }

private:
  FFMatrix a_;
  SesquiMorphism sigma_;
};

// cutrk(X) = rank of the off-diagonal block A[X, complement].
int cutrank(const SigmaSymmetricMatrix& a, Mask x);

// Memoizing oracle around cutrank, with packed-word elimination over GF(2).
class CutRankOracle final : public ConnectivityOracle {
public:
  explicit CutRankOracle(SigmaSymmetricMatrix a);
  int ground_size() const override { return n_; }
  int eval(Mask x) const override;
  const SigmaSymmetricMatrix& matrix() const { return a_; }

private:
  SigmaSymmetricMatrix a_;
  int n_;
  bool binary_ = false;
  std::vector<std::uint64_t> rows_;  // packed rows, GF(2) only
  mutable std::vector<std::int8_t> cache_;
};

SolveResult rankwidth_exact(const SigmaSymmetricMatrix& a, const SolverOptions& opt = {});
SolveResult linear_rankwidth_exact(const SigmaSymmetricMatrix& a, const SolverOptions& opt = {});

// A symmetric 0/1 matrix as a sigma-symmetric matrix over GF(2); the
// rank-width of a graph is the rank-width of this object.
SigmaSymmetricMatrix graph_adjacency_sigma(const FFMatrix& adjacency);

// The bipartite-style symmetric matrix of a standard representation
// (identity columns B, remainder A0): the E x E matrix carrying A0 between
// basis and non-basis elements and 0 elsewhere, indexed in ground order.
// For every X, the matroid connectivity of X equals the cut-rank of X here,
// so branch-width equals rank-width.
SigmaSymmetricMatrix matroid_to_sigma(const StandardForm& sf);

// The 0/1 encoding of a sigma-symmetric matrix: base vertices are the matrix
// indices; each realized nonzero value alpha of row i off the diagonal adds
// an entry vertex (i, alpha) adjacent to base i, and each nonzero pair
// (a(i,j), a(j,i)) adds one edge between the two matching entry vertices.
struct EntryGraph {
  int base_count = 0;
  std::vector<std::pair<int, Elem>> entry_vertices;  // sorted (row, value)
  FFMatrix adjacency;                                // over GF(2)

  int vertex_count() const { return base_count + static_cast<int>(entry_vertices.size()); }
  int entry_vertex_index(int row, Elem value) const;  // -1 if absent
  std::string vertex_name(int v) const;
};

EntryGraph entry_graph(const SigmaSymmetricMatrix& a);

SigmaSymmetricMatrix entry_graph_sigma(const EntryGraph& g);

std::string to_dot(const EntryGraph& g);

// Restricts a rank-decomposition of the entry graph to the base vertices and
// suppresses the resulting degree-2 nodes.  If the input width is k, the
// output width is at most 2^k + k - 1.
BranchDecomposition graph_decomp_to_matrix_decomp(const EntryGraph& g, const BranchDecomposition& dg);

// Expands a rank-decomposition of the matrix to one of its entry graph by
// hanging, below each leaf, a binary tree over the leaf's base and entry
// vertices.  Rows without off-diagonal support are grafted
// as a comb at the end.  If the input width is k and there are q-1 realized
// nonzero off-diagonal values, the output width is at most (q-1)(q^k - 1).
BranchDecomposition matrix_decomp_to_graph_decomp(const EntryGraph& g, const BranchDecomposition& da);

// Number of distinct nonzero off-diagonal values, i.e. q-1 for the bound in
// matrix_decomp_to_graph_decomp.
int distinct_offdiagonal_values(const SigmaSymmetricMatrix& a);
int distinct_nonzero_values(const FFMatrix& m);

// The GF(4) matrix of a directed graph: 1 for a symmetric pair of arcs,
// x / x^2 for a single arc in the forward / backward direction, with the
// conjugation x -> x^2 as sigma.  Rank-width of a directed graph is the
// rank-width of this matrix.
SigmaSymmetricMatrix f4_adjacency(const DirectedGraph& g);

// The arrangement {span(e_i, v_i)} inside F^n given by the ambient matrix
// (I | A) with groups {i, n+i}.  Its connectivity is exactly twice the
// cut-rank of A, so its branch-width is twice the rank-width.
SubspaceArrangement arrangement_of_sigma(const SigmaSymmetricMatrix& a);

// Pluggable rank-width solver slot: returns a rank-decomposition of the
// GF(2) adjacency of width at most the budget, or nullopt after correctly
// concluding that the rank-width exceeds the budget.  Failures are thrown,
// never encoded in the return value.
using GraphRankWidthSolver =
    std::function<std::optional<BranchDecomposition>(const SigmaSymmetricMatrix& adjacency, int budget)>;

GraphRankWidthSolver exact_graph_rankwidth_solver(const SolverOptions& opt = {});

// (q-1)(q^k - 1), saturated at a large value instead of overflowing.
long long conversion_width_bound(int q, int k);
// 2^K + K - 1 for K = conversion_width_bound(q, k); nullopt when it does not
// fit in 64 bits.
std::optional<long long> approx_width_bound(int q, int k);

struct PipelineResult {
  bool exceeds_k = false;                            // concluded bw > k
  std::optional<BranchDecomposition> decomposition;  // over the matroid elements
  int solver_budget = 0;                             // (q-1)(q^k-1)
  int q = 0;                                         // distinct entry values + 1
  int entry_graph_vertices = 0;
};

// Standard representation -> symmetric matrix -> entry graph -> rank-width
// solver -> restriction back to a branch-decomposition of the matroid.
// When the solver refuses the budget (q-1)(q^k-1), the branch-width of the
// matroid provably exceeds k; otherwise the emitted decomposition has width
// at most 2^((q-1)(q^k-1)) + (q-1)(q^k-1) - 1.
PipelineResult approx_branchwidth_pipeline(const StandardForm& sf, int k, const GraphRankWidthSolver& solver);

}  // namespace widthlab
