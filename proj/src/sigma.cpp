#include "widthlab/sigma.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace widthlab {

SesquiMorphism::SesquiMorphism(Field f, std::vector<Elem> image) : field_(std::move(f)), image_(std::move(image)) {
  const int q = field_.order();
  if (static_cast<int>(image_.size()) != q) throw std::invalid_argument("sesqui-morphism: image table size mismatch");
  for (Elem v : image_)
    if (v >= q) throw std::out_of_range("sesqui-morphism: image value out of field range");
  for (int x = 0; x < q; ++x)
    if (image_[image_[x]] != x) throw std::invalid_argument("sesqui-morphism: not an involution");
  const Elem s1 = image_[1];
  if (s1 == 0) throw std::invalid_argument("sesqui-morphism: sigma(1) must be nonzero");
  const Elem s1inv = field_.inv(s1);
  auto phi = [&](Elem x) { return field_.mul(s1inv, image_[x]); };
  std::vector<bool> hit(q, false);
  for (int x = 0; x < q; ++x) {
    if (hit[phi(static_cast<Elem>(x))]) throw std::invalid_argument("sesqui-morphism: scaled map is not a bijection");
    hit[phi(static_cast<Elem>(x))] = true;
  }
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      const Elem ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
      if (phi(field_.add(ex, ey)) != field_.add(phi(ex), phi(ey)))
        throw std::invalid_argument("sesqui-morphism: scaled map is not additive");
      if (phi(field_.mul(ex, ey)) != field_.mul(phi(ex), phi(ey)))
        throw std::invalid_argument("sesqui-morphism: scaled map is not multiplicative");
    }
}

SesquiMorphism SesquiMorphism::identity(const Field& f) {
  std::vector<Elem> image(f.order());
  for (int x = 0; x < f.order(); ++x) image[x] = static_cast<Elem>(x);
  return SesquiMorphism(f, std::move(image));
}

SesquiMorphism SesquiMorphism::negation(const Field& f) {
  std::vector<Elem> image(f.order());
  for (int x = 0; x < f.order(); ++x) image[x] = f.neg(static_cast<Elem>(x));
  return SesquiMorphism(f, std::move(image));
}

SesquiMorphism SesquiMorphism::frobenius(const Field& f) {
  if (f.degree() > 2)
    throw std::invalid_argument("sesqui-morphism: x -> x^p is an involution only for degree 1 or 2");
  std::vector<Elem> image(f.order());
  const int i = f.degree() == 2 ? 1 : 0;
  for (int x = 0; x < f.order(); ++x) image[x] = f.frobenius(static_cast<Elem>(x), i);
  return SesquiMorphism(f, std::move(image));
}

SesquiMorphism SesquiMorphism::from_table(const Field& f, std::vector<Elem> image) {
  return SesquiMorphism(f, std::move(image));
}

SesquiMorphism SesquiMorphism::by_name(const Field& f, const std::string& name) {
  if (name == "identity") return identity(f);
  if (name == "negation") return negation(f);
  if (name == "frobenius") return frobenius(f);
  throw std::invalid_argument("sesqui-morphism: unknown name '" + name + "'");
}

bool SesquiMorphism::is_identity() const {
  for (size_t x = 0; x < image_.size(); ++x)
    if (image_[x] != x) return false;
  return true;
}

SigmaSymmetricMatrix::SigmaSymmetricMatrix(FFMatrix a, SesquiMorphism sigma)
    : a_(std::move(a)), sigma_(std::move(sigma)) {
  if (a_.rows() != a_.cols()) throw std::invalid_argument("sigma-symmetric: matrix must be square");
  if (a_.field() != sigma_.field()) throw std::invalid_argument("sigma-symmetric: field mismatch with sigma");
  for (int i = 0; i < a_.rows(); ++i)
    for (int j = 0; j < a_.cols(); ++j)
      if (a_.at(i, j) != sigma_(a_.at(j, i)))
        throw std::invalid_argument("sigma-symmetric: a(i,j) != sigma(a(j,i)) at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
}

int cutrank(const SigmaSymmetricMatrix& a, Mask x) {
  const int n = a.size();
  if (x & ~full_mask(n)) throw std::out_of_range("cutrank: index out of range");
  std::vector<int> rows, cols;
  for (int i = 0; i < n; ++i)
    (x & (Mask{1} << i) ? rows : cols).push_back(i);
  if (rows.empty() || cols.empty()) return 0;
  return rank(a.matrix().select(rows, cols));
}

CutRankOracle::CutRankOracle(SigmaSymmetricMatrix a) : a_(std::move(a)), n_(a_.size()) {
  if (n_ > kMaxGround) throw std::out_of_range("cutrank oracle: size exceeds the oracle cap (20)");
  cache_.assign(size_t{1} << n_, -1);
  if (a_.matrix().field().order() == 2) {
    binary_ = true;
    rows_.assign(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (a_.matrix().at(i, j)) rows_[i] |= std::uint64_t{1} << j;
  }
  spot_check();
}

int CutRankOracle::eval(Mask x) const {
  const Mask full = ground_mask();
  if (x & ~full) throw std::out_of_range("cutrank oracle: index out of range");
  std::int8_t& c = cache_[x];
  if (c >= 0) return c;
  if (binary_) {
    // Rank of the rows of X restricted to the complement columns, by packed
    // word elimination with pivots kept in increasing bit order.
    std::uint64_t piv[20];
    int r = 0;
    const std::uint64_t comp = static_cast<std::uint64_t>(full & ~x);
    for (int i = 0; i < n_; ++i) {
      if (!(x & (Mask{1} << i))) continue;
      std::uint64_t w = rows_[i] & comp;
      for (int j = 0; j < r; ++j)
        if (w & (piv[j] & (~piv[j] + 1))) w ^= piv[j];
      if (w) {
        int pos = r++;
        piv[pos] = w;
        while (pos > 0 && (piv[pos] & (~piv[pos] + 1)) < (piv[pos - 1] & (~piv[pos - 1] + 1))) {
          std::swap(piv[pos], piv[pos - 1]);
          --pos;
        }
      }
    }
    c = static_cast<std::int8_t>(r);
  } else {
    c = static_cast<std::int8_t>(cutrank(a_, x));
  }
  return c;
}

SolveResult rankwidth_exact(const SigmaSymmetricMatrix& a, const SolverOptions& opt) {
  CutRankOracle f(a);
  return branchwidth_exact(f, opt);
}

SolveResult linear_rankwidth_exact(const SigmaSymmetricMatrix& a, const SolverOptions& opt) {
  CutRankOracle f(a);
  return pathwidth_exact(f, opt);
}

SigmaSymmetricMatrix graph_adjacency_sigma(const FFMatrix& adjacency) {
  if (adjacency.field().order() != 2) throw std::invalid_argument("graph adjacency must be over GF(2)");
  return SigmaSymmetricMatrix(adjacency, SesquiMorphism::identity(adjacency.field()));
}

SigmaSymmetricMatrix matroid_to_sigma(const StandardForm& sf) {
  const FFMatrix& m = sf.matrix;
  const Field& f = m.field();
  const int r = m.rows();
  const int n = m.cols();
  if (static_cast<int>(sf.basis.size()) != r)
    throw std::invalid_argument("matroid_to_sigma: basis size must match the row count");
  std::vector<int> row_of(n, -1);  // basis element -> its identity row
  for (int b = 0; b < r; ++b) {
    const int col = sf.basis[b];
    if (col < 0 || col >= n) throw std::invalid_argument("matroid_to_sigma: basis column out of range");
    for (int i = 0; i < r; ++i) {
      const Elem expect = (i == b) ? Elem{1} : Elem{0};
      if (m.at(i, col) != expect)
        throw std::invalid_argument("matroid_to_sigma: input is not in standard form on its basis columns");
    }
    row_of[col] = b;
  }
  FFMatrix a(f, n, n);
  for (int i = 0; i < n; ++i) {
    if (row_of[i] < 0) continue;  // only basis rows carry entries
    for (int j = 0; j < n; ++j) {
      if (row_of[j] >= 0) continue;  // basis-basis block stays zero
      const Elem v = m.at(row_of[i], j);
      a.set(i, j, v);
      a.set(j, i, v);
    }
  }
  a.set_column_labels(m.column_labels());
  return SigmaSymmetricMatrix(std::move(a), SesquiMorphism::identity(f));
}

int EntryGraph::entry_vertex_index(int row, Elem value) const {
  const auto key = std::make_pair(row, value);
  const auto it = std::lower_bound(entry_vertices.begin(), entry_vertices.end(), key);
  if (it == entry_vertices.end() || *it != key) return -1;
  return base_count + static_cast<int>(it - entry_vertices.begin());
}

std::string EntryGraph::vertex_name(int v) const {
  if (v < base_count) return std::to_string(v + 1);
  const auto& [row, value] = entry_vertices[v - base_count];
  return "v" + std::to_string(row + 1) + ":" + std::to_string(static_cast<int>(value));
}

EntryGraph entry_graph(const SigmaSymmetricMatrix& a) {
  const int n = a.size();
  EntryGraph g{n, {}, FFMatrix(Field::make(2), 0, 0)};
  std::set<std::pair<int, Elem>> entries;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && a.matrix().at(i, j) != 0) entries.emplace(i, a.matrix().at(i, j));
  g.entry_vertices.assign(entries.begin(), entries.end());

  const int total = g.vertex_count();
  FFMatrix adj(Field::make(2), total, total);
  for (size_t k = 0; k < g.entry_vertices.size(); ++k) {
    const int base = g.entry_vertices[k].first;
    const int v = g.base_count + static_cast<int>(k);
    adj.set(base, v, 1);
    adj.set(v, base, 1);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Elem alpha = a.matrix().at(i, j);
      const Elem beta = a.matrix().at(j, i);
      if (alpha == 0 || beta == 0) continue;
      const int u = g.entry_vertex_index(i, alpha);
      const int v = g.entry_vertex_index(j, beta);
      adj.set(u, v, 1);
      adj.set(v, u, 1);
    }
  g.adjacency = std::move(adj);
  return g;
}

SigmaSymmetricMatrix entry_graph_sigma(const EntryGraph& g) { return graph_adjacency_sigma(g.adjacency); }

std::string to_dot(const EntryGraph& g) {
  std::ostringstream out;
  out << "graph entry {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  n" << v << " [label=\"" << g.vertex_name(v) << "\"";
    if (v < g.base_count) out << ",shape=box";
    out << "];\n";
  }
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacency.at(u, v)) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
  return out.str();
}

BranchDecomposition graph_decomp_to_matrix_decomp(const EntryGraph& g, const BranchDecomposition& dg) {
  validate(dg);
  if (static_cast<int>(dg.leaf_of.size()) != g.vertex_count())
    throw std::invalid_argument("graph_decomp_to_matrix_decomp: decomposition does not match the entry graph");
  if (g.base_count < 2)
    throw std::invalid_argument("graph_decomp_to_matrix_decomp: at least two base vertices required");
  std::vector<int> kept;
  for (int i = 0; i < g.base_count; ++i) kept.push_back(dg.leaf_of[i]);
  const SuppressResult res = restrict_to_leaves(dg.tree, kept);
  BranchDecomposition out;
  out.tree = res.tree;
  out.leaf_of.resize(g.base_count);
  for (int i = 0; i < g.base_count; ++i) out.leaf_of[i] = res.node_map[dg.leaf_of[i]];
  validate(out);
  return out;
}

BranchDecomposition matrix_decomp_to_graph_decomp(const EntryGraph& g, const BranchDecomposition& da) {
  validate(da);
  const int n = g.base_count;
  if (static_cast<int>(da.leaf_of.size()) != n)
    throw std::invalid_argument("matrix_decomp_to_graph_decomp: decomposition does not match the matrix");
  const int total = g.vertex_count();
  if (total < 2) throw std::invalid_argument("matrix_decomp_to_graph_decomp: entry graph has fewer than 2 vertices");

  // Group the graph vertices below each base index: the base vertex first,
  // then its entry vertices by ascending value.
  std::vector<std::vector<int>> block(n);
  for (int i = 0; i < n; ++i) block[i].push_back(i);
  for (size_t k = 0; k < g.entry_vertices.size(); ++k)
    block[g.entry_vertices[k].first].push_back(g.base_count + static_cast<int>(k));

  std::vector<int> active;  // base indices with entry vertices
  std::vector<int> isolated;
  for (int i = 0; i < n; ++i)
    (block[i].size() > 1 ? active : isolated).push_back(i);

  BranchDecomposition out;
  out.leaf_of.assign(total, -1);

  if (active.size() < 2) {
    // Edgeless entry graph (no row has off-diagonal support): any shape
    // works, so lay the vertices out as a caterpillar.
    LinearLayout l;
    l.order.resize(total);
    for (int v = 0; v < total; ++v) l.order[v] = v;
    return layout_to_decomposition(l);
  }

  // Restrict the matrix decomposition to the active leaves, then hang a
  // left-leaning binary tree over each block below its leaf.
  std::vector<int> kept;
  for (int i : active) kept.push_back(da.leaf_of[i]);
  SuppressResult res = restrict_to_leaves(da.tree, kept);
  CubicTree tree = res.tree;

  for (int i : active) {
    const auto& vs = block[i];
    int attach = res.node_map[da.leaf_of[i]];  // former leaf, becomes internal
    // Left-leaning comb over the block order: later vertices hang higher,
    // the first two share the deepest node.
    for (size_t k = vs.size(); k-- > 1;) {
      const int leaf = tree.node_count++;
      out.leaf_of[vs[k]] = leaf;
      if (k == 1) {
        const int first = tree.node_count++;
        out.leaf_of[vs[0]] = first;
        tree.edges.emplace_back(attach, first);
        tree.edges.emplace_back(attach, leaf);
      } else {
        const int next = tree.node_count++;
        tree.edges.emplace_back(attach, leaf);
        tree.edges.emplace_back(attach, next);
        attach = next;
      }
    }
  }

  // Isolated base vertices contribute nothing to any cut; graft them as a
  // comb next to the first edge.
  if (!isolated.empty()) {
    int a = tree.edges[0].first;
    int b = tree.edges[0].second;
    int edge_id = 0;
    for (int i : isolated) {
      const int spine = tree.node_count++;
      const int leaf = tree.node_count++;
      tree.edges[edge_id] = {a, spine};
      tree.edges.emplace_back(spine, b);
      tree.edges.emplace_back(spine, leaf);
      out.leaf_of[i] = leaf;
      edge_id = static_cast<int>(tree.edges.size()) - 2;  // (spine, b)
      a = spine;
    }
  }

  out.tree = std::move(tree);
  validate(out);
  return out;
}

int distinct_nonzero_values(const FFMatrix& m) {
  std::set<Elem> vals;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) vals.insert(m.at(i, j));
  return static_cast<int>(vals.size());
}

int distinct_offdiagonal_values(const SigmaSymmetricMatrix& a) {
  std::set<Elem> vals;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (i != j && a.matrix().at(i, j) != 0) vals.insert(a.matrix().at(i, j));
  return static_cast<int>(vals.size());
}

SigmaSymmetricMatrix f4_adjacency(const DirectedGraph& g) {
  const Field f4 = Field::make(2, 2);
  const Elem x = 2;          // the generator of GF(4) in the polynomial basis
  const Elem x2 = f4.mul(x, x);
  FFMatrix a(f4, g.n, g.n);
  std::set<std::pair<int, int>> arcs(g.arcs.begin(), g.arcs.end());
  for (const auto& [u, v] : arcs) {
    if (u == v) throw std::invalid_argument("f4_adjacency: self-loop");
    if (u < 0 || u >= g.n || v < 0 || v >= g.n) throw std::out_of_range("f4_adjacency: arc endpoint out of range");
  }
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      if (i == j) continue;
      const bool fwd = arcs.count({i, j});
      const bool bwd = arcs.count({j, i});
      if (fwd && bwd)
        a.set(i, j, 1);
      else if (fwd)
        a.set(i, j, x);
      else if (bwd)
        a.set(i, j, x2);
    }
  return SigmaSymmetricMatrix(std::move(a), SesquiMorphism::frobenius(f4));
}

SubspaceArrangement arrangement_of_sigma(const SigmaSymmetricMatrix& a) {
  const int n = a.size();
  SubspaceArrangement s{FFMatrix::identity(a.matrix().field(), n).hconcat(a.matrix()), {}};
  s.groups.resize(n);
  for (int i = 0; i < n; ++i) s.groups[i] = {i, n + i};
  return s;
}

GraphRankWidthSolver exact_graph_rankwidth_solver(const SolverOptions& opt) {
  return [opt](const SigmaSymmetricMatrix& adjacency, int budget) -> std::optional<BranchDecomposition> {
    SolveResult r = rankwidth_exact(adjacency, opt);
    if (r.width > budget) return std::nullopt;
    return r.decomposition;
  };
}

long long conversion_width_bound(int q, int k) {
  if (q < 1 || k < 0) throw std::invalid_argument("conversion_width_bound: need q >= 1 and k >= 0");
  if (q == 1) return 0;  // no nonzero values at all
  constexpr long long kCap = 1'000'000'000;
  long long qk = 1;
  for (int i = 0; i < k; ++i) {
    qk *= q;
    if (qk > kCap) return kCap;
  }
  const long long b = static_cast<long long>(q - 1) * (qk - 1);
  return b > kCap ? kCap : b;
}

std::optional<long long> approx_width_bound(int q, int k) {
  const long long budget = conversion_width_bound(q, k);
  if (budget >= 62) return std::nullopt;
  return (1LL << budget) + budget - 1;
}

PipelineResult approx_branchwidth_pipeline(const StandardForm& sf, int k, const GraphRankWidthSolver& solver) {
  if (sf.matrix.cols() < 2) throw std::invalid_argument("pipeline: at least two elements required");
  if (k < 0) throw std::invalid_argument("pipeline: k must be non-negative");
  PipelineResult out;
  out.q = distinct_nonzero_values(sf.matrix) + 1;
  const long long budget = conversion_width_bound(out.q, k);
  out.solver_budget = static_cast<int>(std::min<long long>(budget, INT32_MAX));

  const SigmaSymmetricMatrix a = matroid_to_sigma(sf);
  const EntryGraph g = entry_graph(a);
  out.entry_graph_vertices = g.vertex_count();

  auto dg = solver(entry_graph_sigma(g), out.solver_budget);
  if (!dg) {
    // The entry graph needs more than (q-1)(q^k-1), so the matrix needs more
    // than k, and the matroid branch-width equals the matrix rank-width.
    out.exceeds_k = true;
    return out;
  }
  out.decomposition = graph_decomp_to_matrix_decomp(g, *dg);
  return out;
}

}  // namespace widthlab
