// Batch front-end: parse matrices and digraphs, run the exact solvers and
// the conversion pipelines, emit decompositions and verification reports.
// Exit status: 0 success (bounds hold), 2 exceeds-k verdict, 1 error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "widthlab/matrix_io.hpp"
#include "widthlab/matroid.hpp"
#include "widthlab/reductions.hpp"
#include "widthlab/sigma.hpp"
#include "widthlab/solvers.hpp"

namespace {

using namespace widthlab;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitExceeds = 2;

struct CommonOpts {
  std::optional<int> k;
  std::optional<int> field;  // assert the instance field order
  int max_n = 14;
  std::string sigma = "identity";
  std::string format = "text";
  std::string solver = "exact";
  std::string output;
  unsigned long long seed = 0;  // reserved for instance generators
};

void check_field(const FFMatrix& m, const CommonOpts& o) {
  if (o.field && m.field().order() != *o.field)
    throw std::runtime_error("instance is over " + m.field().name() + ", expected GF(" +
                             std::to_string(*o.field) + ")");
}

void check_solver(const CommonOpts& o) {
  if (o.solver != "exact")
    throw std::runtime_error("unknown solver '" + o.solver + "' (only 'exact' is built in)");
}

SolverOptions solver_options(const CommonOpts& o) {
  SolverOptions opt;
  opt.max_ground = o.max_n;
  opt.max_ground_linear = std::max(o.max_n, 20);
  return opt;
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw std::runtime_error("cannot write '" + o.output + "'");
  out << text;
}

// Reorders the parsed certificate's elements to the instance's label order.
BranchDecomposition align_elements(const ParsedDecomposition& parsed, const std::vector<std::string>& labels) {
  std::map<std::string, int> where;
  for (size_t i = 0; i < parsed.labels.size(); ++i)
    if (!where.emplace(parsed.labels[i], static_cast<int>(i)).second)
      throw std::runtime_error("certificate repeats the label '" + parsed.labels[i] + "'");
  if (labels.size() != parsed.labels.size())
    throw std::runtime_error("certificate has " + std::to_string(parsed.labels.size()) + " elements, instance has " +
                             std::to_string(labels.size()));
  BranchDecomposition d;
  d.tree = parsed.decomposition.tree;
  d.leaf_of.resize(labels.size());
  for (size_t e = 0; e < labels.size(); ++e) {
    const auto it = where.find(labels[e]);
    if (it == where.end()) throw std::runtime_error("certificate is missing the label '" + labels[e] + "'");
    d.leaf_of[e] = parsed.decomposition.leaf_of[it->second];
  }
  return d;
}

LinearLayout align_elements(const ParsedLayout& parsed, const std::vector<std::string>& labels) {
  std::map<std::string, int> pos;
  for (size_t i = 0; i < labels.size(); ++i) pos.emplace(labels[i], static_cast<int>(i));
  if (labels.size() != parsed.labels.size()) throw std::runtime_error("layout length does not match the instance");
  LinearLayout l;
  for (const auto& label : parsed.labels) {
    const auto it = pos.find(label);
    if (it == pos.end()) throw std::runtime_error("layout names the unknown element '" + label + "'");
    l.order.push_back(it->second);
  }
  return l;
}

int report_branch_solve(const CommonOpts& o, const SolveResult& r, const std::vector<std::string>& labels) {
  std::cout << "width " << r.width << '\n';
  if (o.k && r.width > *o.k) {
    std::cout << "verdict exceeds-k (k=" << *o.k << ")\n";
    return kExitExceeds;
  }
  if (r.decomposition) {
    const std::string text =
        o.format == "dot" ? to_dot(*r.decomposition, labels) : serialize(*r.decomposition, labels);
    emit(o, text);
  }
  return kExitOk;
}

int report_linear_solve(const CommonOpts& o, const SolveResult& r, const std::vector<std::string>& labels) {
  std::cout << "width " << r.width << '\n';
  if (o.k && r.width > *o.k) {
    std::cout << "verdict exceeds-k (k=" << *o.k << ")\n";
    return kExitExceeds;
  }
  if (r.layout) emit(o, serialize(*r.layout, labels));
  return kExitOk;
}

int cmd_bw(const std::string& path, const CommonOpts& o) {
  check_solver(o);
  const FFMatrix m = read_matrix_file(path);
  check_field(m, o);
  const LinearMatroid matroid(m);
  const MatroidConnectivity f(matroid);
  const SolveResult r = branchwidth_exact(f, solver_options(o));
  return report_branch_solve(o, r, matroid.ground());
}

int cmd_pw(const std::string& path, const CommonOpts& o) {
  check_solver(o);
  const FFMatrix m = read_matrix_file(path);
  check_field(m, o);
  const LinearMatroid matroid(m);
  const MatroidConnectivity f(matroid);
  const SolveResult r = pathwidth_exact(f, solver_options(o));
  return report_linear_solve(o, r, matroid.ground());
}

SigmaSymmetricMatrix read_sigma_matrix(const std::string& path, const CommonOpts& o) {
  const FFMatrix m = read_matrix_file(path);
  check_field(m, o);
  return SigmaSymmetricMatrix(m, SesquiMorphism::by_name(m.field(), o.sigma));
}

std::vector<std::string> index_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  return labels;
}

int cmd_rw(const std::string& path, const CommonOpts& o) {
  check_solver(o);
  const SigmaSymmetricMatrix a = read_sigma_matrix(path, o);
  const SolveResult r = rankwidth_exact(a, solver_options(o));
  return report_branch_solve(o, r, index_labels(a.size()));
}

int cmd_lrw(const std::string& path, const CommonOpts& o) {
  check_solver(o);
  const SigmaSymmetricMatrix a = read_sigma_matrix(path, o);
  const SolveResult r = linear_rankwidth_exact(a, solver_options(o));
  return report_linear_solve(o, r, index_labels(a.size()));
}

int cmd_digraph_rw(const std::string& path, const CommonOpts& o) {
  check_solver(o);
  const DirectedGraph g = read_digraph_file(path);
  const SigmaSymmetricMatrix a = f4_adjacency(g);
  const SolveResult direct = rankwidth_exact(a, solver_options(o));
  std::cout << "width " << direct.width << '\n';

  // Cross-check against the entry-graph route: the two widths must satisfy
  // the conversion bounds in both directions, and both converted
  // decompositions must re-evaluate within them.
  const EntryGraph eg = entry_graph(a);
  const SolveResult via_graph = rankwidth_exact(entry_graph_sigma(eg), solver_options(o));
  const int q = distinct_offdiagonal_values(a) + 1;
  std::cout << "entry-graph-width " << via_graph.width << '\n';
  const long long up = (1LL << std::min(via_graph.width, 50)) + via_graph.width - 1;
  if (direct.width > up || via_graph.width > conversion_width_bound(q, direct.width))
    throw std::runtime_error("digraph-rw: the two route widths violate the conversion bounds");
  if (g.n >= 2 && via_graph.decomposition) {
    CutRankOracle fa(a);
    const BranchDecomposition back = graph_decomp_to_matrix_decomp(eg, *via_graph.decomposition);
    if (decomposition_width(back, fa) > up)
      throw std::runtime_error("digraph-rw: converted decomposition exceeds its bound");
  }
  if (o.k && direct.width > *o.k) {
    std::cout << "verdict exceeds-k (k=" << *o.k << ")\n";
    return kExitExceeds;
  }
  if (direct.decomposition) emit(o, serialize(*direct.decomposition, index_labels(a.size())));
  return kExitOk;
}

int cmd_standardize(const std::string& path, const CommonOpts& o) {
  const FFMatrix m = read_matrix_file(path);
  check_field(m, o);
  const StandardForm sf = standard_form(m);
  std::ostringstream out;
  out << write_matrix(sf.matrix);
  out << "# basis";
  for (int b : sf.basis) out << ' ' << b + 1;
  out << "\n# scalar " << static_cast<int>(sf.scalar) << '\n';
  emit(o, out.str());
  return kExitOk;
}

int cmd_entry_graph(const std::string& path, const CommonOpts& o) {
  const SigmaSymmetricMatrix a = read_sigma_matrix(path, o);
  const EntryGraph g = entry_graph(a);
  if (o.format == "dot") {
    emit(o, to_dot(g));
    return kExitOk;
  }
  std::ostringstream out;
  out << "graph " << g.vertex_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v) out << "vertex " << v << ' ' << g.vertex_name(v) << '\n';
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacency.at(u, v)) out << "edge " << u << ' ' << v << '\n';
  emit(o, out.str());
  return kExitOk;
}

std::vector<std::string> entry_graph_labels(const EntryGraph& g) {
  std::vector<std::string> labels(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) labels[v] = g.vertex_name(v);
  return labels;
}

int cmd_convert(const std::string& path, const std::string& decomp_path, const std::string& direction,
                const CommonOpts& o) {
  const SigmaSymmetricMatrix a = read_sigma_matrix(path, o);
  const EntryGraph g = entry_graph(a);
  std::ifstream in(decomp_path);
  if (!in) throw std::runtime_error("cannot open '" + decomp_path + "'");
  const ParsedDecomposition parsed = deserialize_decomposition(in);
  if (direction == "graph-to-matrix") {
    const BranchDecomposition dg = align_elements(parsed, entry_graph_labels(g));
    const BranchDecomposition da = graph_decomp_to_matrix_decomp(g, dg);
    CutRankOracle f(a);
    std::cout << "width " << decomposition_width(da, f) << '\n';
    emit(o, serialize(da, index_labels(a.size())));
    return kExitOk;
  }
  if (direction == "matrix-to-graph") {
    const BranchDecomposition da = align_elements(parsed, index_labels(a.size()));
    const BranchDecomposition dg = matrix_decomp_to_graph_decomp(g, da);
    CutRankOracle f(entry_graph_sigma(g));
    std::cout << "width " << decomposition_width(dg, f) << '\n';
    emit(o, serialize(dg, entry_graph_labels(g)));
    return kExitOk;
  }
  throw std::runtime_error("convert: unknown direction '" + direction + "'");
}

int cmd_reduce(const std::string& path, double ratio, const CommonOpts& o) {
  const FFMatrix m = read_matrix_file(path);
  check_field(m, o);
  if (!o.k) throw std::runtime_error("reduce: --k is required");
  if (*o.k == 0) {
    const Singularity s = singularity_via_branchwidth(m, solver_options(o));
    std::cout << "verdict " << (s == Singularity::singular ? "singular" : "nonsingular") << '\n';
    return kExitOk;
  }
  const ReductionResult r = ratio == 2.0 ? reduce_2approx(m, *o.k) : reduce_15approx(m, *o.k);
  if (r.singular_short_circuit) {
    std::cout << "verdict singular\n";
    return kExitOk;
  }
  std::cout << "rows " << r.matrix.rows() << "\ncols " << r.matrix.cols() << '\n';
  emit(o, write_matrix(r.matrix));
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& cert_path, const std::string& kind, const CommonOpts& o) {
  std::ifstream in(cert_path);
  if (!in) throw std::runtime_error("cannot open '" + cert_path + "'");

  int width = 0;
  if (kind == "bw" || kind == "pw") {
    const FFMatrix m = read_matrix_file(path);
    check_field(m, o);
    const LinearMatroid matroid(m);
    const MatroidConnectivity f(matroid);
    if (kind == "bw")
      width = decomposition_width(align_elements(deserialize_decomposition(in), matroid.ground()), f);
    else
      width = layout_width(align_elements(deserialize_layout(in), matroid.ground()), f);
  } else if (kind == "rw" || kind == "lrw") {
    const SigmaSymmetricMatrix a = read_sigma_matrix(path, o);
    const CutRankOracle f(a);
    if (kind == "rw")
      width = decomposition_width(align_elements(deserialize_decomposition(in), index_labels(a.size())), f);
    else
      width = layout_width(align_elements(deserialize_layout(in), index_labels(a.size())), f);
  } else {
    throw std::runtime_error("verify: unknown kind '" + kind + "'");
  }
  std::cout << "width " << width << '\n';
  if (o.k) {
    if (width > *o.k) {
      std::cout << "bound exceeded (k=" << *o.k << ")\n";
      return kExitExceeds;
    }
    std::cout << "bound holds (k=" << *o.k << ")\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"width parameters of represented matroids and sigma-symmetric matrices"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string input, cert, direction = "graph-to-matrix", kind = "bw";
  double ratio = 2.0;

  app.add_option("--seed", opts.seed, "seed for randomized instance generation (reserved)");

  auto add_common = [&](CLI::App* sub, bool with_k = true) {
    sub->add_option("input", input, "instance file")->required();
    if (with_k) sub->add_option("--k", opts.k, "width budget; exceeding it exits with status 2");
    sub->add_option("--field", opts.field, "require the instance field to have this order");
    sub->add_option("--max-n", opts.max_n, "solver ground-size guard override");
    sub->add_option("--sigma", opts.sigma, "sesqui-morphism: identity|negation|frobenius");
    sub->add_option("--format", opts.format, "certificate format: text|dot");
    sub->add_option("--solver", opts.solver, "width solver to use (exact)");
    sub->add_option("--output,-o", opts.output, "write the certificate to this file");
  };

  add_common(app.add_subcommand("bw", "exact branch-width of the matroid of a matrix"));
  add_common(app.add_subcommand("pw", "exact path-width of the matroid of a matrix"));
  add_common(app.add_subcommand("rw", "exact rank-width of a sigma-symmetric matrix"));
  add_common(app.add_subcommand("lrw", "exact linear rank-width of a sigma-symmetric matrix"));
  add_common(app.add_subcommand("digraph-rw", "exact rank-width of a directed graph, cross-checked"));
  add_common(app.add_subcommand("standardize", "extract a standard representation"), false);
  add_common(app.add_subcommand("entry-graph", "emit the entry graph of a sigma-symmetric matrix"), false);

  auto* convert = app.add_subcommand("convert", "convert decompositions between a matrix and its entry graph");
  add_common(convert, false);
  convert->add_option("certificate", cert, "decomposition file")->required();
  convert->add_option("--direction", direction, "graph-to-matrix|matrix-to-graph");

  auto* reduce = app.add_subcommand("reduce", "build a width-dichotomy instance from a square matrix");
  add_common(reduce);
  reduce->add_option("--ratio", ratio, "reduction family: 2 or 1.5");

  auto* verify = app.add_subcommand("verify", "re-evaluate a certificate against an instance");
  add_common(verify);
  verify->add_option("certificate", cert, "certificate file")->required();
  verify->add_option("--kind", kind, "bw|pw|rw|lrw");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string verb = app.get_subcommands().front()->get_name();
    if (verb == "bw") return cmd_bw(input, opts);
    if (verb == "pw") return cmd_pw(input, opts);
    if (verb == "rw") return cmd_rw(input, opts);
    if (verb == "lrw") return cmd_lrw(input, opts);
    if (verb == "digraph-rw") return cmd_digraph_rw(input, opts);
    if (verb == "standardize") return cmd_standardize(input, opts);
    if (verb == "entry-graph") return cmd_entry_graph(input, opts);
    if (verb == "convert") return cmd_convert(input, cert, direction, opts);
    if (verb == "reduce") return cmd_reduce(input, ratio, opts);
    if (verb == "verify") return cmd_verify(input, cert, kind, opts);
    std::cerr << "unknown subcommand\n";
    return kExitError;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitError;
  }
}
