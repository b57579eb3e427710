#include "widthlab/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "widthlab/matrix_io.hpp"

namespace widthlab {

std::vector<int> CubicTree::degrees() const {
  std::vector<int> deg(node_count, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<int> CubicTree::leaves() const {
  std::vector<int> out;
  const auto deg = degrees();
  for (int v = 0; v < node_count; ++v)
    if (deg[v] == 1) out.push_back(v);
  return out;
}

namespace {

std::vector<std::vector<int>> adjacency(const CubicTree& t) {
  std::vector<std::vector<int>> adj(t.node_count);
  for (const auto& [u, v] : t.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

}  // namespace

void validate(const CubicTree& t) {
  if (t.node_count < 2) throw std::invalid_argument("tree: at least two nodes required");
  if (static_cast<int>(t.edges.size()) != t.node_count - 1)
    throw std::invalid_argument("tree: edge count must be node count minus one");
  for (const auto& [u, v] : t.edges) {
    if (u < 0 || u >= t.node_count || v < 0 || v >= t.node_count)
      throw std::invalid_argument("tree: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("tree: self-loop");
  }
  if (t.root && (*t.root < 0 || *t.root >= t.node_count))
    throw std::invalid_argument("tree: root out of range");

  // Connected with n-1 edges and no self loop implies acyclic.
  const auto adj = adjacency(t);
  std::vector<bool> seen(t.node_count, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int visited = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++visited;
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  if (visited != t.node_count) throw std::invalid_argument("tree: not connected");

  const auto deg = t.degrees();
  for (int v = 0; v < t.node_count; ++v) {
    if (t.root && *t.root == v) {
      if (deg[v] < 1 || deg[v] > 3) throw std::invalid_argument("tree: root degree must be 1..3");
    } else if (deg[v] != 1 && deg[v] != 3) {
      throw std::invalid_argument("tree: node " + std::to_string(v) + " has degree " + std::to_string(deg[v]) +
                                  " (only 1 or 3 allowed)");
    }
  }
}

void validate(const BranchDecomposition& d) {
  validate(d.tree);
  const auto leaves = d.tree.leaves();
  if (d.leaf_of.size() != leaves.size())
    throw std::invalid_argument("decomposition: element count must equal leaf count");
  std::set<int> used;
  const std::set<int> leaf_set(leaves.begin(), leaves.end());
  for (int node : d.leaf_of) {
    if (!leaf_set.count(node)) throw std::invalid_argument("decomposition: leaf map target is not a leaf");
    if (!used.insert(node).second) throw std::invalid_argument("decomposition: leaf map is not injective");
  }
}

Mask edge_cut(const BranchDecomposition& d, int edge_id) {
  const auto& [eu, ev] = d.tree.edges[edge_id];
  const auto adj = adjacency(d.tree);
  std::vector<bool> side(d.tree.node_count, false);
  std::vector<int> stack{eu};
  side[eu] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (v == eu && w == ev) continue;
      if (v == ev && w == eu) continue;
      if (!side[w]) {
        side[w] = true;
        stack.push_back(w);
      }
    }
  }
  // The edge itself must not be traversed from either end.
  Mask x = 0;
  for (size_t e = 0; e < d.leaf_of.size(); ++e)
    if (side[d.leaf_of[e]]) x |= Mask{1} << e;
  return x;
}

int decomposition_width(const BranchDecomposition& d, const ConnectivityOracle& f) {
  validate(d);
  if (static_cast<int>(d.leaf_of.size()) != f.ground_size())
    throw std::invalid_argument("decomposition: element count does not match the connectivity ground set");
  if (f.ground_size() < 2) throw std::invalid_argument("decomposition: ground size must be at least 2");
  int width = 0;
  for (size_t e = 0; e < d.tree.edges.size(); ++e) width = std::max(width, f.eval(edge_cut(d, static_cast<int>(e))));
  return width;
}

namespace {

void validate_layout(const LinearLayout& l, int n) {
  if (static_cast<int>(l.order.size()) != n) throw std::invalid_argument("layout: order length mismatch");
  std::vector<bool> seen(n, false);
  for (int e : l.order) {
    if (e < 0 || e >= n) throw std::invalid_argument("layout: element out of range");
    if (seen[e]) throw std::invalid_argument("layout: element repeated");
    seen[e] = true;
  }
}

}  // namespace

int layout_width(const LinearLayout& l, const ConnectivityOracle& f) {
  validate_layout(l, f.ground_size());
  int width = 0;
  Mask prefix = 0;
  for (size_t i = 0; i + 1 < l.order.size(); ++i) {
    prefix |= Mask{1} << l.order[i];
    width = std::max(width, f.eval(prefix));
  }
  return width;
}

BranchDecomposition layout_to_decomposition(const LinearLayout& l) {
  const int n = static_cast<int>(l.order.size());
  if (n < 2) throw std::invalid_argument("layout_to_decomposition: at least two elements required");
  BranchDecomposition d;
  d.leaf_of.assign(n, -1);
  if (n == 2) {
    d.tree.node_count = 2;
    d.tree.edges = {{0, 1}};
    d.leaf_of[l.order[0]] = 0;
    d.leaf_of[l.order[1]] = 1;
    return d;
  }
  // Leaves 0..n-1 in layout order, internal path n..2n-3 beside leaves
  // 2..n-1 of the order.
  d.tree.node_count = 2 * n - 2;
  const auto w = [n](int i) { return n + (i - 2); };  // internal node beside order position i-1
  for (int i = 2; i <= n - 1; ++i) d.tree.edges.emplace_back(w(i), i - 1);
  for (int i = 2; i <= n - 2; ++i) d.tree.edges.emplace_back(w(i), w(i + 1));
  d.tree.edges.emplace_back(0, w(2));
  d.tree.edges.emplace_back(n - 1, w(n - 1));
  for (int i = 0; i < n; ++i) d.leaf_of[l.order[i]] = i;
  return d;
}

int balanced_edge(const CubicTree& t, int k) {
  if (k < 2) throw std::invalid_argument("balanced_edge: k must be at least 2");
  validate(t);
  const auto leaves = t.leaves();
  if (static_cast<int>(leaves.size()) < 3 * k - 2)
    throw std::invalid_argument("balanced_edge: fewer than 3k-2 leaves, no balanced edge is guaranteed");
  const std::set<int> leaf_set(leaves.begin(), leaves.end());
  const auto adj = adjacency(t);
  for (size_t e = 0; e < t.edges.size(); ++e) {
    const auto& [eu, ev] = t.edges[e];
    std::vector<bool> side(t.node_count, false);
    std::vector<int> stack{eu};
    side[eu] = true;
    int count = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (leaf_set.count(v)) ++count;
      for (int w : adj[v]) {
        if ((v == eu && w == ev) || (v == ev && w == eu)) continue;
        if (!side[w]) {
          side[w] = true;
          stack.push_back(w);
        }
      }
    }
    const int other = static_cast<int>(leaves.size()) - count;
    if (count >= k && other >= k) return static_cast<int>(e);
  }
  throw std::logic_error("balanced_edge: no edge found despite the leaf guarantee");
}

SuppressResult suppress_degree_two(const CubicTree& t) {
  // Adjacency sets survive splices; edge list is rebuilt at the end.
  std::vector<std::set<int>> adj(t.node_count);
  for (const auto& [u, v] : t.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<bool> alive(t.node_count, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < t.node_count; ++v) {
      if (!alive[v] || adj[v].size() != 2) continue;
      if (t.root && *t.root == v) continue;
      auto it = adj[v].begin();
      const int a = *it++;
      const int b = *it;
      adj[a].erase(v);
      adj[b].erase(v);
      adj[a].insert(b);
      adj[b].insert(a);
      adj[v].clear();
      alive[v] = false;
      changed = true;
    }
  }
  SuppressResult r;
  r.node_map.assign(t.node_count, -1);
  int next = 0;
  for (int v = 0; v < t.node_count; ++v)
    if (alive[v]) r.node_map[v] = next++;
  r.tree.node_count = next;
  if (t.root && alive[*t.root]) r.tree.root = r.node_map[*t.root];
  for (int v = 0; v < t.node_count; ++v) {
    if (!alive[v]) continue;
    for (int w : adj[v])
      if (v < w) r.tree.edges.emplace_back(r.node_map[v], r.node_map[w]);
  }
  return r;
}

SuppressResult restrict_to_leaves(const CubicTree& t, const std::vector<int>& kept_leaves) {
  if (kept_leaves.size() < 2) throw std::invalid_argument("restrict_to_leaves: at least two leaves required");
  std::vector<std::set<int>> adj(t.node_count);
  for (const auto& [u, v] : t.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<bool> keep(t.node_count, false);
  for (int v : kept_leaves) {
    if (v < 0 || v >= t.node_count) throw std::invalid_argument("restrict_to_leaves: node out of range");
    keep[v] = true;
  }
  std::vector<bool> alive(t.node_count, true);
  // Peel leaves that are not kept until only the Steiner subtree remains.
  std::vector<int> queue;
  for (int v = 0; v < t.node_count; ++v)
    if (alive[v] && adj[v].size() <= 1 && !keep[v]) queue.push_back(v);
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    if (!alive[v]) continue;
    alive[v] = false;
    for (int w : adj[v]) {
      adj[w].erase(v);
      if (alive[w] && adj[w].size() <= 1 && !keep[w]) queue.push_back(w);
    }
    adj[v].clear();
  }
  CubicTree pruned;
  std::vector<int> pre_map(t.node_count, -1);
  int next = 0;
  for (int v = 0; v < t.node_count; ++v)
    if (alive[v]) pre_map[v] = next++;
  pruned.node_count = next;
  for (int v = 0; v < t.node_count; ++v) {
    if (!alive[v]) continue;
    for (int w : adj[v])
      if (v < w) pruned.edges.emplace_back(pre_map[v], pre_map[w]);
  }
  SuppressResult sup = suppress_degree_two(pruned);
  SuppressResult out;
  out.tree = std::move(sup.tree);
  out.node_map.assign(t.node_count, -1);
  for (int v = 0; v < t.node_count; ++v)
    if (pre_map[v] >= 0) out.node_map[v] = sup.node_map[pre_map[v]];
  return out;
}

std::string serialize(const BranchDecomposition& d, const std::vector<std::string>& labels) {
  if (labels.size() != d.leaf_of.size()) throw std::invalid_argument("serialize: one label per element required");
  std::ostringstream out;
  out << "tree " << d.tree.node_count << '\n';
  auto edges = d.tree.edges;
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v] : edges) out << "edge " << u << ' ' << v << '\n';
  std::vector<std::pair<int, std::string>> leaf_lines;
  for (size_t e = 0; e < d.leaf_of.size(); ++e) leaf_lines.emplace_back(d.leaf_of[e], labels[e]);
  std::sort(leaf_lines.begin(), leaf_lines.end());
  for (const auto& [node, label] : leaf_lines) out << "leaf " << node << ' ' << label << '\n';
  if (d.tree.root) out << "root " << *d.tree.root << '\n';
  return out.str();
}

ParsedDecomposition deserialize_decomposition(std::istream& in) {
  std::string line;
  int line_no = 0;
  ParsedDecomposition out;
  bool have_tree = false;
  std::vector<std::pair<int, std::string>> leaf_lines;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "tree") {
      if (!(ls >> out.decomposition.tree.node_count)) throw ParseError(line_no, "expected 'tree <nodecount>'");
      have_tree = true;
    } else if (kw == "edge") {
      int u, v;
      if (!(ls >> u >> v)) throw ParseError(line_no, "expected 'edge <u> <v>'");
      out.decomposition.tree.edges.emplace_back(u, v);
    } else if (kw == "leaf") {
      int node;
      std::string label;
      if (!(ls >> node >> label)) throw ParseError(line_no, "expected 'leaf <nodeid> <label>'");
      leaf_lines.emplace_back(node, label);
    } else if (kw == "root") {
      int root;
      if (!(ls >> root)) throw ParseError(line_no, "expected 'root <nodeid>'");
      out.decomposition.tree.root = root;
    } else {
      throw ParseError(line_no, "unknown directive '" + kw + "'");
    }
  }
  if (!have_tree) throw ParseError(line_no, "missing 'tree' header");
  for (const auto& [node, label] : leaf_lines) {
    out.decomposition.leaf_of.push_back(node);
    out.labels.push_back(label);
  }
  try {
    validate(out.decomposition);
  } catch (const std::exception& ex) {
    throw ParseError(line_no, ex.what());
  }
  return out;
}

ParsedDecomposition deserialize_decomposition(const std::string& text) {
  std::istringstream in(text);
  return deserialize_decomposition(in);
}

std::string to_dot(const BranchDecomposition& d, const std::vector<std::string>& labels) {
  if (labels.size() != d.leaf_of.size()) throw std::invalid_argument("to_dot: one label per element required");
  std::vector<std::string> node_label(d.tree.node_count);
  for (size_t e = 0; e < d.leaf_of.size(); ++e) node_label[d.leaf_of[e]] = labels[e];
  std::ostringstream out;
  out << "graph decomposition {\n";
  for (int v = 0; v < d.tree.node_count; ++v) {
    if (!node_label[v].empty())
      out << "  n" << v << " [shape=box,label=\"" << node_label[v] << "\"];\n";
    else
      out << "  n" << v << " [shape=point];\n";
  }
  for (const auto& [u, v] : d.tree.edges) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string serialize(const LinearLayout& l, const std::vector<std::string>& labels) {
  if (labels.size() != l.order.size()) throw std::invalid_argument("serialize: one label per element required");
  std::ostringstream out;
  out << "layout " << l.order.size() << '\n';
  out << "order";
  for (int e : l.order) out << ' ' << labels[e];
  out << '\n';
  return out.str();
}

ParsedLayout deserialize_layout(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  ParsedLayout out;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "layout") {
      if (!(ls >> n) || n < 0) throw ParseError(line_no, "expected 'layout <n>'");
    } else if (kw == "order") {
      std::string label;
      while (ls >> label) out.labels.push_back(label);
    } else {
      throw ParseError(line_no, "unknown directive '" + kw + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing 'layout' header");
  if (static_cast<int>(out.labels.size()) != n)
    throw ParseError(line_no, "order line must list exactly " + std::to_string(n) + " labels");
  out.layout.order.resize(n);
  for (int i = 0; i < n; ++i) out.layout.order[i] = i;
  return out;
}

}  // namespace widthlab
