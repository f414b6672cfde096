// Labeled trees: representation, Prufer codec, canonical forms for
// unlabeled-tree deduplication, and text renderings.
#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sombor/degree_sequence.hpp"
#include "sombor/error.hpp"

namespace sombor {

// Unordered vertex pair; Tree normalizes to u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

namespace detail {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace detail

// Undirected labeled tree over dense labels 0..n-1. Immutable after
// construction; edges stored with u < v and sorted.
class Tree {
 public:
  Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw Error(errc::empty_input, "a tree needs at least one vertex");
    if (static_cast<int>(edges_.size()) != n_ - 1)
      throw Error(errc::not_a_tree, "expected " + std::to_string(n_ - 1) + " edges, got " +
                                        std::to_string(edges_.size()));
    degrees_.assign(static_cast<std::size_t>(n_), 0);
    for (Edge& e : edges_) {
      if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
        throw Error(errc::label_out_of_range, "edge endpoint outside 0.." + std::to_string(n_ - 1));
      if (e.u == e.v) throw Error(errc::not_a_tree, "self-loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
      ++degrees_[e.u];
      ++degrees_[e.v];
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw Error(errc::not_a_tree, "duplicate edge");
    detail::UnionFind uf(n_);
    int merges = 0;
    for (const Edge& e : edges_) merges += uf.unite(e.u, e.v) ? 1 : 0;
    if (merges != n_ - 1) throw Error(errc::not_a_tree, "edge set is not connected");
  }

  static Tree single_vertex() { return Tree(1, {}); }

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int degree(int v) const { return degrees_[v]; }
  const std::vector<int>& vertex_degrees() const { return degrees_; }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    for (const Edge& e : edges_) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    return adj;
  }

  // Non-increasing multiset of vertex degrees.
  DegreeSequence degree_sequence() const { return DegreeSequence(degrees_); }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
};

// ---------------------------------------------------------------------------
// Prufer codec. Vertex i appears deg(i) - 1 times in the code of its tree.

using PruferSequence = std::vector<int>;

inline Tree prufer_decode(const PruferSequence& code, int n) {
  if (n < 2) throw Error(errc::invalid_argument, "prufer decode needs n >= 2");
  if (static_cast<int>(code.size()) != n - 2)
    throw Error(errc::invalid_argument, "prufer code length must be n-2");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int label : code) {
    if (label < 0 || label >= n)
      throw Error(errc::label_out_of_range, "prufer label " + std::to_string(label));
    ++degree[label];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int label : code) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, label});
    if (--degree[label] == 1) leaves.push(label);
  }
  const int a = leaves.top();
  leaves.pop();
  const int b = leaves.top();
  edges.push_back({a, b});
  return Tree(n, std::move(edges));
}

inline PruferSequence prufer_encode(const Tree& t) {
  const int n = t.vertex_count();
  if (n < 2) throw Error(errc::invalid_argument, "prufer encode needs n >= 2");
  if (n == 2) return {};
  auto adj = t.adjacency();
  std::vector<int> degree = t.vertex_degrees();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  PruferSequence code;
  code.reserve(static_cast<std::size_t>(n) - 2);
  int alive = n;
  while (alive > 2) {
    const int v = leaves.top();
    leaves.pop();
    int neighbor = -1;
    for (int u : adj[v]) {
      if (!removed[u]) {
        neighbor = u;
        break;
      }
    }
    code.push_back(neighbor);
    removed[v] = 1;
    --alive;
    if (--degree[neighbor] == 1) leaves.push(neighbor);
  }
  return code;
}

// ---------------------------------------------------------------------------
// Canonical form: AHU encoding rooted at the centroid, smaller code of the
// two when the tree is bicentroidal. Equal codes iff isomorphic.

class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string code) : code_(std::move(code)) {}

  const std::string& str() const { return code_; }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  std::string code_;
};

namespace detail {

// BFS parents and visit order from root.
inline void bfs_order(const std::vector<std::vector<int>>& adj, int root,
                      std::vector<int>& parent, std::vector<int>& order) {
  const int n = static_cast<int>(adj.size());
  parent.assign(static_cast<std::size_t>(n), -1);
  order.clear();
  order.reserve(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[root] = 1;
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    for (int u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        parent[u] = v;
        order.push_back(u);
      }
    }
  }
}

// Parenthesized subtree code of every vertex when rooted at root.
inline std::vector<std::string> rooted_ahu_codes(const std::vector<std::vector<int>>& adj,
                                                 int root) {
  std::vector<int> parent, order;
  bfs_order(adj, root, parent, order);
  std::vector<std::string> code(adj.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    std::vector<std::string> kids;
    for (int u : adj[v])
      if (u != parent[v]) kids.push_back(code[u]);
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const std::string& k : kids) s += k;
    s += ")";
    code[v] = std::move(s);
  }
  return code;
}

// One or two vertices minimizing the largest component left by their removal.
inline std::vector<int> centroids(const Tree& t) {
  const int n = t.vertex_count();
  if (n == 1) return {0};
  const auto adj = t.adjacency();
  std::vector<int> parent, order;
  bfs_order(adj, 0, parent, order);
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];
  int best = n;
  std::vector<int> result;
  for (int v = 0; v < n; ++v) {
    int heaviest = n - size[v];
    for (int u : adj[v])
      if (parent[u] == v) heaviest = std::max(heaviest, size[u]);
    if (heaviest < best) {
      best = heaviest;
      result.assign(1, v);
    } else if (heaviest == best) {
      result.push_back(v);
    }
  }
  return result;
}

}  // namespace detail

inline CanonicalForm canonical_form(const Tree& t) {
  if (t.vertex_count() == 1) return CanonicalForm("()");
  const auto adj = t.adjacency();
  std::string best;
  for (int c : detail::centroids(t)) {
    auto codes = detail::rooted_ahu_codes(adj, c);
    if (best.empty() || codes[c] < best) best = std::move(codes[c]);
  }
  return CanonicalForm(std::move(best));
}

// Label-invariant relabeling: maps each vertex to its preorder index in the
// canonicalized rooted tree (children visited in code order). Ties between
// isomorphic siblings fall back to original labels, so the map is
// deterministic for a fixed input labeling.
inline std::vector<int> canonical_labels(const Tree& t) {
  const int n = t.vertex_count();
  if (n == 1) return {0};
  const auto adj = t.adjacency();
  const auto cents = detail::centroids(t);
  int root = cents[0];
  std::vector<std::string> codes = detail::rooted_ahu_codes(adj, root);
  if (cents.size() == 2) {
    auto other_codes = detail::rooted_ahu_codes(adj, cents[1]);
    if (other_codes[cents[1]] < codes[root]) {
      root = cents[1];
      codes = std::move(other_codes);
    }
  }
  std::vector<int> parent, order;
  detail::bfs_order(adj, root, parent, order);
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    label[v] = next++;
    std::vector<int> kids;
    for (int u : adj[v])
      if (u != parent[v]) kids.push_back(u);
    std::sort(kids.begin(), kids.end(), [&](int x, int y) {
      if (codes[x] != codes[y]) return codes[x] < codes[y];
      return x < y;
    });
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return label;
}

// ---------------------------------------------------------------------------
// Text renderings.

// One edge per line "u v" with u < v, sorted; the lone vertex renders as
// "n=1". Parsers accept an optional leading "n=<count>" line, blank lines,
// and '#' comments.
inline std::string to_edge_list(const Tree& t) {
  if (t.vertex_count() == 1) return "n=1";
  std::string out;
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    if (i > 0) out += '\n';
    out += std::to_string(t.edges()[i].u);
    out += ' ';
    out += std::to_string(t.edges()[i].v);
  }
  return out;
}

inline std::string to_dot(const Tree& t) {
  std::string out = "graph tree {\n";
  for (int v = 0; v < t.vertex_count(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + " (d=" +
           std::to_string(t.degree(v)) + ")\"];\n";
  }
  for (const Edge& e : t.edges())
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  out += "}";
  return out;
}

inline Tree tree_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Edge> edges;
  int declared_n = -1;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::string body = line.substr(start);
    if (first_content_line && body.rfind("n=", 0) == 0) {
      try {
        declared_n = std::stoi(body.substr(2));
      } catch (const std::exception&) {
        throw Error(errc::bad_format, "bad vertex count line: '" + body + "'");
      }
      first_content_line = false;
      continue;
    }
    first_content_line = false;
    std::istringstream ls(body);
    long long u = 0, v = 0;
    if (!(ls >> u >> v)) throw Error(errc::bad_format, "bad edge line: '" + body + "'");
    std::string rest;
    if (ls >> rest) throw Error(errc::bad_format, "trailing tokens on edge line: '" + body + "'");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  int n = declared_n;
  if (n < 0) {
    if (edges.empty()) throw Error(errc::empty_input, "no edges and no n= line");
    int max_label = 0;
    for (const Edge& e : edges) max_label = std::max({max_label, e.u, e.v});
    n = max_label + 1;
  } else if (!edges.empty()) {
    int max_label = 0;
    for (const Edge& e : edges) max_label = std::max({max_label, e.u, e.v});
    if (max_label + 1 != n)
      throw Error(errc::label_out_of_range,
                  "declared n=" + std::to_string(n) + " but labels imply " +
                      std::to_string(max_label + 1));
  }
  return Tree(n, std::move(edges));
}

}  // namespace sombor
