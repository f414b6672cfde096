// Greedy and alternating greedy tree constructions for an internal degree
// sequence d_1 >= ... >= d_m (all >= 2).
//
// Greedy: assign internal degrees level by level in BFS order, each vertex
// taking the largest degrees still available for its children, then pad with
// leaves until every vertex reaches its assigned degree.
//
// Alternating greedy (recursive):
//   base case m-1 <= d_m: root with d_m children, of which d_m-m+1 are
//     leaves and the rest carry degrees d_1..d_{m-1};
//   otherwise: build a subtree T whose root r has children of degrees
//     d_1..d_{d_m-1}, recurse on (d_{d_m},..,d_{m-1}), and identify r with a
//     leaf v of the recursive tree whose neighbor degree is minimal. The
//     merged vertex ends with degree d_m (r contributes d_m-1 edges, v one).
// The leaf v may be chosen in non-isomorphic ways; alternating_greedy_all
// explores every minimal-neighbor choice and deduplicates by canonical form.
#pragma once

#include <climits>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sombor/degree_sequence.hpp"
#include "sombor/error.hpp"
#include "sombor/tree.hpp"

namespace sombor {

inline constexpr std::size_t kDefaultAltVariantCap = 10000;

enum class AltRule { a1, a2 };

// One identification of a subtree root with a leaf of the recursively built
// tree: the tree as it stood, the chosen leaf, and its neighbor's degree.
struct AltJoin {
  Tree base;
  int leaf = 0;
  int neighbor_degree = 0;
};

struct AltStep {
  AltRule rule = AltRule::a1;
  Tree subtree;                 // T for a2 steps; the finished base tree for a1
  int root = 0;                 // label of r within subtree
  std::vector<int> remaining;   // internal subsequence handed to the recursion (a2 only)
  std::optional<AltJoin> join;  // a2 only
};

// Steps in recursion order: the outermost split first, the a1 base last.
struct ConstructionTrace {
  std::vector<AltStep> steps;
};

struct AltTree {
  Tree tree;
  ConstructionTrace trace;
};

namespace detail {

// Root 0 with one child per entry of child_degrees plus extra_leaves pendant
// leaves on the root; each child is padded with leaves to reach its degree.
inline Tree star_of_degrees(const std::vector<int>& child_degrees, int extra_leaves) {
  const int k = static_cast<int>(child_degrees.size());
  int n = 1 + k + extra_leaves;
  for (int d : child_degrees) n += d - 1;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 0; i < k; ++i) edges.push_back({0, i + 1});
  int next = k + 1;
  for (int i = 0; i < extra_leaves; ++i) edges.push_back({0, next++});
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < child_degrees[i] - 1; ++j) edges.push_back({i + 1, next++});
  return Tree(n, std::move(edges));
}

// All degree-1 vertices whose neighbor degree attains the minimum.
inline std::vector<int> min_neighbor_degree_leaves(const Tree& t, int& neighbor_degree) {
  const auto adj = t.adjacency();
  int best = INT_MAX;
  std::vector<int> leaves;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.degree(v) != 1) continue;
    const int nd = t.degree(adj[v][0]);
    if (nd < best) {
      best = nd;
      leaves.assign(1, v);
    } else if (nd == best) {
      leaves.push_back(v);
    }
  }
  neighbor_degree = best;
  return leaves;
}

// Glue sub (rooted at its vertex 0) onto base by identifying the root with
// the given leaf of base. Base labels are preserved; sub's other vertices are
// appended after them.
inline Tree identify_root_with_leaf(const Tree& base, int leaf, const Tree& sub) {
  const int nb = base.vertex_count();
  std::vector<Edge> edges = base.edges();
  edges.reserve(edges.size() + sub.edges().size());
  for (const Edge& e : sub.edges()) {
    const int u = e.u == 0 ? leaf : nb + e.u - 1;
    const int v = e.v == 0 ? leaf : nb + e.v - 1;
    edges.push_back({u, v});
  }
  return Tree(nb + sub.vertex_count() - 1, std::move(edges));
}

inline Tree single_edge() { return Tree(2, {{0, 1}}); }

inline std::vector<AltTree> alt_all(const std::vector<int>& d, std::size_t cap) {
  if (d.empty()) return {AltTree{single_edge(), {}}};
  const int m = static_cast<int>(d.size());
  const int dm = d.back();
  if (m - 1 <= dm) {
    std::vector<int> child_degrees(d.begin(), d.end() - 1);
    Tree t = star_of_degrees(child_degrees, dm - m + 1);
    ConstructionTrace trace;
    trace.steps.push_back(AltStep{AltRule::a1, t, 0, {}, std::nullopt});
    return {AltTree{std::move(t), std::move(trace)}};
  }
  std::vector<int> t_degrees(d.begin(), d.begin() + (dm - 1));
  const Tree t_subtree = star_of_degrees(t_degrees, 0);
  std::vector<int> remaining(d.begin() + (dm - 1), d.end() - 1);
  const auto subs = alt_all(remaining, cap);
  std::vector<AltTree> out;
  std::set<CanonicalForm> seen;
  for (const AltTree& sub : subs) {
    int neighbor_degree = 0;
    const auto eligible = min_neighbor_degree_leaves(sub.tree, neighbor_degree);
    for (int leaf : eligible) {
      Tree merged = identify_root_with_leaf(sub.tree, leaf, t_subtree);
      CanonicalForm form = canonical_form(merged);
      if (!seen.insert(std::move(form)).second) continue;
      if (out.size() >= cap)
        throw Error(errc::cap_exceeded, "more than " + std::to_string(cap) +
                                            " distinct alternating greedy trees");
      ConstructionTrace trace;
      trace.steps.push_back(
          AltStep{AltRule::a2, t_subtree, 0, remaining, AltJoin{sub.tree, leaf, neighbor_degree}});
      trace.steps.insert(trace.steps.end(), sub.trace.steps.begin(), sub.trace.steps.end());
      out.push_back(AltTree{std::move(merged), std::move(trace)});
    }
  }
  return out;
}

inline AltTree alt_one(const std::vector<int>& d) {
  if (d.empty()) return AltTree{single_edge(), {}};
  const int m = static_cast<int>(d.size());
  const int dm = d.back();
  if (m - 1 <= dm) {
    std::vector<int> child_degrees(d.begin(), d.end() - 1);
    Tree t = star_of_degrees(child_degrees, dm - m + 1);
    ConstructionTrace trace;
    trace.steps.push_back(AltStep{AltRule::a1, t, 0, {}, std::nullopt});
    return AltTree{std::move(t), std::move(trace)};
  }
  std::vector<int> t_degrees(d.begin(), d.begin() + (dm - 1));
  Tree t_subtree = star_of_degrees(t_degrees, 0);
  std::vector<int> remaining(d.begin() + (dm - 1), d.end() - 1);
  AltTree sub = alt_one(remaining);
  int neighbor_degree = 0;
  const auto eligible = min_neighbor_degree_leaves(sub.tree, neighbor_degree);
  // Tie rule: the eligible leaf with the smallest canonical label of the
  // current tree, so the pick does not depend on construction label order.
  const auto canon = canonical_labels(sub.tree);
  int leaf = eligible.front();
  for (int v : eligible)
    if (canon[v] < canon[leaf]) leaf = v;
  Tree merged = identify_root_with_leaf(sub.tree, leaf, t_subtree);
  ConstructionTrace trace;
  trace.steps.push_back(
      AltStep{AltRule::a2, std::move(t_subtree), 0, std::move(remaining),
              AltJoin{std::move(sub.tree), leaf, neighbor_degree}});
  trace.steps.insert(trace.steps.end(), sub.trace.steps.begin(), sub.trace.steps.end());
  return AltTree{std::move(merged), std::move(trace)};
}

}  // namespace detail

// The unique greedy tree of an internal degree sequence. The empty sequence
// yields the single edge.
inline Tree greedy_tree(const InternalDegreeSequence& internal) {
  const auto& d = internal.degrees();
  const int m = internal.size();
  if (m == 0) return detail::single_edge();
  std::vector<Edge> edges;
  int next = 1;
  for (int v = 0; v < m && next < m; ++v) {
    const int slots = d[v] - (v == 0 ? 0 : 1);
    for (int s = 0; s < slots && next < m; ++s) {
      edges.push_back({v, next});
      ++next;
    }
  }
  std::vector<int> have(static_cast<std::size_t>(m), 0);
  for (const Edge& e : edges) {
    ++have[e.u];
    ++have[e.v];
  }
  int n = m;
  for (int v = 0; v < m; ++v)
    for (int k = have[v]; k < d[v]; ++k) edges.push_back({v, n++});
  return Tree(n, std::move(edges));
}

// Every alternating greedy tree reachable by varying the leaf choice at each
// identification step, deduplicated by canonical form. Throws cap_exceeded
// if more than cap distinct trees arise.
inline std::vector<AltTree> alternating_greedy_all(const InternalDegreeSequence& internal,
                                                   std::size_t cap = kDefaultAltVariantCap) {
  return detail::alt_all(internal.degrees(), cap);
}

// One deterministic member of alternating_greedy_all.
inline AltTree alternating_greedy_one(const InternalDegreeSequence& internal) {
  return detail::alt_one(internal.degrees());
}

}  // namespace sombor
