// Exhaustive ground truth: enumerate every labeled tree realizing a degree
// sequence via multiset permutations of the Prufer content (vertex i repeated
// d_i - 1 times), compute global extrema of any edge-function index, compare
// against the greedy / alternating greedy constructions, and probe local
// minimality under degree-preserving edge switches.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "sombor/construct.hpp"
#include "sombor/degree_sequence.hpp"
#include "sombor/indices.hpp"
#include "sombor/tree.hpp"

namespace sombor {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

namespace detail {

inline constexpr std::uint64_t kCountSaturated = UINT64_MAX;

// Number of distinct permutations of a multiset given per-symbol counts,
// saturating at kCountSaturated.
inline std::uint64_t multiset_permutation_count(const std::vector<int>& symbol_counts) {
  unsigned __int128 result = 1;
  std::uint64_t total = 0;
  for (int c : symbol_counts) {
    for (int i = 1; i <= c; ++i) {
      ++total;
      result = result * total / static_cast<unsigned>(i);
      if (result > kCountSaturated) return kCountSaturated;
    }
  }
  return static_cast<std::uint64_t>(result);
}

// Prufer content of a degree sequence: label i repeated d_i - 1 times,
// ascending, which is also the lexicographically first permutation.
inline std::vector<int> prufer_content(const DegreeSequence& d) {
  std::vector<int> content;
  const auto& degs = d.degrees();
  for (std::size_t i = 0; i < degs.size(); ++i)
    for (int k = 1; k < degs[i]; ++k) content.push_back(static_cast<int>(i));
  return content;
}

inline std::uint64_t permutation_count_of(const std::vector<int>& content) {
  std::vector<int> counts;
  for (std::size_t i = 0; i < content.size(); ++i) {
    if (i == 0 || content[i] != content[i - 1])
      counts.push_back(1);
    else
      ++counts.back();
  }
  return multiset_permutation_count(counts);
}

// The rank-th (0-based) lexicographic permutation of the multiset. Only
// valid when the total permutation count did not saturate.
inline std::vector<int> unrank_permutation(std::vector<int> content, std::uint64_t rank) {
  std::vector<int> result;
  result.reserve(content.size());
  while (!content.empty()) {
    const std::uint64_t total = permutation_count_of(content);
    const auto len = static_cast<std::uint64_t>(content.size());
    std::size_t i = 0;
    while (i < content.size()) {
      std::size_t j = i;
      while (j < content.size() && content[j] == content[i]) ++j;
      const std::uint64_t repeats = static_cast<std::uint64_t>(j - i);
      const std::uint64_t starting_here =
          static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * repeats / len);
      if (rank < starting_here) {
        result.push_back(content[i]);
        content.erase(content.begin() + static_cast<std::ptrdiff_t>(i));
        break;
      }
      rank -= starting_here;
      i = j;
    }
  }
  return result;
}

// Tiny indexed-task pool. Tasks may throw; the exception for the smallest
// task index is rethrown after all workers join.
template <class Fn>
inline void run_indexed(unsigned jobs, std::size_t task_count, Fn&& fn) {
  if (jobs <= 1 || task_count <= 1) {
    for (std::size_t i = 0; i < task_count; ++i) fn(i);
    return;
  }
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(jobs, task_count));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(task_count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= task_count) break;
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

// Exact number of labeled trees in which vertex i has degree d_i:
// (n-2)! / prod (d_i - 1)!. Saturates at UINT64_MAX.
inline std::uint64_t count_labeled_trees(const DegreeSequence& d) {
  if (d.vertex_count() == 1) return 1;
  std::vector<int> counts;
  for (int deg : d.degrees()) counts.push_back(deg - 1);
  return detail::multiset_permutation_count(counts);
}

// Visits every labeled tree whose vertex i has degree d_i, exactly once, in
// lexicographic order of the Prufer sequence. Throws CapExceeded first if
// the count is above cap.
template <class Visit>
inline void enumerate_trees(const DegreeSequence& d, std::uint64_t cap, Visit&& visit) {
  const int n = d.vertex_count();
  if (n == 1) {
    visit(Tree::single_vertex());
    return;
  }
  const std::uint64_t count = count_labeled_trees(d);
  if (count > cap) throw CapExceeded(count, cap);
  std::vector<int> content = detail::prufer_content(d);
  do {
    visit(prufer_decode(content, n));
  } while (std::next_permutation(content.begin(), content.end()));
}

template <class Visit>
inline void enumerate_trees(const DegreeSequence& d, Visit&& visit) {
  enumerate_trees(d, kDefaultEnumerationCap, std::forward<Visit>(visit));
}

// Global extrema of an index over all trees realizing a sequence, with the
// construction-side comparison baked in.
struct ExtremalReport {
  DegreeSequence sequence;
  std::string index_name;
  double min_value = 0.0;
  double max_value = 0.0;
  // One representative labeled tree per canonical form attaining the
  // extremum (within tolerance), keyed and ordered by form.
  std::vector<std::pair<CanonicalForm, Tree>> argmin_forms;
  std::vector<std::pair<CanonicalForm, Tree>> argmax_forms;
  std::uint64_t labeled_count = 0;
  std::uint64_t unlabeled_count = 0;
  double greedy_value = 0.0;
  bool greedy_attains_min = false;
  bool alt_greedy_attains_max = false;
  std::vector<std::pair<CanonicalForm, double>> alt_greedy_values;
};

namespace detail {

struct PartialExtremal {
  bool any = false;
  double min_value = 0.0;
  double max_value = 0.0;
  std::uint64_t count = 0;
  std::map<CanonicalForm, std::pair<double, Tree>> argmin, argmax;
  std::set<CanonicalForm> forms;

  void add(const Tree& t, double value, double tol) {
    ++count;
    CanonicalForm form = canonical_form(t);
    forms.insert(form);
    if (!any) {
      any = true;
      min_value = max_value = value;
    } else {
      min_value = std::min(min_value, value);
      max_value = std::max(max_value, value);
    }
    if (value <= min_value + tol) argmin.try_emplace(form, value, t);
    if (value >= max_value - tol) argmax.try_emplace(std::move(form), value, t);
  }

  // Left operand keeps representatives on collisions, so chained merges in
  // chunk order are independent of the chunking itself.
  void merge(PartialExtremal&& right) {
    if (!right.any) return;
    if (!any) {
      *this = std::move(right);
      return;
    }
    count += right.count;
    min_value = std::min(min_value, right.min_value);
    max_value = std::max(max_value, right.max_value);
    for (auto& kv : right.argmin) argmin.try_emplace(kv.first, std::move(kv.second));
    for (auto& kv : right.argmax) argmax.try_emplace(kv.first, std::move(kv.second));
    forms.merge(right.forms);
  }

  void prune(double tol) {
    std::erase_if(argmin, [&](const auto& kv) { return kv.second.first > min_value + tol; });
    std::erase_if(argmax, [&](const auto& kv) { return kv.second.first < max_value - tol; });
  }
};

}  // namespace detail

// Enumerates all realizing trees (chunked across jobs workers over the
// lexicographic permutation order; the result is independent of jobs) and
// reports the extrema together with the construction verdicts.
inline ExtremalReport extremal_report(const DegreeSequence& d, const EdgeFunction& f,
                                      std::uint64_t cap = kDefaultEnumerationCap,
                                      unsigned jobs = 1, double tol = 1e-9) {
  ExtremalReport report{.sequence = d, .index_name = f.name()};
  const int n = d.vertex_count();
  if (n == 1) {
    const Tree t = Tree::single_vertex();
    const CanonicalForm form = canonical_form(t);
    report.min_value = report.max_value = 0.0;
    report.argmin_forms.emplace_back(form, t);
    report.argmax_forms.emplace_back(form, t);
    report.labeled_count = report.unlabeled_count = 1;
    report.greedy_value = 0.0;
    report.greedy_attains_min = report.alt_greedy_attains_max = true;
    report.alt_greedy_values.emplace_back(form, 0.0);
    return report;
  }

  const InternalDegreeSequence internal = internal_degrees(d);
  const Tree greedy = greedy_tree(internal);
  const CanonicalForm greedy_form = canonical_form(greedy);
  report.greedy_value = rf_index(greedy, f);
  const auto alternates = alternating_greedy_all(internal);

  const std::uint64_t count = count_labeled_trees(d);
  if (count > cap) throw CapExceeded(count, cap);
  const std::vector<int> content = detail::prufer_content(d);
  const std::uint64_t chunks = std::max<std::uint64_t>(
      1, std::min<std::uint64_t>(jobs == 0 ? 1 : jobs, count));
  std::vector<detail::PartialExtremal> partials(chunks);
  detail::run_indexed(static_cast<unsigned>(chunks), static_cast<std::size_t>(chunks),
                      [&](std::size_t k) {
                        const std::uint64_t begin = count * k / chunks;
                        const std::uint64_t end = count * (k + 1) / chunks;
                        if (begin >= end) return;
                        std::vector<int> perm = detail::unrank_permutation(content, begin);
                        detail::PartialExtremal& part = partials[k];
                        for (std::uint64_t i = begin; i < end; ++i) {
                          const Tree t = prufer_decode(perm, n);
                          part.add(t, rf_index(t, f), tol);
                          if (!std::next_permutation(perm.begin(), perm.end())) break;
                        }
                      });
  detail::PartialExtremal total;
  for (auto& part : partials) total.merge(std::move(part));
  total.prune(tol);

  report.min_value = total.min_value;
  report.max_value = total.max_value;
  report.labeled_count = total.count;
  report.unlabeled_count = total.forms.size();
  for (auto& kv : total.argmin) report.argmin_forms.emplace_back(kv.first, std::move(kv.second.second));
  for (auto& kv : total.argmax) report.argmax_forms.emplace_back(kv.first, std::move(kv.second.second));

  const auto in_forms = [](const std::vector<std::pair<CanonicalForm, Tree>>& forms,
                           const CanonicalForm& f_) {
    for (const auto& kv : forms)
      if (kv.first == f_) return true;
    return false;
  };
  report.greedy_attains_min = in_forms(report.argmin_forms, greedy_form);
  for (const AltTree& alt : alternates) {
    CanonicalForm form = canonical_form(alt.tree);
    const bool attains = in_forms(report.argmax_forms, form);
    report.alt_greedy_attains_max = report.alt_greedy_attains_max || attains;
    report.alt_greedy_values.emplace_back(std::move(form), rf_index(alt.tree, f));
  }
  return report;
}

// All tree degree sequences on n vertices (partitions of 2(n-1) into n
// positive parts), in lexicographically decreasing order. n = 1 gives [0].
inline std::vector<DegreeSequence> tree_degree_sequences(int n) {
  if (n < 1) throw Error(errc::invalid_argument, "vertex count must be positive");
  if (n == 1) return {DegreeSequence({0})};
  std::vector<DegreeSequence> out;
  std::vector<int> parts;
  const auto recurse = [&](auto&& self, int remaining_parts, int remaining_sum,
                           int max_part) -> void {
    if (remaining_parts == 0) {
      if (remaining_sum == 0) out.push_back(DegreeSequence(parts));
      return;
    }
    const int lo = (remaining_sum + remaining_parts - 1) / remaining_parts;
    const int hi = std::min(max_part, remaining_sum - (remaining_parts - 1));
    for (int p = hi; p >= lo; --p) {
      parts.push_back(p);
      self(self, remaining_parts - 1, remaining_sum - p, p);
      parts.pop_back();
    }
  };
  recurse(recurse, n, 2 * (n - 1), n - 1);
  return out;
}

// Extremal reports for every tree degree sequence with 2 <= n <= n_max, in
// generation order; work is distributed across jobs workers per sequence
// list, so the output order never depends on jobs.
inline std::vector<ExtremalReport> sweep_verify(int n_max, const EdgeFunction& f,
                                                std::uint64_t cap = kDefaultEnumerationCap,
                                                unsigned jobs = 1) {
  if (n_max < 2) throw Error(errc::invalid_argument, "n_max must be at least 2");
  std::vector<DegreeSequence> sequences;
  for (int n = 2; n <= n_max; ++n) {
    auto batch = tree_degree_sequences(n);
    sequences.insert(sequences.end(), batch.begin(), batch.end());
  }
  std::vector<std::optional<ExtremalReport>> slots(sequences.size());
  detail::run_indexed(jobs, sequences.size(), [&](std::size_t i) {
    slots[i] = extremal_report(sequences[i], f, cap, 1);
  });
  std::vector<ExtremalReport> reports;
  reports.reserve(slots.size());
  for (auto& slot : slots) reports.push_back(std::move(*slot));
  return reports;
}

// ---------------------------------------------------------------------------
// Degree-preserving edge switches.

enum class SwitchPattern { ac_bd, ad_bc };

namespace detail {

// Applies the switch without throwing; nullopt when the result is not a
// simple connected tree. Edges must be present and vertex-disjoint.
inline std::optional<Tree> try_edge_switch(const Tree& t, Edge e1, Edge e2,
                                           SwitchPattern pattern) {
  if (e1.u > e1.v) std::swap(e1.u, e1.v);
  if (e2.u > e2.v) std::swap(e2.u, e2.v);
  const Edge added1 = pattern == SwitchPattern::ac_bd ? Edge{e1.u, e2.u} : Edge{e1.u, e2.v};
  const Edge added2 = pattern == SwitchPattern::ac_bd ? Edge{e1.v, e2.v} : Edge{e1.v, e2.u};
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  for (Edge e : t.edges()) {
    if (e == e1 || e == e2) continue;
    edges.push_back(e);
  }
  for (Edge e : {added1, added2}) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) return std::nullopt;
    edges.push_back(e);
  }
  UnionFind uf(t.vertex_count());
  int merges = 0;
  for (const Edge& e : edges) merges += uf.unite(e.u, e.v) ? 1 : 0;
  if (merges != t.vertex_count() - 1) return std::nullopt;
  return Tree(t.vertex_count(), std::move(edges));
}

}  // namespace detail

// Replace edges {a,b},{c,d} by {a,c},{b,d} (ac_bd) or {a,d},{b,c} (ad_bc),
// endpoints taken with a < b and c < d. Degrees are always preserved; the
// result must still be a tree.
inline Tree edge_switch(const Tree& t, Edge e1, Edge e2, SwitchPattern pattern) {
  if (e1.u > e1.v) std::swap(e1.u, e1.v);
  if (e2.u > e2.v) std::swap(e2.u, e2.v);
  const auto& edges = t.edges();
  if (!std::binary_search(edges.begin(), edges.end(), e1) ||
      !std::binary_search(edges.begin(), edges.end(), e2))
    throw Error(errc::invalid_argument, "switch edge not present in the tree");
  if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v)
    throw Error(errc::edges_share_vertex, "switch edges share a vertex");
  auto switched = detail::try_edge_switch(t, e1, e2, pattern);
  if (!switched)
    throw Error(errc::not_a_tree_after_switch, "switch disconnects or duplicates an edge");
  return *std::move(switched);
}

struct ImprovingSwitch {
  Edge e1, e2;
  SwitchPattern pattern = SwitchPattern::ac_bd;
  double value = 0.0;
};

struct LocalMinReport {
  bool is_local_min = true;
  std::optional<ImprovingSwitch> improvement;
};

// True iff no single valid switch lowers the index by more than tol. Scans
// edge pairs in sorted order and reports the first improving switch found.
inline LocalMinReport local_min_check(const Tree& t, const EdgeFunction& f, double tol = 1e-9) {
  const double base = rf_index(t, f);
  const auto& edges = t.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge e1 = edges[i], e2 = edges[j];
      if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) continue;
      for (SwitchPattern pattern : {SwitchPattern::ac_bd, SwitchPattern::ad_bc}) {
        const auto switched = detail::try_edge_switch(t, e1, e2, pattern);
        if (!switched) continue;
        const double value = rf_index(*switched, f);
        if (value < base - tol)
          return {false, ImprovingSwitch{e1, e2, pattern, value}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace sombor
