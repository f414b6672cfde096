#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "sombor/construct.hpp"
#include "sombor/indices.hpp"
#include "sombor/oracle.hpp"

using namespace sombor;

namespace {

// Multiset of endpoint-degree pairs (small, large) over all edges.
std::multiset<std::pair<int, int>> edge_degree_pairs(const Tree& t) {
  std::multiset<std::pair<int, int>> pairs;
  for (const Edge& e : t.edges()) {
    const int a = t.degree(e.u), b = t.degree(e.v);
    pairs.insert({std::min(a, b), std::max(a, b)});
  }
  return pairs;
}

Tree star(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  return Tree(n, std::move(edges));
}

// Two adjacent centers of degree 3, each with two pendant leaves.
Tree double_star_33() { return Tree(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

}  // namespace

TEST_CASE("greedy tree of the empty internal sequence is the single edge") {
  const Tree t = greedy_tree(InternalDegreeSequence());
  CHECK(t.degree_sequence().str() == "1 1");
}

TEST_CASE("greedy tree of (2) is the path on 3 vertices") {
  const Tree t = greedy_tree(InternalDegreeSequence::parse("2"));
  CHECK(canonical_form(t) == canonical_form(Tree(3, {{0, 1}, {1, 2}})));
}

TEST_CASE("greedy tree of (3,2,2): edge degree pairs") {
  const Tree t = greedy_tree(InternalDegreeSequence::parse("3 2 2"));
  const std::multiset<std::pair<int, int>> want{{2, 3}, {2, 3}, {1, 3}, {1, 2}, {1, 2}};
  CHECK(edge_degree_pairs(t) == want);
}

TEST_CASE("greedy tree realizes the completed sequence") {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& d : tree_degree_sequences(n)) {
      const Tree t = greedy_tree(internal_degrees(d));
      CHECK(t.degree_sequence() == d);
    }
  }
}

TEST_CASE("greedy tree ignores input order") {
  const Tree a = greedy_tree(InternalDegreeSequence::parse("5 4 3 3 3 2 2 2"));
  const Tree b = greedy_tree(InternalDegreeSequence::parse("2 3 2 5 3 2 4 3"));
  CHECK(a == b);
}

TEST_CASE("greedy tree of the 18-vertex example: root adjacency") {
  const Tree t = greedy_tree(InternalDegreeSequence::parse("5 4 3 3 3 2 2 2"));
  int root = -1;
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.degree(v) == 5) root = v;
  REQUIRE(root >= 0);
  const auto adj = t.adjacency();
  std::multiset<int> neighbor_degrees;
  for (int u : adj[root]) neighbor_degrees.insert(t.degree(u));
  for (int want : {4, 3, 3, 3}) {
    auto it = neighbor_degrees.find(want);
    REQUIRE(it != neighbor_degrees.end());
    neighbor_degrees.erase(it);
  }
}

TEST_CASE("alternating greedy of (3,3) is the unique double star") {
  const auto all = alternating_greedy_all(InternalDegreeSequence::parse("3 3"));
  REQUIRE(all.size() == 1);
  CHECK(canonical_form(all[0].tree) == canonical_form(double_star_33()));
  REQUIRE(all[0].trace.steps.size() == 1);
  CHECK(all[0].trace.steps[0].rule == AltRule::a1);
}

TEST_CASE("alternating greedy of (3,2,2) is unique: a1 with zero leaf children") {
  const auto all = alternating_greedy_all(InternalDegreeSequence::parse("3 2 2"));
  REQUIRE(all.size() == 1);
  const Tree& t = all[0].tree;
  // root of degree 2 adjacent to degrees 3 and 2
  const std::multiset<std::pair<int, int>> want{{2, 3}, {2, 2}, {1, 3}, {1, 3}, {1, 2}};
  CHECK(edge_degree_pairs(t) == want);
  CHECK(all[0].trace.steps.size() == 1);
  CHECK(all[0].trace.steps[0].rule == AltRule::a1);
}

TEST_CASE("alternating greedy decomposition of (5,4,3,3,3,2,2,2)") {
  const AltTree result = alternating_greedy_one(InternalDegreeSequence::parse("5 4 3 3 3 2 2 2"));
  const auto& steps = result.trace.steps;
  REQUIRE(steps.size() == 4);

  CHECK(steps[0].rule == AltRule::a2);
  CHECK(canonical_form(steps[0].subtree) == canonical_form(star(6)));  // root + degree-5 child
  CHECK(steps[0].remaining == std::vector<int>{4, 3, 3, 3, 2, 2});

  CHECK(steps[1].rule == AltRule::a2);
  CHECK(canonical_form(steps[1].subtree) == canonical_form(star(5)));  // root + degree-4 child
  CHECK(steps[1].remaining == std::vector<int>{3, 3, 3, 2});

  CHECK(steps[2].rule == AltRule::a2);
  CHECK(canonical_form(steps[2].subtree) == canonical_form(star(4)));  // root + degree-3 child
  CHECK(steps[2].remaining == std::vector<int>{3, 3});

  CHECK(steps[3].rule == AltRule::a1);
  CHECK(canonical_form(steps[3].subtree) == canonical_form(double_star_33()));
}

TEST_CASE("alternating greedy of (5,4,3,3,3,2,2,2) has several variants") {
  const auto all = alternating_greedy_all(InternalDegreeSequence::parse("5 4 3 3 3 2 2 2"));
  CHECK(all.size() >= 3);
  std::set<CanonicalForm> forms;
  for (const auto& alt : all) forms.insert(canonical_form(alt.tree));
  CHECK(forms.size() == all.size());  // deduplicated
}

TEST_CASE("every alternating greedy tree realizes the completed sequence") {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& d : tree_degree_sequences(n)) {
      for (const auto& alt : alternating_greedy_all(internal_degrees(d))) {
        CHECK(alt.tree.degree_sequence() == d);
      }
    }
  }
}

TEST_CASE("alternating_greedy_one is a member of alternating_greedy_all") {
  for (const char* text : {"3 3", "3 2 2", "5 4 3 3 3 2 2 2", "4 4 4 2 2 2", "2 2 2 2 2"}) {
    const auto internal = InternalDegreeSequence::parse(text);
    const CanonicalForm one = canonical_form(alternating_greedy_one(internal).tree);
    std::set<CanonicalForm> forms;
    for (const auto& alt : alternating_greedy_all(internal))
      forms.insert(canonical_form(alt.tree));
    CHECK(forms.count(one) == 1);
  }
}

TEST_CASE("trace invariants: minimal neighbor degree and shrinking subsequences") {
  for (int n = 2; n <= 9; ++n) {
    for (const auto& d : tree_degree_sequences(n)) {
      for (const auto& alt : alternating_greedy_all(internal_degrees(d))) {
        std::size_t prev_len = SIZE_MAX;
        for (const auto& step : alt.trace.steps) {
          if (step.rule == AltRule::a2) {
            REQUIRE(step.join.has_value());
            const auto& join = *step.join;
            int min_degree = 0;
            const auto leaves = detail::min_neighbor_degree_leaves(join.base, min_degree);
            CHECK(join.neighbor_degree == min_degree);
            CHECK(std::find(leaves.begin(), leaves.end(), join.leaf) != leaves.end());
            CHECK(step.remaining.size() < prev_len);
            prev_len = step.remaining.size();
          } else {
            CHECK(step.remaining.empty());
            CHECK_FALSE(step.join.has_value());
          }
        }
      }
    }
  }
}

TEST_CASE("variant cap throws an explicit error") {
  CHECK_THROWS_AS(alternating_greedy_all(InternalDegreeSequence::parse("5 4 3 3 3 2 2 2"), 2),
                  Error);
  try {
    alternating_greedy_all(InternalDegreeSequence::parse("5 4 3 3 3 2 2 2"), 2);
  } catch (const Error& e) {
    CHECK(e.code() == errc::cap_exceeded);
  }
}

TEST_CASE("construction extrema match exhaustive enumeration up to n=8") {
  const auto& so = EdgeFunction::sombor();
  for (int n = 2; n <= 8; ++n) {
    for (const auto& d : tree_degree_sequences(n)) {
      double lo = 0, hi = 0;
      bool first = true;
      enumerate_trees(d, [&](const Tree& t) {
        const double v = rf_index(t, so);
        lo = first ? v : std::min(lo, v);
        hi = first ? v : std::max(hi, v);
        first = false;
      });
      CHECK(rf_index(greedy_tree(internal_degrees(d)), so) == doctest::Approx(lo).epsilon(1e-12));
      double best_alt = -1e300;
      for (const auto& alt : alternating_greedy_all(internal_degrees(d)))
        best_alt = std::max(best_alt, rf_index(alt.tree, so));
      CHECK(best_alt == doctest::Approx(hi).epsilon(1e-12));
    }
  }
}
