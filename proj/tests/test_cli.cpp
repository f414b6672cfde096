#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "sombor/construct.hpp"
#include "sombor/tree.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(SOMBOR_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.output.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("greedy command emits the tree and value") {
  const auto r = run("greedy --internal \"3 2 2\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "degrees: 3 2 2 1 1 1"));
  CHECK(contains(r.output, "sombor: 14.845516"));
  CHECK(contains(r.output, "edges:"));
}

TEST_CASE("sequence tokens may be passed unquoted") {
  const auto quoted = run("greedy --internal \"3 2 2\"");
  const auto bare = run("greedy --internal 3 2 2");
  CHECK(bare.exit_code == 0);
  CHECK(bare.output == quoted.output);
}

TEST_CASE("greedy edges output parses back into the same tree") {
  const auto r = run("greedy --internal \"5 4 3 3 3 2 2 2\" --format edges");
  CHECK(r.exit_code == 0);
  const sombor::Tree expected =
      sombor::greedy_tree(sombor::InternalDegreeSequence::parse("5 4 3 3 3 2 2 2"));
  CHECK(sombor::tree_from_edge_list(r.output) == expected);
}

TEST_CASE("dot output carries the summary comment") {
  const auto r = run("greedy --internal \"5 4 3 3 3 2 2 2\" --format dot");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "// greedy sombor"));
  CHECK(contains(r.output, "graph tree {"));
}

TEST_CASE("altgreedy --all lists deduplicated variants") {
  const auto r = run("altgreedy --internal \"5 4 3 3 3 2 2 2\" --all");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "variants: "));
}

TEST_CASE("identical invocations produce identical bytes") {
  const auto a = run("altgreedy --internal \"5 4 3 3 3 2 2 2\" --all --format structured");
  const auto b = run("altgreedy --internal \"5 4 3 3 3 2 2 2\" --all --format structured");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("verify exits 0 on a verified sequence") {
  const auto r = run("verify --internal \"3 2 2\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "greedy attains min: yes"));
  CHECK(contains(r.output, "alternating greedy attains max: yes"));
  CHECK(contains(r.output, "verdict: VERIFIED"));
}

TEST_CASE("verify exits 1 when the construction misses the extremum") {
  // under the plain product weight the greedy tree maximizes, so it misses
  // the minimum and the check reports a counterexample
  const auto r = run("verify --internal \"3 2 2\" --index product");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "verdict: COUNTEREXAMPLE"));
}

TEST_CASE("verify structured output is a JSON record") {
  const auto r = run("verify --internal \"3 2 2\" --format structured");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"labeled_count\":12"));
  CHECK(contains(r.output, "\"unlabeled_count\":2"));
  CHECK(contains(r.output, "\"verified\":true"));
}

TEST_CASE("sweep summarizes and exits by verdict") {
  const auto r = run("sweep 6 --jobs 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "sequences: 12 failures: 0"));
  const auto jobs1 = run("sweep 6 --jobs 1");
  CHECK(jobs1.output == r.output);
}

TEST_CASE("condition command") {
  const auto ok = run("condition --f minus_sombor --grid 50");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.output, "holds: yes"));
  CHECK(contains(ok.output, "strict: yes"));

  const auto weak = run("condition --f sum --grid 10");
  CHECK(weak.exit_code == 1);
  CHECK(contains(weak.output, "holds: yes"));
  CHECK(contains(weak.output, "strict: no"));
  CHECK(contains(weak.output, "witness: x=2 y=1 a=2 b=1"));
}

TEST_CASE("index and switch-scan read edge-list files") {
  const std::string file = "cli_test_tree.edges";
  {
    std::ofstream out(file);
    out << sombor::to_edge_list(
               sombor::greedy_tree(sombor::InternalDegreeSequence::parse("3 2 2")))
        << "\n";
  }
  const auto idx = run("index " + file);
  CHECK(idx.exit_code == 0);
  CHECK(contains(idx.output, "value: 14.845516"));

  const auto scan = run("switch-scan " + file);
  CHECK(scan.exit_code == 0);
  CHECK(contains(scan.output, "local minimum: yes"));
  std::remove(file.c_str());
}

TEST_CASE("usage and validation errors exit 2") {
  CHECK(run("greedy").exit_code == 2);          // missing sequence
  CHECK(run("nonsense").exit_code == 2);        // unknown command
  CHECK(run("greedy \"3 3 1 1\"").exit_code == 2);  // not realizable
  CHECK(run("verify \"3 2 2\"").exit_code == 2);    // full sequence that is invalid
  CHECK(run("index does_not_exist.edges").exit_code == 2);
  CHECK(run("greedy --internal \"3 2 2\" --index nope").exit_code == 2);
}

TEST_CASE("cap exceeded exits 3") {
  const auto r = run("verify --internal \"3 2 2\" --cap 5");
  CHECK(r.exit_code == 3);
}

TEST_CASE("help exits 0") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("greedy --help").exit_code == 0);
}
