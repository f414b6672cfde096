// Command-line surface: construction, index evaluation, exchange-condition
// checking, and exhaustive verification.
//
// Exit codes: 0 success/verified, 1 verification counterexample found,
// 2 usage or validation error, 3 enumeration cap exceeded.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sombor/construct.hpp"
#include "sombor/degree_sequence.hpp"
#include "sombor/indices.hpp"
#include "sombor/oracle.hpp"
#include "sombor/tree.hpp"

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, edges, dot, structured };

const std::map<std::string, Format> kFormatNames{{"text", Format::text},
                                                 {"edges", Format::edges},
                                                 {"dot", Format::dot},
                                                 {"structured", Format::structured}};

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

const sombor::EdgeFunction& lookup_index(const std::string& name) {
  const sombor::EdgeFunction* f = sombor::EdgeFunction::find(name);
  if (!f) {
    std::string names;
    for (const auto& n : sombor::EdgeFunction::catalog_names()) names += " " + n;
    throw sombor::Error(sombor::errc::invalid_argument,
                        "unknown index '" + name + "'; available:" + names);
  }
  return *f;
}

// Sequence input shared by the construction and verification commands. The
// tokens of the positional argument are joined, so both `greedy "3 2 2"` and
// `greedy 3 2 2` work.
struct SequenceInput {
  std::vector<std::string> tokens;
  bool internal = false;

  std::string joined() const {
    std::string s;
    for (const auto& t : tokens) {
      if (!s.empty()) s += ' ';
      s += t;
    }
    return s;
  }

  sombor::InternalDegreeSequence to_internal() const {
    if (internal) return sombor::InternalDegreeSequence::parse(joined());
    return sombor::internal_degrees(sombor::DegreeSequence::parse(joined()));
  }

  sombor::DegreeSequence to_full() const {
    if (internal) return sombor::complete_internal(to_internal());
    return sombor::DegreeSequence::parse(joined());
  }
};

json tree_json(const sombor::Tree& t) {
  json edges = json::array();
  for (const auto& e : t.edges()) edges.push_back({e.u, e.v});
  return json{{"n", t.vertex_count()}, {"edges", edges}};
}

json sequence_json(const std::vector<int>& degrees) { return json(degrees); }

void print_tree_text(const sombor::Tree& t) {
  std::cout << "edges:\n";
  if (t.vertex_count() == 1) {
    std::cout << "n=1\n";
    return;
  }
  for (const auto& e : t.edges()) std::cout << e.u << ' ' << e.v << '\n';
}

// One constructed tree in the requested format, with the index value on a
// summary (or comment) line.
void emit_tree(const std::string& command, const sombor::Tree& t,
               const sombor::DegreeSequence& degrees,
               const sombor::InternalDegreeSequence& internal,
               const sombor::EdgeFunction& f, double value, Format format,
               std::optional<int> variant = std::nullopt) {
  switch (format) {
    case Format::text:
      std::cout << "command: " << command << '\n';
      if (variant) std::cout << "variant: " << *variant << '\n';
      std::cout << "degrees: " << degrees.str() << '\n';
      std::cout << "internal: " << internal.str() << '\n';
      std::cout << "n: " << t.vertex_count() << '\n';
      std::cout << f.name() << ": " << fmt6(value) << '\n';
      print_tree_text(t);
      break;
    case Format::edges:
      std::cout << "# " << command;
      if (variant) std::cout << " variant " << *variant;
      std::cout << ' ' << f.name() << ' ' << fmt6(value) << '\n';
      std::cout << sombor::to_edge_list(t) << '\n';
      break;
    case Format::dot:
      std::cout << "// " << command;
      if (variant) std::cout << " variant " << *variant;
      std::cout << ' ' << f.name() << ' ' << fmt6(value) << '\n';
      std::cout << sombor::to_dot(t) << '\n';
      break;
    case Format::structured: {
      json out{{"command", command}};
      if (variant) out["variant"] = *variant;
      out["degrees"] = sequence_json(degrees.degrees());
      out["internal"] = sequence_json(internal.degrees());
      out["index"] = f.name();
      out["value"] = value;
      out["tree"] = tree_json(t);
      std::cout << out.dump() << '\n';
      break;
    }
  }
}

std::string read_tree_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw sombor::Error(sombor::errc::bad_format, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json report_json(const sombor::ExtremalReport& r) {
  json out{{"sequence", sequence_json(r.sequence.degrees())},
           {"index", r.index_name},
           {"n", r.sequence.vertex_count()},
           {"labeled_count", r.labeled_count},
           {"unlabeled_count", r.unlabeled_count},
           {"min_value", r.min_value},
           {"max_value", r.max_value},
           {"greedy_value", r.greedy_value},
           {"greedy_attains_min", r.greedy_attains_min},
           {"alt_greedy_attains_max", r.alt_greedy_attains_max}};
  json argmin = json::array();
  for (const auto& [form, tree] : r.argmin_forms)
    argmin.push_back({{"form", form.str()}, {"tree", tree_json(tree)}});
  json argmax = json::array();
  for (const auto& [form, tree] : r.argmax_forms)
    argmax.push_back({{"form", form.str()}, {"tree", tree_json(tree)}});
  json alts = json::array();
  for (const auto& [form, value] : r.alt_greedy_values)
    alts.push_back({{"form", form.str()}, {"value", value}});
  out["argmin"] = std::move(argmin);
  out["argmax"] = std::move(argmax);
  out["alt_greedy_values"] = std::move(alts);
  return out;
}

void print_report_text(const sombor::ExtremalReport& r) {
  std::cout << "sequence: " << r.sequence.str() << '\n';
  std::cout << "index: " << r.index_name << '\n';
  std::cout << "labeled trees: " << r.labeled_count << '\n';
  std::cout << "distinct trees: " << r.unlabeled_count << '\n';
  std::cout << "min: " << fmt6(r.min_value) << '\n';
  std::cout << "max: " << fmt6(r.max_value) << '\n';
  std::cout << "greedy value: " << fmt6(r.greedy_value) << '\n';
  std::cout << "greedy attains min: " << yesno(r.greedy_attains_min) << '\n';
  std::cout << "alternating greedy variants: " << r.alt_greedy_values.size() << '\n';
  int attained = 0;
  for (const auto& [form, value] : r.alt_greedy_values)
    if (value >= r.max_value - 1e-9) ++attained;
  std::cout << "alternating greedy attains max: " << yesno(r.alt_greedy_attains_max) << " ("
            << attained << "/" << r.alt_greedy_values.size() << " variants)\n";
}

unsigned default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct Options {
  SequenceInput seq;
  std::string index_name = "sombor";
  std::string format_name = "text";
  std::string file;
  bool all = false;
  int grid_max = 50;
  int n_max = 10;
  std::uint64_t cap = sombor::kDefaultEnumerationCap;
  std::uint64_t alt_cap = sombor::kDefaultAltVariantCap;
  unsigned jobs = default_jobs();

  Format format() const { return kFormatNames.at(format_name); }
};

int run_greedy(const Options& opt) {
  const auto full = opt.seq.to_full();
  const auto internal = sombor::internal_degrees(full);
  const sombor::Tree tree = full.vertex_count() == 1 ? sombor::Tree::single_vertex()
                                                     : sombor::greedy_tree(internal);
  const auto& f = lookup_index(opt.index_name);
  emit_tree("greedy", tree, full, internal, f, sombor::rf_index(tree, f), opt.format());
  return 0;
}

int run_altgreedy(const Options& opt) {
  const auto full = opt.seq.to_full();
  const auto internal = sombor::internal_degrees(full);
  const auto& f = lookup_index(opt.index_name);
  if (full.vertex_count() == 1) {
    emit_tree("altgreedy", sombor::Tree::single_vertex(), full, internal, f, 0.0, opt.format());
    return 0;
  }
  if (!opt.all) {
    const auto result = sombor::alternating_greedy_one(internal);
    emit_tree("altgreedy", result.tree, full, internal, f,
              sombor::rf_index(result.tree, f), opt.format());
    return 0;
  }
  const auto results = sombor::alternating_greedy_all(internal, opt.alt_cap);
  if (opt.format() == Format::text)
    std::cout << "variants: " << results.size() << '\n';
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (opt.format() == Format::text && i > 0) std::cout << '\n';
    emit_tree("altgreedy", results[i].tree, full, internal, f,
              sombor::rf_index(results[i].tree, f), opt.format(), static_cast<int>(i));
  }
  return 0;
}

int run_index(const Options& opt) {
  const sombor::Tree tree = sombor::tree_from_edge_list(read_tree_source(opt.file));
  const auto& f = lookup_index(opt.index_name);
  const double value = sombor::rf_index(tree, f);
  switch (opt.format()) {
    case Format::structured: {
      json out{{"command", "index"},
               {"index", f.name()},
               {"n", tree.vertex_count()},
               {"value", value},
               {"degrees", sequence_json(tree.degree_sequence().degrees())}};
      std::cout << out.dump() << '\n';
      break;
    }
    case Format::edges:
      std::cout << "# index " << f.name() << ' ' << fmt6(value) << '\n';
      std::cout << sombor::to_edge_list(tree) << '\n';
      break;
    case Format::dot:
      std::cout << "// index " << f.name() << ' ' << fmt6(value) << '\n';
      std::cout << sombor::to_dot(tree) << '\n';
      break;
    case Format::text:
      std::cout << "index: " << f.name() << '\n';
      std::cout << "n: " << tree.vertex_count() << '\n';
      std::cout << "degrees: " << tree.degree_sequence().str() << '\n';
      std::cout << "value: " << fmt6(value) << '\n';
      break;
  }
  return 0;
}

int run_verify(const Options& opt) {
  const auto full = opt.seq.to_full();
  const auto& f = lookup_index(opt.index_name);
  const auto report = sombor::extremal_report(full, f, opt.cap, opt.jobs);
  const bool verified = report.greedy_attains_min && report.alt_greedy_attains_max;
  if (opt.format() == Format::structured) {
    json out = report_json(report);
    out["verified"] = verified;
    std::cout << out.dump() << '\n';
  } else {
    print_report_text(report);
    std::cout << "verdict: " << (verified ? "VERIFIED" : "COUNTEREXAMPLE") << '\n';
  }
  return verified ? 0 : 1;
}

int run_sweep(const Options& opt) {
  const auto& f = lookup_index(opt.index_name);
  const auto reports = sombor::sweep_verify(opt.n_max, f, opt.cap, opt.jobs);
  int failures = 0;
  for (const auto& r : reports) {
    const bool ok = r.greedy_attains_min && r.alt_greedy_attains_max;
    if (!ok) ++failures;
    if (opt.format() == Format::structured) {
      std::cout << report_json(r).dump() << '\n';
    } else {
      std::cout << "n=" << r.sequence.vertex_count() << " [" << r.sequence.str() << "]"
                << " labeled=" << r.labeled_count << " distinct=" << r.unlabeled_count
                << " min=" << fmt6(r.min_value) << " max=" << fmt6(r.max_value)
                << " greedy_min=" << yesno(r.greedy_attains_min)
                << " altgreedy_max=" << yesno(r.alt_greedy_attains_max) << '\n';
    }
  }
  if (opt.format() == Format::structured) {
    json summary{{"command", "sweep"},
                 {"index", f.name()},
                 {"n_max", opt.n_max},
                 {"sequences", reports.size()},
                 {"failures", failures}};
    std::cout << summary.dump() << '\n';
  } else {
    std::cout << "sequences: " << reports.size() << " failures: " << failures << '\n';
  }
  return failures == 0 ? 0 : 1;
}

int run_condition(const Options& opt) {
  const auto& f = lookup_index(opt.index_name);
  const auto report = sombor::check_exchange_condition(f, opt.grid_max);
  const bool ok = report.holds && report.strict_holds;
  if (opt.format() == Format::structured) {
    json out{{"command", "condition"},
             {"index", f.name()},
             {"grid_max", report.grid_max},
             {"holds", report.holds},
             {"strict_holds", report.strict_holds}};
    if (report.witness) {
      const auto& w = *report.witness;
      out["witness"] = {{"x", w[0]}, {"y", w[1]}, {"a", w[2]}, {"b", w[3]}};
    }
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "function: " << f.name() << '\n';
    std::cout << "grid: " << report.grid_max << '\n';
    std::cout << "holds: " << yesno(report.holds) << '\n';
    std::cout << "strict: " << yesno(report.strict_holds) << '\n';
    if (report.witness) {
      const auto& w = *report.witness;
      std::cout << "witness: x=" << w[0] << " y=" << w[1] << " a=" << w[2] << " b=" << w[3]
                << '\n';
    }
  }
  return ok ? 0 : 1;
}

int run_switch_scan(const Options& opt) {
  const sombor::Tree tree = sombor::tree_from_edge_list(read_tree_source(opt.file));
  const auto& f = lookup_index(opt.index_name);
  const auto result = sombor::local_min_check(tree, f);
  const double value = sombor::rf_index(tree, f);
  if (opt.format() == Format::structured) {
    json out{{"command", "switch-scan"},
             {"index", f.name()},
             {"n", tree.vertex_count()},
             {"value", value},
             {"local_min", result.is_local_min}};
    if (result.improvement) {
      const auto& s = *result.improvement;
      out["improving_switch"] = {
          {"remove", {{s.e1.u, s.e1.v}, {s.e2.u, s.e2.v}}},
          {"pattern", s.pattern == sombor::SwitchPattern::ac_bd ? "ac_bd" : "ad_bc"},
          {"value", s.value}};
    }
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "index: " << f.name() << '\n';
    std::cout << "value: " << fmt6(value) << '\n';
    std::cout << "local minimum: " << yesno(result.is_local_min) << '\n';
    if (result.improvement) {
      const auto& s = *result.improvement;
      std::cout << "improving switch: remove {" << s.e1.u << "," << s.e1.v << "} {" << s.e2.u
                << "," << s.e2.v << "} pattern "
                << (s.pattern == sombor::SwitchPattern::ac_bd ? "ac_bd" : "ad_bc") << " value "
                << fmt6(s.value) << '\n';
    }
  }
  return result.is_local_min ? 0 : 1;
}

void add_format_option(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format_name, "Output format")
      ->check(CLI::IsMember({"text", "edges", "dot", "structured"}))
      ->capture_default_str();
}

void add_index_option(CLI::App* cmd, Options& opt) {
  cmd->add_option("--index,--f", opt.index_name, "Edge function from the catalog")
      ->check(CLI::IsMember(sombor::EdgeFunction::catalog_names()))
      ->capture_default_str();
}

void add_sequence_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("sequence", opt.seq.tokens, "Degree sequence (quoted or as separate tokens)")
      ->required()
      ->expected(-1);
  cmd->add_flag("--internal", opt.seq.internal,
                "Input lists internal degrees only; leaves are added automatically");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Extremal trees of bond-incident-degree indices (Sombor and friends)\n"
      "for a given tree degree sequence: greedy construction for the minimum,\n"
      "alternating greedy for the maximum, exhaustive verification at small n."};
  app.require_subcommand(1);
  Options opt;

  CLI::App* greedy = app.add_subcommand("greedy", "Build the greedy tree of a sequence");
  add_sequence_options(greedy, opt);
  add_index_option(greedy, opt);
  add_format_option(greedy, opt);

  CLI::App* altgreedy =
      app.add_subcommand("altgreedy", "Build alternating greedy tree(s) of a sequence");
  add_sequence_options(altgreedy, opt);
  add_index_option(altgreedy, opt);
  add_format_option(altgreedy, opt);
  altgreedy->add_flag("--all", opt.all, "Emit every distinct tie variant");
  altgreedy->add_option("--cap", opt.alt_cap, "Maximum number of distinct variants")
      ->capture_default_str();

  CLI::App* index = app.add_subcommand("index", "Evaluate an index on a tree from an edge list");
  index->add_option("file", opt.file, "Edge-list file ('-' for stdin)")->required();
  add_index_option(index, opt);
  add_format_option(index, opt);

  CLI::App* verify = app.add_subcommand(
      "verify", "Enumerate all trees of a sequence and check the construction extrema");
  add_sequence_options(verify, opt);
  add_index_option(verify, opt);
  add_format_option(verify, opt);
  verify->add_option("--cap", opt.cap, "Enumeration cap (labeled trees)")->capture_default_str();
  verify->add_option("--jobs", opt.jobs, "Worker threads")->capture_default_str();

  CLI::App* sweep =
      app.add_subcommand("sweep", "Verify every degree sequence with 2 <= n <= N_MAX");
  sweep->add_option("n_max", opt.n_max, "Largest vertex count")->capture_default_str();
  add_index_option(sweep, opt);
  add_format_option(sweep, opt);
  sweep->add_option("--cap", opt.cap, "Enumeration cap (labeled trees)")->capture_default_str();
  sweep->add_option("--jobs", opt.jobs, "Worker threads")->capture_default_str();

  CLI::App* condition =
      app.add_subcommand("condition", "Check the exchange condition on a degree grid");
  add_index_option(condition, opt);
  add_format_option(condition, opt);
  condition->add_option("--grid", opt.grid_max, "Grid upper bound")->capture_default_str();

  CLI::App* switch_scan = app.add_subcommand(
      "switch-scan", "Scan all degree-preserving edge switches for an improvement");
  switch_scan->add_option("file", opt.file, "Edge-list file ('-' for stdin)")->required();
  add_index_option(switch_scan, opt);
  add_format_option(switch_scan, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (greedy->parsed()) return run_greedy(opt);
    if (altgreedy->parsed()) return run_altgreedy(opt);
    if (index->parsed()) return run_index(opt);
    if (verify->parsed()) return run_verify(opt);
    if (sweep->parsed()) return run_sweep(opt);
    if (condition->parsed()) return run_condition(opt);
    if (switch_scan->parsed()) return run_switch_scan(opt);
  } catch (const sombor::Error& e) {
    std::cerr << "error (" << sombor::errc_name(e.code()) << "): " << e.what() << '\n';
    return e.code() == sombor::errc::cap_exceeded ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
