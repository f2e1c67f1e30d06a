// symbreak: generate graphs, compute D and D', evaluate closed forms, and run
// formula-versus-oracle sweeps.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symbreak/automorphism.hpp"
#include "symbreak/distinguishing.hpp"
#include "symbreak/error.hpp"
#include "symbreak/formulas.hpp"
#include "symbreak/generators.hpp"
#include "symbreak/graph_io.hpp"
#include "symbreak/report.hpp"
#include "symbreak/spec_json.hpp"
#include "symbreak/verify.hpp"

namespace {

using namespace symbreak;
using nlohmann::json;

enum Exit { kOk = 0, kInputError = 1, kCapped = 2, kMismatch = 3 };

bool log_enabled() {
  static const bool on = [] {
    const char* v = std::getenv("SYMBREAK_LOG");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
  }();
  return on;
}

template <class... Args>
void log(const Args&... args) {
  if (!log_enabled()) return;
  std::cerr << "[symbreak] ";
  (std::cerr << ... << args);
  std::cerr << '\n';
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    io::write_file(out_path, text);
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  return io::read_file(path);
}

gen::FamilySpec spec_from_flags(const std::string& family, const std::vector<std::int64_t>& params,
                                const std::string& spec_path, const std::string& f_path,
                                const std::string& g1_path) {
  gen::FamilySpec spec;
  if (!spec_path.empty()) {
    spec = gen::parse_spec(read_input(spec_path));
  } else {
    if (family.empty()) throw Error(ErrorCode::kBadParams, "give --family or --spec");
    spec.kind = gen::parse_family_kind(family);
    spec.params = params;
  }
  if (!f_path.empty() || !g1_path.empty()) {
    auto bases = spec.nanostar_bases.value_or(gen::default_nanostar_bases());
    if (!f_path.empty()) bases.f = io::parse_graph(read_input(f_path));
    if (!g1_path.empty()) bases.g1 = io::parse_graph(read_input(g1_path));
    spec.nanostar_bases = std::move(bases);
  }
  return spec;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& name, const std::string& text) {
  try {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
      auto v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kBadParams, "--" + name + " expects a or a..b, got '" + text + "'");
  }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distinguishing number and index of graph families"};
  app.require_subcommand(1);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Write a family member as a graph file");
  std::string family;
  std::vector<std::int64_t> params;
  std::string spec_path, f_path, g1_path, format = "edgelist", out_path;
  gen_cmd->add_option("--family", family, "complete, cycle, path, star, q, dutch, friendship, spiro, poly, nanostar");
  gen_cmd->add_option("--params", params, "Comma-separated integers")->delimiter(',');
  gen_cmd->add_option("--spec", spec_path, "JSON family spec (compositions)");
  gen_cmd->add_option("--F", f_path, "Nanostar F base graph");
  gen_cmd->add_option("--G1", g1_path, "Nanostar G1 base graph");
  gen_cmd->add_option("--format", format, "edgelist, json or dot");
  gen_cmd->add_option("-o,--out", out_path, "Output file (default stdout)");

  // analyze
  auto* an_cmd = app.add_subcommand("analyze", "Compute |Aut|, D and D' of a graph file");
  std::string in_path;
  bool only_vertex = false, only_edge = false;
  std::optional<Label> max_labels;
  std::uint64_t aut_cap = kDefaultAutCap;
  std::uint64_t time_budget_ms = 0;
  an_cmd->add_option("--in", in_path, "Graph file, edge list or JSON ('-' for stdin)")->required();
  an_cmd->add_flag("--vertex", only_vertex, "Only the distinguishing number");
  an_cmd->add_flag("--edge", only_edge, "Only the distinguishing index");
  an_cmd->add_option("--max-labels", max_labels, "Largest r tried");
  an_cmd->add_option("--aut-cap", aut_cap, "Automorphism enumeration cap");
  an_cmd->add_option("--time-budget-ms", time_budget_ms, "Budget for each labeling search");

  // formula
  auto* f_cmd = app.add_subcommand("formula", "Evaluate the closed forms for a family");
  f_cmd->add_option("--family", family, "q, dutch, friendship, spiro, poly, nanostar")->required();
  f_cmd->add_option("--params", params, "Comma-separated integers")->delimiter(',');

  // verify
  auto* v_cmd = app.add_subcommand("verify", "Compare closed forms with the brute-force oracle");
  v_cmd->set_help_flag("--help", "Print this help message and exit");
  std::string v_family = "all";
  std::map<std::string, std::string> range_text;
  for (const char* name : {"n", "k", "m", "q", "h"}) {
    v_cmd->add_option(std::string("--") + name, range_text[name], "Range a..b");
  }
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  verify::RunConfig config;
  std::string report_format = "json";
  std::string recheck_path;
  v_cmd->add_option("--family", v_family, "dutch, friendship, q, spiro, poly, nanostar, transfer, bounds, all");
  v_cmd->add_option("--samples", samples, "Random compositions for --family bounds");
  v_cmd->add_option("--seed", seed, "Seed for --family bounds");
  v_cmd->add_option("--aut-cap", config.aut_cap, "Automorphism enumeration cap");
  v_cmd->add_option("--max-vertices", config.max_vertices, "Skip larger graphs");
  v_cmd->add_option("--max-edges", config.max_edges, "Run the edge oracle up to this many edges");
  v_cmd->add_option("--max-labels", config.max_labels, "Largest r tried");
  v_cmd->add_option("--jobs", config.jobs, "Worker threads");
  v_cmd->add_option("--time-budget-ms", config.time_budget_ms, "Per-instance search budget");
  v_cmd->add_flag("--timing", config.timing, "Record elapsed_ms per instance");
  v_cmd->add_option("--format", report_format, "json, csv or table");
  v_cmd->add_option("-o,--out", out_path, "Output file (default stdout)");
  v_cmd->add_option("--recheck", recheck_path, "Re-verify the witnesses in a JSON report instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (gen_cmd->parsed()) {
      auto spec = spec_from_flags(family, params, spec_path, f_path, g1_path);
      const Graph g = gen::family(spec);
      log("generated ", g.order(), " vertices, ", g.size(), " edges");
      emit(out_path, io::serialize(g, io::parse_format(format)));
      return kOk;
    }

    if (an_cmd->parsed()) {
      const Graph g = io::parse_graph(read_input(in_path));
      const bool want_vertex = only_vertex || !only_edge;
      const bool want_edge = only_edge || !only_vertex;
      const auto t0 = std::chrono::steady_clock::now();
      SearchLimits limits;
      if (time_budget_ms > 0) limits.deadline = t0 + std::chrono::milliseconds(time_budget_ms);
      const AutGroup group = enumerate_automorphisms(g, aut_cap);
      log("aut enumeration: ", group.order(), group.capped() ? " (capped)" : "", " in ", ms_since(t0), " ms");
      json out;
      out["n"] = g.order();
      out["m"] = g.size();
      out["capped"] = group.capped();
      if (group.capped()) {
        out["aut_order"] = nullptr;
        out["error"] = "CappedGroup";
        std::cout << out.dump(2) << '\n';
        return kCapped;
      }
      out["aut_order"] = group.order();
      if (want_vertex) {
        auto d = distinguishing_number(g, group, max_labels, limits);
        out["D"] = d.value;
        out["D_witness"] = d.witness;
        log("D = ", d.value, " after ", d.nodes, " nodes");
      }
      if (want_edge) {
        if (g.size() == 0) {
          out["Dprime"] = nullptr;
          out["Dprime_error"] = "NoEdges";
        } else {
          auto dp = distinguishing_index(g, group, max_labels, limits);
          out["Dprime"] = dp.value;
          out["Dprime_witness"] = dp.witness;
          out["kernel_nontrivial"] = dp.kernel_nontrivial;
          log("D' = ", dp.value, " after ", dp.nodes, " nodes");
        }
      }
      out["elapsed_ms"] = ms_since(t0);
      std::cout << out.dump(2) << '\n';
      return kOk;
    }

    if (f_cmd->parsed()) {
      gen::FamilySpec spec;
      spec.kind = gen::parse_family_kind(family);
      spec.params = params;
      auto f = formulas::for_family(spec);
      json out;
      out["family"] = gen::to_string(spec.kind);
      out["params"] = params;
      out["D"] = f.D;
      out["Dprime"] = f.Dprime ? json(*f.Dprime) : json(nullptr);
      out["kind"] = f.kind == formulas::ResultKind::kExact ? "exact" : "upper_bound";
      out["source"] = f.source;
      if (spec.kind == gen::FamilyKind::kFriendship) {
        auto v = formulas::friendship_closed(params.at(0));
        out["float_D"] = v.float_D;
        out["float_Dprime"] = v.float_Dprime;
        out["float_agrees"] = v.float_agrees();
      }
      if (spec.kind == gen::FamilyKind::kDutch || spec.kind == gen::FamilyKind::kFriendship) {
        out["aut_order"] = group_order_formula_dutch(params.at(0), spec.kind == gen::FamilyKind::kDutch ? params.at(1) : 3).str();
      }
      std::cout << out.dump(2) << '\n';
      return kOk;
    }

    if (v_cmd->parsed()) {
      if (!recheck_path.empty()) {
        auto report = verify::report_from_json(json::parse(read_input(recheck_path)));
        std::size_t bad = 0;
        for (const auto& r : report.records) {
          if (!verify::revalidate(r, config.aut_cap)) {
            ++bad;
            std::cerr << "witness rejected: " << r.family << ' ' << json(r.params).dump() << '\n';
          }
        }
        std::cout << "rechecked " << report.records.size() << " records, " << bad << " rejected\n";
        return bad == 0 ? kOk : kMismatch;
      }
      std::vector<verify::Instance> instances;
      std::optional<std::uint64_t> report_seed;
      if (v_family == "bounds") {
        instances = verify::make_bound_instances(samples, seed);
        report_seed = seed;
      } else {
        verify::Ranges ranges;
        for (const auto& [name, text] : range_text) {
          if (!text.empty()) ranges[name] = parse_range(name, text);
        }
        instances = verify::make_instances(v_family, ranges);
        if (v_family == "all") {
          auto more = verify::make_bound_instances(samples, seed);
          instances.insert(instances.end(), more.begin(), more.end());
          report_seed = seed;
        }
      }
      if (instances.empty()) throw Error(ErrorCode::kBadParams, "the ranges select no instances");
      log("verifying ", instances.size(), " instances on ", config.jobs, " worker(s)");
      auto report = verify::run(instances, config, report_seed);
      emit(out_path, verify::format_report(report, verify::parse_report_format(report_format)));
      log("matched ", report.summary.matched, ", mismatched ", report.summary.mismatched, ", skipped ",
          report.summary.skipped_too_large);
      return report.summary.mismatched == 0 ? kOk : kMismatch;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kCappedGroup ? kCapped : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
