#pragma once

// Command-line front end. Exit codes: 0 success / verified, 1 discrepancy or
// failed check, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "semicayley/semicayley.hpp"

namespace semicayley::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

inline std::string transitivity_class(const Graph& g, const PermGroup& aut) {
  if (is_arc_transitive(g, aut) && is_vertex_transitive(g, aut)) return "arc-transitive";
  if (is_edge_transitive(g, aut)) return is_vertex_transitive(g, aut) ? "edge-transitive" : "edge-transitive, intransitive";
  if (is_vertex_transitive(g, aut)) return "vertex-transitive";
  return "intransitive";
}

inline void dump_graph(const Graph& g, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << g.to_json().dump() << '\n';
  } else {
    out << g.to_edge_list();
  }
}

inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normality of one-matching semi-Cayley graphs over finite abelian groups"};
  app.require_subcommand(1);

  std::string group_text, right_text, left_text, dump_format, format = "text";
  auto add_spec_options = [&](CLI::App* sub) {
    sub->add_option("group", group_text, "group, e.g. Z4xZ2")->required();
    sub->add_option("--R", right_text, "right connection set, e.g. \"(1,0),(3,0)\"");
    sub->add_option("--L", left_text, "left connection set");
    sub->add_option("--dump-graph", dump_format, "print the graph as 'text' (edge list) or 'json'")
        ->expected(0, 1)
        ->default_str("text")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* classify = app.add_subcommand("classify", "verdict for SC(G; R, L, {0})");
  add_spec_options(classify);
  classify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* aut = app.add_subcommand("aut", "automorphism group order and generators of SC(G; R, L, {0})");
  add_spec_options(aut);

  SweepConfig cfg;
  std::string sweep_format = "text", output_path;
  bool no_dedupe = false;
  auto* sweep = app.add_subcommand("sweep", "exhaustive normality sweep");
  sweep->add_option("--max-order", cfg.max_group_order, "largest group order")->check(CLI::Range(2, 64));
  sweep->add_option("--min-order", cfg.min_group_order, "smallest group order")->check(CLI::Range(2, 64));
  sweep->add_option("--format", sweep_format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sweep->add_option("--workers", cfg.workers, "worker threads")->check(CLI::Range(1u, 256u));
  sweep->add_flag("--no-dedupe", no_dedupe, "emit every (R, L), not one per Aut(G) orbit");
  sweep->add_flag("--include-disconnected", cfg.include_disconnected, "also enumerate disconnected specs");
  sweep->add_flag("--dump-graphs", cfg.dump_graphs, "include each graph in the report");
  sweep->add_option("--output", output_path, "write the report to a file");

  auto* golden = app.add_subcommand("golden", "run the named regression instances");

  int gp_n = 0, gp_k = 0;
  auto* gp = app.add_subcommand("gp", "generalized Petersen graph GP(n, k)");
  gp->add_option("n", gp_n)->required();
  gp->add_option("k", gp_k)->required();
  gp->add_option("--dump-graph", dump_format, "print the graph as 'text' or 'json'")
      ->expected(0, 1)
      ->default_str("text")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  auto read_spec = [&]() {
    const AbelianGroup g = parse_group(group_text);
    return ConnectionSpec(g, parse_element_set(g, right_text), parse_element_set(g, left_text));
  };
  const bool dump = (classify->parsed() || aut->parsed()) ? classify->count("--dump-graph") + aut->count("--dump-graph") > 0
                                                          : gp->count("--dump-graph") > 0;
  if (dump && dump_format.empty()) dump_format = "text";

  try {
    if (classify->parsed()) {
      const ConnectionSpec spec = read_spec();
      const Verdict v = evaluate(spec);
      if (format == "json") {
        out << to_json(v).dump(2) << '\n';
      } else {
        out << spec.to_string() << '\n'
            << "  |Aut| = " << v.aut_order << '\n'
            << "  " << (v.normal ? "normal" : "non-normal") << '\n'
            << "  vertex-transitive: " << (v.vertex_transitive ? "yes" : "no")
            << ", edge-transitive: " << (v.edge_transitive ? "yes" : "no")
            << ", arc-transitive: " << (v.arc_transitive ? "yes" : "no") << '\n'
            << "  |X| = " << v.x_size << ", |Y| = " << v.y_size << '\n'
            << "  case: " << (v.theorem_case() ? "case" + std::to_string(v.theorem_case()) : std::string("none"))
            << '\n';
      }
      if (dump) dump_graph(build_sc_graph(spec), dump_format, out);
      return kOk;
    }
    if (aut->parsed()) {
      const ConnectionSpec spec = read_spec();
      const Graph g = build_sc_graph(spec);
      const PermGroup a = automorphism_group(g);
      out << "|Aut| = " << a.order() << '\n';
      for (const auto& p : a.generators()) out << p.to_cycle_string() << '\n';
      if (dump) dump_graph(g, dump_format, out);
      return kOk;
    }
    if (sweep->parsed()) {
      cfg.dedupe = !no_dedupe;
      cfg.format = sweep_format == "json" ? OutputFormat::json
                   : sweep_format == "csv" ? OutputFormat::csv
                                           : OutputFormat::text;
      const SweepReport report = run_sweep(cfg);
      const std::string text = render(report);
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream file(output_path);
        if (!file) {
          err << "error: cannot write " << output_path << '\n';
          return kUsage;
        }
        file << text;
        out << "instances: " << report.summary.instances << ", discrepancies: " << report.discrepancies.size()
            << ", violations: " << report.violations.size() << '\n';
      }
      return report.verified() ? kOk : kFailed;
    }
    if (golden->parsed()) {
      bool all = true;
      for (const auto& r : run_golden_suite()) {
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  " << r.detail << '\n';
        all = all && r.passed;
      }
      return all ? kOk : kFailed;
    }
    if (gp->parsed()) {
      const Graph g = build_gp(gp_n, gp_k);
      const PermGroup a = automorphism_group(g);
      out << "GP(" << gp_n << "," << gp_k << "): " << g.vertex_count() << " vertices, |Aut| = " << a.order() << ", "
          << transitivity_class(g, a) << '\n';
      if (dump) dump_graph(g, dump_format, out);
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidSpecError& e) {
    err << "invalid spec: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgumentError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace semicayley::cli
