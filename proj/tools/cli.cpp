#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <istream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "graph_spec.hpp"
#include "satnum/bounds.hpp"
#include "satnum/constructions.hpp"
#include "satnum/io.hpp"
#include "satnum/oracle.hpp"
#include "satnum/saturation.hpp"
#include "satnum/weights.hpp"

namespace satnum::cli {
namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r) { return {{"exact", r.str()}, {"decimal", r.to_double()}}; }

Json edge_json(Edge e) { return Json::array({e.u, e.v}); }

std::string edge_text(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string render(const Graph& g, const std::string& format,
                   const std::map<Vertex, std::string>& labels = {}) {
  if (format == "g6") return io::emit_graph6(g) + "\n";
  if (format == "dot") return io::to_dot(g, labels);
  return io::emit_edge_list(g);
}

unsigned default_threads() {
  if (const char* env = std::getenv("SATNUM_THREADS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
    }
  }
  return 0;
}

Json report_json(const BoundReport& r) {
  Json j;
  j["name"] = r.name;
  j["applicable"] = r.applicable;
  if (r.applicable) {
    j["kind"] = to_string(r.kind);
    j["slope"] = rational_json(r.slope);
    j["constant"] = r.constant ? rational_json(*r.constant) : Json(nullptr);
    j["value"] = r.value ? rational_json(*r.value) : Json(nullptr);
    j["integer_value"] = r.integer_value() ? Json(*r.integer_value()) : Json(nullptr);
    j["asymptotic_only"] = r.asymptotic_only;
  }
  j["reason"] = r.reason;
  return j;
}

void print_report(std::ostream& out, const BoundReport& r) {
  out << r.name << ": ";
  if (!r.applicable) {
    out << "not applicable (" << r.reason << ")\n";
    return;
  }
  out << to_string(r.kind) << " " << r.value->str() << " -> " << *r.integer_value()
      << "  slope " << r.slope.str();
  if (r.constant) out << "  constant " << r.constant->str();
  if (r.asymptotic_only) out << "  [asymptotic]";
  if (!r.reason.empty()) out << "  (" << r.reason << ")";
  out << "\n";
}

std::vector<BoundReport> collect_bounds(const Graph& h, std::size_t n, const std::string& which) {
  if (n < h.order()) throw BoundError("n is smaller than the pattern order");
  std::vector<BoundReport> out;
  auto append = [&](std::vector<BoundReport> more) {
    out.insert(out.end(), more.begin(), more.end());
  };
  const bool all = which == "all";
  if (which == "cp" || which == "general" || which == "triangle-free" || which == "best" || all) {
    const auto summary = weight_summary(h);
    if (which == "cp" || all) out.push_back(cp_lower_bound(summary, n));
    if (which == "general" || all) append(general_lower_bound(summary, n));
    if (which == "triangle-free" || all) append(triangle_free_lower_bound(summary, is_triangle_free(h), n));
  }
  const auto st = recognize_double_star(h);
  if (which == "double-star") {
    if (!st) throw BoundError("pattern is not a double star");
    append(double_star_bounds(st->first, st->second, n));
  } else if (all && st && st->first < st->second && n >= double_star_threshold(st->first, st->second)) {
    append(double_star_bounds(st->first, st->second, n));
  }
  const auto p5 = recognize_caterpillar_p5(h);
  if (which == "shorty") {
    if (!p5) throw BoundError("pattern is not a caterpillar P_5^s");
    append(shorty_bounds(*p5 + 1, n));
  } else if (all && p5 && n >= shorty_threshold(*p5 + 1)) {
    append(shorty_bounds(*p5 + 1, n));
  }
  if (which == "best" || all) {
    auto best = best_lower_bound(h, n);
    best.name = "best (" + best.name + ")";
    out.push_back(best);
  }
  return out;
}

struct ConstructArgs {
  std::string name;
  std::optional<unsigned> s, t, delta, k, ell;
  std::optional<std::size_t> n;
};

unsigned need(const std::optional<unsigned>& v, const char* flag) {
  if (!v) throw CLI::RequiredError(flag);
  return *v;
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw CLI::RequiredError(flag);
  return *v;
}

struct Built {
  Graph graph;
  std::optional<ConstructionReport> report;
  std::map<Vertex, std::string> labels;
};

Built build(const ConstructArgs& a) {
  auto from_report = [](ConstructionReport r) {
    Built b{r.graph, std::nullopt, {}};
    for (Vertex v = 0; v < r.roles.size(); ++v) {
      std::string label = std::to_string(v) + " " + to_string(r.roles[v].role);
      if (r.roles[v].class_index) label += " c" + std::to_string(*r.roles[v].class_index);
      if (r.roles[v].partner) label += " p" + std::to_string(*r.roles[v].partner);
      b.labels[v] = label;
    }
    b.report = std::move(r);
    return b;
  };
  const auto& n = a.name;
  if (n == "saturated-double-star") {
    return from_report(saturated_double_star(need(a.s, "--s"), need(a.t, "--t"), need(a.n, "--n")));
  }
  if (n == "saturated-shorty") return from_report(saturated_shorty(need(a.s, "--s"), need(a.n, "--n")));
  if (n == "kdelta-star") {
    return from_report(example_kdelta_star(need(a.delta, "--delta"), need(a.k, "--k"), need(a.ell, "--ell")));
  }
  if (n == "kdelta-doublestar") {
    return from_report(
        example_kdelta_doublestar(need(a.delta, "--delta"), need(a.k, "--k"), need(a.ell, "--ell")));
  }
  if (n == "ehm") return from_report(ehm_construction(need(a.t, "--t"), need(a.n, "--n")));
  if (n == "double-star") return {double_star(need(a.s, "--s"), need(a.t, "--t")), std::nullopt, {}};
  if (n == "caterpillar-p5") return {caterpillar_p5(need(a.s, "--s")), std::nullopt, {}};
  if (n == "fig1a") return from_report(example_kdelta_star(3, 5, 2));
  if (n == "fig1b") return from_report(example_kdelta_doublestar(3, 5, 2));
  if (n == "fig2b") return from_report(saturated_double_star(4, 5, 18));
  if (n == "fig3b") return from_report(saturated_shorty(2, 19));
  if (n == "fig4") return {fig4_gadget(), std::nullopt, fig4_labels()};
  throw CLI::ValidationError("construct", "unknown construction '" + n + "'");
}

const std::vector<std::string> kConstructions = {
    "saturated-double-star", "saturated-shorty", "kdelta-star", "kdelta-doublestar", "ehm",
    "double-star",           "caterpillar-p5",   "fig1a",       "fig1b",             "fig2b",
    "fig3b",                 "fig4"};

Json embedding_json(const Embedding& e) {
  Json j = Json::array();
  for (auto v : e.map) j.push_back(v);
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
  CLI::App app{"Saturation numbers: edge weights, bounds, constructions and exact search"};
  app.name("satnum");
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  unsigned threads = default_threads();
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option("--threads", threads, "Worker threads (0 = all cores; default $SATNUM_THREADS)");

  std::string spec, host_spec, pattern_spec, out_format = "g6", which = "all";
  std::size_t n = 0;
  std::optional<std::size_t> max_edges;
  bool explain = false, audit = false, no_prefilter = false;
  ConstructArgs cargs;

  auto* weights = app.add_subcommand("weights", "Edge weights and the constants k0, k1, k0', k1'");
  weights->add_option("graph", spec, "Pattern graph spec")->required();

  auto* bound = app.add_subcommand("bound", "Evaluate lower and upper bounds at order n");
  bound->add_option("graph", spec, "Pattern graph spec")->required();
  bound->add_option("--n", n, "Host order")->required();
  bound->add_option("--which", which, "Bound family")
      ->check(CLI::IsMember({"cp", "general", "triangle-free", "double-star", "shorty", "best", "all"}));

  auto* construct = app.add_subcommand("construct", "Build a named construction");
  construct->add_option("name", cargs.name, "Construction name")->required()->check(CLI::IsMember(kConstructions));
  construct->add_option("--s", cargs.s);
  construct->add_option("--t", cargs.t);
  construct->add_option("--n", cargs.n);
  construct->add_option("--delta", cargs.delta);
  construct->add_option("--k", cargs.k);
  construct->add_option("--ell", cargs.ell);
  construct->add_option("--out", out_format)->check(CLI::IsMember({"g6", "dot", "edges"}));

  auto* verify = app.add_subcommand("verify", "Check whether a host graph is H-saturated");
  verify->add_option("--host", host_spec, "Host graph spec")->required();
  verify->add_option("--pattern", pattern_spec, "Pattern graph spec")->required();
  verify->add_flag("--explain", explain, "Print witnesses and structural checks");
  verify->add_flag("--no-prefilter", no_prefilter, "Disable the degree prefilter");

  auto* sat = app.add_subcommand("sat", "Exact sat(n, H) by exhaustive search (n <= 9)");
  sat->add_option("--pattern", pattern_spec, "Pattern graph spec")->required();
  sat->add_option("--n", n, "Host order")->required();
  sat->add_option("--max-edges", max_edges, "Fail if no saturated graph has this many edges or fewer");
  sat->add_flag("--audit", audit, "Start at zero edges instead of the lower bound");

  auto* convert = app.add_subcommand("convert", "Re-emit a graph");
  convert->add_option("graph", spec, "Graph spec")->required();
  convert->add_option("--out", out_format)->check(CLI::IsMember({"g6", "dot", "edges"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (weights->parsed()) {
      const auto h = parse_graph_spec(spec, in).graph;
      const auto s = weight_summary(h);
      if (json) {
        Json j;
        j["graph6"] = io::emit_graph6(h);
        j["order"] = h.order();
        j["size"] = h.size();
        j["k0"] = s.k0;
        j["k1"] = s.k1;
        j["k0p"] = s.k0p;
        j["k1p"] = s.k1p;
        j["min_wt_cp"] = s.min_wt_cp;
        j["witnesses"] = {{"k0", edge_json(s.witnesses.k0)},   {"k1", edge_json(s.witnesses.k1)},
                          {"k0p", edge_json(s.witnesses.k0p)}, {"k1p", edge_json(s.witnesses.k1p)},
                          {"min_wt_cp", edge_json(s.witnesses.min_wt_cp)}};
        Json edges = Json::array();
        for (const auto& w : s.per_edge) {
          edges.push_back({{"edge", edge_json(w.edge)}, {"wt_cp", w.wt_cp}, {"wt0", w.wt0}, {"wt1", *w.wt1}});
        }
        j["edges"] = edges;
        out << j.dump(2) << "\n";
      } else {
        out << "k0 = " << s.k0 << "  (edge " << edge_text(s.witnesses.k0) << ")\n"
            << "k1 = " << s.k1 << "  (edge " << edge_text(s.witnesses.k1) << ")\n"
            << "k0' = " << s.k0p << "  (edge " << edge_text(s.witnesses.k0p) << ")\n"
            << "k1' = " << s.k1p << "  (edge " << edge_text(s.witnesses.k1p) << ")\n"
            << "min wt_cp = " << s.min_wt_cp << "  (edge " << edge_text(s.witnesses.min_wt_cp) << ")\n"
            << "edge  wt_cp  wt0  wt1\n";
        for (const auto& w : s.per_edge) {
          out << edge_text(w.edge) << "  " << w.wt_cp << "  " << w.wt0 << "  " << *w.wt1 << "\n";
        }
      }
    } else if (bound->parsed()) {
      const auto h = parse_graph_spec(spec, in).graph;
      const auto reports = collect_bounds(h, n, which);
      if (json) {
        Json j;
        j["graph6"] = io::emit_graph6(h);
        j["n"] = n;
        j["reports"] = Json::array();
        for (const auto& r : reports) j["reports"].push_back(report_json(r));
        out << j.dump(2) << "\n";
      } else {
        for (const auto& r : reports) print_report(out, r);
      }
    } else if (construct->parsed()) {
      const auto built = build(cargs);
      if (json) {
        Json j;
        j["name"] = cargs.name;
        j["order"] = built.graph.order();
        j["size"] = built.graph.size();
        j["graph6"] = io::emit_graph6(built.graph);
        if (built.report) {
          j["expected_size"] = built.report->expected_size;
          Json props = Json::object();
          for (const auto& c : built.report->properties_checked) props[c.name] = c.passed;
          j["properties"] = props;
          Json roles = Json::array();
          for (const auto& r : built.report->roles) {
            roles.push_back({{"role", to_string(r.role)},
                             {"class", r.class_index ? Json(*r.class_index) : Json(nullptr)},
                             {"partner", r.partner ? Json(*r.partner) : Json(nullptr)}});
          }
          j["roles"] = roles;
        }
        out << j.dump(2) << "\n";
      } else {
        out << render(built.graph, out_format, built.labels);
      }
    } else if (verify->parsed()) {
      const auto host = parse_graph_spec(host_spec, in).graph;
      const auto h = parse_graph_spec(pattern_spec, in).graph;
      SaturationOptions options;
      options.threads = threads;
      options.degree_prefilter = !no_prefilter;
      const auto verdict = is_h_saturated(host, h, options);
      std::vector<NamedCheck> checks;
      if (explain && verdict.is_saturated && h.size() > 0 && !has_isolated_edge(h)) {
        checks = check_clique_propositions(host, weight_summary(h), is_triangle_free(h));
      }
      if (json) {
        Json j;
        j["is_free"] = verdict.is_free;
        j["is_saturated"] = verdict.is_saturated;
        j["free_witness"] = verdict.free_witness ? embedding_json(*verdict.free_witness) : Json(nullptr);
        j["maximality_counterexample"] =
            verdict.maximality_counterexample ? edge_json(*verdict.maximality_counterexample) : Json(nullptr);
        if (explain) {
          Json c = Json::object();
          for (const auto& check : checks) c[check.name] = check.passed;
          j["clique_checks"] = c;
        }
        out << j.dump(2) << "\n";
      } else {
        out << "H-free: " << (verdict.is_free ? "yes" : "no") << "\n"
            << "H-saturated: " << (verdict.is_saturated ? "yes" : "no") << "\n";
        if (explain && verdict.free_witness) {
          out << "copy of H:";
          for (Vertex v = 0; v < verdict.free_witness->map.size(); ++v) {
            out << " " << v << "->" << verdict.free_witness->map[v];
          }
          out << "\n";
        }
        if (explain && verdict.maximality_counterexample) {
          out << "adding " << edge_text(*verdict.maximality_counterexample) << " creates no copy of H\n";
        }
        for (const auto& c : checks) out << c.name << ": " << (c.passed ? "pass" : "FAIL") << "\n";
      }
    } else if (sat->parsed()) {
      const auto h = parse_graph_spec(pattern_spec, in).graph;
      SatOptions options;
      options.edge_cap = max_edges;
      options.audit = audit;
      options.threads = threads;
      const auto result = brute_force_sat(n, h, options);
      if (json) {
        Json j;
        j["n"] = result.n;
        j["pattern"] = io::emit_graph6(h);
        j["sat"] = result.sat_value;
        j["start_edges"] = result.start_edges;
        j["graphs_examined"] = result.graphs_examined;
        j["witnesses"] = Json::array();
        for (const auto& w : result.witnesses) j["witnesses"].push_back(io::emit_graph6(w));
        out << j.dump(2) << "\n";
      } else {
        out << "sat = " << result.sat_value << "\n";
        for (const auto& w : result.witnesses) out << "witness " << io::emit_graph6(w) << "\n";
      }
    } else if (convert->parsed()) {
      const auto g = parse_graph_spec(spec, in);
      out << render(g.graph, out_format, g.labels);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace satnum::cli
