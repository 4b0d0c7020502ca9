#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "injcol/injcol.hpp"

namespace injcol::cli {

using nlohmann::json;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string format = "json";
  std::size_t budget_n = OracleBudget{}.max_vertices;
  std::size_t budget_m = OracleBudget{}.max_edges;
  std::size_t budget_d = 2;
  std::size_t budget_k = 8;
  std::optional<std::size_t> g;
  bool unverified_full = false;
};

namespace detail {

inline OracleBudget oracle_budget(const GlobalOptions& o) {
  OracleBudget b;
  b.max_vertices = o.budget_n;
  b.max_edges = o.budget_m;
  return b;
}

inline AnyGraph read_graph(const std::string& file, std::istream& in) {
  if (file.empty() || file == "-") return parse_graph(in);
  std::ifstream f(file);
  if (!f) throw Error(Errc::invalid_input, "cannot open '" + file + "'");
  return parse_graph(f);
}

inline AnyColoring read_coloring(const std::string& file, std::istream& in) {
  if (file.empty() || file == "-") return parse_coloring(in);
  std::ifstream f(file);
  if (!f) throw Error(Errc::invalid_input, "cannot open '" + file + "'");
  return parse_coloring(f);
}

inline GenusParameter require_g(const GlobalOptions& o) {
  if (!o.g) throw Error(Errc::invalid_input, "--g is required");
  return GenusParameter{*o.g};
}

inline json report_json(const PipelineReport& r) {
  json classes = json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"class", c.cls},
                       {"x_size", c.x_size},
                       {"arcs", c.arcs},
                       {"max_out_degree", c.max_out_degree},
                       {"hcol_colors", c.hcol_colors},
                       {"family_k", c.family_k},
                       {"family_r", c.family_r},
                       {"family_size", c.family_size},
                       {"colors", c.colors}});
  }
  return {{"colors_used", r.colors_used},
          {"v1_size", r.v1_size},
          {"v2_size", r.v2_size},
          {"degeneracy", r.degeneracy},
          {"heawood_bound", r.heawood_bound},
          {"small_n", r.small_n},
          {"v1_edges", r.v1_edges},
          {"fresh_colors", r.fresh_colors},
          {"v1_edge_limit", r.v1_edge_limit},
          {"v1_edges_ok", r.v1_edges_ok},
          {"injective_colors", r.injective_colors},
          {"log2_bound", r.log2_bound},
          {"bound_ok", r.bound_ok},
          {"dipath_colors", r.dipath_colors},
          {"full_k", r.full_k},
          {"full_d", r.full_d},
          {"full_n", r.full_n},
          {"full_certified", r.full_certified},
          {"exact_substitute", r.exact_substitute},
          {"classes", std::move(classes)},
          {"warnings", r.warnings},
          {"verified", r.verified}};
}

inline void print(std::ostream& out, const json& j, const std::string& format) {
  if (format == "text") {
    for (const auto& [key, value] : j.items()) {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  } else {
    out << j.dump() << '\n';
  }
}

}  // namespace detail

/// Runs one subcommand. args excludes the program name. Returns 0 on success,
/// 1 on input errors, 2 when a verifier rejects the result.
inline int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"Injective edge-coloring and oriented coloring toolkit", "injcol"};
  app.require_subcommand(1);
  GlobalOptions opt;
  app.add_option("--seed", opt.seed, "Random seed")->default_val(0);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget-n", opt.budget_n, "Oracle vertex budget");
  app.add_option("--budget-m", opt.budget_m, "Oracle edge budget");
  app.add_option("--budget-d", opt.budget_d, "Largest full-graph order certified");
  app.add_option("--budget-k", opt.budget_k, "Largest full-graph part count certified");
  app.add_option("--g", opt.g, "Asserted Euler genus");
  app.add_flag("--unverified-full", opt.unverified_full, "Sample full graphs without certification");

  std::string graph_file;
  std::string coloring_file;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  CLI::App* inj_deg = sub("inj-degenerate", "Injective edge-coloring of a degenerate graph");
  inj_deg->add_option("graph", graph_file, "Graph file (default stdin)");
  CLI::App* inj_genus = sub("inj-genus", "Injective edge-coloring for asserted genus g");
  inj_genus->add_option("graph", graph_file, "Graph file (default stdin)");
  CLI::App* or_genus = sub("oriented-genus", "Oriented coloring for asserted genus g");
  or_genus->add_option("graph", graph_file, "Arc graph file (default stdin)");
  CLI::App* or_dipath = sub("oriented-2dipath", "Oriented coloring via 2-dipath coloring and a full graph");
  or_dipath->add_option("graph", graph_file, "Arc graph file (default stdin)");
  CLI::App* or_inj = sub("oriented-from-inj", "Oriented coloring from an injective edge-coloring");
  or_inj->add_option("coloring", coloring_file, "Edge coloring JSON")->required();
  or_inj->add_option("graph", graph_file, "Arc graph file (default stdin)");
  CLI::App* subdiv = sub("subdivide", "Subdivide a graph and color it from a proper coloring");
  subdiv->add_option("graph", graph_file, "Graph file (default stdin)");

  std::string param;
  CLI::App* exact = sub("exact", "Exact parameter by exhaustive search");
  exact->add_option("--param", param, "inj | chi | 2dipath | oriented")
      ->required()
      ->check(CLI::IsMember({"inj", "chi", "2dipath", "oriented"}));
  exact->add_option("graph", graph_file, "Graph file (default stdin)");

  std::string kind;
  CLI::App* verify = sub("verify", "Check a coloring against a graph");
  verify->add_option("--kind", kind, "injective | oriented | 2dipath | proper")
      ->required()
      ->check(CLI::IsMember({"injective", "oriented", "2dipath", "proper"}));
  verify->add_option("coloring", coloring_file, "Coloring JSON")->required();
  verify->add_option("graph", graph_file, "Graph file (default stdin)");

  std::string family = "complete";
  std::size_t gen_n = 0;
  std::size_t gen_cols = 0;
  std::size_t gen_d = 2;
  std::size_t copies = 0;
  double keep = 0.7;
  bool orient = false;
  CLI::App* gen = sub("gen", "Generate a graph");
  gen->add_option("--family", family)
      ->check(CLI::IsMember({"complete", "path", "cycle", "grid", "degenerate", "planar",
                             "random-genus-lb", "k5-padding"}));
  gen->add_option("--n", gen_n, "Vertex count, or rows for grid and planar");
  gen->add_option("--cols", gen_cols, "Columns for grid and planar");
  gen->add_option("--d", gen_d, "Degeneracy for the degenerate family");
  gen->add_option("--copies", copies, "K5 copies for k5-padding (pads the input graph)");
  gen->add_option("--keep", keep, "Edge keep probability for planar");
  gen->add_flag("--orient", orient, "Orient edges by fair coins");
  gen->add_option("graph", graph_file, "Base graph for k5-padding (default stdin)");

  std::size_t fam_k = 0;
  std::size_t fam_r = 0;
  CLI::App* fam = sub("family", "Build and verify a separating family");
  fam->add_option("--k", fam_k)->required();
  fam->add_option("--r", fam_r)->required();

  std::size_t full_k = 5;
  std::size_t full_d = 2;
  CLI::App* full = sub("full-graph", "Build a (k,d,N)-full graph");
  full->add_option("--k", full_k);
  full->add_option("--d", full_d);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << e.what() << '\n';
    return 1;
  }

  json report;
  bool valid = true;
  try {
    const OracleBudget budget = detail::oracle_budget(opt);
    if (inj_deg->parsed()) {
      const UndirectedGraph g = as_undirected(detail::read_graph(graph_file, in));
      DegenerateStats stats;
      const EdgeColoring c = injective_color_degenerate(g, opt.seed, &stats);
      valid = verify_injective(g, c);
      json classes = json::object();
      for (const auto& [cls, rs] : stats.per_class) {
        classes[std::to_string(cls)] = {{"nominal_rounds", rs.nominal_rounds}, {"rounds", rs.rounds}, {"d", rs.d}};
      }
      report = coloring_to_json(c);
      report["stats"] = {{"degeneracy", stats.degeneracy},
                         {"max_degree", stats.max_degree},
                         {"proper_colors", stats.proper_colors},
                         {"exact_fallback", stats.exact_fallback},
                         {"classes", std::move(classes)}};
      if (stats.max_degree >= 2) {
        report["stats"]["bound"] = degenerate_color_bound(stats.degeneracy, stats.max_degree, stats.proper_colors);
      }
    } else if (inj_genus->parsed()) {
      const UndirectedGraph g = as_undirected(detail::read_graph(graph_file, in));
      auto [c, rep] = injective_color_genus(g, detail::require_g(opt), opt.seed);
      valid = rep.verified;
      report = coloring_to_json(c);
      report["report"] = detail::report_json(rep);
    } else if (or_genus->parsed()) {
      const OrientedGraph d = as_oriented(detail::read_graph(graph_file, in));
      auto [c, rep] = oriented_color_genus(d, detail::require_g(opt), opt.seed);
      valid = rep.verified;
      report = coloring_to_json(c);
      report["report"] = detail::report_json(rep);
    } else if (or_dipath->parsed()) {
      const OrientedGraph d = as_oriented(detail::read_graph(graph_file, in));
      DipathOptions dopt;
      dopt.d_budget = opt.budget_d;
      dopt.k_budget = opt.budget_k;
      dopt.unverified_full = opt.unverified_full;
      dopt.oracle = budget;
      auto [c, rep] = oriented_color_genus_via_2dipath(d, detail::require_g(opt), opt.seed, dopt);
      valid = rep.verified;
      report = coloring_to_json(c);
      report["report"] = detail::report_json(rep);
    } else if (or_inj->parsed()) {
      const AnyColoring ac = detail::read_coloring(coloring_file, in);
      const OrientedGraph d = as_oriented(detail::read_graph(graph_file, in));
      const auto* ec = std::get_if<EdgeColoring>(&ac);
      if (!ec) throw Error(Errc::invalid_input, "expected an edge coloring");
      const VertexColoring c = oriented_from_injective(d, *ec);
      valid = verify_oriented_coloring(d, c);
      report = coloring_to_json(c);
      report["injective_colors"] = ec->num_colors();
    } else if (subdiv->parsed()) {
      const UndirectedGraph g = as_undirected(detail::read_graph(graph_file, in));
      const VertexColoring pc = degeneracy_greedy_color(g);
      const UndirectedGraph s = subdivide(g);
      const EdgeColoring c = injective_color_subdivision(g, pc);
      valid = verify_injective(s, c);
      report = coloring_to_json(c);
      report["proper_colors"] = pc.num_colors();
      report["graph"] = emit_graph(s);
    } else if (exact->parsed()) {
      const AnyGraph any = detail::read_graph(graph_file, in);
      std::size_t value = 0;
      if (param == "inj") {
        value = exact_injective_index(as_undirected(any), budget);
      } else if (param == "chi") {
        value = exact_chromatic_number(as_undirected(any), budget);
      } else if (param == "2dipath") {
        value = exact_2dipath_number(as_oriented(any), budget);
      } else if (const auto* d = std::get_if<OrientedGraph>(&any)) {
        value = exact_oriented_number(*d, budget);
      } else {
        value = exact_oriented_number_all_orientations(std::get<UndirectedGraph>(any), budget);
      }
      report = {{"value", value}};
    } else if (verify->parsed()) {
      const AnyColoring ac = detail::read_coloring(coloring_file, in);
      const AnyGraph any = detail::read_graph(graph_file, in);
      if (kind == "injective") {
        const auto* ec = std::get_if<EdgeColoring>(&ac);
        if (!ec) throw Error(Errc::invalid_input, "expected an edge coloring");
        try {
          valid = verify_injective(as_undirected(any), *ec);
        } catch (const Error&) {
          valid = false;
        }
      } else {
        const auto* vc = std::get_if<VertexColoring>(&ac);
        if (!vc) throw Error(Errc::invalid_input, "expected a vertex coloring");
        if (kind == "proper") {
          valid = is_proper_coloring(as_undirected(any), *vc);
        } else if (kind == "oriented") {
          valid = verify_oriented_coloring(as_oriented(any), *vc);
        } else {
          valid = verify_2dipath(as_oriented(any), *vc);
        }
      }
      report = json::object();
    } else if (gen->parsed()) {
      AnyGraph g = UndirectedGraph(0, std::vector<Edge>{});
      report = {{"family", family}};
      if (family == "complete") {
        g = complete_graph(gen_n);
      } else if (family == "path") {
        g = path(gen_n);
      } else if (family == "cycle") {
        g = cycle(gen_n);
      } else if (family == "grid") {
        g = grid(gen_n, gen_cols);
      } else if (family == "degenerate") {
        g = random_degenerate_graph(gen_n, gen_d, opt.seed);
      } else if (family == "planar") {
        g = random_planar_graph(gen_n, gen_cols, keep, opt.seed);
      } else if (family == "random-genus-lb") {
        LowerBoundReport lb;
        g = random_genus_lowerbound(gen_n, opt.seed, &lb);
        report["p"] = lb.p;
        report["edges"] = lb.edges;
        report["genus_budget"] = lb.genus_budget;
      } else {
        g = pad_with_k5(as_undirected(detail::read_graph(graph_file, in)), copies);
      }
      if (orient) {
        if (const auto* u = std::get_if<UndirectedGraph>(&g)) g = random_orientation(*u, derive_seed(opt.seed, 1));
      }
      if (opt.format == "text") {
        out << emit_graph(g);
        return 0;
      }
      report["graph"] = emit_graph(g);
    } else if (fam->parsed()) {
      const SeparatingFamily f = build_separating_family(fam_k, fam_r, opt.seed);
      valid = verify_separating_family(f);
      report = {{"k", f.k},
                {"r", f.r},
                {"size", f.sets.size()},
                {"size_bound", separating_family_size(fam_k, fam_r)},
                {"sets", f.sets}};
    } else if (full->parsed()) {
      if (full_d > opt.budget_d || full_k > opt.budget_k) {
        if (!opt.unverified_full) {
          throw Error(Errc::budget_exceeded, "full graph beyond the certification budget; pass --unverified-full to sample one");
        }
      }
      const bool certify = full_d <= opt.budget_d && full_k <= opt.budget_k;
      const FullGraph h = certify ? build_full_graph(full_k, full_d, opt.seed)
                                  : sample_full_graph(full_k, full_d, opt.seed);
      valid = !certify || h.certified();
      report = {{"k", h.k()},
                {"d", h.d()},
                {"N", h.part_size()},
                {"vertices", h.n()},
                {"certified", h.certified()},
                {"attempts", h.attempts()}};
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (!exact->parsed() && !verify->parsed()) report["seed"] = opt.seed;
  if (!exact->parsed()) report["valid"] = valid;
  detail::print(out, report, opt.format);
  return valid ? 0 : 2;
}

}  // namespace injcol::cli
