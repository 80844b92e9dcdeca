#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lmss/atlas.hpp"
#include "lmss/duality.hpp"
#include "lmss/error.hpp"
#include "lmss/fixtures.hpp"
#include "lmss/formats.hpp"
#include "lmss/graph.hpp"
#include "lmss/json_report.hpp"
#include "lmss/kec.hpp"
#include "lmss/matching.hpp"
#include "lmss/stability.hpp"

namespace lmss::cli {

struct CommandResult {
  ordered_json payload;
  std::string human;
  int exit_code = 0;
};

inline std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path);
  if (!in) fail(ErrorKind::parse_error, "cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

/// Loads a graph from a path ("-" reads standard input) in either format.
inline Graph load_graph(const std::string& path, const std::string& format) {
  std::string text = read_source(path);
  if (format == "graph6") {
    std::vector<Graph> graphs = parse_graph6_lines(text);
    if (graphs.empty())
      fail(ErrorKind::parse_error, "no graph6 record in '" + path + "'");
    return graphs.front();
  }
  if (format != "edgelist")
    fail(ErrorKind::parse_error, "unknown format '" + format + "'");
  return parse_edge_list(text, path == "-" ? "stdin" : path);
}

inline std::string join(const std::vector<std::string>& parts,
                        const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline ordered_json graph_header_json(const Graph& g) {
  ordered_json j;
  j["label"] = detail::graph_id(g);
  j["vertex_count"] = g.vertex_count();
  j["edge_count"] = g.edge_count();
  return j;
}

inline CommandResult cmd_analyze(const Graph& g) {
  CommandResult res;
  StabilityResult alpha = stability_number(g);
  Matching mu = maximum_matching(g);
  std::optional<Bipartition> parts = is_bipartite(g);
  std::optional<KECertificate> ke = is_koenig_egervary(g);
  StableSetFamily omega = enumerate_maximum_stable_sets(g);
  StableSetFamily psi = enumerate_psi(g);
  std::optional<VertexSet> proper = find_proper_lmss(g);

  ordered_json j;
  j["schema_version"] = schema_version;
  j["graph"] = graph_header_json(g);
  j["alpha"] = alpha.value;
  j["alpha_witness"] = vertex_set_json(g, alpha.witness);
  j["mu"] = mu.size();
  j["mu_witness"] = edge_set_json(g, mu.edges());
  if (parts) {
    ordered_json b;
    b["left"] = vertex_set_json(g, parts->left);
    b["right"] = vertex_set_json(g, parts->right);
    j["bipartite"] = b;
  } else {
    j["bipartite"] = nullptr;
  }
  if (ke) {
    ordered_json c;
    c["stable_set"] = vertex_set_json(g, ke->stable_set);
    c["matching"] = edge_set_json(g, ke->matching);
    j["koenig_egervary"] = c;
  } else {
    j["koenig_egervary"] = nullptr;
  }
  j["omega_count"] = static_cast<int>(omega.size());
  j["psi_count"] = static_cast<int>(psi.size());
  j["proper_lmss"] = proper ? vertex_set_json(g, *proper)
                            : ordered_json(nullptr);
  res.payload = j;

  std::ostringstream h;
  h << "graph " << detail::graph_id(g) << ": " << g.vertex_count()
    << " vertices, " << g.edge_count() << " edges\n";
  h << "alpha: " << alpha.value << "  witness: "
    << join(sorted_names(g, alpha.witness), " ") << "\n";
  h << "mu: " << mu.size() << "  witness: "
    << join(sorted_edge_names(g, mu.edges()), " ") << "\n";
  h << "bipartite: " << (parts ? "yes" : "no") << "\n";
  if (ke) {
    h << "koenig_egervary: yes  stable: "
      << join(sorted_names(g, ke->stable_set), " ") << "  matching: "
      << join(sorted_edge_names(g, ke->matching), " ") << "\n";
  } else {
    h << "koenig_egervary: no\n";
  }
  h << "maximum_stable_sets: " << omega.size()
    << "  locally_maximum: " << psi.size() << "\n";
  h << "proper_lmss: "
    << (proper ? join(sorted_names(g, *proper), " ") : std::string("none"))
    << "\n";
  res.human = h.str();
  return res;
}

inline VerificationReport run_named_check(const Graph& g,
                                          const std::string& check) {
  if (check == "theorem2") return verify_theorem2(g);
  if (check == "corollary1") return verify_corollary1(g);
  if (check == "lemma-match") return verify_matching_cut_lemma(g);
  if (check == "nt") return verify_nt_extension(g);
  fail(ErrorKind::parse_error, "unknown check '" + check + "'");
}

inline CommandResult cmd_verify(const Graph& g, const std::string& check) {
  CommandResult res;
  VerificationReport report = run_named_check(g, check);
  res.payload = report_json(g, report);
  res.exit_code = report.status == CheckStatus::fail ? 1 : 0;
  std::ostringstream h;
  h << "check " << check << " on " << report.graph_id << ": "
    << to_string(report.status) << " (" << report.instances.size()
    << " instances, " << report.violations().size() << " violations)\n";
  for (const CheckInstance& inst : report.violations()) {
    h << "  violated by stable_set {"
      << join(sorted_names(g, inst.stable_set), " ") << "}";
    if (inst.matching)
      h << " matching {" << join(sorted_edge_names(g, *inst.matching), " ")
        << "}";
    if (!inst.note.empty()) h << ": " << inst.note;
    h << "\n";
  }
  res.human = h.str();
  return res;
}

inline std::string scan_human(const ScanSummary& summary) {
  std::ostringstream h;
  h << "scan " << summary.source << ": " << summary.graphs_processed
    << " graphs\n";
  for (const std::string& c : summary.checks) {
    auto it = summary.counts.find(c);
    if (it == summary.counts.end()) continue;
    h << "  " << c << ": " << it->second.pass << " pass, " << it->second.fail
      << " fail, " << it->second.not_applicable << " not applicable\n";
  }
  for (const std::string& c : summary.checks) {
    if (c != "open_question") continue;
    h << "  open_question: neither=" << summary.oq_neither
      << " graph_only=" << summary.oq_graph_only
      << " line_only=" << summary.oq_line_only << " both=" << summary.oq_both
      << " candidates=" << summary.candidates.size() << "\n";
  }
  if (summary.violation) {
    h << "  violation: " << summary.violation->check << " on "
      << summary.violation->graph6 << "\n";
  } else {
    h << "  violation: none\n";
  }
  return h.str();
}

inline CommandResult cmd_verify_atlas(const std::string& check, int max_n,
                                      int jobs) {
  ScanCheck sc = ScanCheck::theorem2;
  if (check == "theorem2") sc = ScanCheck::theorem2;
  else if (check == "corollary1") sc = ScanCheck::corollary1;
  else if (check == "lemma-match") sc = ScanCheck::lemma_match;
  else if (check == "nt") sc = ScanCheck::nt_extension;
  else fail(ErrorKind::parse_error, "unknown check '" + check + "'");
  ScanConfig config;
  config.max_n = max_n;
  config.checks = {sc};
  config.jobs = jobs;
  ScanSummary summary = scan(config);
  CommandResult res;
  res.payload = scan_summary_json(summary);
  res.exit_code = summary.violation ? 1 : 0;
  res.human = scan_human(summary);
  return res;
}

/// Parses "u-v,w-x" into edge ids. Each token must split at exactly one
/// dash position into two existing vertex names joined by an edge.
inline EdgeSet parse_matching_text(const Graph& g, const std::string& text) {
  std::vector<int> ids;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    while (!token.empty() && token.front() == ' ') token.erase(0, 1);
    while (!token.empty() && token.back() == ' ') token.pop_back();
    if (token.empty()) continue;
    if (token.find('-') == std::string::npos)
      fail(ErrorKind::parse_error, "edge token '" + token + "' lacks a dash");
    int found = -1;
    int splits = 0;
    for (std::size_t i = 1; i + 1 <= token.size() - 1; ++i) {
      if (token[i] != '-') continue;
      std::string a = token.substr(0, i);
      std::string b = token.substr(i + 1);
      if (!g.has_vertex_name(a) || !g.has_vertex_name(b)) continue;
      int e = g.find_edge(g.vertex(a), g.vertex(b));
      if (e < 0) continue;
      ++splits;
      found = e;
    }
    if (splits > 1)
      fail(ErrorKind::parse_error, "ambiguous edge token '" + token + "'");
    if (found < 0)
      fail(ErrorKind::unknown_edge, "no edge matches token '" + token + "'");
    ids.push_back(found);
  }
  return EdgeSet(std::move(ids));
}

inline CommandResult cmd_extend_matching(const Graph& g,
                                         const std::string& matching_text) {
  Matching m = Matching::from(g, parse_matching_text(g, matching_text));
  int mu = matching_number(g);
  bool maximal = is_maximal_matching(g, m);
  std::optional<Matching> ext = extendable_to_maximum(g, m);

  CommandResult res;
  ordered_json j;
  j["schema_version"] = schema_version;
  j["graph"] = graph_header_json(g);
  j["matching"] = edge_set_json(g, m.edges());
  j["mu"] = mu;
  j["maximal"] = maximal;
  j["extendable"] = ext.has_value();
  j["extension"] = ext ? edge_set_json(g, ext->edges())
                       : ordered_json(nullptr);
  res.payload = j;

  std::ostringstream h;
  h << "matching {" << join(sorted_edge_names(g, m.edges()), " ") << "} on "
    << detail::graph_id(g) << " (size " << m.size() << ", "
    << (maximal ? "maximal" : "not maximal") << ")\n";
  h << "mu: " << mu << "\n";
  if (ext) {
    h << "extends to maximum matching {"
      << join(sorted_edge_names(g, ext->edges()), " ") << "}\n";
  } else {
    h << "no maximum matching contains it\n";
  }
  res.human = h.str();
  return res;
}

inline CommandResult cmd_line_graph(const Graph& g) {
  LineGraph lg = line_graph(g);
  CommandResult res;
  ordered_json j;
  j["schema_version"] = schema_version;
  j["graph"] = graph_header_json(g);
  ordered_json l;
  l["vertex_count"] = lg.graph.vertex_count();
  l["edge_count"] = lg.graph.edge_count();
  l["edge_list"] = write_edge_list(lg.graph);
  j["line_graph"] = l;
  ordered_json map = ordered_json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    ordered_json one;
    one["edge"] = g.edge_name(e);
    one["line_vertex"] = lg.graph.name(lg.line_vertex_of_edge[e]);
    map.push_back(one);
  }
  j["line_map"] = map;
  res.payload = j;
  res.human = write_edge_list(lg.graph);
  return res;
}

inline CommandResult cmd_psi(const Graph& g, int max_size) {
  StableSetFamily psi = enumerate_psi(g, max_size);
  CommandResult res;
  ordered_json j;
  j["schema_version"] = schema_version;
  j["graph"] = graph_header_json(g);
  j["alpha"] = alpha_value(g);
  j["max_size"] = max_size < 0 ? ordered_json(nullptr) : ordered_json(max_size);
  j["count"] = static_cast<int>(psi.size());
  ordered_json arr = ordered_json::array();
  for (const VertexSet& s : psi) arr.push_back(vertex_set_json(g, s));
  j["members"] = arr;
  res.payload = j;
  std::ostringstream h;
  h << "locally maximum stable sets of " << detail::graph_id(g) << ": "
    << psi.size() << "\n";
  for (const VertexSet& s : psi)
    h << "  {" << join(sorted_names(g, s), " ") << "}\n";
  res.human = h.str();
  return res;
}

inline CommandResult cmd_scan(int max_n,
                              const std::vector<std::string>& check_names,
                              const std::string& graph6_path, int jobs) {
  ScanConfig config;
  config.jobs = jobs;
  for (const std::string& nm : check_names) {
    std::optional<ScanCheck> c = scan_check_from_string(nm);
    if (!c) fail(ErrorKind::parse_error, "unknown check '" + nm + "'");
    config.checks.push_back(*c);
  }
  if (!graph6_path.empty()) {
    config.graphs = parse_graph6_lines(read_source(graph6_path));
    config.source =
        "graph6:" + (graph6_path == "-" ? std::string("stdin") : graph6_path);
    if (config.graphs.empty())
      fail(ErrorKind::parse_error, "no graph6 records in input");
  } else {
    config.max_n = max_n;
  }
  ScanSummary summary = scan(config);
  CommandResult res;
  res.payload = scan_summary_json(summary);
  res.exit_code = summary.violation ? 1 : 0;
  res.human = scan_human(summary);
  return res;
}

}  // namespace lmss::cli
