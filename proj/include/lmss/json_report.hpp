#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "lmss/atlas.hpp"
#include "lmss/graph.hpp"
#include "lmss/report.hpp"

namespace lmss {

using ordered_json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// Sets always serialize as arrays of names in ascending order, so payloads
/// are independent of internal id assignment.
inline ordered_json vertex_set_json(const Graph& g, const VertexSet& s) {
  ordered_json arr = ordered_json::array();
  for (const std::string& nm : sorted_names(g, s)) arr.push_back(nm);
  return arr;
}

inline ordered_json edge_set_json(const Graph& g, const EdgeSet& s) {
  ordered_json arr = ordered_json::array();
  for (const std::string& nm : sorted_edge_names(g, s)) arr.push_back(nm);
  return arr;
}

inline ordered_json instance_json(const Graph& g, const CheckInstance& inst) {
  ordered_json j;
  j["stable_set"] = vertex_set_json(g, inst.stable_set);
  if (inst.subgraph) {
    ordered_json sub;
    sub["vertices"] = vertex_set_json(g, inst.subgraph->vertices);
    sub["edge_count"] = inst.subgraph->edge_count;
    sub["koenig_egervary"] = inst.subgraph->koenig_egervary;
    j["subgraph"] = sub;
  }
  if (inst.matching) j["matching"] = edge_set_json(g, *inst.matching);
  j["outcome"] = to_string(inst.outcome);
  if (inst.matching_extension)
    j["matching_extension"] = edge_set_json(g, *inst.matching_extension);
  if (inst.stable_extension)
    j["stable_extension"] = vertex_set_json(g, *inst.stable_extension);
  if (inst.counter_edges)
    j["counter_set"] = edge_set_json(g, *inst.counter_edges);
  if (!inst.note.empty()) j["note"] = inst.note;
  return j;
}

inline ordered_json report_json(const Graph& g,
                                const VerificationReport& report) {
  ordered_json j;
  j["schema_version"] = schema_version;
  j["graph"] = report.graph_id;
  j["check"] = report.check;
  j["status"] = to_string(report.status);
  j["instance_count"] = static_cast<int>(report.instances.size());
  j["violation_count"] = static_cast<int>(report.violations().size());
  ordered_json arr = ordered_json::array();
  for (const CheckInstance& inst : report.instances)
    arr.push_back(instance_json(g, inst));
  j["instances"] = arr;
  return j;
}

inline ordered_json scan_summary_json(const ScanSummary& summary) {
  ordered_json j;
  j["schema_version"] = schema_version;
  j["source"] = summary.source;
  ordered_json checks = ordered_json::array();
  for (const std::string& c : summary.checks) checks.push_back(c);
  j["checks"] = checks;
  j["graphs_processed"] = summary.graphs_processed;
  ordered_json counts;
  for (const std::string& c : summary.checks) {
    auto it = summary.counts.find(c);
    if (it == summary.counts.end()) continue;
    ordered_json one;
    one["pass"] = it->second.pass;
    one["fail"] = it->second.fail;
    one["not_applicable"] = it->second.not_applicable;
    counts[c] = one;
  }
  j["counts"] = counts;
  bool probed = false;
  for (const std::string& c : summary.checks)
    if (c == "open_question") probed = true;
  if (probed) {
    ordered_json oq;
    ordered_json table;
    table["neither"] = summary.oq_neither;
    table["graph_only"] = summary.oq_graph_only;
    table["line_only"] = summary.oq_line_only;
    table["both"] = summary.oq_both;
    oq["classification"] = table;
    ordered_json cands = ordered_json::array();
    for (const OpenQuestionCandidate& c : summary.candidates) {
      ordered_json one;
      one["graph6"] = c.graph6;
      one["vertex_count"] = c.vertex_count;
      one["edge_count"] = c.edge_count;
      one["alpha_graph"] = c.alpha_g;
      one["alpha_line_graph"] = c.alpha_lg;
      ordered_json w = ordered_json::array();
      for (const std::string& nm : c.witness) w.push_back(nm);
      one["witness"] = w;
      cands.push_back(one);
    }
    oq["candidates"] = cands;
    j["open_question"] = oq;
  }
  if (summary.violation) {
    ordered_json v;
    v["graph6"] = summary.violation->graph6;
    v["check"] = summary.violation->check;
    v["report"] = report_json(summary.violation->graph,
                              summary.violation->report);
    j["violation"] = v;
  }
  return j;
}

}  // namespace lmss
