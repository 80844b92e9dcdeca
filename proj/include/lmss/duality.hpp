#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lmss/error.hpp"
#include "lmss/graph.hpp"
#include "lmss/kec.hpp"
#include "lmss/matching.hpp"
#include "lmss/report.hpp"
#include "lmss/stability.hpp"

namespace lmss {

namespace detail {

/// Translates edge ids of an induced subgraph back to edge ids of the parent.
inline EdgeSet edges_to_parent(const Graph& g, const InducedSubgraph& ind,
                               const EdgeSet& sub_edges) {
  std::vector<int> ids;
  ids.reserve(sub_edges.size());
  for (int e : sub_edges) {
    auto [a, b] = ind.graph.edge(e);
    ids.push_back(g.edge_id(ind.to_parent[a], ind.to_parent[b]));
  }
  return EdgeSet(std::move(ids));
}

/// Vertex set of the line graph corresponding to a set of edges.
inline VertexSet line_image(const LineGraph& lg, const EdgeSet& edges) {
  std::vector<int> ids;
  ids.reserve(edges.size());
  for (int e : edges) ids.push_back(lg.line_vertex_of_edge[e]);
  return VertexSet(std::move(ids));
}

/// Inverse of line_image for single vertices.
inline EdgeSet edges_of_line_vertices(const LineGraph& lg,
                                      const VertexSet& line_vertices) {
  std::vector<int> inverse(lg.graph.vertex_count(), -1);
  for (std::size_t e = 0; e < lg.line_vertex_of_edge.size(); ++e)
    inverse[lg.line_vertex_of_edge[e]] = static_cast<int>(e);
  std::vector<int> ids;
  ids.reserve(line_vertices.size());
  for (int v : line_vertices) ids.push_back(inverse[v]);
  return EdgeSet(std::move(ids));
}

}  // namespace detail

/// Checks the forward transfer: whenever S is a locally maximum stable set
/// whose closed neighborhood induces a recognized subgraph H, every non-empty
/// maximum matching of H is, as a vertex set of the line graph, again a
/// locally maximum stable set there. Failing instances carry a larger stable
/// set of the relevant line-graph neighborhood as disproof.
inline VerificationReport verify_theorem2(const Graph& g) {
  VerificationReport report;
  report.graph_id = detail::graph_id(g);
  report.check = "theorem2";
  report.status = CheckStatus::pass;
  LineGraph lg = line_graph(g);
  for (const VertexSet& s : enumerate_psi(g)) {
    VertexSet closed = neighborhood(g, s, true);
    InducedSubgraph ind = induced_subgraph(g, closed);
    if (!detail::ke_holds(ind.graph)) continue;
    for (const Matching& mh : enumerate_maximum_matchings(ind.graph)) {
      if (mh.empty()) continue;
      EdgeSet mg = detail::edges_to_parent(g, ind, mh.edges());
      VertexSet image = detail::line_image(lg, mg);
      CheckInstance inst;
      inst.stable_set = s;
      inst.subgraph =
          SubgraphSummary{closed, ind.graph.edge_count(), true};
      inst.matching = mg;
      if (is_local_maximum_stable(lg.graph, image)) {
        inst.outcome = InstanceOutcome::pass;
      } else {
        inst.outcome = InstanceOutcome::fail;
        inst.note = "matching image is not locally maximum in the line graph";
        VertexSet around = neighborhood(lg.graph, image, true);
        InducedSubgraph li = induced_subgraph(lg.graph, around);
        VertexSet witness = stability_number(li.graph).witness;
        std::vector<int> line_ids;
        for (int v : witness) line_ids.push_back(li.to_parent[v]);
        inst.counter_edges =
            detail::edges_of_line_vertices(lg, VertexSet(std::move(line_ids)));
        report.status = CheckStatus::fail;
      }
      report.instances.push_back(std::move(inst));
    }
  }
  return report;
}

/// Checks the matching extension consequence: under the same hypotheses as
/// the forward transfer, each maximum matching of the neighborhood subgraph
/// extends to a maximum matching of the whole graph. Pairs whose subgraph is
/// not recognized are exercised anyway; the ones that fail to extend are
/// recorded as informational, since no guarantee covers them.
inline VerificationReport verify_corollary1(const Graph& g) {
  VerificationReport report;
  report.graph_id = detail::graph_id(g);
  report.check = "corollary1";
  report.status = CheckStatus::pass;
  int target = matching_number(g);
  for (const VertexSet& s : enumerate_psi(g)) {
    VertexSet closed = neighborhood(g, s, true);
    InducedSubgraph ind = induced_subgraph(g, closed);
    bool ke = detail::ke_holds(ind.graph);
    for (const Matching& mh : enumerate_maximum_matchings(ind.graph)) {
      if (mh.empty()) continue;
      EdgeSet mg = detail::edges_to_parent(g, ind, mh.edges());
      std::optional<Matching> ext =
          extendable_to_maximum(g, Matching::from(g, mg));
      bool extended = ext.has_value() && mg.subset_of(ext->edges()) &&
                      ext->size() == target;
      if (ke) {
        CheckInstance inst;
        inst.stable_set = s;
        inst.subgraph =
            SubgraphSummary{closed, ind.graph.edge_count(), true};
        inst.matching = mg;
        if (extended) {
          inst.outcome = InstanceOutcome::pass;
          inst.matching_extension = ext->edges();
        } else {
          inst.outcome = InstanceOutcome::fail;
          inst.note = "no maximum matching of the graph contains it";
          report.status = CheckStatus::fail;
        }
        report.instances.push_back(std::move(inst));
      } else if (!extended) {
        CheckInstance inst;
        inst.stable_set = s;
        inst.subgraph =
            SubgraphSummary{closed, ind.graph.edge_count(), false};
        inst.matching = mg;
        inst.outcome = InstanceOutcome::informational;
        inst.note = "subgraph not recognized and matching does not extend";
        report.instances.push_back(std::move(inst));
      }
    }
  }
  return report;
}

/// Checks that every locally maximum stable set extends to a maximum stable
/// set. The returned extension is validated independently of the search that
/// produced it.
inline VerificationReport verify_nt_extension(const Graph& g) {
  VerificationReport report;
  report.graph_id = detail::graph_id(g);
  report.check = "nt";
  report.status = CheckStatus::pass;
  int alpha = alpha_value(g);
  for (const VertexSet& s : enumerate_psi(g)) {
    CheckInstance inst;
    inst.stable_set = s;
    bool ok = false;
    try {
      VertexSet w = extend_to_maximum_stable(g, s);
      ok = s.subset_of(w) && is_stable(g, w) && w.size() == alpha;
      if (ok) inst.stable_extension = std::move(w);
    } catch (const Error&) {
      ok = false;
    }
    if (ok) {
      inst.outcome = InstanceOutcome::pass;
    } else {
      inst.outcome = InstanceOutcome::fail;
      inst.note = "no maximum stable set contains it";
      report.status = CheckStatus::fail;
    }
    report.instances.push_back(std::move(inst));
  }
  return report;
}

/// A matching whose line-graph image is locally maximum stable, together
/// with a stable set certifying the forward hypotheses when one exists.
struct ConverseWitness {
  EdgeSet matching;
  std::optional<VertexSet> witness;
};

/// For every non-empty matching whose image lands in the line graph's local
/// maximum family, searches for a stable set S (in name order) such that the
/// closed neighborhood subgraph H is recognized, contains the matching, and
/// the matching is maximum in H. Absence of a witness shows the forward
/// transfer cannot be reversed for that matching.
inline std::vector<ConverseWitness> converse_witnesses(const Graph& g) {
  LineGraph lg = line_graph(g);
  StableSetFamily psi = enumerate_psi(g);

  struct Candidate {
    VertexSet closed;
    bool ke = false;
    int mu = 0;
  };
  // Witness search prefers the smallest stable set, ties broken by name
  // sequence; enumerate_psi already delivers the name order.
  std::stable_sort(psi.begin(), psi.end(),
                   [](const VertexSet& a, const VertexSet& b) {
                     return a.size() < b.size();
                   });

  std::vector<Candidate> candidates;
  candidates.reserve(psi.size());
  for (const VertexSet& s : psi) {
    VertexSet closed = neighborhood(g, s, true);
    InducedSubgraph ind = induced_subgraph(g, closed);
    candidates.push_back(
        Candidate{closed, detail::ke_holds(ind.graph),
                  matching_number(ind.graph)});
  }

  std::vector<ConverseWitness> out;
  for (const Matching& m : enumerate_matchings(g)) {
    if (m.empty()) continue;
    VertexSet image = detail::line_image(lg, m.edges());
    if (!is_local_maximum_stable(lg.graph, image)) continue;
    ConverseWitness cw;
    cw.matching = m.edges();
    for (std::size_t i = 0; i < psi.size(); ++i) {
      if (!candidates[i].ke) continue;
      if (m.size() != candidates[i].mu) continue;
      bool inside = true;
      for (int e : m.edges()) {
        auto [u, v] = g.edge(e);
        if (!candidates[i].closed.contains(u) ||
            !candidates[i].closed.contains(v)) {
          inside = false;
          break;
        }
      }
      if (inside) {
        cw.witness = psi[i];
        break;
      }
    }
    out.push_back(std::move(cw));
  }
  return out;
}

/// Probe for the transfer of "no proper locally maximum stable set" from the
/// line graph back to the root graph. Reports what holds on each side and
/// whether the pair is a candidate against that transfer; it never asserts
/// an answer. Proper means locally maximum but below the stability number.
struct OpenQuestionProbe {
  bool g_has_proper = false;
  bool lg_has_proper = false;
  std::optional<VertexSet> g_witness;
  std::optional<EdgeSet> lg_witness;
  int alpha_g = 0;
  int alpha_lg = 0;
  bool candidate = false;
};

inline OpenQuestionProbe open_question_probe(const Graph& g) {
  if (!is_connected(g))
    fail(ErrorKind::disconnected, "probe requires a connected graph");
  OpenQuestionProbe probe;
  probe.alpha_g = alpha_value(g);
  std::optional<VertexSet> gw = find_proper_lmss(g);
  probe.g_has_proper = gw.has_value();
  probe.g_witness = std::move(gw);
  LineGraph lg = line_graph(g);
  probe.alpha_lg = alpha_value(lg.graph);
  std::optional<VertexSet> lw = find_proper_lmss(lg.graph);
  probe.lg_has_proper = lw.has_value();
  if (lw) probe.lg_witness = detail::edges_of_line_vertices(lg, *lw);
  probe.candidate = probe.g_has_proper && !probe.lg_has_proper;
  return probe;
}

}  // namespace lmss
