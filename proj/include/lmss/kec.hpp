#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "lmss/error.hpp"
#include "lmss/formats.hpp"
#include "lmss/graph.hpp"
#include "lmss/matching.hpp"
#include "lmss/report.hpp"
#include "lmss/stability.hpp"

namespace lmss {

/// Witness pair for stability number plus matching number covering the whole
/// vertex set.
struct KECertificate {
  VertexSet stable_set;
  EdgeSet matching;
};

namespace detail {

inline bool ke_holds(const Graph& g) {
  return alpha_value(g) + matching_number(g) == g.vertex_count();
}

inline std::string graph_id(const Graph& g) {
  if (!g.label().empty()) return g.label();
  if (g.vertex_count() <= 62) return encode_graph6(g);
  return "unlabeled";
}

}  // namespace detail

/// Recognizes graphs whose stability number and matching number sum to the
/// vertex count, returning the witnesses. The certificate is re-verified
/// before it is handed out: a maximum stable set and a maximum matching of
/// the stated sizes, together covering the vertex count.
inline std::optional<KECertificate> is_koenig_egervary(const Graph& g) {
  int a = alpha_value(g);
  int mu = matching_number(g);
  if (a + mu != g.vertex_count()) return std::nullopt;
  KECertificate cert{stability_number(g).witness, maximum_matching(g).edges()};
  if (!is_stable(g, cert.stable_set) || cert.stable_set.size() != a)
    throw std::logic_error("stable witness failed re-verification");
  Matching m = Matching::from(g, cert.matching);
  if (m.size() != mu)
    throw std::logic_error("matching witness failed re-verification");
  return cert;
}

/// For a recognized graph, every maximum matching must lie inside the cut
/// between any maximum stable set and its complement, and match its size.
/// Checks every such pair. On other graphs the answer is NotApplicable, with
/// the first failing pair (when one exists) kept as an illustration.
inline VerificationReport verify_matching_cut_lemma(const Graph& g) {
  VerificationReport report;
  report.graph_id = detail::graph_id(g);
  report.check = "lemma-match";
  bool ke = detail::ke_holds(g);
  StableSetFamily omega = enumerate_maximum_stable_sets(g);
  std::vector<Matching> matchings = enumerate_maximum_matchings(g);
  VertexSet all = g.all_vertices();
  report.status = ke ? CheckStatus::pass : CheckStatus::not_applicable;
  for (const VertexSet& s : omega) {
    VertexSet rest = all.difference(s);
    // A stable set covering everything leaves an empty cut.
    EdgeSet cut = rest.empty() || s.empty() ? EdgeSet{} : cut_set(g, s, rest);
    for (const Matching& m : matchings) {
      bool contained = m.edges().subset_of(cut);
      bool sized = m.size() == g.vertex_count() - s.size();
      if (ke) {
        CheckInstance inst;
        inst.stable_set = s;
        inst.matching = m.edges();
        inst.outcome = contained && sized ? InstanceOutcome::pass
                                          : InstanceOutcome::fail;
        if (!contained) inst.note = "matching leaves the cut";
        else if (!sized) inst.note = "matching size differs from complement";
        report.instances.push_back(std::move(inst));
        if (report.instances.back().outcome == InstanceOutcome::fail)
          report.status = CheckStatus::fail;
      } else if (!contained || !sized) {
        CheckInstance inst;
        inst.stable_set = s;
        inst.matching = m.edges();
        inst.outcome = InstanceOutcome::informational;
        inst.note = contained ? "matching size differs from complement"
                              : "matching leaves the cut";
        report.instances.push_back(std::move(inst));
        return report;
      }
    }
  }
  return report;
}

}  // namespace lmss
