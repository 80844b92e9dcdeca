#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lmss/canonical.hpp"
#include "lmss/duality.hpp"
#include "lmss/error.hpp"
#include "lmss/formats.hpp"
#include "lmss/graph.hpp"
#include "lmss/kec.hpp"
#include "lmss/report.hpp"

namespace lmss {

/// One connected graph per isomorphism class on exactly n vertices, in a
/// deterministic order: labeled adjacency masks ascending, first hit kept.
/// Vertices are named "0".."n-1"; the label is the graph6 form. n runs 1..8;
/// 8 is allowed but takes a while.
inline std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 8)
    fail(ErrorKind::too_large, "supported vertex counts are 1 through 8");
  int pair_count = n * (n - 1) / 2;
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  std::vector<std::uint64_t> adj(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count);
       ++mask) {
    std::fill(adj.begin(), adj.end(), 0);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        if ((mask >> bit) & 1) {
          adj[i] |= std::uint64_t{1} << j;
          adj[j] |= std::uint64_t{1} << i;
        }
      }
    }
    std::uint64_t all =
        n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t visited = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t t = frontier; t;) {
        int v = std::countr_zero(t);
        t &= t - 1;
        next |= adj[v];
      }
      frontier = next & ~visited;
      visited |= next;
    }
    if (visited != all) continue;
    if (!seen.insert(detail::certificate_from_masks(n, adj)).second) continue;
    std::vector<std::pair<int, int>> pairs;
    bit = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        if ((mask >> bit) & 1) pairs.emplace_back(i, j);
      }
    }
    Graph g = graph_from_index_pairs(n, std::move(pairs));
    out.push_back(g.with_label(encode_graph6(g)));
  }
  return out;
}

enum class ScanCheck {
  theorem2,
  corollary1,
  lemma_match,
  nt_extension,
  open_question,
};

inline const char* to_string(ScanCheck c) {
  switch (c) {
    case ScanCheck::theorem2: return "theorem2";
    case ScanCheck::corollary1: return "corollary1";
    case ScanCheck::lemma_match: return "lemma_match";
    case ScanCheck::nt_extension: return "nt_extension";
    case ScanCheck::open_question: return "open_question";
  }
  return "?";
}

inline std::vector<ScanCheck> all_scan_checks() {
  return {ScanCheck::theorem2, ScanCheck::corollary1, ScanCheck::lemma_match,
          ScanCheck::nt_extension, ScanCheck::open_question};
}

inline std::optional<ScanCheck> scan_check_from_string(const std::string& s) {
  for (ScanCheck c : all_scan_checks())
    if (s == to_string(c)) return c;
  return std::nullopt;
}

struct ScanConfig {
  int max_n = 6;
  std::vector<ScanCheck> checks;  // empty means all
  std::vector<Graph> graphs;      // when set, scanned instead of the atlas
  std::string source;             // description serialized with the results
  int jobs = 1;
};

struct CheckCounts {
  int pass = 0;
  int fail = 0;
  int not_applicable = 0;
};

/// Candidate against the open-question transfer: the graph has a proper
/// locally maximum stable set while its line graph has none. Carries enough
/// data to re-verify the claim from scratch.
struct OpenQuestionCandidate {
  std::string graph6;
  int vertex_count = 0;
  int edge_count = 0;
  int alpha_g = 0;
  int alpha_lg = 0;
  std::vector<std::string> witness;  // proper set in the graph, name sorted
};

struct ScanViolation {
  std::string graph6;
  std::string check;
  Graph graph;
  VerificationReport report;
};

struct ScanSummary {
  std::string source;
  std::vector<std::string> checks;
  int graphs_processed = 0;
  std::map<std::string, CheckCounts> counts;
  // Open-question classification: proper locally maximum stable sets present
  // in the graph and/or its line graph.
  int oq_neither = 0;
  int oq_graph_only = 0;
  int oq_line_only = 0;
  int oq_both = 0;
  std::vector<OpenQuestionCandidate> candidates;
  std::optional<ScanViolation> violation;
};

namespace detail {

struct PerGraphResult {
  std::map<std::string, CheckStatus> status;
  std::map<std::string, VerificationReport> failed_reports;
  std::optional<OpenQuestionProbe> probe;
  bool probe_skipped = false;
};

inline PerGraphResult run_scan_checks(const Graph& g,
                                      const std::vector<ScanCheck>& checks) {
  PerGraphResult r;
  for (ScanCheck c : checks) {
    std::string key = to_string(c);
    switch (c) {
      case ScanCheck::theorem2: {
        VerificationReport rep = verify_theorem2(g);
        r.status[key] = rep.status;
        if (rep.status == CheckStatus::fail)
          r.failed_reports.emplace(key, std::move(rep));
        break;
      }
      case ScanCheck::corollary1: {
        VerificationReport rep = verify_corollary1(g);
        r.status[key] = rep.status;
        if (rep.status == CheckStatus::fail)
          r.failed_reports.emplace(key, std::move(rep));
        break;
      }
      case ScanCheck::lemma_match: {
        VerificationReport rep = verify_matching_cut_lemma(g);
        r.status[key] = rep.status;
        if (rep.status == CheckStatus::fail)
          r.failed_reports.emplace(key, std::move(rep));
        break;
      }
      case ScanCheck::nt_extension: {
        VerificationReport rep = verify_nt_extension(g);
        r.status[key] = rep.status;
        if (rep.status == CheckStatus::fail)
          r.failed_reports.emplace(key, std::move(rep));
        break;
      }
      case ScanCheck::open_question: {
        try {
          r.probe = open_question_probe(g);
          r.status[key] = CheckStatus::pass;
        } catch (const Error&) {
          r.probe_skipped = true;
          r.status[key] = CheckStatus::not_applicable;
        }
        break;
      }
    }
  }
  return r;
}

}  // namespace detail

/// Runs the requested checks over the atlas (or the provided graphs) and
/// aggregates the outcomes. Work is distributed over jobs threads; results
/// are merged in generation order, so the summary does not depend on the
/// thread count. The first failing theorem-backed check, by generation
/// order, is attached as the minimal counterexample.
inline ScanSummary scan(const ScanConfig& config) {
  std::vector<Graph> graphs = config.graphs;
  std::string source = config.source;
  if (graphs.empty()) {
    if (config.max_n < 1 || config.max_n > 8)
      fail(ErrorKind::too_large, "supported vertex counts are 1 through 8");
    for (int n = 1; n <= config.max_n; ++n) {
      std::vector<Graph> part = enumerate_connected_graphs(n);
      graphs.insert(graphs.end(), part.begin(), part.end());
    }
    if (source.empty())
      source = "atlas:max_n=" + std::to_string(config.max_n);
  }
  std::vector<ScanCheck> checks =
      config.checks.empty() ? all_scan_checks() : config.checks;

  std::vector<detail::PerGraphResult> results(graphs.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&]() {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= graphs.size()) break;
      results[i] = detail::run_scan_checks(graphs[i], checks);
    }
  };
  int jobs = std::max(1, config.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  ScanSummary summary;
  summary.source = source;
  for (ScanCheck c : checks) summary.checks.push_back(to_string(c));
  summary.graphs_processed = static_cast<int>(graphs.size());
  for (ScanCheck c : checks) summary.counts[to_string(c)] = CheckCounts{};
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const detail::PerGraphResult& r = results[i];
    for (const auto& [key, status] : r.status) {
      CheckCounts& cc = summary.counts[key];
      if (status == CheckStatus::pass) ++cc.pass;
      else if (status == CheckStatus::fail) ++cc.fail;
      else ++cc.not_applicable;
    }
    if (r.probe) {
      const OpenQuestionProbe& p = *r.probe;
      if (p.g_has_proper && p.lg_has_proper) ++summary.oq_both;
      else if (p.g_has_proper) ++summary.oq_graph_only;
      else if (p.lg_has_proper) ++summary.oq_line_only;
      else ++summary.oq_neither;
      if (p.candidate) {
        OpenQuestionCandidate cand;
        cand.graph6 = graphs[i].label().empty() ? encode_graph6(graphs[i])
                                                : graphs[i].label();
        cand.vertex_count = graphs[i].vertex_count();
        cand.edge_count = graphs[i].edge_count();
        cand.alpha_g = p.alpha_g;
        cand.alpha_lg = p.alpha_lg;
        cand.witness = sorted_names(graphs[i], *p.g_witness);
        summary.candidates.push_back(std::move(cand));
      }
    }
    if (!summary.violation && !r.failed_reports.empty()) {
      const auto& [key, rep] = *r.failed_reports.begin();
      summary.violation = ScanViolation{
          graphs[i].label().empty() ? encode_graph6(graphs[i])
                                    : graphs[i].label(),
          key, graphs[i], rep};
    }
  }
  return summary;
}

}  // namespace lmss
