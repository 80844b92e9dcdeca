#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmss/sets.hpp"

namespace lmss {

enum class CheckStatus { pass, fail, not_applicable };
enum class InstanceOutcome { pass, fail, informational };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

inline const char* to_string(InstanceOutcome o) {
  switch (o) {
    case InstanceOutcome::pass: return "pass";
    case InstanceOutcome::fail: return "fail";
    case InstanceOutcome::informational: return "informational";
  }
  return "?";
}

/// Shape of an induced subgraph examined by a check. Vertices are ids of the
/// graph under verification.
struct SubgraphSummary {
  VertexSet vertices;
  int edge_count = 0;
  bool koenig_egervary = false;
};

/// One examined combination. All ids live in the verified graph: stable and
/// extension sets are vertex ids, matchings and counterexample sets edge ids.
struct CheckInstance {
  VertexSet stable_set;
  std::optional<SubgraphSummary> subgraph;
  std::optional<EdgeSet> matching;
  InstanceOutcome outcome = InstanceOutcome::pass;
  std::optional<EdgeSet> matching_extension;
  std::optional<VertexSet> stable_extension;
  std::optional<EdgeSet> counter_edges;
  std::string note;
};

struct VerificationReport {
  std::string graph_id;
  std::string check;
  CheckStatus status = CheckStatus::pass;
  std::vector<CheckInstance> instances;

  std::vector<CheckInstance> violations() const {
    std::vector<CheckInstance> out;
    for (const auto& i : instances)
      if (i.outcome == InstanceOutcome::fail) out.push_back(i);
    return out;
  }
};

}  // namespace lmss
