#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lmss/error.hpp"
#include "lmss/graph.hpp"
#include "lmss/sets.hpp"

namespace lmss {

namespace detail {

/// Greedy clique cover of the candidate set; its size bounds the stability
/// number from above.
inline int alpha_bound(const MaskGraph& g, std::uint64_t p) {
  int k = 0;
  while (p) {
    int v = std::countr_zero(p);
    std::uint64_t clique = std::uint64_t{1} << v;
    std::uint64_t cand = p & g.adj[v];
    while (cand) {
      int u = std::countr_zero(cand);
      clique |= std::uint64_t{1} << u;
      cand &= g.adj[u];
    }
    p &= ~clique;
    ++k;
  }
  return k;
}

inline void alpha_dfs(const MaskGraph& g, std::uint64_t p, int size,
                      int& best) {
  if (!p) {
    best = std::max(best, size);
    return;
  }
  if (size + alpha_bound(g, p) <= best) return;
  int v = -1;
  int dv = -1;
  for (std::uint64_t t = p; t;) {
    int u = std::countr_zero(t);
    t &= t - 1;
    int du = std::popcount(g.adj[u] & p);
    if (du > dv) {
      dv = du;
      v = u;
    }
  }
  if (dv == 0) {
    best = std::max(best, size + std::popcount(p));
    return;
  }
  alpha_dfs(g, p & ~(g.adj[v] | (std::uint64_t{1} << v)), size + 1, best);
  alpha_dfs(g, p & ~(std::uint64_t{1} << v), size, best);
}

/// Stability number of the subgraph induced by the candidate mask.
inline int alpha_of_mask(const MaskGraph& g, std::uint64_t p) {
  int best = 0;
  alpha_dfs(g, p, 0, best);
  return best;
}

inline std::uint64_t closed_vertex_mask(const MaskGraph& g, int v) {
  return g.adj[v] | (std::uint64_t{1} << v);
}

inline std::uint64_t closed_set_mask(const MaskGraph& g, std::uint64_t s) {
  std::uint64_t out = s;
  for (std::uint64_t t = s; t;) {
    int v = std::countr_zero(t);
    t &= t - 1;
    out |= g.adj[v];
  }
  return out;
}

inline void check_vertex_ids(const Graph& g, const VertexSet& s) {
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count())
      fail(ErrorKind::unknown_vertex, "vertex id out of range");
  }
}

}  // namespace detail

inline bool is_stable(const Graph& g, const VertexSet& s) {
  detail::check_vertex_ids(g, s);
  const auto& ids = s.ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (g.adjacent(ids[i], ids[j])) return false;
    }
  }
  return true;
}

inline int alpha_value(const Graph& g) {
  detail::MaskGraph m = detail::mask_graph(g);
  return detail::alpha_of_mask(m, m.all);
}

struct StabilityResult {
  int value = 0;
  VertexSet witness;  // the maximum stable set least by sorted name sequence
};

/// Exact stability number with a deterministic witness: vertices are offered
/// in name order and kept whenever a maximum stable set through the current
/// choice still exists.
inline StabilityResult stability_number(const Graph& g) {
  detail::MaskGraph m = detail::mask_graph(g);
  int a = detail::alpha_of_mask(m, m.all);
  std::uint64_t chosen = 0;
  std::uint64_t pool = m.all;
  int size = 0;
  for (int v : g.vertices_by_name()) {
    if (size == a) break;
    if (!((pool >> v) & 1)) continue;
    std::uint64_t rest = pool & ~detail::closed_vertex_mask(m, v);
    if (size + 1 + detail::alpha_of_mask(m, rest) == a) {
      chosen |= std::uint64_t{1} << v;
      pool = rest;
      ++size;
    }
  }
  return StabilityResult{a, detail::from_mask(chosen)};
}

using StableSetFamily = std::vector<VertexSet>;

namespace detail {

inline void omega_dfs(const MaskGraph& g, std::uint64_t p, std::uint64_t cur,
                      int size, int target, std::vector<std::uint64_t>& out) {
  if (size + alpha_of_mask(g, p) < target) return;
  if (size == target) {
    out.push_back(cur);
    return;
  }
  for (std::uint64_t t = p; t;) {
    int v = std::countr_zero(t);
    t &= t - 1;
    std::uint64_t above = ~((std::uint64_t{2} << v) - 1);
    omega_dfs(g, p & above & ~g.adj[v], cur | (std::uint64_t{1} << v),
              size + 1, target, out);
  }
}

}  // namespace detail

/// All maximum stable sets, ordered by sorted name sequence.
inline StableSetFamily enumerate_maximum_stable_sets(const Graph& g) {
  detail::MaskGraph m = detail::mask_graph(g);
  int a = detail::alpha_of_mask(m, m.all);
  std::vector<std::uint64_t> masks;
  if (a > 0) detail::omega_dfs(m, m.all, 0, 0, a, masks);
  StableSetFamily out;
  out.reserve(masks.size());
  for (std::uint64_t s : masks) out.push_back(detail::from_mask(s));
  std::sort(out.begin(), out.end(), [&](const VertexSet& x, const VertexSet& y) {
    return name_sequence_less(g, x, y);
  });
  return out;
}

/// Whether s is a maximum stable set of the subgraph induced by its closed
/// neighborhood. Non-stable sets answer false; the empty set is rejected
/// (EmptySet) because local maximality is defined for non-empty sets here.
inline bool is_local_maximum_stable(const Graph& g, const VertexSet& s) {
  if (s.empty())
    fail(ErrorKind::empty_set, "local maximality needs a non-empty set");
  detail::check_vertex_ids(g, s);
  if (!is_stable(g, s)) return false;
  detail::MaskGraph m = detail::mask_graph(g);
  std::uint64_t mask = detail::to_mask(s);
  return detail::alpha_of_mask(m, detail::closed_set_mask(m, mask)) == s.size();
}

namespace detail {

inline void psi_dfs(const MaskGraph& g, std::uint64_t p, std::uint64_t cur,
                    std::uint64_t closed, int size, int max_size,
                    std::vector<std::uint64_t>& out) {
  if (size > 0 && alpha_of_mask(g, closed) == size) out.push_back(cur);
  if (size == max_size) return;
  for (std::uint64_t t = p; t;) {
    int v = std::countr_zero(t);
    t &= t - 1;
    std::uint64_t above = ~((std::uint64_t{2} << v) - 1);
    psi_dfs(g, p & above & ~g.adj[v], cur | (std::uint64_t{1} << v),
            closed | closed_vertex_mask(g, v), size + 1, max_size, out);
  }
}

}  // namespace detail

/// Every non-empty stable set that is a maximum stable set of its closed
/// neighborhood, optionally capped by size. Ordered by sorted name sequence.
inline StableSetFamily enumerate_psi(const Graph& g, int max_size = -1) {
  detail::MaskGraph m = detail::mask_graph(g);
  int cap = max_size < 0 ? m.n : std::min(max_size, m.n);
  std::vector<std::uint64_t> masks;
  if (cap > 0) detail::psi_dfs(m, m.all, 0, 0, 0, cap, masks);
  StableSetFamily out;
  out.reserve(masks.size());
  for (std::uint64_t s : masks) out.push_back(detail::from_mask(s));
  std::sort(out.begin(), out.end(), [&](const VertexSet& x, const VertexSet& y) {
    return name_sequence_less(g, x, y);
  });
  return out;
}

/// Extends a locally maximum stable set to a maximum stable set containing
/// it, least by sorted name sequence. HypothesisViolated when the input is
/// not a locally maximum stable set (the extension guarantee needs that).
inline VertexSet extend_to_maximum_stable(const Graph& g, const VertexSet& s) {
  if (s.empty())
    fail(ErrorKind::hypothesis_violated, "the empty set has no guarantee");
  detail::check_vertex_ids(g, s);
  if (!is_local_maximum_stable(g, s))
    fail(ErrorKind::hypothesis_violated,
         "input is not a locally maximum stable set");
  detail::MaskGraph m = detail::mask_graph(g);
  int a = detail::alpha_of_mask(m, m.all);
  std::uint64_t chosen = detail::to_mask(s);
  std::uint64_t pool = m.all & ~detail::closed_set_mask(m, chosen);
  int size = s.size();
  for (int v : g.vertices_by_name()) {
    if (size == a) break;
    if (!((pool >> v) & 1)) continue;
    std::uint64_t rest = pool & ~detail::closed_vertex_mask(m, v);
    if (size + 1 + detail::alpha_of_mask(m, rest) == a) {
      chosen |= std::uint64_t{1} << v;
      pool = rest;
      ++size;
    }
  }
  if (size != a)
    fail(ErrorKind::hypothesis_violated,
         "no maximum stable set contains the input");
  return detail::from_mask(chosen);
}

/// Least (by sorted name sequence) locally maximum stable set that is not a
/// maximum stable set, when one exists. A stable set of full stability-number
/// size is always maximum, so only smaller sizes need inspection.
inline std::optional<VertexSet> find_proper_lmss(const Graph& g) {
  detail::MaskGraph m = detail::mask_graph(g);
  int a = detail::alpha_of_mask(m, m.all);
  if (a <= 1) return std::nullopt;
  StableSetFamily small = enumerate_psi(g, a - 1);
  if (small.empty()) return std::nullopt;
  return small.front();
}

inline bool has_proper_lmss(const Graph& g) {
  return find_proper_lmss(g).has_value();
}

}  // namespace lmss
