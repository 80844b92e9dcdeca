#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "lmss/error.hpp"
#include "lmss/graph.hpp"
#include "lmss/sets.hpp"

namespace lmss {

/// A validated matching: pairwise disjoint edges of one graph.
class Matching {
 public:
  Matching() = default;

  /// Validates ids and disjointness; UnknownEdge / NotAMatching otherwise.
  static Matching from(const Graph& g, const EdgeSet& edges) {
    std::vector<int> sat;
    for (int e : edges) {
      if (e < 0 || e >= g.edge_count())
        fail(ErrorKind::unknown_edge, "edge id out of range");
      auto [u, v] = g.edge(e);
      sat.push_back(u);
      sat.push_back(v);
    }
    std::sort(sat.begin(), sat.end());
    if (std::adjacent_find(sat.begin(), sat.end()) != sat.end())
      fail(ErrorKind::not_a_matching, "edges share an endpoint");
    Matching m;
    m.edges_ = edges;
    m.saturated_ = VertexSet(std::move(sat));
    return m;
  }

  static Matching from_name_pairs(
      const Graph& g,
      const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<int> ids;
    for (const auto& [a, b] : pairs)
      ids.push_back(g.edge_id(g.vertex(a), g.vertex(b)));
    return from(g, EdgeSet(std::move(ids)));
  }

  const EdgeSet& edges() const { return edges_; }
  const VertexSet& saturated() const { return saturated_; }
  int size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  EdgeSet edges_;
  VertexSet saturated_;
};

namespace detail {

/// Maximum matching size on the subgraph induced by the allowed vertices,
/// optionally with one edge removed. Classic blossom contraction search.
inline int blossom_size(const Graph& g, std::uint64_t allowed,
                        int banned_edge = -1) {
  int n = g.vertex_count();
  if (n > 64)
    fail(ErrorKind::too_large, "exact search supports at most 64 vertices");
  std::vector<std::vector<int>> adj(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e == banned_edge) continue;
    auto [u, v] = g.edge(e);
    if (((allowed >> u) & 1) && ((allowed >> v) & 1)) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  std::vector<int> match(n, -1), parent(n, -1), base(n);
  std::vector<bool> used(n), in_blossom(n);

  auto lowest_common = [&](int a, int b) {
    std::vector<bool> seen(n, false);
    int u = a;
    while (true) {
      u = base[u];
      seen[u] = true;
      if (match[u] == -1) break;
      u = parent[match[u]];
    }
    int v = b;
    while (true) {
      v = base[v];
      if (seen[v]) return v;
      v = parent[match[v]];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = true;
      in_blossom[base[match[v]]] = true;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };

  auto find_path = [&](int root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          // Odd cycle: contract the blossom and keep searching.
          int cur_base = lowest_common(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = cur_base;
              if (!used[i]) {
                used[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = true;
          q.push(match[to]);
        }
      }
    }
    return -1;
  };

  int size = 0;
  for (int v = 0; v < n; ++v) {
    if (match[v] != -1 || !((allowed >> v) & 1)) continue;
    int u = find_path(v);
    if (u == -1) continue;
    ++size;
    while (u != -1) {
      int pv = parent[u];
      int next = match[pv];
      match[u] = pv;
      match[pv] = u;
      u = next;
    }
  }
  return size;
}

inline std::uint64_t all_vertices_mask(const Graph& g) {
  int n = g.vertex_count();
  if (n > 64)
    fail(ErrorKind::too_large, "exact search supports at most 64 vertices");
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace detail

inline int matching_number(const Graph& g) {
  return detail::blossom_size(g, detail::all_vertices_mask(g));
}

/// Maximum matching least by edge id sequence: edges are offered in id order
/// and kept whenever a maximum matching through the current choice remains.
inline Matching maximum_matching(const Graph& g) {
  std::uint64_t all = detail::all_vertices_mask(g);
  int target = detail::blossom_size(g, all);
  std::vector<int> chosen;
  std::uint64_t free = all;
  int size = 0;
  for (int e = 0; e < g.edge_count() && size < target; ++e) {
    auto [u, v] = g.edge(e);
    if (!((free >> u) & 1) || !((free >> v) & 1)) continue;
    std::uint64_t rest =
        free & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v);
    if (size + 1 + detail::blossom_size(g, rest) == target) {
      chosen.push_back(e);
      free = rest;
      ++size;
    }
  }
  return Matching::from(g, EdgeSet(std::move(chosen)));
}

namespace detail {

inline void matchings_dfs(const Graph& g, int from, std::vector<int>& cur,
                          std::uint64_t free, std::vector<EdgeSet>& out) {
  out.push_back(EdgeSet(cur));
  for (int e = from; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (!((free >> u) & 1) || !((free >> v) & 1)) continue;
    cur.push_back(e);
    matchings_dfs(g, e + 1, cur,
                  free & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v),
                  out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Every matching, the empty one included, in lexicographic edge id order.
inline std::vector<Matching> enumerate_matchings(const Graph& g) {
  std::vector<int> cur;
  std::vector<EdgeSet> sets;
  detail::matchings_dfs(g, 0, cur, detail::all_vertices_mask(g), sets);
  std::sort(sets.begin(), sets.end());
  std::vector<Matching> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(Matching::from(g, s));
  return out;
}

namespace detail {

inline void max_matchings_dfs(const Graph& g, int from, std::vector<int>& cur,
                              std::uint64_t free, int target,
                              std::vector<EdgeSet>& out) {
  int size = static_cast<int>(cur.size());
  if (size == target) {
    out.push_back(EdgeSet(cur));
    return;
  }
  if (size + std::min(g.edge_count() - from, std::popcount(free) / 2) < target)
    return;
  if (size + blossom_size(g, free) < target) return;
  for (int e = from; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (!((free >> u) & 1) || !((free >> v) & 1)) continue;
    cur.push_back(e);
    max_matchings_dfs(g, e + 1, cur,
                      free & ~(std::uint64_t{1} << u) &
                          ~(std::uint64_t{1} << v),
                      target, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All maximum matchings, in lexicographic edge id order.
inline std::vector<Matching> enumerate_maximum_matchings(const Graph& g) {
  std::uint64_t all = detail::all_vertices_mask(g);
  int target = detail::blossom_size(g, all);
  std::vector<int> cur;
  std::vector<EdgeSet> sets;
  detail::max_matchings_dfs(g, 0, cur, all, target, sets);
  std::sort(sets.begin(), sets.end());
  std::vector<Matching> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(Matching::from(g, s));
  return out;
}

/// Maximal means no edge of g has both endpoints unsaturated.
inline bool is_maximal_matching(const Graph& g, const Matching& m) {
  for (auto [u, v] : g.edges()) {
    if (!m.saturated().contains(u) && !m.saturated().contains(v)) return false;
  }
  return true;
}

/// One path or cycle of the symmetric difference of two matchings. Edges
/// alternate between the two sources; vertices follow the traversal, with
/// cycles listing the start vertex once.
struct SymDiffComponent {
  bool is_cycle = false;
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<bool> from_first;
  int first_count = 0;
  int second_count = 0;
};

/// Decomposes the symmetric difference of two matchings. Every vertex meets
/// at most one edge of each side, so components are paths and even cycles.
/// Components are ordered by their smallest edge id; paths start at their
/// smaller endpoint, cycles at the smaller endpoint of their smallest edge.
inline std::vector<SymDiffComponent> symmetric_difference_decomposition(
    const Graph& g, const Matching& first, const Matching& second) {
  EdgeSet sym = first.edges().unite(second.edges())
                    .difference(first.edges().intersect(second.edges()));
  int n = g.vertex_count();
  std::vector<std::vector<int>> incident(n);
  for (int e : sym) {
    auto [u, v] = g.edge(e);
    incident[u].push_back(e);
    incident[v].push_back(e);
  }
  std::vector<bool> visited(g.edge_count(), false);
  std::vector<SymDiffComponent> out;

  auto other_end = [&](int e, int v) {
    auto [a, b] = g.edge(e);
    return a == v ? b : a;
  };
  auto trace = [&](int start, int first_edge, bool cycle) {
    SymDiffComponent c;
    c.is_cycle = cycle;
    int v = start;
    int e = first_edge;
    c.vertices.push_back(v);
    while (true) {
      visited[e] = true;
      bool mine = first.edges().contains(e);
      c.edges.push_back(e);
      c.from_first.push_back(mine);
      (mine ? c.first_count : c.second_count) += 1;
      v = other_end(e, v);
      int next = -1;
      for (int f : incident[v])
        if (!visited[f]) next = f;
      if (next == -1) break;
      c.vertices.push_back(v);
      e = next;
    }
    if (!cycle) c.vertices.push_back(v);
    out.push_back(std::move(c));
  };

  for (int v = 0; v < n; ++v) {
    if (incident[v].size() != 1) continue;
    int e = incident[v][0];
    if (!visited[e]) trace(v, e, false);
  }
  for (int e : sym) {
    if (visited[e]) continue;
    auto [u, v] = g.edge(e);
    trace(std::min(u, v), e, true);
  }
  std::sort(out.begin(), out.end(),
            [](const SymDiffComponent& a, const SymDiffComponent& b) {
              return a.edges.front() < b.edges.front();
            });
  return out;
}

/// A matching is uniquely restricted when the subgraph induced by its
/// saturated vertices has no other perfect matching, equivalently when no
/// alternating cycle exists. A second perfect matching must avoid some
/// matched edge, so it exists exactly when deleting one matched edge keeps
/// the induced matching number intact.
inline bool is_uniquely_restricted(const Graph& g, const Matching& m) {
  if (m.empty()) return true;
  std::uint64_t sat = detail::to_mask(m.saturated());
  for (int e : m.edges()) {
    if (detail::blossom_size(g, sat, e) == m.size()) return false;
  }
  return true;
}

/// Least (by edge id sequence) maximum matching containing m, when any
/// maximum matching does. Absent exactly when the free vertices cannot
/// supply the missing edges.
inline std::optional<Matching> extendable_to_maximum(const Graph& g,
                                                     const Matching& m) {
  std::uint64_t all = detail::all_vertices_mask(g);
  int target = detail::blossom_size(g, all);
  std::uint64_t free = all & ~detail::to_mask(m.saturated());
  if (m.size() + detail::blossom_size(g, free) < target) return std::nullopt;
  std::vector<int> chosen(m.edges().begin(), m.edges().end());
  int size = m.size();
  for (int e = 0; e < g.edge_count() && size < target; ++e) {
    auto [u, v] = g.edge(e);
    if (!((free >> u) & 1) || !((free >> v) & 1)) continue;
    std::uint64_t rest =
        free & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v);
    if (size + 1 + detail::blossom_size(g, rest) == target) {
      chosen.push_back(e);
      free = rest;
      ++size;
    }
  }
  return Matching::from(g, EdgeSet(std::move(chosen)));
}

}  // namespace lmss
