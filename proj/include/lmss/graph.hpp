#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "lmss/error.hpp"
#include "lmss/sets.hpp"

namespace lmss {

/// Finite simple undirected graph. Vertices carry stable integer ids
/// (assignment order) and unique string names. Edges are stored as index
/// pairs (u < v), sorted lexicographically; the position of an edge in that
/// order is its edge id. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Internal assembly from already-resolved indices. Validates loops and
  /// duplicates so every construction path shares one set of guarantees.
  static Graph from_parts(std::vector<std::string> names,
                          std::vector<std::pair<int, int>> edge_pairs,
                          std::string label) {
    Graph g;
    g.names_ = std::move(names);
    g.label_ = std::move(label);
    int n = static_cast<int>(g.names_.size());
    for (int i = 0; i < n; ++i) {
      auto [it, inserted] = g.index_.emplace(g.names_[i], i);
      if (!inserted)
        fail(ErrorKind::parse_error, "duplicate vertex name '" + g.names_[i] + "'");
    }
    for (auto& [u, v] : edge_pairs) {
      if (u == v)
        fail(ErrorKind::loop_rejected, "loop at '" + g.names_[u] + "'");
      if (u > v) std::swap(u, v);
    }
    std::sort(edge_pairs.begin(), edge_pairs.end());
    for (std::size_t i = 1; i < edge_pairs.size(); ++i) {
      if (edge_pairs[i] == edge_pairs[i - 1])
        fail(ErrorKind::duplicate_edge,
             "duplicate edge '" + g.names_[edge_pairs[i].first] + "'-'" +
                 g.names_[edge_pairs[i].second] + "'");
    }
    g.edges_ = std::move(edge_pairs);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    return g;
  }

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& label() const { return label_; }

  Graph with_label(std::string label) const {
    Graph g = *this;
    g.label_ = std::move(label);
    return g;
  }

  /// Vertex id for a name; throws UnknownVertex otherwise.
  int vertex(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
      fail(ErrorKind::unknown_vertex, "no vertex named '" + name + "'");
    return it->second;
  }

  bool has_vertex_name(const std::string& name) const {
    return index_.count(name) > 0;
  }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::pair<int, int> edge(int e) const { return edges_[e]; }

  /// Edge id for an endpoint pair, or -1 when absent.
  int find_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
    if (it == edges_.end() || *it != std::pair{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  /// Edge id for an endpoint pair; throws UnknownEdge when absent.
  int edge_id(int u, int v) const {
    int e = find_edge(u, v);
    if (e < 0)
      fail(ErrorKind::unknown_edge,
           "no edge '" + names_[std::min(u, v)] + "'-'" +
               names_[std::max(u, v)] + "'");
    return e;
  }

  /// Display form "u-v" with the endpoint names in ascending name order.
  std::string edge_name(int e) const {
    auto [u, v] = edges_[e];
    const std::string& a = names_[u];
    const std::string& b = names_[v];
    return a <= b ? a + "-" + b : b + "-" + a;
  }

  VertexSet all_vertices() const {
    std::vector<int> ids(names_.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    return VertexSet(std::move(ids));
  }

  EdgeSet all_edges() const {
    std::vector<int> ids(edges_.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    return EdgeSet(std::move(ids));
  }

  /// Vertex ids ordered by name; ties impossible since names are unique.
  std::vector<int> vertices_by_name() const {
    std::vector<int> order(names_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return names_[a] < names_[b]; });
    return order;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::map<std::string, int, std::less<>> index_;
  std::string label_;
};

/// Builds a graph from vertex names (first appearance fixes the id) and
/// name pairs for edges. Throws UnknownVertex, LoopRejected, DuplicateEdge.
inline Graph build_graph(
    const std::vector<std::string>& vertex_names,
    const std::vector<std::pair<std::string, std::string>>& edge_pairs,
    std::string label = "") {
  std::vector<std::string> names;
  std::map<std::string, int, std::less<>> seen;
  for (const auto& nm : vertex_names) {
    if (seen.emplace(nm, static_cast<int>(names.size())).second)
      names.push_back(nm);
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edge_pairs.size());
  for (const auto& [a, b] : edge_pairs) {
    auto ia = seen.find(a);
    if (ia == seen.end())
      fail(ErrorKind::unknown_vertex, "no vertex named '" + a + "'");
    auto ib = seen.find(b);
    if (ib == seen.end())
      fail(ErrorKind::unknown_vertex, "no vertex named '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return Graph::from_parts(std::move(names), std::move(pairs), std::move(label));
}

/// Convenience: vertices named after their ids ("0", "1", ...).
inline Graph graph_from_index_pairs(int n,
                                    std::vector<std::pair<int, int>> pairs,
                                    std::string label = "") {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  for (auto [u, v] : pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(ErrorKind::unknown_vertex, "vertex index out of range");
  }
  return Graph::from_parts(std::move(names), std::move(pairs), std::move(label));
}

inline VertexSet vertex_set_from_names(const Graph& g,
                                       const std::vector<std::string>& names) {
  std::vector<int> ids;
  ids.reserve(names.size());
  for (const auto& nm : names) ids.push_back(g.vertex(nm));
  return VertexSet(std::move(ids));
}

inline std::vector<std::string> sorted_names(const Graph& g,
                                             const VertexSet& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (int v : s) out.push_back(g.name(v));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> sorted_edge_names(const Graph& g,
                                                  const EdgeSet& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (int e : s) out.push_back(g.edge_name(e));
  std::sort(out.begin(), out.end());
  return out;
}

/// Orders vertex sets by their sorted name sequences; used whenever families
/// of sets are reported, so output order never depends on internal ids.
inline bool name_sequence_less(const Graph& g, const VertexSet& a,
                               const VertexSet& b) {
  return sorted_names(g, a) < sorted_names(g, b);
}

/// Neighborhood of a set: union of the members' neighbors, plus the members
/// themselves when closed is true.
inline VertexSet neighborhood(const Graph& g, const VertexSet& s,
                              bool closed) {
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count())
      fail(ErrorKind::unknown_vertex, "vertex id out of range");
  }
  std::vector<int> ids;
  for (int v : s) {
    if (closed) ids.push_back(v);
    for (int u : g.neighbors(v)) ids.push_back(u);
  }
  return VertexSet(std::move(ids));
}

/// Induced subgraph together with both direction maps. to_sub has one slot
/// per parent vertex (-1 when absent); to_parent is indexed by sub id.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_sub;
  std::vector<int> to_parent;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_sub.assign(g.vertex_count(), -1);
  std::vector<std::string> names;
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count())
      fail(ErrorKind::unknown_vertex, "vertex id out of range");
    out.to_sub[v] = static_cast<int>(out.to_parent.size());
    out.to_parent.push_back(v);
    names.push_back(g.name(v));
  }
  std::vector<std::pair<int, int>> pairs;
  for (auto [u, v] : g.edges()) {
    if (out.to_sub[u] >= 0 && out.to_sub[v] >= 0)
      pairs.emplace_back(out.to_sub[u], out.to_sub[v]);
  }
  out.graph = Graph::from_parts(std::move(names), std::move(pairs), g.label());
  return out;
}

/// Copy of g with the given vertices (and their incident edges) and the given
/// extra edges removed. Vertex ids are reassigned; names persist.
inline Graph remove_elements(const Graph& g, const VertexSet& drop_vertices,
                             const EdgeSet& drop_edges) {
  for (int v : drop_vertices) {
    if (v < 0 || v >= g.vertex_count())
      fail(ErrorKind::unknown_vertex, "vertex id out of range");
  }
  for (int e : drop_edges) {
    if (e < 0 || e >= g.edge_count())
      fail(ErrorKind::unknown_edge, "edge id out of range");
  }
  VertexSet keep = g.all_vertices().difference(drop_vertices);
  std::vector<int> to_sub(g.vertex_count(), -1);
  std::vector<std::string> names;
  for (int v : keep) {
    to_sub[v] = static_cast<int>(names.size());
    names.push_back(g.name(v));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (drop_edges.contains(e)) continue;
    auto [u, v] = g.edge(e);
    if (to_sub[u] >= 0 && to_sub[v] >= 0)
      pairs.emplace_back(to_sub[u], to_sub[v]);
  }
  return Graph::from_parts(std::move(names), std::move(pairs), g.label());
}

/// Edges with one endpoint in a and the other in b. Sides must be disjoint
/// and non-empty (they need not cover the graph); otherwise InvalidCutSides.
inline EdgeSet cut_set(const Graph& g, const VertexSet& a,
                       const VertexSet& b) {
  if (a.empty() || b.empty())
    fail(ErrorKind::invalid_cut_sides, "both sides must be non-empty");
  if (a.intersects(b))
    fail(ErrorKind::invalid_cut_sides, "sides overlap");
  for (int v : a)
    if (v < 0 || v >= g.vertex_count())
      fail(ErrorKind::unknown_vertex, "vertex id out of range");
  for (int v : b)
    if (v < 0 || v >= g.vertex_count())
      fail(ErrorKind::unknown_vertex, "vertex id out of range");
  std::vector<int> ids;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if ((a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u)))
      ids.push_back(e);
  }
  return EdgeSet(std::move(ids));
}

/// Line graph: one vertex per edge of g (same id, name "u-v"), adjacency by
/// shared endpoints. Vertices of g that touch no edge do not appear.
struct LineGraph {
  Graph graph;
  // line_vertex_of_edge[e] == e by construction; kept explicit so callers
  // can translate without relying on that coincidence.
  std::vector<int> line_vertex_of_edge;
};

inline LineGraph line_graph(const Graph& g) {
  int m = g.edge_count();
  std::vector<std::string> names(m);
  for (int e = 0; e < m; ++e) names[e] = g.edge_name(e);
  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      auto [a, b] = g.edge(e);
      auto [c, d] = g.edge(f);
      if (a == c || a == d || b == c || b == d) pairs.emplace_back(e, f);
    }
  }
  LineGraph out;
  out.graph = Graph::from_parts(std::move(names), std::move(pairs), g.label());
  out.line_vertex_of_edge.resize(m);
  for (int e = 0; e < m; ++e) out.line_vertex_of_edge[e] = e;
  return out;
}

/// Proper two-coloring, when one exists. Sides are reported as vertex sets;
/// the side containing the lowest id of each component is "left".
struct Bipartition {
  VertexSet left;
  VertexSet right;
};

inline std::optional<Bipartition> is_bipartite(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<int> left, right;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      (color[v] == 0 ? left : right).push_back(v);
      for (int u : g.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return Bipartition{VertexSet(std::move(left)), VertexSet(std::move(right))};
}

inline bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        q.push(u);
      }
    }
  }
  return count == n;
}

namespace detail {

/// Adjacency rows as 64-bit masks; the exact solvers run on this form.
struct MaskGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;
  std::uint64_t all = 0;
};

inline MaskGraph mask_graph(const Graph& g) {
  int n = g.vertex_count();
  if (n > 64)
    fail(ErrorKind::too_large, "exact search supports at most 64 vertices");
  MaskGraph m;
  m.n = n;
  m.adj.assign(n, 0);
  for (auto [u, v] : g.edges()) {
    m.adj[u] |= std::uint64_t{1} << v;
    m.adj[v] |= std::uint64_t{1} << u;
  }
  m.all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return m;
}

inline std::uint64_t to_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (int v : s) m |= std::uint64_t{1} << v;
  return m;
}

inline VertexSet from_mask(std::uint64_t m) {
  std::vector<int> ids;
  while (m) {
    int v = std::countr_zero(m);
    ids.push_back(v);
    m &= m - 1;
  }
  return VertexSet(std::move(ids));
}

}  // namespace detail

}  // namespace lmss
