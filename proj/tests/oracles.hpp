#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lmss/lmss.hpp"

// Slow reference implementations used to cross-check the library's solvers.
// Everything here sticks to the most literal definition available, even when
// that costs an exponential factor, so a shared bug with the optimized code
// is unlikely.
namespace oracle {

struct Mini {
  int n = 0;
  std::vector<std::uint64_t> row;           // open adjacency, one mask per vertex
  std::vector<std::pair<int, int>> edge;    // position matches the Graph edge id
  std::uint64_t all = 0;
};

inline Mini mini(const lmss::Graph& g) {
  Mini m;
  m.n = g.vertex_count();
  if (m.n > 62) throw std::runtime_error("oracle limited to 62 vertices");
  m.row.assign(m.n, 0);
  for (auto [u, v] : g.edges()) {
    m.row[u] |= std::uint64_t{1} << v;
    m.row[v] |= std::uint64_t{1} << u;
    m.edge.emplace_back(u, v);
  }
  m.all = m.n == 0 ? 0 : (std::uint64_t{1} << m.n) - 1;
  return m;
}

inline bool stable_mask(const Mini& m, std::uint64_t s) {
  for (std::uint64_t t = s; t;) {
    int v = std::countr_zero(t);
    t &= t - 1;
    if (m.row[v] & s) return false;
  }
  return true;
}

// Scans every subset of the allowed vertices.
inline int alpha_within(const Mini& m, std::uint64_t allowed) {
  int best = 0;
  std::uint64_t s = allowed;
  while (true) {
    if (stable_mask(m, s)) best = std::max(best, std::popcount(s));
    if (s == 0) break;
    s = (s - 1) & allowed;
  }
  return best;
}

inline int alpha(const Mini& m) { return alpha_within(m, m.all); }

inline std::vector<std::uint64_t> maximum_stable_masks(const Mini& m) {
  int a = alpha(m);
  std::vector<std::uint64_t> out;
  if (a == 0) return out;
  std::uint64_t s = m.all;
  while (true) {
    if (std::popcount(s) == a && stable_mask(m, s)) out.push_back(s);
    if (s == 0) break;
    s = (s - 1) & m.all;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t closed_nbhd(const Mini& m, std::uint64_t s) {
  std::uint64_t out = s;
  for (std::uint64_t t = s; t;) {
    int v = std::countr_zero(t);
    t &= t - 1;
    out |= m.row[v];
  }
  return out;
}

inline bool lmss_mask(const Mini& m, std::uint64_t s) {
  if (s == 0 || !stable_mask(m, s)) return false;
  return alpha_within(m, closed_nbhd(m, s)) == std::popcount(s);
}

inline std::vector<std::uint64_t> psi_masks(const Mini& m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s <= m.all && m.all; ++s) {
    if (lmss_mask(m, s)) out.push_back(s);
  }
  return out;
}

// Maximum matching size by branching on the lowest vertex that still has a
// free neighbor: either it stays unmatched or it pairs with one of them.
inline int mu_rec(const Mini& m, std::uint64_t free) {
  int v = -1;
  for (std::uint64_t t = free; t;) {
    int u = std::countr_zero(t);
    t &= t - 1;
    if (m.row[u] & free) {
      v = u;
      break;
    }
  }
  if (v < 0) return 0;
  std::uint64_t rest = free & ~(std::uint64_t{1} << v);
  int best = mu_rec(m, rest);
  for (std::uint64_t t = m.row[v] & free; t;) {
    int u = std::countr_zero(t);
    t &= t - 1;
    best = std::max(best, 1 + mu_rec(m, rest & ~(std::uint64_t{1} << u)));
  }
  return best;
}

inline int mu(const Mini& m) { return mu_rec(m, m.all); }

inline void matchings_rec(const Mini& m, std::size_t from, std::uint64_t used,
                          std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (std::size_t e = from; e < m.edge.size(); ++e) {
    auto [u, v] = m.edge[e];
    std::uint64_t both = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    if (used & both) continue;
    cur.push_back(static_cast<int>(e));
    matchings_rec(m, e + 1, used | both, cur, out);
    cur.pop_back();
  }
}

// Every matching (the empty one included) as ascending edge-id vectors, in
// lexicographic order by construction.
inline std::vector<std::vector<int>> all_matchings(const Mini& m) {
  std::vector<int> cur;
  std::vector<std::vector<int>> out;
  matchings_rec(m, 0, 0, cur, out);
  return out;
}

inline std::vector<std::vector<int>> maximum_matchings(const Mini& m) {
  std::vector<std::vector<int>> all = all_matchings(m);
  std::size_t best = 0;
  for (const auto& one : all) best = std::max(best, one.size());
  std::vector<std::vector<int>> out;
  for (auto& one : all)
    if (one.size() == best) out.push_back(std::move(one));
  return out;
}

inline long long perfect_matching_count(const Mini& m, std::uint64_t verts) {
  if (verts == 0) return 1;
  int v = std::countr_zero(verts);
  long long total = 0;
  std::uint64_t rest = verts & ~(std::uint64_t{1} << v);
  for (std::uint64_t t = m.row[v] & verts; t;) {
    int u = std::countr_zero(t);
    t &= t - 1;
    total += perfect_matching_count(m, rest & ~(std::uint64_t{1} << u));
  }
  return total;
}

// Definition-level check: the matching is the one and only perfect matching
// of the subgraph induced by its saturated vertices.
inline bool unique_pm(const Mini& m, const std::vector<int>& matched) {
  std::uint64_t sat = 0;
  for (int e : matched) {
    auto [u, v] = m.edge[e];
    sat |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  }
  return perfect_matching_count(m, sat) == 1;
}

// Every simple cycle as an edge-id list: a subset of edges is one exactly
// when every touched vertex has degree two and the subset is connected.
inline std::vector<std::vector<int>> simple_cycles(const Mini& m) {
  int me = static_cast<int>(m.edge.size());
  if (me > 20) throw std::runtime_error("cycle oracle limited to 20 edges");
  std::vector<std::vector<int>> out;
  std::vector<int> deg(m.n);
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << me); ++sub) {
    std::fill(deg.begin(), deg.end(), 0);
    for (int e = 0; e < me; ++e) {
      if (!((sub >> e) & 1)) continue;
      ++deg[m.edge[e].first];
      ++deg[m.edge[e].second];
    }
    std::uint64_t touched = 0;
    bool ok = true;
    for (int v = 0; v < m.n; ++v) {
      if (deg[v] == 0) continue;
      if (deg[v] != 2) {
        ok = false;
        break;
      }
      touched |= std::uint64_t{1} << v;
    }
    if (!ok || touched == 0) continue;
    std::uint64_t seen = std::uint64_t{1} << std::countr_zero(touched);
    bool grew = true;
    while (grew) {
      grew = false;
      for (int e = 0; e < me; ++e) {
        if (!((sub >> e) & 1)) continue;
        std::uint64_t a = std::uint64_t{1} << m.edge[e].first;
        std::uint64_t b = std::uint64_t{1} << m.edge[e].second;
        if ((seen & a) && !(seen & b)) {
          seen |= b;
          grew = true;
        } else if ((seen & b) && !(seen & a)) {
          seen |= a;
          grew = true;
        }
      }
    }
    if (seen != touched) continue;
    std::vector<int> cyc;
    for (int e = 0; e < me; ++e)
      if ((sub >> e) & 1) cyc.push_back(e);
    out.push_back(std::move(cyc));
  }
  return out;
}

// A cycle alternates with respect to a matching when every cycle vertex
// meets exactly one matching edge among its two cycle edges.
inline bool cycle_alternates(const Mini& m, const std::vector<int>& cycle,
                             const std::set<int>& matched) {
  std::map<int, int> hits;
  for (int e : cycle) {
    int add = matched.count(e) ? 1 : 0;
    hits[m.edge[e].first] += add;
    hits[m.edge[e].second] += add;
  }
  for (auto [v, k] : hits)
    if (k != 1) return false;
  return true;
}

// Second characterization: no cycle alternates with respect to the matching.
inline bool alternating_cycle_free(const Mini& m,
                                   const std::vector<std::vector<int>>& cycles,
                                   const std::vector<int>& matched) {
  std::set<int> ms(matched.begin(), matched.end());
  for (const auto& c : cycles)
    if (cycle_alternates(m, c, ms)) return false;
  return true;
}

// Odd-walk closure: grow even- and odd-length reachability masks to their
// fixpoint. A vertex reaching itself by an odd walk sits on an odd closed
// walk, hence on an odd cycle, so bipartite means no vertex does.
inline bool bipartite(const Mini& m) {
  std::vector<std::uint64_t> even(m.n, 0), odd(m.n, 0);
  for (int v = 0; v < m.n; ++v) even[v] = std::uint64_t{1} << v;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v = 0; v < m.n; ++v) {
      std::uint64_t no = odd[v];
      std::uint64_t ne = even[v];
      for (std::uint64_t t = m.row[v]; t;) {
        int u = std::countr_zero(t);
        t &= t - 1;
        no |= even[u];
        ne |= odd[u];
      }
      if (no != odd[v]) {
        odd[v] = no;
        grew = true;
      }
      if (ne != even[v]) {
        even[v] = ne;
        grew = true;
      }
    }
  }
  for (int v = 0; v < m.n; ++v)
    if ((odd[v] >> v) & 1) return false;
  return true;
}

// Unordered pair (i, j) with i < j sits at index j*(j-1)/2 + i.
inline std::vector<std::pair<int, int>> pair_table(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  return pairs;
}

inline int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

inline std::uint64_t relabel_mask(std::uint64_t mask,
                                  const std::vector<int>& perm,
                                  const std::vector<std::pair<int, int>>& pairs) {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!((mask >> k) & 1)) continue;
    int a = perm[pairs[k].first];
    int b = perm[pairs[k].second];
    out |= std::uint64_t{1} << pair_index(std::min(a, b), std::max(a, b));
  }
  return out;
}

// Least relabeling over every permutation; the honest isomorphism key.
inline std::uint64_t min_perm_key(int n, std::uint64_t mask) {
  auto pairs = pair_table(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, relabel_mask(mask, perm, pairs));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool mask_connected(int n, std::uint64_t mask) {
  if (n <= 1) return true;
  auto pairs = pair_table(n);
  std::vector<std::uint64_t> row(n, 0);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!((mask >> k) & 1)) continue;
    row[pairs[k].first] |= std::uint64_t{1} << pairs[k].second;
    row[pairs[k].second] |= std::uint64_t{1} << pairs[k].first;
  }
  std::uint64_t seen = 1, prev = 0;
  while (seen != prev) {
    prev = seen;
    for (int v = 0; v < n; ++v)
      if ((seen >> v) & 1) seen |= row[v];
  }
  return seen == (std::uint64_t{1} << n) - 1;
}

inline int connected_class_count(int n) {
  auto pairs = pair_table(n);
  std::set<std::uint64_t> keys;
  std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!mask_connected(n, mask)) continue;
    keys.insert(min_perm_key(n, mask));
  }
  return static_cast<int>(keys.size());
}

inline lmss::Graph graph_from_edge_mask(int n, std::uint64_t mask,
                                        std::string label = "") {
  auto pairs = pair_table(n);
  std::vector<std::pair<int, int>> chosen;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if ((mask >> k) & 1) chosen.push_back(pairs[k]);
  return lmss::graph_from_index_pairs(n, std::move(chosen), std::move(label));
}

inline lmss::Graph random_graph(std::mt19937_64& rng, int n, double p,
                                std::string label = "") {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> chosen;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) chosen.emplace_back(i, j);
  return lmss::graph_from_index_pairs(n, std::move(chosen), std::move(label));
}

}  // namespace oracle

// Shared helpers for building inputs and reading fixture files.
namespace testutil {

inline std::string fixture_path(const std::string& name) {
  return std::string(LMSS_FIXTURES_DIR) + "/" + name + ".edges";
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline lmss::Graph fixture_file(const std::string& name) {
  return lmss::parse_edge_list(slurp(fixture_path(name)), name);
}

inline lmss::VertexSet vs(const lmss::Graph& g,
                          const std::vector<std::string>& names) {
  return lmss::vertex_set_from_names(g, names);
}

inline lmss::EdgeSet es(
    const lmss::Graph& g,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<int> ids;
  ids.reserve(pairs.size());
  for (const auto& [a, b] : pairs)
    ids.push_back(g.edge_id(g.vertex(a), g.vertex(b)));
  return lmss::EdgeSet(std::move(ids));
}

inline bool family_contains(const lmss::Graph& g,
                            const lmss::StableSetFamily& family,
                            const std::vector<std::string>& names) {
  lmss::VertexSet want = vs(g, names);
  for (const auto& s : family)
    if (s == want) return true;
  return false;
}

inline lmss::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return lmss::graph_from_index_pairs(n, std::move(pairs),
                                      "P" + std::to_string(n));
}

inline lmss::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  if (n >= 3) pairs.emplace_back(0, n - 1);
  return lmss::graph_from_index_pairs(n, std::move(pairs),
                                      "C" + std::to_string(n));
}

inline lmss::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  return lmss::graph_from_index_pairs(n, std::move(pairs),
                                      "K" + std::to_string(n));
}

// Random bipartite graph: vertices 0..left-1 against left..left+right-1.
inline lmss::Graph random_bipartite(std::mt19937_64& rng, int left, int right,
                                    double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < left; ++i)
    for (int j = left; j < left + right; ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  return lmss::graph_from_index_pairs(left + right, std::move(pairs));
}

inline std::uint64_t set_mask(const lmss::VertexSet& s) {
  std::uint64_t m = 0;
  for (int v : s) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace testutil
