#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "lmss/error.hpp"
#include "lmss/graph.hpp"

namespace lmss {

namespace detail {

/// Iterated degree refinement. Returns one color per vertex; colors are
/// dense ranks of sorted (color, sorted neighbor colors) signatures, so two
/// isomorphic graphs induce the same partition with the same color order.
inline std::vector<int> refine_colors(int n,
                                      const std::vector<std::uint64_t>& adj) {
  std::vector<int> color(n, 0);
  {
    std::vector<int> degrees(n);
    for (int v = 0; v < n; ++v) degrees[v] = std::popcount(adj[v]);
    std::vector<int> uniq = degrees;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), degrees[v]) -
          uniq.begin());
  }
  int classes = n == 0 ? 0 : 1 + *std::max_element(color.begin(), color.end());
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> around;
      std::uint64_t row = adj[v];
      while (row) {
        around.push_back(color[std::countr_zero(row)]);
        row &= row - 1;
      }
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    int now = static_cast<int>(uniq.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

struct CanonSearch {
  int n = 0;
  const std::vector<std::uint64_t>* adj = nullptr;
  std::vector<std::vector<int>> cells;
  std::vector<int> cell_of_pos;
  std::vector<std::uint64_t> best;
  std::vector<int> placed;
  std::vector<bool> used;
};

/// Branch and bound over orderings compatible with the refinement cells.
/// best[] holds the lexicographically least column values found so far; a
/// strict improvement at one position invalidates every later position.
inline void canon_dfs(CanonSearch& st, int pos) {
  if (pos == st.n) return;
  for (int v : st.cells[st.cell_of_pos[pos]]) {
    if (st.used[v]) continue;
    std::uint64_t col = 0;
    for (int q = 0; q < pos; ++q)
      col = (col << 1) | (((*st.adj)[st.placed[q]] >> v) & 1);
    if (col > st.best[pos]) continue;
    if (col < st.best[pos]) {
      st.best[pos] = col;
      for (int p = pos + 1; p < st.n; ++p) st.best[p] = ~std::uint64_t{0};
    }
    st.placed[pos] = v;
    st.used[v] = true;
    canon_dfs(st, pos + 1);
    st.used[v] = false;
  }
}

/// Certificate bytes: n, edge count (two bytes, low first), then the
/// canonical upper triangle in column-major order, eight bits per byte.
/// Equal certificates characterize isomorphism within the supported range.
inline std::string certificate_from_masks(int n,
                                          const std::vector<std::uint64_t>& adj) {
  std::vector<int> color = refine_colors(n, adj);
  int classes = n == 0 ? 0 : 1 + *std::max_element(color.begin(), color.end());
  std::vector<std::vector<int>> cells(classes);
  for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
  bool all_singleton = true;
  for (const auto& cell : cells)
    if (cell.size() > 1) all_singleton = false;
  if (!all_singleton && n > 10)
    fail(ErrorKind::too_large,
         "canonical search limited to 10 vertices unless refinement "
         "separates all vertices");

  CanonSearch st;
  st.n = n;
  st.adj = &adj;
  st.cells = std::move(cells);
  st.cell_of_pos.reserve(n);
  for (int c = 0; c < classes; ++c)
    for (std::size_t k = 0; k < st.cells[c].size(); ++k)
      st.cell_of_pos.push_back(c);
  st.best.assign(n, ~std::uint64_t{0});
  st.placed.assign(n, -1);
  st.used.assign(n, false);
  canon_dfs(st, 0);

  int m = 0;
  for (int v = 0; v < n; ++v) m += std::popcount(adj[v]);
  m /= 2;
  std::string out;
  out.push_back(static_cast<char>(n));
  out.push_back(static_cast<char>(m & 0xff));
  out.push_back(static_cast<char>((m >> 8) & 0xff));
  int bit = 0;
  int acc = 0;
  for (int p = 1; p < n; ++p) {
    for (int q = 0; q < p; ++q) {
      acc = (acc << 1) | static_cast<int>((st.best[p] >> (p - 1 - q)) & 1);
      if (++bit == 8) {
        out.push_back(static_cast<char>(acc));
        bit = 0;
        acc = 0;
      }
    }
  }
  if (bit > 0) out.push_back(static_cast<char>(acc << (8 - bit)));
  return out;
}

}  // namespace detail

/// Isomorphism certificate: two graphs receive equal byte strings exactly
/// when they are isomorphic. Throws TooLarge past the exact-search range.
inline std::string canonical_certificate(const Graph& g) {
  detail::MaskGraph m = detail::mask_graph(g);
  return detail::certificate_from_masks(m.n, m.adj);
}

}  // namespace lmss
