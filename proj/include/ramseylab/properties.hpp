#pragma once

#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace ramseylab {

namespace detail {

// Maximum clique by branch and bound with a greedy-coloring bound.
class MaxClique {
 public:
  explicit MaxClique(const Graph& g) : g_(g) {}

  int solve() {
    Bitset all(g_.order());
    all.set();
    best_ = 0;
    expand(0, all);
    return best_;
  }

 private:
  void expand(int size, Bitset cand) {
    if (cand.none()) {
      best_ = std::max(best_, size);
      return;
    }
    // color classes give an upper bound on what cand can still add
    std::vector<std::pair<Vertex, int>> colored;
    Bitset uncolored = cand;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset avail = uncolored;
      while (avail.any()) {
        auto v = avail.find_first();
        avail.reset(v);
        avail -= g_.row(static_cast<Vertex>(v));
        uncolored.reset(v);
        colored.emplace_back(static_cast<Vertex>(v), color);
      }
    }
    for (auto it = colored.rbegin(); it != colored.rend(); ++it) {
      if (size + it->second <= best_) return;
      Vertex v = it->first;
      expand(size + 1, cand & g_.row(v));
      cand.reset(v);
    }
  }

  const Graph& g_;
  int best_ = 0;
};

}  // namespace detail

// ω(g); 0 for the graph on no vertices.
inline int clique_number(const Graph& g) {
  if (g.order() == 0) return 0;
  return detail::MaxClique(g).solve();
}

inline constexpr int kChromaticVertexCap = 30;

// Exact χ(g) by DSATUR-ordered branch and bound. Graphs above
// kChromaticVertexCap vertices are refused.
inline int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n > kChromaticVertexCap) {
    throw InvalidArgument("chromatic_number: graph too large (" + std::to_string(n) + " > " +
                          std::to_string(kChromaticVertexCap) + " vertices)");
  }
  if (n == 0) return 0;
  if (g.size() == 0) return 1;

  const int lower = clique_number(g);
  int best = n;
  std::vector<int> color(n, -1);
  // neighbor color counts: adj_colors[v][c]
  std::vector<std::vector<int>> adj_colors(n, std::vector<int>(n + 1, 0));
  std::vector<int> saturation(n, 0);

  auto assign = [&](Vertex v, int c) {
    color[v] = c;
    for (Vertex w : g.neighbors(v))
      if (adj_colors[w][c]++ == 0) ++saturation[w];
  };
  auto unassign = [&](Vertex v) {
    int c = color[v];
    for (Vertex w : g.neighbors(v))
      if (--adj_colors[w][c] == 0) --saturation[w];
    color[v] = -1;
  };

  auto rec = [&](auto&& self, int colored, int used) -> void {
    if (used >= best) return;
    if (colored == n) {
      best = used;
      return;
    }
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      if (pick < 0 || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick)))
        pick = v;
    }
    for (int c = 0; c <= used; ++c) {
      if (adj_colors[pick][c] > 0) continue;
      int next_used = std::max(used, c + 1);
      if (next_used >= best) continue;
      assign(pick, c);
      self(self, colored + 1, next_used);
      unassign(pick);
      if (best == lower) return;
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace ramseylab
