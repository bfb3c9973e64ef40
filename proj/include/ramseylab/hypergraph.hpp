#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace ramseylab {

struct Hypergraph {
  int n = 0;
  std::vector<std::vector<Vertex>> hyperedges;  // each sorted

  Hypergraph() = default;
  Hypergraph(int n_, std::vector<std::vector<Vertex>> es) : n(n_), hyperedges(std::move(es)) {
    int size = hyperedges.empty() ? 0 : static_cast<int>(hyperedges.front().size());
    for (auto& e : hyperedges) {
      if (static_cast<int>(e.size()) != size) throw InvalidArgument("Hypergraph: not uniform");
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw InvalidArgument("Hypergraph: repeated vertex");
      for (Vertex v : e)
        if (v < 0 || v >= n) throw InvalidArgument("Hypergraph: vertex out of range");
    }
  }

  int degree(Vertex v) const {
    int d = 0;
    for (const auto& e : hyperedges) d += std::binary_search(e.begin(), e.end(), v);
    return d;
  }

  int min_degree() const {
    if (n == 0) return 0;
    std::vector<int> deg(n, 0);
    for (const auto& e : hyperedges)
      for (Vertex v : e) ++deg[v];
    return *std::min_element(deg.begin(), deg.end());
  }
};

// Incidence graph: vertices 0..n-1, hyperedge i is node n + i.
inline Graph incidence_graph(const Hypergraph& h) {
  GraphBuilder gb(h.n + static_cast<int>(h.hyperedges.size()));
  for (int i = 0; i < static_cast<int>(h.hyperedges.size()); ++i)
    for (Vertex v : h.hyperedges[i]) gb.add_edge(v, h.n + i);
  return gb.build();
}

// Girth in the cycle sense e_1,v_1,...,e_s,v_s; a cycle of length s is a
// cycle of length 2s in the incidence graph. Returns INT_MAX for none.
inline int hypergraph_girth(const Hypergraph& h) {
  Graph inc = incidence_graph(h);
  int best = std::numeric_limits<int>::max();
  for (Vertex s = 0; s < inc.order(); ++s) {
    std::vector<int> dist(inc.order(), -1), parent(inc.order(), -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : inc.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? best : best / 2;
}

// K_t on every hyperedge.
inline Graph hypergraph_blowup_graph(const Hypergraph& h) {
  GraphBuilder gb(h.n);
  for (const auto& e : h.hyperedges) gb.add_clique(e);
  return gb.build();
}

struct HypergraphSearchFailed : Error {
  int best_min_degree = 0;
  int hyperedges = 0;
  HypergraphSearchFailed(const std::string& msg, int deg, int m) : Error(msg), best_min_degree(deg), hyperedges(m) {}
};

// Random greedy search for a t-uniform hypergraph on n vertices with girth
// >= g+1 and minimum degree >= min_degree. Each trial proposes a hyperedge
// through a vertex of least degree; it is kept unless two of its vertices are
// already joined by a path of fewer than g hyperedges. Deterministic in seed.
inline std::pair<Hypergraph, Graph> hypergraph_blowup(int t, int g, int min_degree, int n, long long trials,
                                                      std::uint64_t seed) {
  if (t < 3) throw InvalidArgument("hypergraph_blowup: t must be >= 3");
  if (g < 3) throw InvalidArgument("hypergraph_blowup: g must be >= 3");
  if (n < t) throw InvalidArgument("hypergraph_blowup: n must be >= t");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vertex>> edges;
  std::vector<int> deg(n, 0);
  // incidence adjacency: vertex -> hyperedges
  std::vector<std::vector<int>> at(n);

  // true iff some two members of e are within g-1 hyperedges of each other
  auto closes_short_cycle = [&](const std::vector<Vertex>& e) {
    for (Vertex src : e) {
      std::vector<int> hops(n, -1);
      std::vector<bool> used_edge(edges.size(), false);
      std::queue<Vertex> q;
      hops[src] = 0;
      q.push(src);
      while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        if (hops[x] >= g - 1) continue;
        for (int ei : at[x]) {
          if (used_edge[ei]) continue;
          used_edge[ei] = true;
          for (Vertex y : edges[ei]) {
            if (hops[y] >= 0) continue;
            hops[y] = hops[x] + 1;
            q.push(y);
          }
        }
      }
      for (Vertex y : e)
        if (y != src && hops[y] >= 0) return true;
    }
    return false;
  };

  for (long long trial = 0; trial < trials; ++trial) {
    int least = *std::min_element(deg.begin(), deg.end());
    if (least >= min_degree) break;
    std::vector<Vertex> low;
    for (Vertex v = 0; v < n; ++v)
      if (deg[v] == least) low.push_back(v);
    std::vector<Vertex> e{low[rng() % low.size()]};
    while (static_cast<int>(e.size()) < t) {
      Vertex v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    if (closes_short_cycle(e)) continue;
    for (Vertex v : e) {
      ++deg[v];
      at[v].push_back(static_cast<int>(edges.size()));
    }
    edges.push_back(std::move(e));
  }
  const int achieved = *std::min_element(deg.begin(), deg.end());
  if (achieved < min_degree) {
    throw HypergraphSearchFailed("hypergraph_blowup: search exhausted with minimum degree " + std::to_string(achieved) +
                                     " < " + std::to_string(min_degree) + " (" + std::to_string(edges.size()) +
                                     " hyperedges, girth >= " + std::to_string(g + 1) + " kept)",
                                 achieved, static_cast<int>(edges.size()));
  }
  Hypergraph h(n, std::move(edges));
  if (hypergraph_girth(h) <= g) throw InvariantViolation("hypergraph_blowup: girth check failed");
  Graph f = hypergraph_blowup_graph(h);
  return {std::move(h), std::move(f)};
}

}  // namespace ramseylab
