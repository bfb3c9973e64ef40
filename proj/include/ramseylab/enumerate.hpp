#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"
#include "subgraph.hpp"

namespace ramseylab {

namespace detail {

// Isomorphism-invariant fingerprint: per-vertex (degree, triangles,
// sorted neighbor degrees), sorted.
inline std::vector<long long> fingerprint(const Graph& g) {
  std::vector<std::vector<long long>> rows;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<long long> r{g.degree(v)};
    long long tri = 0;
    for (Vertex w : g.neighbors(v)) tri += static_cast<long long>((g.row(v) & g.row(w)).count());
    r.push_back(tri);
    std::vector<long long> nd;
    for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    r.insert(r.end(), nd.begin(), nd.end());
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end());
  std::vector<long long> out{g.order(), g.size()};
  for (auto& r : rows) {
    out.push_back(-1);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

// Keeps one representative per isomorphism class.
class IsoClassSet {
 public:
  bool insert(const Graph& g) {
    auto& bucket = buckets_[fingerprint(g)];
    for (const Graph& h : bucket)
      if (is_isomorphic(g, h)) return false;
    bucket.push_back(g);
    return true;
  }

  // Representatives ordered by (edge count, graph6).
  std::vector<Graph> sorted() const {
    std::vector<std::pair<std::pair<int, std::string>, Graph>> tagged;
    for (const auto& [key, bucket] : buckets_)
      for (const Graph& g : bucket) tagged.push_back({{g.size(), to_graph6(g)}, g});
    std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    for (auto& t : tagged) out.push_back(std::move(t.second));
    return out;
  }

 private:
  std::map<std::vector<long long>, std::vector<Graph>> buckets_;
};

}  // namespace detail

// All graphs on exactly n vertices up to isomorphism. Each graph on n+1
// vertices is a graph on n vertices plus one vertex with some neighborhood,
// so vertex augmentation followed by isomorph rejection is complete.
inline std::vector<Graph> graphs_on(int n) {
  if (n <= 0) return {Graph(0)};
  std::vector<Graph> level{Graph(1)};
  for (int k = 1; k < n; ++k) {
    detail::IsoClassSet next;
    for (const Graph& g : level) {
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<Edge> edges = g.edges();
        for (int v = 0; v < k; ++v)
          if (mask >> v & 1u) edges.emplace_back(v, k);
        next.insert(Graph(k + 1, std::move(edges)));
      }
    }
    level = next.sorted();
  }
  return level;
}

// All graphs on 1..max_n vertices, smaller orders first.
inline std::vector<Graph> graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = graphs_on(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// Connected graphs with 1..max_m edges up to isomorphism (no isolated
// vertices). Grown by adding a chord or a pendant edge.
inline std::vector<Graph> connected_graphs_up_to_edges(int max_m) {
  std::vector<Graph> out;
  if (max_m < 1) return out;
  std::vector<Graph> level{Graph(2, {Edge(0, 1)})};
  for (int m = 1;; ++m) {
    out.insert(out.end(), level.begin(), level.end());
    if (m == max_m) break;
    detail::IsoClassSet next;
    for (const Graph& g : level) {
      const int n = g.order();
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v)) continue;
          std::vector<Edge> edges = g.edges();
          edges.emplace_back(u, v);
          next.insert(Graph(n, std::move(edges)));
        }
        std::vector<Edge> edges = g.edges();
        edges.emplace_back(u, n);
        next.insert(Graph(n + 1, std::move(edges)));
      }
    }
    level = next.sorted();
  }
  return out;
}

}  // namespace ramseylab
