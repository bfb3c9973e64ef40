#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "errors.hpp"

namespace ramseylab {

using Vertex = int;
using EdgeId = int;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1.
//
// Immutable after construction. Adjacency is kept both as a dense bit matrix
// (constant-time queries) and as sorted neighbor lists. Edges are indexed in
// lexicographic (u, v) order; colorings and edge subsets refer to those ids.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : Graph(n, {}) {}

  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw InvalidArgument("graph: negative vertex count");
    for (const Edge& e : edges_) {
      if (e.u == e.v) throw InvalidArgument("graph: loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v >= n) {
        throw InvalidArgument("graph: edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} out of range for n=" + std::to_string(n));
      }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw InvalidArgument("graph: duplicate edge");

    rows_.assign(n_, Bitset(n_));
    nbrs_.assign(n_, {});
    incident_.assign(n_, {});
    for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
      const Edge& e = edges_[id];
      rows_[e.u].set(e.v);
      rows_[e.v].set(e.u);
      nbrs_[e.u].push_back(e.v);
      nbrs_[e.v].push_back(e.u);
    }
    for (Vertex v = 0; v < n_; ++v) {
      std::sort(nbrs_[v].begin(), nbrs_[v].end());
      incident_[v].reserve(nbrs_[v].size());
      for (Vertex w : nbrs_[v]) incident_[v].push_back(find_edge(v, w));
    }
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return n_ == 0; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  bool adjacent(Vertex u, Vertex v) const { return u != v && rows_[u].test(v); }
  const Bitset& row(Vertex v) const { return rows_[v]; }

  // Sorted neighbors, and the ids of the matching incident edges.
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
  const std::vector<EdgeId>& incident_edges(Vertex v) const { return incident_[v]; }

  int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  int min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (Vertex v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  bool is_regular(int k) const {
    for (Vertex v = 0; v < n_; ++v)
      if (degree(v) != k) return false;
    return true;
  }

  std::optional<EdgeId> edge_index(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || !adjacent(u, v)) return std::nullopt;
    return find_edge(u, v);
  }

  EdgeId edge_id(Vertex u, Vertex v) const {
    auto id = edge_index(u, v);
    if (!id) {
      throw InvalidArgument("graph: {" + std::to_string(u) + "," + std::to_string(v) +
                            "} is not an edge");
    }
    return *id;
  }

  Graph without_edges(std::span<const EdgeId> ids) const {
    std::vector<bool> drop(edges_.size(), false);
    for (EdgeId id : ids) drop.at(id) = true;
    std::vector<Edge> kept;
    for (EdgeId id = 0; id < size(); ++id)
      if (!drop[id]) kept.push_back(edges_[id]);
    return Graph(n_, std::move(kept));
  }

  Graph without_edge(EdgeId id) const { return without_edges(std::span<const EdgeId>(&id, 1)); }

  // Deleting a vertex relabels the vertices above it down by one.
  Graph without_vertex(Vertex x) const {
    std::vector<Edge> kept;
    for (const Edge& e : edges_) {
      if (e.touches(x)) continue;
      kept.emplace_back(e.u > x ? e.u - 1 : e.u, e.v > x ? e.v - 1 : e.v);
    }
    return Graph(n_ - 1, std::move(kept));
  }

  // Subgraph induced by `vs`; vertex vs[i] becomes i.
  Graph induced(std::span<const Vertex> vs) const {
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (adjacent(vs[i], vs[j])) kept.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph(static_cast<int>(vs.size()), std::move(kept));
  }

  // Spanning subgraph keeping the edges whose id satisfies `keep`.
  template <class Pred>
  Graph spanning_subgraph(Pred&& keep) const {
    std::vector<Edge> kept;
    for (EdgeId id = 0; id < size(); ++id)
      if (keep(id)) kept.push_back(edges_[id]);
    return Graph(n_, std::move(kept));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  EdgeId find_edge(Vertex u, Vertex v) const {
    Edge key(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    return static_cast<EdgeId>(it - edges_.begin());
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Bitset> rows_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::vector<EdgeId>> incident_;
};

// Mutable edge accumulator used by the constructors.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(int n) : n_(n) {}

  int order() const { return n_; }

  // Appends `count` fresh vertices and returns the first new label.
  Vertex add_vertices(int count) {
    Vertex first = n_;
    n_ += count;
    return first;
  }

  void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

  void add_clique(std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
  }

  // Copies `g` onto the vertices map[0..g.order()).
  void add_copy(const Graph& g, std::span<const Vertex> map) {
    for (const Edge& e : g.edges()) add_edge(map[e.u], map[e.v]);
  }

  // Copies `g` onto fresh vertices and returns the label map.
  std::vector<Vertex> add_disjoint_copy(const Graph& g) {
    std::vector<Vertex> map(g.order());
    Vertex first = add_vertices(g.order());
    for (int i = 0; i < g.order(); ++i) map[i] = first + i;
    add_copy(g, map);
    return map;
  }

  // Copies `g` with vertex `root` identified to `at`; other vertices are fresh.
  std::vector<Vertex> add_rooted_copy(const Graph& g, Vertex root, Vertex at) {
    std::vector<Vertex> map(g.order());
    for (int i = 0; i < g.order(); ++i) map[i] = (i == root) ? at : add_vertices(1);
    add_copy(g, map);
    return map;
  }

  Graph build() const { return Graph(n_, edges_); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Components of g restricted to the vertices not in `removed` (may be empty).
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                             const std::vector<bool>& removed = {}) {
  const int n = g.order();
  auto gone = [&](Vertex v) { return !removed.empty() && removed[v]; };
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (gone(s) || comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (gone(w) || comp[w] >= 0) continue;
        comp[w] = comp[s];
        stack.push_back(w);
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

// BFS distances from `source`; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      q.push(w);
    }
  }
  return dist;
}

// Disjoint union; the vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder gb;
  gb.add_disjoint_copy(a);
  gb.add_disjoint_copy(b);
  return gb.build();
}

}  // namespace ramseylab
