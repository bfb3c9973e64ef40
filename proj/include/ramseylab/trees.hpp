#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "subgraph.hpp"

namespace ramseylab {

struct TreeProfile {
  int diameter = 0;
  std::optional<Vertex> central_vertex;  // present iff the diameter is even
  bool in_T = false;                     // class 𝒯
  bool in_Tprime = false;                // class 𝒯′ ⊇ 𝒯
  int max_degree = 0;
  // Even diameter only: neighbors of the central vertex lying on a longest path.
  std::vector<Vertex> long_branch_neighbors;
};

inline TreeProfile tree_classify(const Graph& t) {
  if (!is_tree(t)) throw InvalidArgument("tree_classify: input is not a tree");
  TreeProfile prof;
  prof.max_degree = t.max_degree();
  if (t.order() == 1) return prof;

  auto far_end = [&](Vertex from, std::vector<int>& dist) {
    dist = bfs_distances(t, from);
    return static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
  };
  std::vector<int> d0, da, db;
  Vertex a = far_end(0, d0);
  Vertex b = far_end(a, da);
  far_end(b, db);
  prof.diameter = da[b];

  if (prof.diameter % 2 == 0) {
    const int r = prof.diameter / 2;
    Vertex x = -1;
    for (Vertex v = 0; v < t.order(); ++v)
      if (da[v] == r && db[v] == r) x = v;  // the unique midpoint of the a–b path
    prof.central_vertex = x;

    // y lies on a longest path iff its branch reaches depth r from x
    std::vector<int> dx = bfs_distances(t, x);
    for (Vertex y : t.neighbors(x)) {
      std::vector<bool> removed(t.order(), false);
      removed[x] = true;
      int depth = 0;
      for (const auto& comp : connected_components(t, removed)) {
        if (!std::binary_search(comp.begin(), comp.end(), y)) continue;
        for (Vertex w : comp) depth = std::max(depth, dx[w]);
      }
      if (depth == r) prof.long_branch_neighbors.push_back(y);
    }
  }

  if (prof.diameter < 3) return prof;
  if (prof.diameter % 2 == 1) {
    prof.in_T = prof.in_Tprime = true;
    return prof;
  }
  const Vertex x = *prof.central_vertex;
  const bool diam4_ok = prof.diameter != 4 || t.degree(x) >= 3;

  bool small_nbrs = std::all_of(t.neighbors(x).begin(), t.neighbors(x).end(),
                                [&](Vertex y) { return t.degree(y) <= 2; });
  prof.in_T = small_nbrs && diam4_ok;

  int heavy_long = 0;
  for (Vertex y : prof.long_branch_neighbors) heavy_long += t.degree(y) >= 3;
  prof.in_Tprime = heavy_long <= 1 && diam4_ok;
  return prof;
}

// Peels `host` to its k-core, k = |E(t)|, and embeds t greedily there.
// Returns nothing iff the core is empty.
inline std::optional<Embedding> greedy_min_degree_embed(const Graph& host, const Graph& t) {
  if (!is_tree(t)) throw InvalidArgument("greedy_min_degree_embed: pattern is not a tree");
  const int k = t.size();
  const int n = host.order();
  std::vector<int> deg(n);
  std::vector<bool> alive(n, true);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = host.degree(v);
    if (deg[v] < k) {
      alive[v] = false;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : host.neighbors(v)) {
      if (alive[w] && --deg[w] < k) {
        alive[w] = false;
        stack.push_back(w);
      }
    }
  }
  Vertex root_image = -1;
  for (Vertex v = 0; v < n && root_image < 0; ++v)
    if (alive[v]) root_image = v;
  if (root_image < 0) return std::nullopt;

  Embedding emb{std::vector<Vertex>(t.order(), -1)};
  std::vector<bool> used(n, false);
  std::vector<Vertex> queue{0};
  emb.map[0] = root_image;
  used[root_image] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex p = queue[i];
    for (Vertex c : t.neighbors(p)) {
      if (emb.map[c] >= 0) continue;
      Vertex pick = -1;
      for (Vertex w : host.neighbors(emb.map[p])) {
        if (alive[w] && !used[w]) {
          pick = w;
          break;
        }
      }
      if (pick < 0) throw InvariantViolation("greedy_min_degree_embed: core vertex ran out of neighbors");
      emb.map[c] = pick;
      used[pick] = true;
      queue.push_back(c);
    }
  }
  return emb;
}

}  // namespace ramseylab
