#pragma once

#include <numeric>
#include <queue>
#include <vector>

#include "graph.hpp"

namespace ramseylab {

// Maximum cardinality matching in a general graph (Edmonds' blossom
// algorithm, one BFS per exposed vertex, O(V^3)). mate[v] == -1 if exposed.
class BlossomMatching {
 public:
  explicit BlossomMatching(const Graph& g) : g_(g), n_(g.order()) {
    mate_.assign(n_, -1);
    // greedy start saves most of the augmentations
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] >= 0) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (mate_[w] < 0) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] >= 0) continue;
      Vertex end = find_path(v);
      if (end >= 0) augment(end);
    }
  }

  const std::vector<Vertex>& mate() const { return mate_; }

  int size() const {
    int k = 0;
    for (Vertex v = 0; v < n_; ++v) k += mate_[v] > v;
    return k;
  }

  bool perfect() const { return 2 * size() == n_; }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    used_.assign(n_, false);
    parent_.assign(n_, -1);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          Vertex cur = lca(v, to);
          blossom_.assign(n_, false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = true;
              q.push(i);
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (mate_[to] < 0) return to;
          used_[mate_[to]] = true;
          q.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  void augment(Vertex v) {
    while (v >= 0) {
      Vertex pv = parent_[v];
      Vertex ppv = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = ppv;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> mate_, parent_, base_;
  std::vector<bool> used_, blossom_;
};

}  // namespace ramseylab
