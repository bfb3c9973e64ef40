#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace ramseylab {

// Restricts which host edges a copy may use; empty means all edges.
using EdgeFilter = std::function<bool(EdgeId)>;

// Injective vertex map pattern -> host carrying every pattern edge onto a
// host edge (a non-induced copy).
struct Embedding {
  std::vector<Vertex> map;

  // Host edge ids used by the copy, in pattern edge order.
  std::vector<EdgeId> host_edges(const Graph& host, const Graph& pattern) const {
    std::vector<EdgeId> out;
    out.reserve(pattern.size());
    for (const Edge& e : pattern.edges()) out.push_back(host.edge_id(map[e.u], map[e.v]));
    return out;
  }
};

// Backtracking subgraph matcher.
//
// Pattern vertices are placed in a connected order (most already-placed
// neighbors first, then highest degree). Candidates for a vertex are the
// common unused neighbors of its placed neighbors' images, filtered by degree.
class SubgraphMatcher {
 public:
  SubgraphMatcher(const Graph& host, const Graph& pattern, const EdgeFilter& filter = {},
                  std::vector<std::pair<Vertex, Vertex>> anchors = {})
      : host_n_(host.order()), pattern_(pattern), anchors_(std::move(anchors)) {
    const int hn = host.order();
    rows_.assign(hn, Bitset(hn));
    hdeg_.assign(hn, 0);
    for (EdgeId id = 0; id < host.size(); ++id) {
      if (filter && !filter(id)) continue;
      const Edge& e = host.edge(id);
      rows_[e.u].set(e.v);
      rows_[e.v].set(e.u);
      ++hdeg_[e.u];
      ++hdeg_[e.v];
    }
    plan();
  }

  // Calls visit(map) for each embedding until it returns false.
  // Returns true iff the enumeration was stopped by the visitor.
  template <class Visit>
  bool for_each(Visit&& visit) {
    const int pn = pattern_.order();
    if (pn > host_n_) return false;
    map_.assign(pn, -1);
    used_ = Bitset(host_n_);
    cand_.assign(pn, Bitset(host_n_));
    for (auto [p, h] : anchors_) {
      if (p < 0 || p >= pn || h < 0 || h >= host_n_) return false;
    }
    return extend(0, visit);
  }

  std::optional<Embedding> first() {
    std::optional<Embedding> found;
    for_each([&](std::span<const Vertex> m) {
      found = Embedding{{m.begin(), m.end()}};
      return false;
    });
    return found;
  }

 private:
  void plan() {
    const int pn = pattern_.order();
    std::vector<bool> placed(pn, false);
    std::vector<int> placed_nbrs(pn, 0);
    auto place = [&](Vertex p) {
      placed[p] = true;
      order_.push_back(p);
      for (Vertex w : pattern_.neighbors(p)) ++placed_nbrs[w];
    };
    for (auto [p, h] : anchors_) {
      if (p >= 0 && p < pn && !placed[p]) place(p);
    }
    while (static_cast<int>(order_.size()) < pn) {
      Vertex best = -1;
      for (Vertex p = 0; p < pn; ++p) {
        if (placed[p]) continue;
        if (best < 0 || placed_nbrs[p] > placed_nbrs[best] ||
            (placed_nbrs[p] == placed_nbrs[best] && pattern_.degree(p) > pattern_.degree(best)))
          best = p;
      }
      place(best);
    }
    anchor_of_.assign(pn, -1);
    for (auto [p, h] : anchors_) {
      if (p >= 0 && p < pn) anchor_of_[p] = h;
    }
    back_nbrs_.assign(pn, {});
    std::vector<int> pos(pn);
    for (int i = 0; i < pn; ++i) pos[order_[i]] = i;
    for (int i = 0; i < pn; ++i) {
      for (Vertex w : pattern_.neighbors(order_[i]))
        if (pos[w] < i) back_nbrs_[i].push_back(w);
    }
  }

  template <class Visit>
  bool extend(int depth, Visit& visit) {
    const int pn = pattern_.order();
    if (depth == pn) return !visit(std::span<const Vertex>(map_));
    const Vertex p = order_[depth];
    const int need = pattern_.degree(p);
    auto try_vertex = [&](Vertex h) -> bool {
      map_[p] = h;
      used_.set(h);
      bool stop = extend(depth + 1, visit);
      used_.reset(h);
      map_[p] = -1;
      return stop;
    };
    auto feasible = [&](Vertex h) {
      if (used_.test(h) || hdeg_[h] < need) return false;
      for (Vertex w : back_nbrs_[depth])
        if (!rows_[map_[w]].test(h)) return false;
      return true;
    };

    if (anchor_of_[p] >= 0) {
      Vertex h = anchor_of_[p];
      return feasible(h) && try_vertex(h);
    }
    if (!back_nbrs_[depth].empty()) {
      Bitset& c = cand_[depth];
      c = rows_[map_[back_nbrs_[depth][0]]];
      for (std::size_t i = 1; i < back_nbrs_[depth].size(); ++i) c &= rows_[map_[back_nbrs_[depth][i]]];
      c -= used_;
      for (auto h = c.find_first(); h != Bitset::npos; h = c.find_next(h)) {
        if (hdeg_[h] < need) continue;
        if (try_vertex(static_cast<Vertex>(h))) return true;
      }
      return false;
    }
    for (Vertex h = 0; h < host_n_; ++h) {
      if (feasible(h) && try_vertex(h)) return true;
    }
    return false;
  }

  int host_n_;
  Graph pattern_;  // owned, so temporaries are safe to pass
  std::vector<std::pair<Vertex, Vertex>> anchors_;
  std::vector<Bitset> rows_;
  std::vector<int> hdeg_;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_of_;
  std::vector<std::vector<Vertex>> back_nbrs_;
  std::vector<Vertex> map_;
  Bitset used_;
  std::vector<Bitset> cand_;
};

inline std::optional<Embedding> contains_copy(const Graph& host, const Graph& pattern,
                                              const EdgeFilter& filter = {}) {
  return SubgraphMatcher(host, pattern, filter).first();
}

inline bool is_complete(const Graph& g) {
  return g.size() == g.order() * (g.order() - 1) / 2;
}

// Visits every clique of exactly `size` vertices (ascending vertex lists) in
// the subgraph formed by the edges passing `filter`.
template <class Visit>
bool for_each_clique(const Graph& host, int size, const EdgeFilter& filter, Visit&& visit) {
  const int n = host.order();
  std::vector<Bitset> rows(n, Bitset(n));
  for (EdgeId id = 0; id < host.size(); ++id) {
    if (filter && !filter(id)) continue;
    const Edge& e = host.edge(id);
    rows[e.u].set(e.v);
    rows[e.v].set(e.u);
  }
  std::vector<Vertex> current;
  std::function<bool(Bitset&)> rec = [&](Bitset& cand) -> bool {
    if (static_cast<int>(current.size()) == size) return !visit(std::span<const Vertex>(current));
    if (static_cast<int>(current.size() + cand.count()) < size) return false;
    for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
      Bitset next = cand & rows[v];
      // only later vertices, so each clique is listed once in ascending order
      for (auto w = next.find_first(); w != Bitset::npos && w <= v; w = next.find_next(w)) next.reset(w);
      current.push_back(static_cast<Vertex>(v));
      bool stop = rec(next);
      current.pop_back();
      if (stop) return true;
    }
    return false;
  };
  if (size == 0) return !visit(std::span<const Vertex>());
  Bitset all(n);
  all.set();
  return rec(all);
}

// Distinct edge sets (sorted host edge ids) of all copies of `pattern`.
// Complete patterns go through the clique enumerator to avoid t! repeats.
inline std::vector<std::vector<EdgeId>> copy_edge_sets(const Graph& host, const Graph& pattern,
                                                       const EdgeFilter& filter = {}) {
  std::set<std::vector<EdgeId>> seen;
  if (is_complete(pattern) && pattern.order() >= 2) {
    for_each_clique(host, pattern.order(), filter, [&](std::span<const Vertex> vs) {
      std::vector<EdgeId> ids;
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) ids.push_back(host.edge_id(vs[i], vs[j]));
      std::sort(ids.begin(), ids.end());
      seen.insert(std::move(ids));
      return true;
    });
  } else {
    SubgraphMatcher m(host, pattern, filter);
    m.for_each([&](std::span<const Vertex> map) {
      std::vector<EdgeId> ids;
      ids.reserve(pattern.size());
      for (const Edge& e : pattern.edges()) ids.push_back(host.edge_id(map[e.u], map[e.v]));
      std::sort(ids.begin(), ids.end());
      seen.insert(std::move(ids));
      return true;
    });
  }
  return {seen.begin(), seen.end()};
}

// Distinct copies that use a given host edge. Each pattern edge is anchored
// onto the host edge in both orientations.
inline std::vector<std::vector<EdgeId>> copy_edge_sets_through(const Graph& host, const Graph& pattern, EdgeId through,
                                                               const EdgeFilter& filter = {}) {
  std::set<std::vector<EdgeId>> seen;
  const Edge& he = host.edge(through);
  for (const Edge& pe : pattern.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      std::vector<std::pair<Vertex, Vertex>> anchors{{pe.u, flip ? he.v : he.u}, {pe.v, flip ? he.u : he.v}};
      SubgraphMatcher m(host, pattern, filter, anchors);
      m.for_each([&](std::span<const Vertex> map) {
        std::vector<EdgeId> ids;
        for (const Edge& e : pattern.edges()) ids.push_back(host.edge_id(map[e.u], map[e.v]));
        std::sort(ids.begin(), ids.end());
        seen.insert(std::move(ids));
        return true;
      });
    }
  }
  return {seen.begin(), seen.end()};
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (Vertex v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  // equal order and size: an injective edge-preserving map is a bijection on edges
  return contains_copy(a, b).has_value();
}

}  // namespace ramseylab
